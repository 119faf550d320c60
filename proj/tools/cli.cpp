#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "altbest/analytics.hpp"
#include "altbest/errors.hpp"
#include "altbest/montecarlo.hpp"
#include "output.hpp"

namespace altbest::cli {

namespace {

struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ClassCounts parse_classes(const std::string& text) {
  std::vector<std::uint32_t> counts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw ModelError("--classes: '" + item + "' is not an integer");
    }
    if (used != item.size()) throw ModelError("--classes: '" + item + "' is not an integer");
    if (v < 1 || v > 0xFFFFFFFFLL) throw ModelError("--classes: counts must be positive");
    counts.push_back(static_cast<std::uint32_t>(v));
  }
  return ClassCounts(std::move(counts));
}

nlohmann::ordered_json counts_json(const ClassCounts& c) {
  auto arr = nlohmann::ordered_json::array();
  for (auto n : c.values()) arr.push_back(n);
  return arr;
}

void require_unit(double t, const char* flag) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError(std::string(flag) + " must lie in [0,1]");
  }
}

// Options shared by every subcommand.
struct Sink {
  std::string format = "json";
  std::string out_file;
};

void add_sink_options(CLI::App* sub, Sink& sink) {
  sub->add_option("--format", sink.format, "json (JSON lines) or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", sink.out_file, "write to FILE instead of standard output");
}

void emit(const Sink& sink, const std::vector<OutputRecord>& records, std::ostream& out) {
  const Format format = parse_format(sink.format);
  if (sink.out_file.empty()) {
    write_records(out, records, format);
    out.flush();
    return;
  }
  std::ofstream file(sink.out_file, std::ios::out | std::ios::trunc);
  if (!file) throw IoFailure("cannot open '" + sink.out_file + "' for writing");
  write_records(file, records, format);
  file.flush();
  if (!file) throw IoFailure("write to '" + sink.out_file + "' failed");
}

void check_writable(const Sink& sink) {
  if (sink.out_file.empty()) return;
  std::ofstream probe(sink.out_file, std::ios::out | std::ios::app);
  if (!probe) throw IoFailure("cannot open '" + sink.out_file + "' for writing");
}

void put_stats(OutputRecord& rec, const SimulationStats& s) {
  rec.results["trials"] = s.trials;
  rec.results["successes"] = s.successes;
  rec.results["failures"] = s.failures;
  rec.results["no_stops"] = s.no_stops;
  rec.set_real("success_rate", s.success_rate);
  rec.set_real("failure_rate", s.failure_rate);
  rec.set_real("no_stop_rate", s.no_stop_rate);
  rec.set_real("std_err", s.std_err);
  rec.set_real("no_stop_std_err", s.no_stop_std_err);
  rec.set_real("ci95_low", s.ci95_low);
  rec.set_real("ci95_high", s.ci95_high);
}

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("--grid: '" + item + "' is not a number");
    }
  }
  if (parts.size() != 3) throw DomainError("--grid: expected start:stop:step");
  const double start = parts[0], stop = parts[1], step = parts[2];
  require_unit(start, "--grid start");
  require_unit(stop, "--grid stop");
  if (!(step > 0.0)) throw DomainError("--grid: step must be positive");
  if (start > stop) throw DomainError("--grid: start exceeds stop");
  const auto steps = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9));
  std::vector<double> grid;
  grid.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    grid.push_back(std::min(stop, start + static_cast<double>(i) * step));
  }
  if (stop - grid.back() > 1e-9 * step) grid.push_back(stop);
  return grid;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Threshold strategies for the k-class best-choice problem"};
  app.require_subcommand(1);

  Sink sink;
  unsigned workers = default_workers();

  // threshold
  std::uint32_t th_k = 0;
  auto* threshold = app.add_subcommand("threshold", "print t_k = k^(-1/(k-1)), 1/e for k=1");
  threshold->add_option("--k", th_k, "number of classes")->required();
  add_sink_options(threshold, sink);

  // bound
  std::uint32_t bound_k = 0;
  std::optional<double> bound_t;
  std::string bound_grid;
  auto* bound = app.add_subcommand("bound", "lower bound h_k(t) at a point or over a grid");
  bound->add_option("--k", bound_k, "number of classes")->required();
  auto* bound_t_opt = bound->add_option("--t", bound_t, "threshold");
  auto* bound_grid_opt = bound->add_option("--grid", bound_grid, "start:stop:step");
  bound_t_opt->excludes(bound_grid_opt);
  add_sink_options(bound, sink);

  // exact
  std::string ex_classes;
  double ex_t = 0.0;
  std::size_t ex_panels = kDefaultPanels;
  double ex_tol = kDefaultQuadTolerance;
  auto* exact = app.add_subcommand("exact", "exact success probability by quadrature");
  exact->add_option("--classes", ex_classes, "comma-separated class counts")->required();
  exact->add_option("--t", ex_t, "threshold")->required();
  exact->add_option("--quad-panels", ex_panels, "Gauss-Legendre panels");
  exact->add_option("--tol", ex_tol, "maximum accepted quadrature error estimate");
  add_sink_options(exact, sink);

  // simulate
  std::string sim_classes;
  double sim_t = 0.0;
  std::uint64_t sim_trials = 100000;
  std::uint64_t sim_seed = 1;
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of success rate");
  simulate_cmd->add_option("--classes", sim_classes, "comma-separated class counts")->required();
  simulate_cmd->add_option("--t", sim_t, "threshold")->required();
  simulate_cmd->add_option("--trials", sim_trials, "number of trials")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--seed", sim_seed, "master seed");
  simulate_cmd->add_option("--workers", workers, "worker threads (output does not depend on it)")
      ->check(CLI::PositiveNumber);
  add_sink_options(simulate_cmd, sink);

  // sweep
  std::string sw_classes;
  std::string sw_grid;
  std::uint64_t sw_trials = 100000;
  std::uint64_t sw_seed = 1;
  std::size_t sw_panels = kDefaultPanels;
  auto* sweep_cmd = app.add_subcommand("sweep", "empirical, exact and bound curves over a grid");
  sweep_cmd->add_option("--classes", sw_classes, "comma-separated class counts")->required();
  sweep_cmd->add_option("--grid", sw_grid, "start:stop:step")->required();
  sweep_cmd->add_option("--trials", sw_trials, "trials per grid point")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed", sw_seed, "master seed");
  sweep_cmd->add_option("--quad-panels", sw_panels, "Gauss-Legendre panels");
  sweep_cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  Sink sweep_sink{"csv", ""};
  add_sink_options(sweep_cmd, sweep_sink);

  // best-or-worst
  std::uint32_t bw_n = 0;
  double bw_t = 0.5;
  std::uint64_t bw_trials = 100000;
  std::uint64_t bw_seed = 1;
  auto* bw = app.add_subcommand("best-or-worst", "two-stream rule for the best or worst option");
  bw->add_option("--n", bw_n, "number of options")->required()->check(CLI::PositiveNumber);
  bw->add_option("--t", bw_t, "threshold")->required();
  bw->add_option("--trials", bw_trials, "number of trials")->check(CLI::PositiveNumber);
  bw->add_option("--seed", bw_seed, "master seed");
  bw->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  add_sink_options(bw, sink);

  // optimize
  std::uint32_t opt_k = 0;
  std::string opt_classes;
  std::string opt_objective = "analytic-bound";
  SearchConfig search;
  search.trials = 20000;
  auto* optimize = app.add_subcommand("optimize", "maximize an objective over the threshold");
  auto* opt_k_opt = optimize->add_option("--k", opt_k, "number of classes");
  auto* opt_classes_opt =
      optimize->add_option("--classes", opt_classes, "comma-separated class counts");
  opt_k_opt->excludes(opt_classes_opt);
  optimize->add_option("--objective", opt_objective, "analytic-bound, exact or monte-carlo")
      ->check(CLI::IsMember({"analytic-bound", "exact", "monte-carlo"}));
  optimize->add_option("--grid-points", search.grid_points, "coarse grid size");
  optimize->add_option("--tol", search.tolerance, "golden-section bracket width");
  optimize->add_option("--quad-panels", search.panels, "Gauss-Legendre panels");
  optimize->add_option("--trials", search.trials, "monte-carlo trials per evaluation")
      ->check(CLI::PositiveNumber);
  optimize->add_option("--seed", search.master_seed, "monte-carlo master seed");
  optimize->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  add_sink_options(optimize, sink);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    std::vector<OutputRecord> records;
    const Sink* active = &sink;

    if (threshold->parsed()) {
      OutputRecord rec{"threshold"};
      rec.parameters["k"] = th_k;
      rec.set_real("t", optimal_threshold(th_k));
      records.push_back(std::move(rec));
    } else if (bound->parsed()) {
      if (bound_k == 0) throw DomainError("--k must be at least 1");
      std::vector<double> ts;
      if (bound_t) {
        require_unit(*bound_t, "--t");
        ts.push_back(*bound_t);
      } else if (!bound_grid.empty()) {
        ts = parse_grid(bound_grid);
      } else {
        throw DomainError("bound needs --t or --grid");
      }
      for (const auto& [t, h] : bound_curve(bound_k, ts).samples) {
        OutputRecord rec{"bound"};
        rec.parameters["k"] = bound_k;
        rec.set_real("t", t);
        rec.set_real("h", h);
        records.push_back(std::move(rec));
      }
    } else if (exact->parsed()) {
      const ClassCounts counts = parse_classes(ex_classes);
      require_unit(ex_t, "--t");
      if (ex_panels == 0) throw DomainError("--quad-panels must be positive");
      check_writable(sink);
      const ExactProbability p = exact_success_prob(counts, ex_t, ex_panels);
      OutputRecord rec{"exact"};
      rec.parameters["classes"] = counts_json(counts);
      rec.parameters["t"] = round12(ex_t);
      rec.parameters["quad_panels"] = ex_panels;
      rec.set_real("value", p.value);
      rec.set_real("abs_error_estimate", p.abs_error_estimate);
      rec.results["quad_points"] = p.quad_points;
      records.push_back(std::move(rec));
      emit(sink, records, out);
      if (p.abs_error_estimate > ex_tol) {
        throw NumericalFailure("quadrature error estimate " + format12(p.abs_error_estimate) +
                               " exceeds tolerance " + format12(ex_tol));
      }
      return kOk;
    } else if (simulate_cmd->parsed()) {
      const ClassCounts counts = parse_classes(sim_classes);
      require_unit(sim_t, "--t");
      check_writable(sink);
      const SimulationStats s = simulate({counts, sim_t, sim_trials, sim_seed, workers});
      OutputRecord rec{"simulate"};
      rec.parameters["classes"] = counts_json(counts);
      rec.parameters["t"] = round12(sim_t);
      rec.parameters["trials"] = sim_trials;
      rec.parameters["seed"] = sim_seed;
      put_stats(rec, s);
      records.push_back(std::move(rec));
    } else if (sweep_cmd->parsed()) {
      active = &sweep_sink;
      const ClassCounts counts = parse_classes(sw_classes);
      const std::vector<double> grid = parse_grid(sw_grid);
      if (sw_panels == 0) throw DomainError("--quad-panels must be positive");
      check_writable(sweep_sink);
      const auto k = static_cast<std::uint32_t>(counts.k());
      double worst_error = 0.0;
      for (const auto& [t, s] : sweep(counts, grid, sw_trials, sw_seed, workers)) {
        const ExactProbability p = exact_success_prob(counts, t, sw_panels);
        worst_error = std::max(worst_error, p.abs_error_estimate);
        OutputRecord rec{"sweep"};
        rec.parameters["classes"] = counts_json(counts);
        rec.parameters["trials"] = sw_trials;
        rec.parameters["seed"] = sw_seed;
        rec.set_real("t", t);
        rec.set_real("success_rate", s.success_rate);
        rec.set_real("ci_low", s.ci95_low);
        rec.set_real("ci_high", s.ci95_high);
        rec.set_real("no_stop_rate", s.no_stop_rate);
        rec.set_real("exact", p.value);
        rec.set_real("h_bound", lower_bound_h(k, t));
        records.push_back(std::move(rec));
      }
      emit(sweep_sink, records, out);
      if (worst_error > kDefaultQuadTolerance) {
        throw NumericalFailure("quadrature error estimate " + format12(worst_error) +
                               " exceeds tolerance");
      }
      return kOk;
    } else if (bw->parsed()) {
      require_unit(bw_t, "--t");
      check_writable(sink);
      const BestOrWorstStats s = simulate_best_or_worst(bw_n, bw_t, bw_trials, bw_seed, workers);
      OutputRecord rec{"best-or-worst"};
      rec.parameters["n"] = bw_n;
      rec.parameters["t"] = round12(bw_t);
      rec.parameters["trials"] = bw_trials;
      rec.parameters["seed"] = bw_seed;
      put_stats(rec, s.stats);
      rec.results["best_hits"] = s.best_hits;
      rec.results["worst_hits"] = s.worst_hits;
      rec.set_real("best_rate", static_cast<double>(s.best_hits) / bw_trials);
      rec.set_real("worst_rate", static_cast<double>(s.worst_hits) / bw_trials);
      rec.set_real("degenerate_rate", s.degenerate_rate);
      rec.results["degenerate"] = s.degenerate > 0 ? 1 : 0;
      records.push_back(std::move(rec));
    } else if (optimize->parsed()) {
      const Objective objective = parse_objective(opt_objective);
      std::optional<ClassCounts> counts;
      if (!opt_classes.empty()) counts = parse_classes(opt_classes);
      if (!counts && opt_k == 0) throw DomainError("optimize needs --k or --classes");
      search.workers = workers;
      check_writable(sink);
      const OptimizationResult r =
          optimize_threshold(opt_k, counts ? &*counts : nullptr, objective, search);
      OutputRecord rec{"optimize"};
      if (counts) {
        rec.parameters["classes"] = counts_json(*counts);
      } else {
        rec.parameters["k"] = opt_k;
      }
      rec.parameters["objective"] = opt_objective;
      rec.set_real("t_star", r.t_star);
      rec.set_real("value", r.value);
      rec.results["method"] = r.method;
      rec.results["evaluations"] = r.evaluations;
      rec.results["non_unimodal"] = r.non_unimodal ? 1 : 0;
      records.push_back(std::move(rec));
    }

    emit(*active, records, out);
    return kOk;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const NumericalFailure& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace altbest::cli
