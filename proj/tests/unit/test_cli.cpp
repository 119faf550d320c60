#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "altbest/errors.hpp"
#include "cli.hpp"
#include "json.hpp"
#include "output.hpp"

using namespace altbest;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "altbest");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json first_json(const CliRun& r) { return json::parse(r.out.substr(0, r.out.find('\n'))); }

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST(Format12, TwelveSignificantDigits) {
  EXPECT_EQ(cli::format12(1.0 / std::exp(1.0)), "0.367879441171");
  EXPECT_EQ(cli::format12(0.5), "0.5");
  EXPECT_EQ(cli::round12(1.0 / 3.0), 0.333333333333);
}

TEST(Cli, Threshold) {
  CliRun r = run_cli({"threshold", "--k", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = first_json(r);
  EXPECT_EQ(j["command"], "threshold");
  EXPECT_EQ(j["format_version"], "1");
  EXPECT_EQ(j["results"]["t"].get<double>(), 0.5);

  r = run_cli({"threshold", "--k", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0.367879441171"), std::string::npos);

  r = run_cli({"threshold", "--k", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Cli, BoundPointAndGrid) {
  CliRun r = run_cli({"bound", "--k", "2", "--t", "0.5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(first_json(r)["results"]["h"].get<double>(), 0.5);

  r = run_cli({"bound", "--k", "2", "--t", "0.25", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "t,h\n0.25,0.375\n");

  r = run_cli({"bound", "--k", "3", "--grid", "0:1:0.25", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"t", "h"}));
  EXPECT_EQ(rows[1][1], "0");
  EXPECT_EQ(rows[5][0], "1");
  EXPECT_EQ(rows[5][1], "0");

  EXPECT_EQ(run_cli({"bound", "--k", "2", "--t", "1.5"}).code, 2);
  EXPECT_EQ(run_cli({"bound", "--k", "2"}).code, 2);
}

TEST(Cli, GridParsing) {
  EXPECT_EQ(cli::parse_grid("0:1:0.25"), (std::vector<double>{0, 0.25, 0.5, 0.75, 1.0}));
  EXPECT_EQ(cli::parse_grid("0.1:0.3:0.1").size(), 3u);
  EXPECT_EQ(cli::parse_grid("0.5:0.5:0.1"), (std::vector<double>{0.5}));
  EXPECT_THROW(cli::parse_grid("0:2:0.5"), DomainError);
  EXPECT_THROW(cli::parse_grid("0:1"), DomainError);
  EXPECT_THROW(cli::parse_grid("0:1:0"), DomainError);
  EXPECT_THROW(cli::parse_grid("a:1:0.1"), DomainError);
}

TEST(Cli, Exact) {
  CliRun r = run_cli({"exact", "--classes", "1,1", "--t", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = first_json(r);
  EXPECT_EQ(j["results"]["value"].get<double>(), 0.75);
  EXPECT_EQ(j["parameters"]["classes"], json::array({1, 1}));

  r = run_cli({"exact", "--classes", "1", "--t", "0.3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(first_json(r)["results"]["value"].get<double>(), 0.7);

  r = run_cli({"exact", "--classes", "5,5", "--t", "0.5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_GE(first_json(r)["results"]["value"].get<double>(), 0.5);

  EXPECT_EQ(run_cli({"exact", "--classes", "1,0", "--t", "0.5"}).code, 2);
  EXPECT_EQ(run_cli({"exact", "--classes", "1,x", "--t", "0.5"}).code, 2);
}

TEST(Cli, ExactFailsWhenQuadratureIsTooCoarse) {
  // One panel cannot resolve (1-s)^n for huge n near a tiny threshold.
  const CliRun r = run_cli({"exact", "--classes", "100000", "--t", "0.00001", "--quad-panels", "1"});
  EXPECT_EQ(r.code, 4);
  EXPECT_FALSE(r.out.empty());
}

TEST(Cli, SimulateIsByteIdenticalAcrossRunsAndWorkers) {
  const std::vector<std::string> base = {"simulate", "--classes", "3,2", "--t", "0.5",
                                         "--trials", "20000",     "--seed", "42"};
  CliRun a = run_cli(base);
  ASSERT_EQ(a.code, 0) << a.err;
  auto with_workers = base;
  with_workers.insert(with_workers.end(), {"--workers", "3"});
  EXPECT_EQ(run_cli(base).out, a.out);
  EXPECT_EQ(run_cli(with_workers).out, a.out);
  json j = first_json(a);
  const auto& res = j["results"];
  EXPECT_EQ(res["successes"].get<std::uint64_t>() + res["failures"].get<std::uint64_t>() +
                res["no_stops"].get<std::uint64_t>(),
            20000u);
}

TEST(Cli, JsonAndCsvCarryTheSameNumbers) {
  const std::vector<std::string> base = {"simulate", "--classes", "2,2", "--t", "0.4", "--trials", "5000"};
  CliRun js = run_cli(base);
  auto csv_args = base;
  csv_args.insert(csv_args.end(), {"--format", "csv"});
  CliRun csv = run_cli(csv_args);
  ASSERT_EQ(js.code, 0);
  ASSERT_EQ(csv.code, 0);
  const auto rows = parse_csv(csv.out);
  ASSERT_EQ(rows.size(), 2u);
  const json res = first_json(js)["results"];
  for (std::size_t i = 0; i < rows[0].size(); ++i) {
    const double from_csv = std::stod(rows[1][i]);
    EXPECT_EQ(from_csv, res[rows[0][i]].get<double>()) << rows[0][i];
  }
}

TEST(Cli, SweepWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "altbest_sweep_test.csv";
  CliRun r = run_cli({"sweep", "--classes", "2,2", "--grid", "0:1:0.25", "--trials", "20000", "--out",
                   path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto rows = parse_csv(buf.str());
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"t", "success_rate", "ci_low", "ci_high",
                                                "no_stop_rate", "exact", "h_bound"}));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GE(std::stod(rows[i][5]), std::stod(rows[i][6]) - 1e-9);
  }
  EXPECT_EQ(rows[5][1], "0");
  EXPECT_EQ(rows[5][4], "1");
  std::filesystem::remove(path);
}

TEST(Cli, UnwritableOutputIsIoError) {
  CliRun r = run_cli({"sweep", "--classes", "2", "--grid", "0:1:0.5", "--trials", "10", "--out",
                   "/nonexistent-dir/x.csv"});
  EXPECT_EQ(r.code, 3);
  r = run_cli({"threshold", "--k", "2", "--out", "/nonexistent-dir/x.json"});
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, BestOrWorst) {
  CliRun r = run_cli({"best-or-worst", "--n", "2", "--t", "0", "--trials", "1000"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(first_json(r)["results"]["success_rate"].get<double>(), 1.0);

  r = run_cli({"best-or-worst", "--n", "1", "--t", "0.5", "--trials", "1000"});
  ASSERT_EQ(r.code, 0);
  json j = first_json(r);
  EXPECT_EQ(j["results"]["success_rate"].get<double>(), 0.0);
  EXPECT_EQ(j["results"]["degenerate"].get<int>(), 1);

  EXPECT_EQ(run_cli({"best-or-worst", "--n", "0", "--t", "0.5"}).code, 2);
}

TEST(Cli, Optimize) {
  CliRun r = run_cli({"optimize", "--k", "4", "--objective", "analytic-bound"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(first_json(r)["results"]["t_star"].get<double>(), std::pow(4.0, -1.0 / 3.0), 1e-6);

  r = run_cli({"optimize", "--classes", "1,1", "--objective", "exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(first_json(r)["results"]["t_star"].get<double>(), 0.0);

  r = run_cli({"optimize", "--k", "1", "--objective", "analytic-bound"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(first_json(r)["results"]["t_star"].get<double>(), 1.0 / std::exp(1.0), 1e-6);

  EXPECT_EQ(run_cli({"optimize", "--k", "2", "--objective", "exact"}).code, 2);
  EXPECT_EQ(run_cli({"optimize", "--k", "2", "--classes", "1,1"}).code, 2);
  EXPECT_EQ(run_cli({"optimize", "--objective", "nope", "--k", "2"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"simulate", "--classes", "1"}).code, 2);
  EXPECT_EQ(run_cli({"simulate", "--classes", "1", "--t", "0.5", "--trials", "0"}).code, 2);
  EXPECT_EQ(run_cli({"threshold", "--k", "2", "--format", "xml"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}
