#include "altbest/model.hpp"

#include <algorithm>
#include <string>

#include "altbest/errors.hpp"

namespace altbest {

ClassCounts::ClassCounts(std::vector<std::uint32_t> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw ModelError("class counts: need at least one class");
  for (std::size_t j = 0; j < counts_.size(); ++j) {
    if (counts_[j] < 1) {
      throw ModelError("class counts: class " + std::to_string(j) + " is empty");
    }
    total_ += counts_[j];
  }
}

void sample_realization_into(const ClassCounts& counts, Seed seed, Realization& out) {
  Xoshiro256 gen(seed);
  out.counts = counts;
  out.arrivals.clear();
  out.arrivals.reserve(counts.total());
  for (std::uint32_t j = 0; j < counts.k(); ++j) {
    for (std::uint32_t r = 1; r <= counts[j]; ++r) {
      out.arrivals.push_back(Arrival{j, r, gen.uniform_open()});
    }
  }
  std::sort(out.arrivals.begin(), out.arrivals.end(), arrives_before);
}

Realization sample_realization(const ClassCounts& counts, Seed seed) {
  Realization r{counts, {}};
  sample_realization_into(counts, seed, r);
  return r;
}

std::vector<double> class_maxima_times(const Realization& r) {
  std::vector<double> times(r.counts.k(), 0.0);
  for (const Arrival& a : r.arrivals) {
    if (a.rank == 1) times[a.class_id] = a.time;
  }
  return times;
}

void validate(const Realization& r) {
  const std::size_t k = r.counts.k();
  if (r.arrivals.size() != r.counts.total()) {
    throw ModelError("realization: arrival count does not match class counts");
  }
  std::vector<std::vector<bool>> seen(k);
  for (std::size_t j = 0; j < k; ++j) seen[j].assign(r.counts[j] + 1, false);
  for (std::size_t i = 0; i < r.arrivals.size(); ++i) {
    const Arrival& a = r.arrivals[i];
    if (a.class_id >= k) throw ModelError("realization: class id out of range");
    if (a.rank < 1 || a.rank > r.counts[a.class_id]) {
      throw ModelError("realization: rank out of range");
    }
    if (seen[a.class_id][a.rank]) throw ModelError("realization: duplicate rank in class");
    seen[a.class_id][a.rank] = true;
    if (!(a.time > 0.0 && a.time < 1.0)) throw ModelError("realization: time outside (0,1)");
    if (i > 0 && !arrives_before(r.arrivals[i - 1], a)) {
      throw ModelError("realization: arrivals not in time order");
    }
  }
}

}  // namespace altbest
