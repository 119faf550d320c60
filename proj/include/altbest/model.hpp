#pragma once

// The k-class arrival model: class j holds counts[j] uniquely ranked options,
// each arriving at an independent uniform time on (0,1).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "altbest/rng.hpp"

namespace altbest {

class ClassCounts {
 public:
  /// Throws ModelError if empty or if any class is empty.
  explicit ClassCounts(std::vector<std::uint32_t> counts);
  ClassCounts(std::initializer_list<std::uint32_t> counts)
      : ClassCounts(std::vector<std::uint32_t>(counts)) {}

  std::size_t k() const { return counts_.size(); }
  std::uint32_t operator[](std::size_t j) const { return counts_[j]; }
  std::span<const std::uint32_t> values() const { return counts_; }
  std::uint64_t total() const { return total_; }

  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;

 private:
  std::vector<std::uint32_t> counts_;
  std::uint64_t total_ = 0;
};

struct Arrival {
  std::uint32_t class_id = 0;
  std::uint32_t rank = 1;  // 1 = best of its class
  double time = 0.0;

  friend bool operator==(const Arrival&, const Arrival&) = default;
};

/// Strict time order; exact ties fall back to (class_id, rank).
inline bool arrives_before(const Arrival& a, const Arrival& b) {
  if (a.time != b.time) return a.time < b.time;
  if (a.class_id != b.class_id) return a.class_id < b.class_id;
  return a.rank < b.rank;
}

struct Realization {
  ClassCounts counts;
  std::vector<Arrival> arrivals;  // sorted by arrives_before
};

/// Draws one realization. Option of rank r in class j gets an iid uniform
/// time, which makes the within-class arrival order a uniform permutation.
Realization sample_realization(const ClassCounts& counts, Seed seed);

/// Same as sample_realization but reuses `out`'s storage.
void sample_realization_into(const ClassCounts& counts, Seed seed, Realization& out);

/// Entry j is the arrival time of the best option of class j.
std::vector<double> class_maxima_times(const Realization& r);

/// Checks every Realization invariant; throws ModelError on the first breach.
void validate(const Realization& r);

}  // namespace altbest
