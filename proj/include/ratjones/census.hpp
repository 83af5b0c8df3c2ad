#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ratjones/exact_ring.hpp"
#include "ratjones/rational.hpp"

namespace ratjones {

/// Number of worker threads: JONES_JOBS if set and positive, else hardware concurrency (at least 1).
unsigned default_jobs();

/// Runs body(i) for i in [0, count) on up to `jobs` threads. Each index runs exactly once.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

/// One class per inversion orbit {q, q^-1} for odd 3 <= p < max_det; mirrors are separate classes.
/// Ascending by (p, q).
std::vector<KnotClass> enumerate_classes(std::int64_t max_det);

/// Classes of a single determinant p, ascending by q.
std::vector<KnotClass> classes_of_det(std::int64_t p);

struct CensusEntry {
  KnotClass knot;
  LaurentT jones;
  std::int64_t span = 0;
  std::int64_t det = 0;  // |V(-1)|
};

/// Jones data for every class of enumerate_classes(max_det), in the same order.
std::vector<CensusEntry> compute_census(std::int64_t max_det, unsigned jobs = 1);

struct CoincidenceGroup {
  std::int64_t det = 0;
  std::vector<KnotClass> members;  // ascending by q
  LaurentT jones;
  std::int64_t span = 0;

  std::vector<bool> amphicheiral_members() const;
  bool has_amphicheiral() const;
};

/// Groups entries by exact polynomial within each determinant, keeps groups of
/// size >= 2, and keeps one group per mirror pair (the one whose polynomial
/// text is not greater than that of its t -> 1/t image). Sorted by det, then polynomial text.
std::vector<CoincidenceGroup> group_coincidences(const std::vector<CensusEntry>& entries);

std::vector<CoincidenceGroup> find_coincidences(std::int64_t max_det, unsigned jobs = 1);

/// Entrywise mirror of a group (members mirrored, polynomial t -> 1/t).
CoincidenceGroup mirror_group(const CoincidenceGroup& g);

}  // namespace ratjones
