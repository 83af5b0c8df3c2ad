#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ratjones/census.hpp"
#include "ratjones/rational.hpp"
#include "ratjones/templates.hpp"

namespace ratjones {

/// Bounds on the template parameter spaces explored by classification.
struct SearchBudget {
  int max_base_len = 4;   // length of n (or of each pivot block)
  int max_entry = 6;      // |entries| of base sequences
  int max_k = 3;          // number of d-values
  int max_param = 6;      // |d|, |m|
  /// Strata (kind, k, base length) whose leaf count exceeds this are skipped.
  std::uint64_t max_stratum_work = 2'000'000'000ULL;

  static SearchBudget zero() { return {0, 0, 0, 0, 0}; }
  bool empty() const { return max_base_len <= 0 || max_stratum_work == 0; }
};

enum class ResultKind { TemplateI, TemplateII, Pivot, Unexplained };
std::string_view to_string(ResultKind k);

struct ClassificationResult {
  ResultKind kind = ResultKind::Unexplained;
  std::optional<TemplateInstance> witness;
};

/// Searches for a template instance whose generated pair canonicalizes to {a, b}.
ClassificationResult classify_pair(const KnotClass& a, const KnotClass& b, const SearchBudget& budget,
                                   unsigned jobs = 1);

/// Classifies many pairs in one sweep of the parameter space; results are
/// identical to calling classify_pair on each pair separately.
std::vector<ClassificationResult> classify_pairs(const std::vector<std::pair<KnotClass, KnotClass>>& pairs,
                                                 const SearchBudget& budget, unsigned jobs = 1);

struct ClassifiedGroup {
  CoincidenceGroup group;
  /// Results for the member pairs (0,1), (0,2), ..., (1,2), ... in that order.
  std::vector<std::pair<std::pair<int, int>, ClassificationResult>> pairs;
};

std::vector<ClassifiedGroup> classify_groups(const std::vector<CoincidenceGroup>& groups,
                                             const SearchBudget& budget, unsigned jobs = 1);

/// Unordered pair of classes of the numerator closures of a generated pair;
/// nullopt when either closure is a link or the evaluation overflows.
std::optional<std::pair<KnotClass, KnotClass>> closure_classes(const SeqPair& pair);

/// Whether generate(w) canonicalizes to exactly {a, b}.
bool witness_matches(const TemplateInstance& w, const KnotClass& a, const KnotClass& b);

/// Same instance with every integer parameter negated; its pair is the mirror pair.
TemplateInstance mirror_instance(const TemplateInstance& w);

}  // namespace ratjones
