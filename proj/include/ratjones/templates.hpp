#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ratjones/exact_ring.hpp"
#include "ratjones/rational.hpp"

namespace ratjones {

enum class StarFlag { One, Star };
enum class ArrowFlag { Forward, Backward };

StarFlag parse_star_flag(std::string_view text);    // "1" or "*"
ArrowFlag parse_arrow_flag(std::string_view text);  // ">" or "<"
std::string_view to_string(StarFlag f);
std::string_view to_string(ArrowFlag f);

enum class TemplateKind { TemplateI, TemplateII, Pivot };
std::string_view to_string(TemplateKind k);

using SeqPair = std::pair<IntSeq, IntSeq>;

/// Parameters of one template move. Unused fields stay empty for a given kind:
/// TemplateI uses base, ds, eps; TemplateII uses base, ms, ds, arrows_eps,
/// arrows_phi; Pivot uses seqs, ds, eps.
struct TemplateInstance {
  TemplateKind kind = TemplateKind::TemplateI;
  IntSeq base;
  std::vector<IntSeq> seqs;
  IntSeq ds;
  IntSeq ms;
  std::vector<StarFlag> eps;
  std::vector<ArrowFlag> arrows_eps;
  std::vector<ArrowFlag> arrows_phi;

  friend bool operator==(const TemplateInstance&, const TemplateInstance&) = default;
};

/// n* : negate and reverse.
IntSeq seq_star(const IntSeq& n);
IntSeq seq_reverse(const IntSeq& n);
IntSeq apply(const IntSeq& n, StarFlag f);
IntSeq apply(const IntSeq& n, ArrowFlag f);

/// A = (n^e0, d1, n^e1, ..., dk, n^ek); B = (n^ek, dk, ..., d1, n^e0).
SeqPair template_one(const IntSeq& n, const IntSeq& ds, const std::vector<StarFlag>& eps);

/// Blocks (arrow(n, e_j), m_j, -arrow(n, f_j)) joined by d_j; B repeats the
/// construction with n* in place of n.
SeqPair template_two(const IntSeq& n, const IntSeq& ms, const IntSeq& ds, const std::vector<ArrowFlag>& eps,
                     const std::vector<ArrowFlag>& phis);

/// Top-left entry α of the B-product of n.
LaurentU alpha_of(const IntSeq& n);

/// α1' α2 == α1 α2' (primes denote u -> 1/u).
bool pivot_check(const IntSeq& n1, const IntSeq& n2);

/// n ++ (m) ++ n, always a pivot partner of n.
IntSeq pivot_generate(const IntSeq& n, std::int64_t m);

/// A = (n0^e0, d1, ..., dk, nk^ek); B = (nk^ek, dk, ..., d1, n0^e0).
/// Throws NotPivotEquivalent unless every pair of blocks passes pivot_check.
SeqPair template_pivot(const std::vector<IntSeq>& seqs, const IntSeq& ds, const std::vector<StarFlag>& eps);

/// Dispatches on inst.kind; throws InvalidArgument when list lengths disagree.
SeqPair generate(const TemplateInstance& inst);

/// One-line description of the parameters, e.g. "n=(2,4) ds=(1) eps=(1,*)".
std::string describe(const TemplateInstance& inst);

}  // namespace ratjones
