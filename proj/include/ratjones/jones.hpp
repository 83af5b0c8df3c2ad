#pragma once

#include <cstdint>
#include <optional>

#include "ratjones/exact_ring.hpp"
#include "ratjones/rational.hpp"
#include "ratjones/tangle.hpp"

namespace ratjones {

/// Halved entries (m_2k, ..., m_1) of an even-entry, even-length sequence.
using MSeq = IntSeq;

/// Halves an even-entry, even-length sequence; throws BadParity otherwise.
MSeq halve(const IntSeq& seq);

/// Jones polynomial of the numerator closure of R(seq), any integer entries.
/// Uses the writhe-normalized bracket with integrality of the unit exponents checked.
LaurentT jones_general(const IntSeq& seq);

/// Jones polynomial for even-entry, even-length sequences.
LaurentT jones_even(const IntSeq& seq);

/// Subset formula, evaluated by a dynamic program over the positions 1..2k
/// that sums all admissible subsets without listing them.
LaurentT jones_subsets(const MSeq& m);

/// Subset formula with every admissible subset listed explicitly and each
/// summand divided exactly. Exponential in the length; meant for short inputs.
LaurentT jones_subsets_enumerated(const MSeq& m);

/// B-product applied to (1,0)^T, expanded as a sum over alternating-parity subsets.
Vec2U subset_expansion(const IntSeq& seq);

/// Jones polynomial of the two-bridge knot K(p/q), p odd and positive.
LaurentT jones_knot(std::int64_t p, std::int64_t q);

/// Even continued fraction used by jones_knot for K(p/q).
IntSeq knot_even_seq(std::int64_t p, std::int64_t q);

std::int64_t det_of(std::int64_t p, std::int64_t q);

/// max exponent - min exponent; zero for the zero polynomial.
std::int64_t jones_span(const LaurentT& v);

struct UnitRelation {
  int sign;
  int shift;
  friend bool operator==(const UnitRelation&, const UnitRelation&) = default;
};

/// (s, n) with v2 = s t^n v1, if any.
std::optional<UnitRelation> equal_up_to_unit(const LaurentT& v1, const LaurentT& v2);

/// Largest |k| tried when adjusting the witness a(t) by ±t^k.
inline constexpr int kWitnessUnitBound = 8;

/// a(t) with V(t)V(1/t) = (2 + t + 1/t) - (1 + t + 1/t) a(t) a(1/t).
LaurentT product_identity_witness(std::int64_t p, std::int64_t q);

/// Checks the product identity for a given V and a.
bool product_identity_holds(const LaurentT& v, const LaurentT& a);

}  // namespace ratjones
