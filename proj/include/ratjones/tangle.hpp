#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "ratjones/exact_ring.hpp"
#include "ratjones/rational.hpp"

namespace ratjones {

/// Which pairing of the four boundary points a (2,2)-tangle realizes.
enum class TangleType { Zero, One, Infinity };

/// Mod-2 addition extended by x + ∞ = ∞.
TangleType operator+(TangleType a, TangleType b);
/// Quarter rotation: swaps 0 and ∞, fixes 1.
TangleType rotate(TangleType t);
TangleType tangle_type_of(const Rat& r);
std::string_view to_string(TangleType t);

/// Writhes of the numerator and denominator closures.
struct WritheVec {
  std::int64_t num = 0;
  std::int64_t den = 0;

  WritheVec rotated() const { return {den, num}; }
  friend bool operator==(const WritheVec&, const WritheVec&) = default;
  friend WritheVec operator+(const WritheVec& a, const WritheVec& b) {
    return {checked::add(a.num, b.num), checked::add(a.den, b.den)};
  }
};

/// Writhe vector of R(seq), built by rotate-then-add steps from T_∞.
WritheVec writhe_vector(const IntSeq& seq);

struct Vec2U {
  LaurentU top;
  LaurentU bottom;
  friend bool operator==(const Vec2U&, const Vec2U&) = default;
};

/// 2x2 matrix over Z[i][u^±].
struct Mat2U {
  LaurentU a11, a12, a21, a22;

  static Mat2U identity() { return {1, {}, {}, 1}; }

  LaurentU det() const { return a11 * a22 - a12 * a21; }
  Mat2U transpose() const { return {a11, a21, a12, a22}; }
  /// Entrywise i -> -i, then transpose.
  Mat2U conj_transpose() const;
  /// Entrywise u -> u^-1.
  Mat2U bar() const;

  friend bool operator==(const Mat2U&, const Mat2U&) = default;
  friend Mat2U operator*(const Mat2U& x, const Mat2U& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
  }
  friend Mat2U operator-(const Mat2U& x) { return {-x.a11, -x.a12, -x.a21, -x.a22}; }
  friend Vec2U operator*(const Mat2U& m, const Vec2U& v) {
    return {m.a11 * v.top + m.a12 * v.bottom, m.a21 * v.top + m.a22 * v.bottom};
  }
};

std::string to_string(const Mat2U& m);

/// B_n = [[ [n], i u^-n ], [ i u^n, 0 ]].
Mat2U b_matrix(std::int64_t n);
/// B_{n_k} ... B_{n_1}; leftmost display entry is the leftmost factor.
Mat2U b_product(const IntSeq& seq);
/// B_{n_k} ... B_{n_1} (1,0)^T, evaluated right to left without forming the matrix.
Vec2U b_vector(const IntSeq& seq);

struct BracketVector {
  Vec2U vec;        // coefficients of T_0 and T_∞ before the unit
  UnitFactor unit;  // (i A^-1)^{Σn} (-i)^k
};

/// Kauffman bracket vector of R(seq) as unit * swap * B-product * (1,0)^T.
BracketVector bracket_vector(const IntSeq& seq);

/// Necessary-condition test for the first-row-determined form of B-products.
bool c_form_verify(const Mat2U& m);

struct C0Decomposition {
  int sign;  // m = -sign * B_0 B_n B_0
  std::int64_t n;
};

/// Recognizes matrices of the form ±B_0 B_n B_0 (those with α = 0).
C0Decomposition c0_recognize(const Mat2U& m);

// Row and column covectors used by the bracket identities.
/// (1, d) * v
LaurentU pair_1d(const Vec2U& v);
/// (1, 0) * M * (1, -d)^T
LaurentU row1_times_1md(const Mat2U& m);
/// (1, d) * M * (1, -d)^T
LaurentU pair_1d_m_1md(const Mat2U& m);
/// (1, d) * M * (1, 0)^T
LaurentU pair_1d_m_10(const Mat2U& m);

}  // namespace ratjones
