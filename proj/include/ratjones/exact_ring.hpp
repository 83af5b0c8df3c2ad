#pragma once

// Exact Laurent-polynomial rings used throughout the library.
//
//   LaurentU  Z[i][u, u^-1]   entries of the transfer matrices B_n
//   LaurentT  Z[t, t^-1]      Jones polynomials
//   LaurentA  Z[i][A, A^-1]   only for displaying Kauffman brackets
//
// The variables are tied together by u = -i A^2 (so A^2 = i u) and t = -u^-2.
// Computations never leave the u-ring; the symbol A appears only inside
// UnitFactor, which records a prefactor i^k A^m symbolically.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ratjones/checked.hpp"
#include "ratjones/error.hpp"

namespace ratjones {

/// Gaussian integer re + im*i with overflow-checked arithmetic.
struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr GaussInt() = default;
  constexpr GaussInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}  // NOLINT: implicit from integers

  static constexpr GaussInt i_unit() { return {0, 1}; }
  /// i^k for any integer k.
  static GaussInt i_power(std::int64_t k);

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussInt conj() const { return {re, checked::neg(im)}; }

  friend bool operator==(const GaussInt&, const GaussInt&) = default;

  friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
    return {checked::add(a.re, b.re), checked::add(a.im, b.im)};
  }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
    return {checked::sub(a.re, b.re), checked::sub(a.im, b.im)};
  }
  friend GaussInt operator-(const GaussInt& a) { return {checked::neg(a.re), checked::neg(a.im)}; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {checked::sub(checked::mul(a.re, b.re), checked::mul(a.im, b.im)),
            checked::add(checked::mul(a.re, b.im), checked::mul(a.im, b.re))};
  }
};

/// Exact quotient a / b in Z[i], or nullopt when b does not divide a.
std::optional<GaussInt> exact_quotient(const GaussInt& a, const GaussInt& b);
std::optional<std::int64_t> exact_quotient(std::int64_t a, std::int64_t b);

std::string to_string(const GaussInt& c);

namespace detail {
inline std::int64_t ring_add(std::int64_t a, std::int64_t b) { return checked::add(a, b); }
inline std::int64_t ring_mul(std::int64_t a, std::int64_t b) { return checked::mul(a, b); }
inline std::int64_t ring_neg(std::int64_t a) { return checked::neg(a); }
inline bool ring_is_zero(std::int64_t a) { return a == 0; }
inline GaussInt ring_add(const GaussInt& a, const GaussInt& b) { return a + b; }
inline GaussInt ring_mul(const GaussInt& a, const GaussInt& b) { return a * b; }
inline GaussInt ring_neg(const GaussInt& a) { return -a; }
inline bool ring_is_zero(const GaussInt& a) { return a.is_zero(); }
}  // namespace detail

struct VarU {
  static constexpr std::string_view name = "u";
};
struct VarT {
  static constexpr std::string_view name = "t";
};
struct VarA {
  static constexpr std::string_view name = "A";
};

/// Sparse Laurent polynomial: terms sorted by ascending exponent, no zero
/// coefficients stored. Two values are equal iff their term lists are equal.
template <class Coeff, class Var>
class Laurent {
 public:
  using coeff_type = Coeff;
  struct Term {
    int exp;
    Coeff coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Laurent() = default;
  Laurent(Coeff c) {  // NOLINT: constants convert implicitly
    if (!detail::ring_is_zero(c)) terms_.push_back({0, c});
  }
  template <std::integral I>
  Laurent(I c) : Laurent(Coeff(static_cast<std::int64_t>(c))) {}  // NOLINT

  static Laurent monomial(Coeff c, int exp) {
    Laurent r;
    if (!detail::ring_is_zero(c)) r.terms_.push_back({exp, c});
    return r;
  }

  /// Builds a normalized polynomial from terms in any order (duplicates summed).
  static Laurent from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    Laurent r;
    for (const auto& t : terms) {
      if (!r.terms_.empty() && r.terms_.back().exp == t.exp) {
        r.terms_.back().coef = detail::ring_add(r.terms_.back().coef, t.coef);
      } else {
        r.terms_.push_back(t);
      }
    }
    std::erase_if(r.terms_, [](const Term& t) { return detail::ring_is_zero(t.coef); });
    return r;
  }

  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int min_exp() const { return terms_.front().exp; }
  int max_exp() const { return terms_.back().exp; }

  Coeff coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.exp < e; });
    return (it != terms_.end() && it->exp == exp) ? it->coef : Coeff{};
  }

  /// Multiplication by var^k.
  Laurent shifted(int k) const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.exp += k;
    return r;
  }

  /// Multiplication by c * var^k.
  Laurent scaled(const Coeff& c, int k = 0) const {
    if (detail::ring_is_zero(c)) return {};
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.exp + k, detail::ring_mul(c, t.coef)});
    return r;
  }

  friend bool operator==(const Laurent&, const Laurent&) = default;

  friend Laurent operator-(const Laurent& a) {
    Laurent r = a;
    for (auto& t : r.terms_) t.coef = detail::ring_neg(t.coef);
    return r;
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) { return merge(a, b, false); }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return merge(a, b, true); }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const int lo = a.min_exp() + b.min_exp();
    const std::size_t span = static_cast<std::size_t>(a.max_exp() + b.max_exp() - lo) + 1;
    if (span <= 2 * a.size() * b.size() + 16) {
      std::vector<Coeff> acc(span);
      for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
          auto& slot = acc[static_cast<std::size_t>(x.exp + y.exp - lo)];
          slot = detail::ring_add(slot, detail::ring_mul(x.coef, y.coef));
        }
      }
      Laurent r;
      for (std::size_t k = 0; k < span; ++k) {
        if (!detail::ring_is_zero(acc[k])) r.terms_.push_back({static_cast<int>(k) + lo, acc[k]});
      }
      return r;
    }
    std::vector<Term> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) prod.push_back({x.exp + y.exp, detail::ring_mul(x.coef, y.coef)});
    }
    return from_terms(std::move(prod));
  }

  Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
  Laurent& operator-=(const Laurent& b) { return *this = *this - b; }
  Laurent& operator*=(const Laurent& b) { return *this = *this * b; }

 private:
  static Laurent merge(const Laurent& a, const Laurent& b, bool subtract) {
    Laurent r;
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a.terms_[i].exp < b.terms_[j].exp)) {
        r.terms_.push_back(a.terms_[i++]);
      } else {
        Coeff c = subtract ? detail::ring_neg(b.terms_[j].coef) : b.terms_[j].coef;
        if (i < a.size() && a.terms_[i].exp == b.terms_[j].exp) {
          c = detail::ring_add(a.terms_[i++].coef, c);
          if (detail::ring_is_zero(c)) {
            ++j;
            continue;
          }
        }
        r.terms_.push_back({b.terms_[j++].exp, c});
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

using LaurentU = Laurent<GaussInt, VarU>;
using LaurentT = Laurent<std::int64_t, VarT>;
using LaurentA = Laurent<GaussInt, VarA>;

/// Symbolic unit i^ipow * A^apow, with A^2 = i u.
struct UnitFactor {
  int ipow = 0;  // in [0, 4)
  std::int64_t apow = 0;

  static UnitFactor i_power(std::int64_t k) { return {static_cast<int>(checked::mod(k, 4)), 0}; }
  static UnitFactor a_power(std::int64_t k) { return {0, k}; }

  friend bool operator==(const UnitFactor&, const UnitFactor&) = default;
  friend UnitFactor operator*(const UnitFactor& a, const UnitFactor& b) {
    return {(a.ipow + b.ipow) % 4, checked::add(a.apow, b.apow)};
  }

  /// Expands unit * p as a polynomial in A, substituting u = -i A^2.
  LaurentA resolve(const LaurentU& p) const;
};

// --- ring operations -------------------------------------------------------

/// u -> u^-1 (i fixed).
LaurentU bar_u(const LaurentU& a);
/// t -> t^-1.
LaurentT bar_t(const LaurentT& a);
/// i -> -i (u fixed).
LaurentU conj_i(const LaurentU& a);

/// q-number [n] = (u^n - u^-n) / (u - u^-1).
LaurentU qnumber(std::int64_t n);

/// Substitutes u^-2 = -t. Requires even exponents and real coefficients.
LaurentT u_to_t(const LaurentU& a);
/// Inverse of u_to_t: t^k -> (-1)^k u^(-2k).
LaurentU t_to_u(const LaurentT& a);

/// Exact quotient a / b; throws NotDivisible when no quotient exists.
template <class Coeff, class Var>
Laurent<Coeff, Var> exact_div(const Laurent<Coeff, Var>& a, const Laurent<Coeff, Var>& b);

/// Value at t = t0 with t0 in {1, -1}.
std::int64_t eval_int(const LaurentT& a, int t0);

/// Frequently used constants.
LaurentU u_monomial(int exp, GaussInt c = 1);
LaurentU d_u();  // d = i (u^-1 - u)
LaurentT t_monomial(int exp, std::int64_t c = 1);

// --- serialization -----------------------------------------------------------

/// Text form, ascending exponents, e.g. "-t^-4 + t^-3 + t^-1"; zero prints "0".
template <class Coeff, class Var>
std::string to_string(const Laurent<Coeff, Var>& p);

}  // namespace ratjones
