#pragma once
// Shared helpers for the unit tests: seeded random inputs and small oracles.

#include <cstdint>
#include <random>
#include <vector>

#include "ratjones/exact_ring.hpp"
#include "ratjones/rational.hpp"

namespace ratjones::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline LaurentU random_u(int max_terms = 5, int max_exp = 6, std::int64_t max_coef = 9) {
  std::vector<LaurentU::Term> terms;
  const int n = static_cast<int>(uniform(0, max_terms));
  for (int i = 0; i < n; ++i) {
    terms.push_back({static_cast<int>(uniform(-max_exp, max_exp)),
                     GaussInt(uniform(-max_coef, max_coef), uniform(-max_coef, max_coef))});
  }
  return LaurentU::from_terms(std::move(terms));
}

inline LaurentT random_t(int max_terms = 5, int max_exp = 6, std::int64_t max_coef = 9) {
  std::vector<LaurentT::Term> terms;
  const int n = static_cast<int>(uniform(0, max_terms));
  for (int i = 0; i < n; ++i) {
    terms.push_back({static_cast<int>(uniform(-max_exp, max_exp)), uniform(-max_coef, max_coef)});
  }
  return LaurentT::from_terms(std::move(terms));
}

inline IntSeq random_seq(int min_len, int max_len, std::int64_t max_abs) {
  IntSeq s(static_cast<std::size_t>(uniform(min_len, max_len)));
  for (auto& x : s) x = uniform(-max_abs, max_abs);
  return s;
}

/// Calls f on every sequence of length len with entries in [lo, hi].
template <class F>
void for_each_seq(int len, std::int64_t lo, std::int64_t hi, F&& f) {
  IntSeq s(static_cast<std::size_t>(len), lo);
  while (true) {
    f(s);
    int i = len - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == hi) s[static_cast<std::size_t>(i--)] = lo;
    if (i < 0) return;
    ++s[static_cast<std::size_t>(i)];
  }
}

/// Plain Euclidean continued fraction value n_k - 1/(... - 1/n_1) by exact
/// fraction arithmetic on (num, den) pairs, independent of the library.
inline std::pair<std::int64_t, std::int64_t> cf_value(const IntSeq& s) {
  std::int64_t num = 1, den = 0;  // infinity
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    // x -> n - 1/x = (n*num - den) / num
    const std::int64_t nn = *it * num - den;
    den = num;
    num = nn;
  }
  if (den < 0 || (den == 0 && num < 0)) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

}  // namespace ratjones::testing
