#include "ratjones/jones.hpp"

#include <cstdlib>
#include <vector>

namespace ratjones {

namespace {

std::int64_t seq_sum(const IntSeq& seq) {
  std::int64_t total = 0;
  for (std::int64_t n : seq) total = checked::add(total, n);
  return total;
}

bool all_even(const IntSeq& seq) {
  for (std::int64_t n : seq) {
    if (n % 2 != 0) return false;
  }
  return true;
}

int to_exp(std::int64_t e) {
  if (e > (1 << 24) || e < -(1 << 24)) throw Error(ErrorKind::Overflow, "exponent out of range");
  return static_cast<int>(e);
}

// t^{-2m} - 1
LaurentT twist_factor(std::int64_t m) { return t_monomial(to_exp(checked::mul(-2, m))) - LaurentT(1); }

const LaurentT& t_plus_one() {
  static const LaurentT v = LaurentT::from_terms({{0, 1}, {1, 1}});
  return v;
}

// t + 1 + t^-1
const LaurentT& t_trinomial() {
  static const LaurentT v = LaurentT::from_terms({{-1, 1}, {0, 1}, {1, 1}});
  return v;
}

// t + 2 + t^-1
const LaurentT& t_square() {
  static const LaurentT v = LaurentT::from_terms({{-1, 1}, {0, 2}, {1, 1}});
  return v;
}

}  // namespace

MSeq halve(const IntSeq& seq) {
  if (seq.size() % 2 != 0 || !all_even(seq)) {
    throw Error(ErrorKind::BadParity, "expected even entries and even length, got (" + to_string(seq) + ")");
  }
  MSeq m;
  m.reserve(seq.size());
  for (std::int64_t n : seq) m.push_back(n / 2);
  return m;
}

LaurentT jones_general(const IntSeq& seq) {
  const Rat r = eval_cf(seq);
  if (r.p() % 2 == 0) {
    throw Error(ErrorKind::NotAKnot, "numerator closure of (" + to_string(seq) + ") is a link");
  }
  const WritheVec w = writhe_vector(seq);
  const std::int64_t total = seq_sum(seq);
  const auto k = static_cast<std::int64_t>(seq.size());
  // (-1)^{(wN + Σn - 2k)/4} u^{(-3 wN - Σn)/2}
  const std::int64_t sign_num = checked::sub(checked::add(w.num, total), checked::mul(2, k));
  const std::int64_t u_num = checked::sub(checked::mul(-3, w.num), total);
  if (checked::mod(sign_num, 4) != 0 || checked::mod(u_num, 2) != 0) {
    throw Error(ErrorKind::IntegralityViolation,
                "non-integral normalization exponent for (" + to_string(seq) + ")");
  }
  const std::int64_t sign_exp = sign_num / 4;
  const GaussInt sign = (checked::mod(sign_exp, 2) == 0) ? 1 : -1;
  const LaurentU scalar = pair_1d(b_vector(seq)).scaled(sign, to_exp(u_num / 2));
  try {
    return u_to_t(scalar);
  } catch (const Error& e) {
    throw Error(ErrorKind::IntegralityViolation, std::string("bracket does not reduce to t: ") + e.what());
  }
}

LaurentT jones_even(const IntSeq& seq) {
  if (seq.size() % 2 != 0 || !all_even(seq)) {
    throw Error(ErrorKind::BadParity, "expected even entries and even length, got (" + to_string(seq) + ")");
  }
  const std::int64_t half_k = static_cast<std::int64_t>(seq.size()) / 2;
  const GaussInt sign = (half_k % 2 == 0) ? 1 : -1;
  const LaurentU scalar = pair_1d(b_vector(seq)).scaled(sign, to_exp(seq_sum(seq)));
  return u_to_t(scalar);
}

LaurentT jones_subsets(const MSeq& m) {
  if (m.size() % 2 != 0) throw Error(ErrorKind::BadParity, "odd number of halved entries");
  // Write each factor as (t+1) g_r. A subset T with runs T_1..T_p then
  // contributes t^{p/2} (t+1)^{|T|-p} ∏ g_r. Scanning positions upward,
  // s_odd / s_even accumulate subsets whose current last run is odd / even.
  LaurentT s_odd, s_even;
  const std::size_t len = m.size();
  for (std::size_t r = 1; r <= len; ++r) {
    const std::int64_t mr = m[len - r];
    if (mr == 0) continue;  // factor t^0 - 1 vanishes
    const LaurentT g = exact_div(twist_factor(mr), t_plus_one());
    if (r % 2 == 1) {
      s_odd += g * (LaurentT(1) + t_plus_one() * s_odd + s_even);
    } else {
      s_even += g * (s_odd.shifted(1) + t_plus_one() * s_even);
    }
  }
  return LaurentT(1) - t_trinomial() * s_even;
}

LaurentT jones_subsets_enumerated(const MSeq& m) {
  if (m.size() % 2 != 0) throw Error(ErrorKind::BadParity, "odd number of halved entries");
  if (m.size() > 20) throw Error(ErrorKind::InvalidArgument, "sequence too long for explicit enumeration");
  const int len = static_cast<int>(m.size());
  std::vector<LaurentT> factor(static_cast<std::size_t>(len) + 1);
  for (int r = 1; r <= len; ++r) factor[static_cast<std::size_t>(r)] = twist_factor(m[static_cast<std::size_t>(len - r)]);

  std::vector<LaurentT> square_powers{LaurentT(1)};
  LaurentT sum;
  // Windows [lo, hi] with lo odd and hi even; interior positions chosen freely.
  for (int lo = 1; lo <= len; lo += 2) {
    for (int hi = lo + 1; hi <= len; hi += 2) {
      const int inner = hi - lo - 1;
      for (std::uint32_t mask = 0; mask < (1u << inner); ++mask) {
        LaurentT prod = factor[static_cast<std::size_t>(lo)];
        int runs = 1;
        int prev = lo;
        for (int b = 0; b < inner; ++b) {
          if (!(mask & (1u << b))) continue;
          const int r = lo + 1 + b;
          if ((r - prev) % 2 != 0) ++runs;
          prev = r;
          prod *= factor[static_cast<std::size_t>(r)];
        }
        if ((hi - prev) % 2 != 0) ++runs;
        prod *= factor[static_cast<std::size_t>(hi)];
        if (prod.is_zero()) continue;
        const auto half = static_cast<std::size_t>(runs / 2);
        while (square_powers.size() <= half) square_powers.push_back(square_powers.back() * t_square());
        sum += exact_div(prod, square_powers[half]);
      }
    }
  }
  return LaurentT(1) - t_trinomial() * sum;
}

namespace {

// Sum over S in s_j (alternating parities from odd, |S| ≡ j mod 2) of
// i^{k-|S|} u^{extra + Σ(n_a - n_b)} ∏_{r∈S} [n_r], with positions 1..j.
LaurentU alternating_subset_sum(const IntSeq& seq, int j, std::int64_t extra) {
  const int k = static_cast<int>(seq.size());
  auto n_at = [&](int r) { return seq[static_cast<std::size_t>(k - r)]; };
  LaurentU total;
  for (std::uint32_t mask = 0; mask < (1u << j); ++mask) {
    std::vector<int> chosen, rest;
    for (int r = 1; r <= j; ++r) ((mask >> (r - 1)) & 1u ? chosen : rest).push_back(r);
    if ((static_cast<int>(chosen.size()) - j) % 2 != 0) continue;
    bool alternating = true;
    for (std::size_t x = 0; x < chosen.size(); ++x) {
      if ((chosen[x] % 2 == 1) != (x % 2 == 0)) alternating = false;
    }
    if (!alternating) continue;
    std::int64_t e = extra;
    for (std::size_t x = 0; x + 1 < rest.size(); x += 2) {
      if (rest[x + 1] != rest[x] + 1) throw Error(ErrorKind::IntegralityViolation, "unpaired complement");
      e = checked::add(e, checked::sub(n_at(rest[x]), n_at(rest[x + 1])));
    }
    LaurentU term = u_monomial(to_exp(e), GaussInt::i_power(k - static_cast<int>(chosen.size())));
    for (int r : chosen) term *= qnumber(n_at(r));
    total += term;
  }
  return total;
}

}  // namespace

Vec2U subset_expansion(const IntSeq& seq) {
  if (seq.size() > 20) throw Error(ErrorKind::InvalidArgument, "sequence too long for explicit expansion");
  const int k = static_cast<int>(seq.size());
  if (k == 0) return {1, {}};
  return {alternating_subset_sum(seq, k, 0), alternating_subset_sum(seq, k - 1, seq.front())};
}

IntSeq knot_even_seq(std::int64_t p, std::int64_t q) {
  if (p < 1) throw Error(ErrorKind::InvalidArgument, "determinant must be positive");
  if (p % 2 == 0) throw Error(ErrorKind::NotAKnot, "even numerator " + std::to_string(p) + " closes to a link");
  if (gcd(p, q) != 1) throw Error(ErrorKind::NotReduced, std::to_string(p) + "/" + std::to_string(q));
  return even_cf(make_q_even(p, q));
}

LaurentT jones_knot(std::int64_t p, std::int64_t q) { return jones_even(knot_even_seq(p, q)); }

std::int64_t det_of(std::int64_t p, std::int64_t q) { return std::llabs(eval_int(jones_knot(p, q), -1)); }

std::int64_t jones_span(const LaurentT& v) {
  if (v.is_zero()) return 0;
  return static_cast<std::int64_t>(v.max_exp()) - v.min_exp();
}

std::optional<UnitRelation> equal_up_to_unit(const LaurentT& v1, const LaurentT& v2) {
  if (v1.is_zero() || v2.is_zero()) {
    if (v1.is_zero() && v2.is_zero()) return UnitRelation{1, 0};
    return std::nullopt;
  }
  if (v1.size() != v2.size()) return std::nullopt;
  const int shift = v2.min_exp() - v1.min_exp();
  const std::int64_t c1 = v1.terms().front().coef, c2 = v2.terms().front().coef;
  int sign = 0;
  if (c2 == c1) sign = 1;
  if (c2 == checked::neg(c1)) sign = -1;
  if (sign == 0) return std::nullopt;
  if (v1.scaled(sign, shift) != v2) return std::nullopt;
  return UnitRelation{sign, shift};
}

bool product_identity_holds(const LaurentT& v, const LaurentT& a) {
  return v * bar_t(v) == t_square() - t_trinomial() * a * bar_t(a);
}

LaurentT product_identity_witness(std::int64_t p, std::int64_t q) {
  const IntSeq seq = knot_even_seq(p, q);
  const LaurentT v = jones_even(seq);
  const LaurentT alpha = u_to_t(b_product(seq).a11);
  for (int k = 0; k <= kWitnessUnitBound; ++k) {
    for (int shift : {k, -k}) {
      for (std::int64_t sign : {1, -1}) {
        const LaurentT a = alpha.scaled(sign, shift);
        if (product_identity_holds(v, a)) return a;
      }
      if (k == 0) break;
    }
  }
  throw Error(ErrorKind::NoWitness, "no unit multiple of the top-left entry satisfies the product identity");
}

}  // namespace ratjones
