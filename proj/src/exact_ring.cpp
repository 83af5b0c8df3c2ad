#include "ratjones/exact_ring.hpp"

#include <cstdlib>

namespace ratjones {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::NotAKnot: return "NotAKnot";
    case ErrorKind::BadParity: return "BadParity";
    case ErrorKind::OddPower: return "OddPower";
    case ErrorKind::NonReal: return "NonReal";
    case ErrorKind::NotC0: return "NotC0";
    case ErrorKind::NotPivotEquivalent: return "NotPivotEquivalent";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::IntegralityViolation: return "IntegralityViolation";
    case ErrorKind::NoWitness: return "NoWitness";
  }
  return "Unknown";
}

bool is_internal(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Overflow:
    case ErrorKind::NotDivisible:
    case ErrorKind::IntegralityViolation:
    case ErrorKind::NoWitness:
      return true;
    default:
      return false;
  }
}

GaussInt GaussInt::i_power(std::int64_t k) {
  switch (checked::mod(k, 4)) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

std::optional<std::int64_t> exact_quotient(std::int64_t a, std::int64_t b) {
  if (b == 0 || a % b != 0) return std::nullopt;
  return a / b;
}

std::optional<GaussInt> exact_quotient(const GaussInt& a, const GaussInt& b) {
  if (b.is_zero()) return std::nullopt;
  const GaussInt num = a * b.conj();
  const std::int64_t norm = checked::add(checked::mul(b.re, b.re), checked::mul(b.im, b.im));
  if (num.re % norm != 0 || num.im % norm != 0) return std::nullopt;
  return GaussInt{num.re / norm, num.im / norm};
}

std::string to_string(const GaussInt& c) {
  if (c.im == 0) return std::to_string(c.re);
  std::string im;
  if (c.im == 1) {
    im = "i";
  } else if (c.im == -1) {
    im = "-i";
  } else {
    im = std::to_string(c.im) + "i";
  }
  if (c.re == 0) return im;
  return "(" + std::to_string(c.re) + (c.im > 0 ? "+" : "") + im + ")";
}

LaurentA UnitFactor::resolve(const LaurentU& p) const {
  // i^ipow A^apow * c u^e  =  c i^ipow (-i)^e A^(apow + 2e)
  std::vector<LaurentA::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    const GaussInt unit = GaussInt::i_power(ipow) * GaussInt::i_power(checked::mul(3, t.exp));
    const std::int64_t e = checked::add(apow, checked::mul(2, t.exp));
    terms.push_back({static_cast<int>(e), unit * t.coef});
  }
  return LaurentA::from_terms(std::move(terms));
}

LaurentU bar_u(const LaurentU& a) {
  std::vector<LaurentU::Term> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) terms.push_back({-t.exp, t.coef});
  return LaurentU::from_terms(std::move(terms));
}

LaurentT bar_t(const LaurentT& a) {
  std::vector<LaurentT::Term> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) terms.push_back({-t.exp, t.coef});
  return LaurentT::from_terms(std::move(terms));
}

LaurentU conj_i(const LaurentU& a) {
  std::vector<LaurentU::Term> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) terms.push_back({t.exp, t.coef.conj()});
  return LaurentU::from_terms(std::move(terms));
}

LaurentU qnumber(std::int64_t n) {
  if (n == 0) return {};
  const std::int64_t m = std::llabs(n);
  const GaussInt sign = n > 0 ? 1 : -1;
  std::vector<LaurentU::Term> terms;
  terms.reserve(static_cast<std::size_t>(m));
  for (std::int64_t e = -(m - 1); e <= m - 1; e += 2) terms.push_back({static_cast<int>(e), sign});
  return LaurentU::from_terms(std::move(terms));
}

LaurentT u_to_t(const LaurentU& a) {
  std::vector<LaurentT::Term> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) {
    if (t.exp % 2 != 0) throw Error(ErrorKind::OddPower, "odd power of u in " + to_string(a));
    if (t.coef.im != 0) throw Error(ErrorKind::NonReal, "non-real coefficient in " + to_string(a));
    // c u^(-2k) = c (-1)^k t^k
    const int k = -t.exp / 2;
    terms.push_back({k, (k % 2 == 0) ? t.coef.re : checked::neg(t.coef.re)});
  }
  return LaurentT::from_terms(std::move(terms));
}

LaurentU t_to_u(const LaurentT& a) {
  std::vector<LaurentU::Term> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) {
    terms.push_back({-2 * t.exp, GaussInt{(t.exp % 2 == 0) ? t.coef : checked::neg(t.coef)}});
  }
  return LaurentU::from_terms(std::move(terms));
}

template <class Coeff, class Var>
Laurent<Coeff, Var> exact_div(const Laurent<Coeff, Var>& a, const Laurent<Coeff, Var>& b) {
  using P = Laurent<Coeff, Var>;
  if (b.is_zero()) throw Error(ErrorKind::NotDivisible, "division by zero polynomial");
  if (a.is_zero()) return {};
  // Long division from the top degree down; the quotient's exponent range is
  // forced by the extreme terms of a and b.
  const int q_hi = a.max_exp() - b.max_exp();
  const int q_lo = a.min_exp() - b.min_exp();
  if (q_hi < q_lo) {
    throw Error(ErrorKind::NotDivisible, to_string(a) + " by " + to_string(b));
  }
  P rem = a;
  std::vector<typename P::Term> quot;
  const Coeff lead = b.terms().back().coef;
  for (int e = q_hi; e >= q_lo && !rem.is_zero(); --e) {
    const int top = e + b.max_exp();
    if (rem.max_exp() > top) break;
    if (rem.max_exp() < top) continue;
    auto c = exact_quotient(rem.terms().back().coef, lead);
    if (!c) throw Error(ErrorKind::NotDivisible, to_string(a) + " by " + to_string(b));
    quot.push_back({e, *c});
    rem -= b.scaled(*c, e);
  }
  if (!rem.is_zero()) throw Error(ErrorKind::NotDivisible, to_string(a) + " by " + to_string(b));
  return P::from_terms(std::move(quot));
}

template LaurentT exact_div(const LaurentT&, const LaurentT&);
template LaurentU exact_div(const LaurentU&, const LaurentU&);

std::int64_t eval_int(const LaurentT& a, int t0) {
  if (t0 != 1 && t0 != -1) throw Error(ErrorKind::InvalidArgument, "eval_int requires t0 = 1 or -1");
  std::int64_t sum = 0;
  for (const auto& t : a.terms()) {
    const bool flip = (t0 == -1) && (t.exp % 2 != 0);
    sum = checked::add(sum, flip ? checked::neg(t.coef) : t.coef);
  }
  return sum;
}

LaurentU u_monomial(int exp, GaussInt c) { return LaurentU::monomial(c, exp); }

LaurentU d_u() {
  // i u^-1 - i u
  return LaurentU::from_terms({{-1, GaussInt{0, 1}}, {1, GaussInt{0, -1}}});
}

LaurentT t_monomial(int exp, std::int64_t c) { return LaurentT::monomial(c, exp); }

namespace {

// Splits a coefficient into a sign and a magnitude string for "a - b" style
// output; mixed Gaussian coefficients keep a leading '+' and parentheses.
std::pair<bool, std::string> sign_and_body(std::int64_t c) {
  const bool neg = c < 0;
  const std::string mag = neg ? std::to_string(c).substr(1) : std::to_string(c);
  return {neg, mag};
}

std::pair<bool, std::string> sign_and_body(const GaussInt& c) {
  if (c.im == 0) return sign_and_body(c.re);
  if (c.re == 0) {
    const bool neg = c.im < 0;
    const std::int64_t mag = neg ? -c.im : c.im;
    return {neg, mag == 1 ? std::string("i") : std::to_string(mag) + "i"};
  }
  return {false, to_string(c)};
}

bool is_unit_body(const std::string& body) { return body == "1"; }

}  // namespace

template <class Coeff, class Var>
std::string to_string(const Laurent<Coeff, Var>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    auto [neg, body] = sign_and_body(t.coef);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    if (t.exp != 0) {
      mono = std::string(Var::name);
      if (t.exp != 1) mono += "^" + std::to_string(t.exp);
    }
    if (mono.empty()) {
      out += body;
    } else if (is_unit_body(body)) {
      out += mono;
    } else {
      out += body + mono;
    }
  }
  return out;
}

template std::string to_string(const LaurentU&);
template std::string to_string(const LaurentT&);
template std::string to_string(const LaurentA&);

}  // namespace ratjones
