#include "ratjones/rational.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "ratjones/checked.hpp"
#include "ratjones/error.hpp"

namespace ratjones {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = checked::mod(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quo = old_r / r;
    std::int64_t t = old_r - quo * r;
    old_r = r;
    r = t;
    t = old_s - quo * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw Error(ErrorKind::InvalidArgument, "no inverse modulo " + std::to_string(m));
  return checked::mod(old_s, m);
}

Rat::Rat(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw Error(ErrorKind::InvalidArgument, "0/0 is not a fraction");
  const std::int64_t g = gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = checked::neg(p);
    q = checked::neg(q);
  }
  p_ = p;
  q_ = q;
}

std::string to_string(const Rat& r) { return std::to_string(r.p()) + "/" + std::to_string(r.q()); }

std::vector<std::int64_t> KnotClass::qset() const {
  if (q == q_inv) return {q};
  return {q, q_inv};
}

std::string to_string(const KnotClass& k) {
  std::string s = std::to_string(k.p) + " {";
  const auto qs = k.qset();
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(qs[i]);
  }
  return s + "}";
}

Rat eval_cf(const IntSeq& seq) {
  // (num, den) starts at ∞ = 1/0; each step is x -> n - 1/x.
  std::int64_t num = 1, den = 0;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    const std::int64_t next = checked::sub(checked::mul(*it, num), den);
    den = num;
    num = next;
  }
  return Rat(num, den);
}

namespace {

// Nearest even integer to a/b (b > 0). Ties would need a/b to be an odd
// integer, which the parity preconditions of even_cf rule out.
std::int64_t nearest_even(std::int64_t a, std::int64_t b) {
  const std::int64_t shifted = checked::add(a, b);
  const std::int64_t twice_b = checked::mul(2, b);
  if (shifted % twice_b == 0) {
    throw Error(ErrorKind::IntegralityViolation, "nearest-even tie in even continued fraction");
  }
  return checked::mul(2, checked::floor_div(shifted, twice_b));
}

}  // namespace

IntSeq even_cf(const Rat& r) {
  if (r.is_infinite()) return {};
  if (r.p() % 2 == 0 || r.q() % 2 != 0) {
    throw Error(ErrorKind::BadParity, "even continued fraction needs odd numerator and even denominator, got " +
                                          to_string(r));
  }
  IntSeq out;
  // x = a/b with a odd, b even, b > 0
  std::int64_t a = r.p(), b = r.q();
  while (true) {
    const std::int64_t outer = nearest_even(a, b);
    out.push_back(outer);
    // s = 1 / (outer - x) = b / (outer*b - a): even numerator, odd denominator
    std::int64_t sa = b, sb = checked::sub(checked::mul(outer, b), a);
    if (sb < 0) {
      sa = -sa;
      sb = -sb;
    }
    const std::int64_t inner = nearest_even(sa, sb);
    out.push_back(inner);
    // inner - s = (inner*sb - sa) / sb
    const std::int64_t rest = checked::sub(checked::mul(inner, sb), sa);
    if (rest == 0) break;
    a = sb;
    b = rest;
    if (b < 0) {
      a = -a;
      b = -b;
    }
  }
  return out;
}

Rat make_q_even(std::int64_t p, std::int64_t q) {
  if (q % 2 == 0) return Rat(p, q);
  return Rat(p, checked::sub(q, p));
}

KnotClass schubert_canonical(std::int64_t p, std::int64_t q) {
  if (p < 1) throw Error(ErrorKind::InvalidArgument, "determinant must be positive");
  if (p % 2 == 0) throw Error(ErrorKind::NotAKnot, "even numerator " + std::to_string(p) + " closes to a link");
  if (gcd(p, q) != 1) throw Error(ErrorKind::NotReduced, std::to_string(p) + "/" + std::to_string(q));
  KnotClass k;
  k.p = p;
  const std::int64_t r = checked::mod(q, p);
  const std::int64_t ri = mod_inverse(r, p);
  k.q = std::min(r, ri);
  k.q_inv = std::max(r, ri);
  const std::int64_t neg = checked::mod(p - r, p);
  k.amphicheiral = (neg == r) || (neg == ri);
  return k;
}

KnotClass knot_class_of(const Rat& r) {
  if (r.is_infinite()) return schubert_canonical(1, 0);
  if (r.p() < 0) return schubert_canonical(-r.p(), -r.q());
  return schubert_canonical(r.p(), r.q());
}

KnotClass mirror_class(const KnotClass& k) { return schubert_canonical(k.p, k.p - k.q); }

Rat parse_fraction(std::string_view text, bool require_reduced) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw Error(ErrorKind::InvalidArgument, "malformed integer '" + std::string(s) + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  const std::int64_t p = parse_int(text.substr(0, slash));
  const std::int64_t q = slash == std::string_view::npos ? 1 : parse_int(text.substr(slash + 1));
  if (require_reduced && gcd(p, q) != 1) {
    throw Error(ErrorKind::NotReduced, "fraction " + std::string(text) + " is not in lowest terms");
  }
  return Rat(p, q);
}

IntSeq parse_seq(std::string_view text) {
  IntSeq out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    std::string_view tok = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorKind::InvalidArgument, "malformed sequence entry '" + std::string(tok) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const IntSeq& seq) {
  std::string s;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(seq[i]);
  }
  return s;
}

}  // namespace ratjones
