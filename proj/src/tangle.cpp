#include "ratjones/tangle.hpp"

#include <cstdlib>

namespace ratjones {

TangleType operator+(TangleType a, TangleType b) {
  if (a == TangleType::Infinity || b == TangleType::Infinity) return TangleType::Infinity;
  return (a == b) ? TangleType::Zero : TangleType::One;
}

TangleType rotate(TangleType t) {
  switch (t) {
    case TangleType::Zero: return TangleType::Infinity;
    case TangleType::Infinity: return TangleType::Zero;
    default: return TangleType::One;
  }
}

TangleType tangle_type_of(const Rat& r) {
  if (r.p() % 2 == 0) return TangleType::Zero;
  if (r.q() % 2 == 0) return TangleType::Infinity;
  return TangleType::One;
}

std::string_view to_string(TangleType t) {
  switch (t) {
    case TangleType::Zero: return "0";
    case TangleType::One: return "1";
    default: return "inf";
  }
}

WritheVec writhe_vector(const IntSeq& seq) {
  WritheVec w;                       // T_∞
  Rat prefix = Rat::infinity();      // fraction of the tangle built so far
  std::int64_t num = 1, den = 0;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    const std::int64_t n = *it;
    const TangleType rotated_type = rotate(tangle_type_of(prefix));
    const WritheVec rotated = w.rotated();
    const WritheVec twist{n, checked::neg(n)};
    if (rotated_type != TangleType::Infinity) {
      w = rotated + twist;
    } else {
      // swap^{type(T_n)} w(T) + [[0,1],[0,1]] w(T_n)
      const bool odd_twist = (n % 2 != 0);
      w = (odd_twist ? rotated.rotated() : rotated) + WritheVec{twist.den, twist.den};
    }
    const std::int64_t next = checked::sub(checked::mul(n, num), den);
    den = num;
    num = next;
    prefix = Rat(num, den);
  }
  return w;
}

Mat2U Mat2U::conj_transpose() const { return {conj_i(a11), conj_i(a21), conj_i(a12), conj_i(a22)}; }

Mat2U Mat2U::bar() const { return {bar_u(a11), bar_u(a12), bar_u(a21), bar_u(a22)}; }

std::string to_string(const Mat2U& m) {
  return "[[" + to_string(m.a11) + ", " + to_string(m.a12) + "], [" + to_string(m.a21) + ", " +
         to_string(m.a22) + "]]";
}

Mat2U b_matrix(std::int64_t n) {
  const int e = static_cast<int>(n);
  return {qnumber(n), u_monomial(-e, GaussInt::i_unit()), u_monomial(e, GaussInt::i_unit()), {}};
}

Mat2U b_product(const IntSeq& seq) {
  Mat2U m = Mat2U::identity();
  for (std::int64_t n : seq) m = m * b_matrix(n);
  return m;
}

Vec2U b_vector(const IntSeq& seq) {
  Vec2U v{1, {}};
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    const int e = static_cast<int>(*it);
    // (x, y) -> ([n] x + i u^-n y, i u^n x)
    LaurentU top = qnumber(*it) * v.top + v.bottom.scaled(GaussInt::i_unit(), -e);
    LaurentU bottom = v.top.scaled(GaussInt::i_unit(), e);
    v = {std::move(top), std::move(bottom)};
  }
  return v;
}

BracketVector bracket_vector(const IntSeq& seq) {
  std::int64_t total = 0;
  for (std::int64_t n : seq) total = checked::add(total, n);
  const auto k = static_cast<std::int64_t>(seq.size());
  // (i A^-1)^Σn (-i)^k = i^(Σn + 3k) A^(-Σn)
  const UnitFactor unit = UnitFactor::i_power(checked::add(total, checked::mul(3, k))) *
                          UnitFactor::a_power(checked::neg(total));
  Vec2U v = b_vector(seq);
  return {{std::move(v.bottom), std::move(v.top)}, unit};
}

bool c_form_verify(const Mat2U& m) {
  // Off-diagonal entries must be i times a real polynomial; α, δ real.
  auto real_part_of = [](const LaurentU& x, bool divide_by_i, LaurentU& out) {
    std::vector<LaurentU::Term> terms;
    for (const auto& t : x.terms()) {
      GaussInt c = divide_by_i ? GaussInt{t.coef.im, checked::neg(t.coef.re)} : t.coef;
      if (c.im != 0) return false;
      terms.push_back({t.exp, c});
    }
    out = LaurentU::from_terms(std::move(terms));
    return true;
  };
  LaurentU alpha, beta, gamma, delta;
  if (!real_part_of(m.a11, false, alpha) || !real_part_of(m.a12, true, beta) ||
      !real_part_of(m.a21, true, gamma) || !real_part_of(m.a22, false, delta)) {
    return false;
  }
  const LaurentU alpha_bar = bar_u(alpha), beta_bar = bar_u(beta);
  const LaurentU w = LaurentU::from_terms({{1, 1}, {-1, -1}});  // u - u^-1
  // γ = β' + (α' - α)/w and δ = α' + (β - β')/w, cleared of the denominator
  if (gamma * w != beta_bar * w + alpha_bar - alpha) return false;
  if (delta * w != alpha_bar * w + beta - beta_bar) return false;
  // α α' + β β' + (α' β - α β')/w = 1
  return (alpha * alpha_bar + beta * beta_bar) * w + alpha_bar * beta - alpha * beta_bar == w;
}

C0Decomposition c0_recognize(const Mat2U& m) {
  if (!m.a11.is_zero()) throw Error(ErrorKind::NotC0, "top-left entry is nonzero");
  if (m.a12.size() != 1) throw Error(ErrorKind::NotC0, "top-right entry is not a unit monomial");
  const auto& t = m.a12.terms().front();
  // a12 = i β with β = ±u^n
  int sign = 0;
  if (t.coef == GaussInt{0, 1}) sign = 1;
  if (t.coef == GaussInt{0, -1}) sign = -1;
  if (sign == 0) throw Error(ErrorKind::NotC0, "top-right entry is not ±i u^n");
  const std::int64_t n = t.exp;
  const Mat2U b0 = b_matrix(0);
  const Mat2U core = b0 * b_matrix(n) * b0;
  const Mat2U expected = sign > 0 ? -core : core;
  if (!(expected == m)) throw Error(ErrorKind::NotC0, "matrix is not ±B_0 B_n B_0");
  return {sign, n};
}

LaurentU pair_1d(const Vec2U& v) { return v.top + d_u() * v.bottom; }

LaurentU row1_times_1md(const Mat2U& m) { return m.a11 - m.a12 * d_u(); }

LaurentU pair_1d_m_1md(const Mat2U& m) {
  const LaurentU d = d_u();
  const Vec2U col{m.a11 - m.a12 * d, m.a21 - m.a22 * d};
  return pair_1d(col);
}

LaurentU pair_1d_m_10(const Mat2U& m) { return pair_1d({m.a11, m.a21}); }

}  // namespace ratjones
