#include <gtest/gtest.h>

#include "ratjones/tangle.hpp"
#include "support.hpp"

namespace ratjones {
namespace {

const GaussInt I = GaussInt::i_unit();
LaurentU u(int e, GaussInt c = 1) { return u_monomial(e, c); }

Mat2U scale(const LaurentU& s, const Mat2U& m) { return {s * m.a11, s * m.a12, s * m.a21, s * m.a22}; }

IntSeq reversed(IntSeq s) {
  std::reverse(s.begin(), s.end());
  return s;
}

TEST(TangleType, Table) {
  EXPECT_EQ(tangle_type_of(Rat(3, 2)), TangleType::Infinity);
  EXPECT_EQ(tangle_type_of(Rat(1, 1)), TangleType::One);
  EXPECT_EQ(tangle_type_of(Rat(2, 1)), TangleType::Zero);
  EXPECT_EQ(tangle_type_of(Rat::infinity()), TangleType::Infinity);
}

TEST(TangleType, Arithmetic) {
  using T = TangleType;
  EXPECT_EQ(T::One + T::One, T::Zero);
  EXPECT_EQ(T::Zero + T::One, T::One);
  EXPECT_EQ(T::One + T::Infinity, T::Infinity);
  EXPECT_EQ(rotate(T::Zero), T::Infinity);
  EXPECT_EQ(rotate(T::Infinity), T::Zero);
  EXPECT_EQ(rotate(T::One), T::One);
}

TEST(Writhe, Examples) {
  for (std::int64_t n = -5; n <= 5; ++n) EXPECT_EQ(writhe_vector({n}), (WritheVec{n, -n}));
  EXPECT_EQ(writhe_vector({2, 2}).num, -4);
  EXPECT_EQ(writhe_vector({3, 2}), (WritheVec{-1, -5}));
  EXPECT_EQ(writhe_vector({}), (WritheVec{0, 0}));
}

TEST(Writhe, EvenSequences) {
  for (int trial = 0; trial < 500; ++trial) {
    IntSeq s = testing::random_seq(0, 4, 4);
    if (s.size() % 2) s.push_back(1);
    std::int64_t sum = 0;
    for (auto& x : s) sum += (x *= 2);
    EXPECT_EQ(writhe_vector(s).num, -sum) << to_string(s);
  }
}

TEST(BMatrix, Entries) {
  EXPECT_EQ(b_matrix(0), (Mat2U{{}, u(0, I), u(0, I), {}}));
  EXPECT_EQ(b_matrix(1), (Mat2U{1, u(-1, I), u(1, I), {}}));
  for (int n = -5; n <= 5; ++n) EXPECT_EQ(b_matrix(n).det(), LaurentU(1));
}

TEST(BProduct, Small) {
  EXPECT_EQ(b_product({}), Mat2U::identity());
  EXPECT_EQ(b_product({0, 0}), -Mat2U::identity());
  EXPECT_EQ(b_product({3, -2, 5}), b_matrix(3) * b_matrix(-2) * b_matrix(5));
}

// At u = 1 the entries [n] become n and i u^k becomes i, so column 0 of the
// product is (p, i q) with p/q the continued fraction value.
TEST(BProduct, ContinuedFractionAtOne) {
  auto at_one = [](const LaurentU& p) {
    GaussInt s = 0;
    for (const auto& t : p.terms()) s = s + t.coef;
    return s;
  };
  for (int trial = 0; trial < 500; ++trial) {
    const IntSeq s = testing::random_seq(0, 6, 6);
    const Mat2U m = b_product(s);
    const GaussInt top = at_one(m.a11), bottom = at_one(m.a21);
    ASSERT_TRUE(top.is_real());
    ASSERT_EQ(bottom.re, 0);
    auto [p, q] = testing::cf_value(s);
    if (top.re * p < 0 || (top.re == 0 && bottom.im * q < 0)) {
      p = -p;
      q = -q;
    }
    EXPECT_EQ(top.re, p) << to_string(s);
    EXPECT_EQ(bottom.im, q) << to_string(s);
  }
}

TEST(BVector, MatchesProduct) {
  for (int trial = 0; trial < 300; ++trial) {
    const IntSeq s = testing::random_seq(0, 6, 5);
    const Mat2U m = b_product(s);
    EXPECT_EQ(b_vector(s), (Vec2U{m.a11, m.a21}));
  }
}

TEST(Bracket, TwistOne) {
  const BracketVector b = bracket_vector({1});
  const LaurentA top = b.unit.resolve(b.vec.top), bottom = b.unit.resolve(b.vec.bottom);
  EXPECT_EQ(top, LaurentA::monomial(1, 1));
  EXPECT_EQ(bottom, LaurentA::monomial(1, -1));
}

TEST(Bracket, EmptyAndZero) {
  const BracketVector inf = bracket_vector({});
  EXPECT_EQ(inf.vec, (Vec2U{{}, 1}));
  EXPECT_EQ(inf.unit, UnitFactor{});
  const BracketVector zero = bracket_vector({0});
  EXPECT_TRUE(zero.unit.resolve(zero.vec.bottom).is_zero());
  EXPECT_EQ(zero.unit.resolve(zero.vec.top), LaurentA(1));
}

// Lemma identities on B-matrices.

TEST(BIdentities, ConjugateTranspose) {
  for (int n = -8; n <= 8; ++n) EXPECT_EQ(b_matrix(n).conj_transpose(), -b_matrix(-n));
}

TEST(BIdentities, ZeroSandwich) {
  for (int n = -8; n <= 8; ++n) {
    for (int m = -8; m <= 8; ++m) EXPECT_EQ(b_matrix(n) * b_matrix(0) * b_matrix(m), -b_matrix(n + m));
  }
}

TEST(BIdentities, RankOneSplitting) {
  const LaurentU d = d_u();
  const LaurentU id = u(0, I) * d;
  for (int n = -8; n <= 8; ++n) {
    const Mat2U lhs = scale(id, b_matrix(n));
    const Mat2U first{1, {}, -d, {}};
    const Mat2U second{1, d, {}, {}};
    const Mat2U rhs{u(n) * first.a11 - u(-n) * second.a11, u(n) * first.a12 - u(-n) * second.a12,
                    u(n) * first.a21 - u(-n) * second.a21, u(n) * first.a22 - u(-n) * second.a22};
    EXPECT_EQ(lhs, rhs) << n;
  }
}

void check_product_identities(const IntSeq& s) {
  const LaurentU d = d_u();
  const Mat2U c = b_product(s);
  const Mat2U rc = b_product(reversed(s));
  // reversal
  EXPECT_EQ(pair_1d_m_10(c), pair_1d_m_10(rc)) << to_string(s);
  // (1,d) C (1,-d)^T = (1 - d^2) (1,0) rev(C) (1,0)^T
  EXPECT_EQ(pair_1d_m_1md(c), (LaurentU(1) - d * d) * rc.a11) << to_string(s);
  // bar of (1,d) C (1,0)^T = (1,d) C* (1,0)^T = (1,0) C (1,-d)^T
  EXPECT_EQ(bar_u(pair_1d_m_10(c)), pair_1d_m_10(c.conj_transpose())) << to_string(s);
  EXPECT_EQ(bar_u(pair_1d_m_10(c)), row1_times_1md(c)) << to_string(s);
  // product form: C^-1 = -B0 C* B0, equal (1,0)-corners, c_form
  const Mat2U b0 = b_matrix(0);
  EXPECT_EQ(c * (-(b0 * c.conj_transpose() * b0)), Mat2U::identity()) << to_string(s);
  EXPECT_EQ(c.conj_transpose().a11, c.a11);
  EXPECT_EQ(pair_1d_m_1md(c.conj_transpose()), pair_1d_m_1md(c));
  EXPECT_EQ(c.det(), LaurentU(1));
  EXPECT_TRUE(c_form_verify(c)) << to_string(s);
  // transpose is bar of the reversed product
  EXPECT_EQ(rc, c.transpose().bar());
}

TEST(BIdentities, ExhaustiveShort) {
  for (int len = 0; len <= 3; ++len) testing::for_each_seq(len, -5, 5, check_product_identities);
}

TEST(BIdentities, Sampled) {
  for (int trial = 0; trial < 2000; ++trial) check_product_identities(testing::random_seq(4, 6, 5));
}

TEST(CForm, Examples) {
  EXPECT_TRUE(c_form_verify(Mat2U::identity()));
  for (int n = -5; n <= 5; ++n) EXPECT_TRUE(c_form_verify(b_matrix(n)));
  EXPECT_FALSE(c_form_verify(Mat2U{1, {}, {}, 2}));
  EXPECT_FALSE(c_form_verify(Mat2U{1, u(1), {}, 1}));
}

TEST(C0, Recognize) {
  const Mat2U b0 = b_matrix(0);
  const C0Decomposition r = c0_recognize(-(b0 * b_matrix(3) * b0));
  EXPECT_EQ(r.n, 3);
  EXPECT_EQ(r.sign, 1);
  const C0Decomposition z = c0_recognize(b0);
  EXPECT_EQ(z.n, 0);
  EXPECT_EQ(z.sign, 1);
  for (int n = -6; n <= 6; ++n) {
    for (int sign : {1, -1}) {
      const Mat2U m = sign > 0 ? -(b0 * b_matrix(n) * b0) : b0 * b_matrix(n) * b0;
      const C0Decomposition c = c0_recognize(m);
      EXPECT_EQ(c.n, n);
      EXPECT_EQ(c.sign, sign);
    }
  }
  try {
    c0_recognize(b_matrix(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotC0);
  }
}

// Every B-product with vanishing corner is ±B0 Bn B0.
TEST(C0, AllVanishingCornersAreRecognized) {
  int found = 0;
  for (int len = 1; len <= 4; ++len) {
    testing::for_each_seq(len, -3, 3, [&](const IntSeq& s) {
      const Mat2U m = b_product(s);
      if (!m.a11.is_zero()) return;
      ++found;
      const C0Decomposition c = c0_recognize(m);
      const Mat2U b0 = b_matrix(0);
      const Mat2U expect = b0 * b_matrix(c.n) * b0;
      EXPECT_EQ(m, c.sign > 0 ? -expect : expect) << to_string(s);
    });
  }
  EXPECT_GT(found, 0);
}

}  // namespace
}  // namespace ratjones
