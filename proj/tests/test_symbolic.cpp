#include <gtest/gtest.h>

#include "genform/error.hpp"
#include "support.hpp"

using namespace genform;
using genform::testing::Plane;

namespace {

Exponents e(std::uint32_t a, std::uint32_t b) { return {a, b}; }

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(*parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(*parse_rational("-0/5"), Rational(0));
  EXPECT_EQ(to_string(*parse_rational("-10/4")), "-5/2");
  EXPECT_FALSE(parse_rational("1/0"));
  EXPECT_FALSE(parse_rational("1.5"));
  EXPECT_FALSE(parse_rational(""));
  // Well beyond 64 bits.
  EXPECT_EQ(to_string(*parse_rational("123456789012345678901234567890/3")), "41152263004115226300411522630");
}

TEST(ScalarField, NormalizeMergesAndCancels) {
  Plane P;
  const auto x2 = ScalarField::normalize(P.chart, {{e(1, 0), 1}, {e(1, 0), 1}});
  EXPECT_EQ(x2, ScalarField::monomial(P.chart, e(1, 0), 2));
  const auto zero = ScalarField::normalize(P.chart, {{e(2, 1), 3}, {e(2, 1), -3}});
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero, ScalarField::zero(P.chart));
}

TEST(ScalarField, NormalizeRejectsWrongArity) {
  Plane P;
  try {
    ScalarField::normalize(P.chart, {{{1, 0, 0}, 1}});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::chart_mismatch);
  }
}

TEST(ScalarField, CanonicalOrderIsGraded) {
  Plane P;
  const auto p = ScalarField::normalize(P.chart, {{e(0, 2), 1}, {e(0, 0), 5}, {e(1, 1), 1}, {e(2, 0), 1}, {e(0, 1), 1}});
  std::vector<Exponents> order;
  for (const auto& t : p.terms()) order.push_back(t.exponents);
  EXPECT_EQ(order, (std::vector<Exponents>{e(0, 0), e(0, 1), e(2, 0), e(1, 1), e(0, 2)}));
}

TEST(ScalarField, HandExpansions) {
  Plane P;
  const auto x = P.x(), y = P.y();
  // (x+y)(x-y) = x^2 - y^2
  EXPECT_EQ((x + y) * (x - y), ScalarField::normalize(P.chart, {{e(2, 0), 1}, {e(0, 2), -1}}));
  // (x+1)^2 = x^2 + 2x + 1
  EXPECT_EQ((x + P.c(1)) * (x + P.c(1)), ScalarField::normalize(P.chart, {{e(2, 0), 1}, {e(1, 0), 2}, {e(0, 0), 1}}));
  EXPECT_EQ(x + ScalarField::zero(P.chart), x);
  EXPECT_EQ(x * P.c(1), x);
  EXPECT_EQ(pow(x + y, 3), (x + y) * (x + y) * (x + y));
  EXPECT_EQ(-x + x, ScalarField::zero(P.chart));
}

TEST(ScalarField, Derivatives) {
  Plane P;
  const auto x = P.x(), y = P.y();
  EXPECT_EQ(diff(x * x * y, 0), Rational(2) * x * y);
  EXPECT_TRUE(diff(P.c(3), 1).is_zero());
  EXPECT_EQ(diff((x + y) * (x + y), 0), Rational(2) * x + Rational(2) * y);
  EXPECT_THROW(diff(x, 2), Error);
  EXPECT_THROW(diff(x, -1), Error);
}

TEST(ScalarField, Evaluation) {
  Plane P;
  const auto x = P.x(), y = P.y();
  const std::vector<Rational> p23{2, 3};
  EXPECT_EQ(evaluate(x * x * y, p23), 12);
  EXPECT_EQ(evaluate(ScalarField::zero(P.chart), p23), 0);
  const std::vector<Rational> half{Rational(1, 2), Rational(1, 2)};
  EXPECT_EQ(evaluate(x + y, half), 1);
  const std::vector<Rational> short_point{1};
  EXPECT_THROW(evaluate(x, short_point), Error);
}

TEST(ScalarField, ChartMismatch) {
  Plane a, b(1);
  try {
    (void)(a.x() + b.x());
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::chart_mismatch);
  }
  // Distinct but equal charts interoperate.
  Plane c;
  EXPECT_EQ(a.x() + c.x(), Rational(2) * a.x());
}

TEST(ScalarField, CoefficientsStayExactUnderRepeatedProducts) {
  Plane P;
  auto f = Rational(7, 3) * P.x() + P.c(Rational(5, 11));
  const auto f24 = pow(f, 24);
  // Leading coefficient (7/3)^24 needs more than 64 bits in the numerator and denominator.
  Rational expected = 1;
  for (int i = 0; i < 24; ++i) expected *= Rational(7, 3);
  EXPECT_EQ(f24.terms().back().coefficient, expected);
  Rational constant = 1;
  for (int i = 0; i < 24; ++i) constant *= Rational(5, 11);
  EXPECT_EQ(f24.terms().front().coefficient, constant);
  EXPECT_GT(mpz_sizeinbase(expected.get_num_mpz_t(), 2), 64u);
}

// --- properties over random polynomials ---

class RandomPolys : public ::testing::TestWithParam<int> {};

TEST_P(RandomPolys, RingAxioms) {
  const int n = GetParam();
  for (std::uint64_t t = 0; t < 60; ++t) {
    harness::Generator g(genform::testing::config(11, n), t);
    const auto a = g.scalar(), b = g.scalar(), c = g.scalar();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST_P(RandomPolys, DerivativesCommuteAndObeyLeibniz) {
  const int n = GetParam();
  for (std::uint64_t t = 0; t < 60; ++t) {
    harness::Generator g(genform::testing::config(12, n), t);
    const auto a = g.scalar(), b = g.scalar();
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(diff(a * b, i), diff(a, i) * b + a * diff(b, i));
      for (int j = 0; j < n; ++j) EXPECT_EQ(diff(diff(a, i), j), diff(diff(a, j), i));
    }
  }
}

TEST_P(RandomPolys, EvaluationIsARingHomomorphism) {
  const int n = GetParam();
  for (std::uint64_t t = 0; t < 60; ++t) {
    harness::Generator g(genform::testing::config(13, n), t);
    const auto a = g.scalar(), b = g.scalar();
    std::vector<Rational> point;
    for (int i = 0; i < n; ++i) point.push_back(g.constant());
    EXPECT_EQ(evaluate(a * b, point), evaluate(a, point) * evaluate(b, point));
    EXPECT_EQ(evaluate(a + b, point), evaluate(a, point) + evaluate(b, point));
  }
}

INSTANTIATE_TEST_SUITE_P(Dimensions, RandomPolys, ::testing::Values(1, 2, 3, 4));

}  // namespace
