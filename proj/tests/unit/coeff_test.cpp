#include <gtest/gtest.h>

#include <random>

#include "coeff/gcd.hpp"
#include "coeff/qnumbers.hpp"
#include "test_support.hpp"

using namespace qloop;
using namespace qloop::coeff;
using qloop::testing::evaluate_at;
using qloop::testing::random_field;
using qloop::testing::random_poly;
using qloop::testing::sample_point;

TEST(Coeff, QBinomialGolden) {
  EXPECT_EQ(qbinomial(4, 2), parse_field("q^4 + q^2 + 2 + q^-2 + q^-4"));
  EXPECT_EQ(qbinomial(3, 1), parse_field("q^2 + 1 + q^-2"));
  EXPECT_EQ(qbinomial(5, 0), Field(1));
  EXPECT_TRUE(qbinomial(3, 4).is_zero());
}

TEST(Coeff, QNumbersByExpansion) {
  // [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}, summed directly.
  for (int n = 1; n <= 9; ++n) {
    Field s;
    for (int k = n - 1; k >= 1 - n; k -= 2) s += Field::q(k);
    EXPECT_EQ(qnum(n), s) << n;
    EXPECT_EQ(qnum(-n), -s) << n;
  }
  EXPECT_TRUE(qnum(0).is_zero());
}

TEST(Coeff, KappaCancellation) {
  EXPECT_EQ((Field::q(2) - Field(1)) / kappa(), Field::q(1));
  EXPECT_EQ(render(kappa().inverse()), "(q)/(q^2 - 1)");
}

TEST(Coeff, SymbolicQNumber) {
  const LambdaSpec sym = LambdaSpec::symbolic_markers();
  const Field v = qnum(QExponent{1, {1, -1, 0}}, sym);
  // [lambda1 - lambda2 + 1] with z1 = q^lambda1, z2 = q^lambda2.
  EXPECT_EQ(v * kappa(), parse_field("q*z1*z2^-1 - q^-1*z1^-1*z2"));
  const LambdaSpec ints = LambdaSpec::integers({4, 1, 0});
  EXPECT_EQ(qnum(QExponent{1, {1, -1, 0}}, ints), qnum(4));
}

TEST(Coeff, CanonicalFormIsUnique) {
  std::mt19937 rng(7);
  for (int it = 0; it < 60; ++it) {
    const Field a = random_field(rng, 3), b = random_field(rng, 3);
    if (b.is_zero()) continue;
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ((a + b) - b, a);
    // denominator is a monic polynomial without monomial factor
    const auto& d = a.den();
    EXPECT_EQ(d.leading().coef, 1);
    EXPECT_TRUE(d.min_monomial().is_one());
  }
}

TEST(Coeff, ArithmeticCommutesWithEvaluation) {
  std::mt19937 rng(11);
  for (int it = 0; it < 80; ++it) {
    const Field a = random_field(rng, 4), b = random_field(rng, 4);
    const auto pt = sample_point(it);
    if (qloop::testing::evaluate_poly(a.den(), pt) == 0 || qloop::testing::evaluate_poly(b.den(), pt) == 0) continue;
    EXPECT_EQ(evaluate_at(a + b, pt), evaluate_at(a, pt) + evaluate_at(b, pt));
    EXPECT_EQ(evaluate_at(a * b, pt), evaluate_at(a, pt) * evaluate_at(b, pt));
    if (!b.is_zero() && evaluate_at(b, pt) != 0)
      EXPECT_EQ(evaluate_at(a / b, pt), evaluate_at(a, pt) / evaluate_at(b, pt));
  }
}

TEST(Coeff, GcdRecoversPlantedFactor) {
  std::mt19937 rng(3);
  for (int it = 0; it < 150; ++it) {
    const IntPoly h = random_poly(rng, 4, 4), f = random_poly(rng, 4, 5), g = random_poly(rng, 4, 5);
    if (h.is_zero() || f.is_zero() || g.is_zero()) continue;
    const IntPoly d = gcd(f * h, g * h);
    IntPoly quo;
    EXPECT_TRUE(try_divide(d, strip_monomial(h), quo) || try_divide(d, -strip_monomial(h), quo)) << it;
    EXPECT_TRUE(try_divide(f * h, d, quo));
    EXPECT_TRUE(try_divide(g * h, d, quo));
  }
}

TEST(Coeff, GcdKnownCases) {
  const auto p = [](const char* s) { return primitive_part(parse_field(s).num()).second; };
  EXPECT_EQ(gcd(p("q^4 - 1"), p("q^6 - 1")), p("q^2 - 1"));
  EXPECT_EQ(gcd(p("q^2*z1 - z2"), p("q^4*z1^2 - z2^2")), p("q^2*z1 - z2"));
  EXPECT_TRUE(gcd(p("q - z1"), p("q - z2")).is_one());
  EXPECT_EQ(gcd(p("6*q^2 - 6"), p("4*q - 4")), p("2*q - 2"));
}

TEST(Coeff, RenderParseRoundTrip) {
  std::mt19937 rng(5);
  for (int it = 0; it < 50; ++it) {
    const Field a = random_field(rng, 4);
    EXPECT_EQ(parse_field(render(a)), a) << render(a);
  }
  EXPECT_EQ(parse_field("(q^2*z1 - z2)/(q - q^-1)") * kappa(), parse_field("q^2*z1 - z2"));
}

TEST(Coeff, ParseErrors) {
  EXPECT_THROW(parse_field("q +"), UsageError);
  EXPECT_THROW(parse_field("w"), UsageError);
  EXPECT_THROW(parse_field("1/(q - q)"), UsageError);
  EXPECT_THROW(parse_field("(q"), UsageError);
  EXPECT_THROW(Field(1) / Field(), DomainError);
}

TEST(Coeff, Substitution) {
  const Field a = parse_field("(z1 - q*z2)/(1 - z1)");
  const Field b = a.substitute(Var::z1, Monomial::of(Var::q, 3));
  EXPECT_EQ(b, parse_field("(q^3 - q*z2)/(1 - q^3)"));
}
