#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "mp_oracle.hpp"
#include "polyeval/double_double.hpp"
#include "polyeval/errors.hpp"
#include "polyeval/numeric.hpp"
#include "polyeval/polynomial.hpp"

using namespace polyeval;

TEST(ComplexMul, NaturalOrderExamples) {
  OpCounter ctr;
  EXPECT_EQ(cmul({3, 4}, {2, -1}, ctr), ComplexScalar(10, 5));
  EXPECT_EQ(cmul({0, 1}, {0, 1}, ctr), ComplexScalar(-1, 0));
  EXPECT_EQ(cmul({1, 0}, {-2.5, 7}, ctr), ComplexScalar(-2.5, 7));
  EXPECT_EQ(ctr.real_mults, 12u);
  EXPECT_EQ(ctr.real_adds, 6u);
  EXPECT_EQ(ctr.complex_mults, 3u);
}

TEST(ComplexMul, FixedEvaluationOrder) {
  OpCounter ctr;
  const ComplexScalar a{1e16, 1.0};
  const ComplexScalar b{1.0, -1.0};
  const ComplexScalar r = cmul(a, b, ctr);
  EXPECT_EQ(r.re, 1e16 * 1.0 - 1.0 * -1.0);
  EXPECT_EQ(r.im, 1e16 * -1.0 + 1.0 * 1.0);
}

TEST(ComplexMul, RealTimesComplex) {
  OpCounter ctr;
  EXPECT_EQ(rcmul(2.0, {1, 3}, ctr), ComplexScalar(2, 6));
  EXPECT_EQ(rcmul(0.0, {-4, 9}, ctr), ComplexScalar(0, 0));
  EXPECT_EQ(rcmul(0.5, {1, 1}, ctr), ComplexScalar(0.5, 0.5));
  EXPECT_EQ(ctr.real_mults, 6u);
  EXPECT_EQ(ctr.complex_mults, 0u);
  EXPECT_EQ(cadd({1, 2}, {3, 4}, ctr), ComplexScalar(4, 6));
  EXPECT_EQ(ctr.real_adds, 2u);
}

TEST(ComplexMul, ErrorWithinProductConstant) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-1e3, 1e3);
  for (int i = 0; i < 20000; ++i) {
    const ComplexScalar a{d(rng), d(rng)};
    const ComplexScalar b{d(rng), d(rng)};
    OpCounter ctr;
    const ComplexScalar got = cmul(a, b, ctr);
    const oracle::Complex exact = oracle::Complex(a) * oracle::Complex(b);
    const double err = oracle::modulus(oracle::Complex(got) - exact).to_double();
    ASSERT_LE(err, kComplexMulConstant * kMachineEps * abs(a) * abs(b));
  }
}

TEST(OpCounter, AccumulatesAndCompares) {
  OpCounter a{4, 2, 1};
  const OpCounter b{2, 0, 0};
  a += b;
  EXPECT_EQ(a, (OpCounter{6, 2, 1}));
  EXPECT_NE(a, b);
}

TEST(Finite, RejectsNanAndInf) {
  EXPECT_THROW(require_finite(ComplexScalar(std::nan(""), 0), "x"), InvalidArgument);
  EXPECT_THROW(require_finite(ComplexScalar(0, std::numeric_limits<double>::infinity()), "x"), InvalidArgument);
  EXPECT_NO_THROW(require_finite(ComplexScalar(1, -1), "x"));
}

TEST(Polynomial, Validation) {
  EXPECT_THROW(Polynomial(std::vector<ComplexScalar>{}), InvalidArgument);
  EXPECT_THROW(Polynomial({ComplexScalar(1, 0), ComplexScalar(std::nan(""), 0)}), InvalidArgument);
  const double real[] = {1, 2, 3};
  const Polynomial p = Polynomial::from_real(real);
  EXPECT_EQ(p.degree(), 2u);
  EXPECT_TRUE(p.has_real_coeffs());
  EXPECT_FALSE(Polynomial({ComplexScalar(1, 1)}).has_real_coeffs());
}

TEST(Polynomial, Derivative) {
  const double real[] = {1, 2, 3};
  const Polynomial d = Polynomial::from_real(real).derivative();
  ASSERT_EQ(d.degree(), 1u);
  EXPECT_EQ(d[0], ComplexScalar(2));
  EXPECT_EQ(d[1], ComplexScalar(6));
  const Polynomial c = Polynomial({ComplexScalar(5)}).derivative();
  EXPECT_EQ(c.degree(), 0u);
  EXPECT_EQ(c[0], ComplexScalar(0));
}

TEST(DoubleDouble, ErrorFreeTransforms) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int i = 0; i < 5000; ++i) {
    const double a = d(rng) * std::ldexp(1.0, static_cast<int>(rng() % 60) - 30);
    const double b = d(rng) * std::ldexp(1.0, static_cast<int>(rng() % 60) - 30);
    const auto s = eft::two_sum(a, b);
    const oracle::Real sum_err = oracle::Real(s.hi) + oracle::Real(s.lo) - (oracle::Real(a) + oracle::Real(b));
    ASSERT_EQ(sum_err.to_double(), 0.0);
    const auto p = eft::two_prod(a, b);
    const oracle::Real prod_err = oracle::Real(p.hi) + oracle::Real(p.lo) - oracle::Real(a) * oracle::Real(b);
    ASSERT_EQ(prod_err.to_double(), 0.0);
  }
}

TEST(DoubleDouble, ArithmeticNearQuadPrecision) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(0.1, 10.0);
  auto exact = [](DoubleDouble x) { return oracle::Real(x.hi()) + oracle::Real(x.lo()); };
  for (int i = 0; i < 2000; ++i) {
    const DoubleDouble a = DoubleDouble(d(rng)) / DoubleDouble(d(rng));
    const DoubleDouble b = DoubleDouble(d(rng)) / DoubleDouble(d(rng));
    const oracle::Real ea = exact(a);
    const oracle::Real eb = exact(b);
    auto rel = [](const oracle::Real& got, const oracle::Real& want) {
      return (oracle::abs(got - want) / oracle::abs(want)).to_double();
    };
    ASSERT_LT(rel(exact(a + b), ea + eb), 1e-31);
    ASSERT_LT(rel(exact(a * b), ea * eb), 1e-31);
    ASSERT_LT(rel(exact(a / b), ea / eb), 1e-30);
    ASSERT_LT(rel(exact(sqrt(a)), oracle::sqrt(ea)), 1e-30);
  }
}

TEST(DoubleDouble, ExtendedComplexRoundTrip) {
  const ComplexScalar z{0.1, -3.7};
  EXPECT_EQ(ExtendedComplex(z).to_working(), z);
  const ExtendedComplex p = ExtendedComplex(z) * ExtendedComplex(z);
  const oracle::Complex want = oracle::Complex(z) * oracle::Complex(z);
  EXPECT_EQ(p.to_working(), want.rounded());
}
