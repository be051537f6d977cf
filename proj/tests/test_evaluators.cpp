#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "mp_oracle.hpp"
#include "polyeval/cheb_oracle.hpp"
#include "polyeval/errors.hpp"
#include "polyeval/evaluators.hpp"

using namespace polyeval;

namespace {

Polynomial real_poly(std::initializer_list<double> c) {
  std::vector<double> v(c);
  return Polynomial::from_real(v);
}

Polynomial random_complex(std::mt19937_64& rng, std::size_t N) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<ComplexScalar> a(N + 1);
  for (auto& c : a) c = {d(rng), d(rng)};
  return Polynomial(std::move(a));
}

ComplexScalar unit_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(0.0, 6.283185307179586);
  const double th = d(rng);
  return {std::cos(th), std::sin(th)};
}

}  // namespace

TEST(Horner, Examples) {
  OpCounter ctr;
  const auto c = horner(Polynomial({ComplexScalar(-3, 2)}), {5, 5}, ctr);
  EXPECT_EQ(c.value, ComplexScalar(-3, 2));
  EXPECT_EQ(c.counts.real_mults, 0u);

  EXPECT_EQ(horner(real_poly({1, 2, 3}), {2, 0}, ctr).value, ComplexScalar(17, 0));

  const std::size_t N = 1000;
  std::vector<double> ones(N + 1, 1.0);
  EXPECT_EQ(horner(Polynomial::from_real(ones), {1, 0}, ctr).value, ComplexScalar(N + 1.0, 0));
}

TEST(Horner, CountsOneComplexProductPerDegree) {
  std::mt19937_64 rng(1);
  const Polynomial p = random_complex(rng, 37);
  OpCounter ctr{5, 7, 1};
  const auto out = horner(p, {0.3, 0.4}, ctr);
  EXPECT_EQ(out.counts.complex_mults, 37u);
  EXPECT_EQ(out.counts.real_mults, 4u * 37u);
  EXPECT_EQ(ctr.complex_mults, 38u);
  EXPECT_EQ(ctr.real_mults, 5u + 4u * 37u);
}

TEST(Goertzel, Examples) {
  OpCounter ctr;
  EXPECT_EQ(goertzel(real_poly({1, 1, 1}), {0, 1}, ctr).value, ComplexScalar(0, 1));
  EXPECT_EQ(goertzel(real_poly({1, 2, 3}), {2, 0}, ctr).value, ComplexScalar(17, 0));
  EXPECT_EQ(ctr.complex_mults, 0u);
}

TEST(Goertzel, DegreeTooSmallAndFallback) {
  OpCounter ctr;
  EXPECT_THROW((void)goertzel(real_poly({1, 2}), {1, 1}, ctr), DegreeTooSmall);
  EXPECT_THROW((void)goertzel(real_poly({1}), {1, 1}, ctr), DegreeTooSmall);
  EXPECT_THROW((void)goertzel_traced(real_poly({1, 2}), {1, 1}), DegreeTooSmall);
  EXPECT_EQ(evaluate(Algo::goertzel, real_poly({1, 2}), {1, 1}, ctr).value, ComplexScalar(3, 2));
  EXPECT_EQ(evaluate(Algo::goertzel, real_poly({4}), {1, 1}, ctr).value, ComplexScalar(4, 0));
}

TEST(Goertzel, RealPointGivesRealValue) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> a(200);
  for (auto& c : a) c = d(rng);
  const Polynomial p = Polynomial::from_real(a);
  OpCounter ctr;
  for (double x : {-0.9, 0.0, 0.5, 1.0}) {
    const auto g = goertzel(p, {x, 0}, ctr).value;
    const auto h = horner(p, {x, 0}, ctr).value;
    EXPECT_EQ(g.im, 0.0);
    const double bound = forward_error_bound(Algo::goertzel, p, {x, 0}) + forward_error_bound(Algo::horner, p, {x, 0});
    EXPECT_LE(std::abs(g.re - h.re), bound);
  }
}

TEST(Goertzel, FastPathNeedsRealCoefficients) {
  OpCounter ctr;
  GoertzelOptions fast{true};
  EXPECT_THROW((void)goertzel(Polynomial({ComplexScalar(1, 1), 1, 1}), {0, 1}, ctr, fast), InvalidArgument);
  const auto v = goertzel(real_poly({1, 1, 1}), {0, 1}, ctr, fast).value;
  EXPECT_EQ(v, ComplexScalar(0, 1));
}

TEST(GoertzelTraced, HandRecurrence) {
  const auto tr = goertzel_traced(real_poly({1, 1, 1, 1}), {0, 1});
  EXPECT_EQ(tr.p_hat, 0.0);
  EXPECT_EQ(tr.q_hat, -1.0);
  ASSERT_EQ(tr.degree(), 3u);
  EXPECT_EQ(tr.b_n(3), ComplexScalar(1));
  EXPECT_EQ(tr.b_n(2), ComplexScalar(1));
  EXPECT_EQ(tr.b_n(1), ComplexScalar(0));
  EXPECT_EQ(tr.value(), ComplexScalar(0, 0));
}

TEST(GoertzelTraced, SingleTermTail) {
  const Polynomial p({0, 0, 0, 0, ComplexScalar(2, -1)});
  const ComplexScalar z{0.5, 0.25};
  const auto tr = goertzel_traced(p, z);
  EXPECT_EQ(tr.b_n(4), ComplexScalar(2, -1));
  EXPECT_EQ(tr.b_n(3), tr.p_hat * tr.b_n(4));
}

TEST(GoertzelTraced, MatchesHighPrecisionRecurrence) {
  std::mt19937_64 rng(16);
  for (int rep = 0; rep < 20; ++rep) {
    const Polynomial p = random_complex(rng, 16);
    const ComplexScalar z = unit_point(rng);
    const auto tr = goertzel_traced(p, z);
    const auto exact = oracle::goertzel_b(p.coeffs(), z);
    const auto g = oracle::majorants(p.coeffs(), abs(z));
    for (std::size_t n = 1; n <= 16; ++n) {
      const double err = oracle::modulus(oracle::Complex(tr.b_n(n)) - exact[n - 1]).to_double();
      ASSERT_LE(err, 1e3 * kMachineEps * (16.0 - n + 1) * g[n]) << "n=" << n;
    }
  }
}

TEST(NaturalPower, Examples) {
  OpCounter ctr;
  const auto z1 = natural_power({0.3, -0.7}, 1, ctr);
  EXPECT_EQ(z1, ComplexScalar(0.3, -0.7));
  EXPECT_EQ(ctr.real_mults, 0u);
  EXPECT_EQ(natural_power({0, 1}, 4, ctr), ComplexScalar(1, 0));
  EXPECT_EQ(natural_power({2, 0}, 3, ctr), ComplexScalar(8, 0));
  EXPECT_EQ(ctr.complex_mults, 5u);
  EXPECT_THROW((void)natural_power({1, 0}, 0, ctr), InvalidArgument);
}

TEST(PemaPlan, Examples) {
  auto p = pema_plan(1024, FixedP{2});
  EXPECT_EQ(p.s, 32u);
  EXPECT_EQ(p.padded_degree, 1024u);
  EXPECT_EQ(p.padding(), 0u);
  p = pema_plan(1000, FixedP{2});
  EXPECT_EQ(p.s, 32u);
  EXPECT_EQ(p.padding(), 24u);
  p = pema_plan(8, FixedS{2});
  EXPECT_EQ(p.p, 3u);
  EXPECT_EQ(p.padded_degree, 8u);
  p = pema_plan(0);
  EXPECT_EQ(p.original_degree, 0u);
  EXPECT_GE(p.padded_degree, 1u);
}

TEST(PemaPlan, Errors) {
  EXPECT_THROW((void)PemaPlan::with_split(100, 3, 4), PlanMismatch);
  EXPECT_THROW((void)PemaPlan::with_split(10, 1, 4), InvalidArgument);
  EXPECT_THROW((void)pema_plan(10, FixedP{0}), InvalidArgument);
  EXPECT_THROW((void)pema_plan(10, FixedS{1}), InvalidArgument);
  OpCounter ctr;
  std::mt19937_64 rng(4);
  const Polynomial p = random_complex(rng, 30);
  EXPECT_THROW((void)pema(p, {1, 0}, PemaPlan::with_split(16, 4, 2), BaseScheme::horner, ctr), PlanMismatch);
}

TEST(Pema, SingleStageIsBaseScheme) {
  std::mt19937_64 rng(5);
  const Polynomial p = random_complex(rng, 9);
  const ComplexScalar z = unit_point(rng);
  const PemaPlan plan = PemaPlan::with_split(9, 9, 1);
  OpCounter ctr;
  EXPECT_EQ(pema(p, z, plan, BaseScheme::horner, ctr).value, horner(p, z, ctr).value);
  EXPECT_EQ(pema(p, z, plan, BaseScheme::goertzel, ctr).value, goertzel(p, z, ctr).value);
}

TEST(Pema, StageCoefficientsByHand) {
  const Polynomial p = real_poly({1, -2, 3, 5, -7});
  const ComplexScalar z{2, 1};
  PemaTrace trace;
  OpCounter ctr;
  const auto out = pema(p, z, PemaPlan::with_split(4, 2, 2), BaseScheme::horner, ctr, {}, &trace);
  ASSERT_EQ(trace.stages.size(), 2u);
  const auto& a1 = trace.stages[1];
  ASSERT_EQ(a1.size(), 3u);
  EXPECT_EQ(a1[0], ComplexScalar(1 - 2 * 2, -2));  // 1 - 2z
  EXPECT_EQ(a1[1], ComplexScalar(3 + 5 * 2, 5));   // 3 + 5z
  EXPECT_EQ(a1[2], ComplexScalar(-7, 0));
  EXPECT_EQ(out.value, horner(p, z, ctr).value);
}

TEST(Pema, LogSumAtOne) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  const std::size_t p = 6;
  const std::size_t N = std::size_t{1} << p;
  std::vector<double> a(N + 1);
  for (auto& c : a) c = d(rng);
  // Pairwise sums level by level, top element carried.
  std::vector<double> level = a;
  while (level.size() > 3) {
    std::vector<double> next;
    for (std::size_t j = 0; j + 1 < level.size(); j += 2) next.push_back(level[j] + level[j + 1]);
    next.push_back(level.back());
    level = next;
  }
  const double expected = level[0] + (level[1] + level[2]);
  OpCounter ctr;
  const auto out = pema(Polynomial::from_real(a), {1, 0}, PemaPlan::with_split(N, 2, p), BaseScheme::horner, ctr);
  EXPECT_EQ(out.value, ComplexScalar(expected, 0));
}

TEST(Pema, ComplexityIdentity) {
  std::mt19937_64 rng(7);
  for (std::size_t s : {2u, 3u, 5u, 16u}) {
    for (std::size_t p : {1u, 2u, 3u}) {
      std::size_t N = 1;
      for (std::size_t i = 0; i < p; ++i) N *= s;
      const Polynomial poly = random_complex(rng, N);
      OpCounter ctr;
      const auto plan = PemaPlan::with_split(N, s, p);
      const auto h = pema(poly, unit_point(rng), plan, BaseScheme::horner, ctr);
      EXPECT_EQ(h.counts.complex_mults, N + (s - 1) * (p - 1)) << s << "^" << p;
      if (s >= 3) {
        const auto g = pema(poly, unit_point(rng), plan, BaseScheme::goertzel, ctr);
        EXPECT_EQ(g.counts.complex_mults, (s - 1) * (p - 1)) << s << "^" << p;
      }
    }
  }
}

TEST(Pema, ThreadsAreBitIdentical) {
  std::mt19937_64 rng(8);
  const Polynomial poly = random_complex(rng, 5000);
  const ComplexScalar z = unit_point(rng);
  const PemaPlan plan = pema_plan(5000, FixedP{3});
  for (BaseScheme base : {BaseScheme::horner, BaseScheme::goertzel}) {
    OpCounter c1;
    OpCounter c4;
    PemaOptions seq;
    PemaOptions par;
    par.threads = 4;
    const auto a = pema(poly, z, plan, base, c1, seq);
    const auto b = pema(poly, z, plan, base, c4, par);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.counts, b.counts);
  }
}

TEST(Evaluate, DispatchAndNames) {
  for (Algo a : kAllAlgos) EXPECT_EQ(parse_algo(to_string(a)), a);
  EXPECT_EQ(parse_algo("pema-goertzel"), Algo::pema_goertzel);
  EXPECT_THROW((void)parse_algo("fft"), InvalidArgument);

  const Polynomial p = real_poly({1, 2, 3});
  OpCounter ctr;
  for (Algo a : kAllAlgos) EXPECT_EQ(evaluate(a, p, {2, 0}, ctr).value, ComplexScalar(17, 0)) << to_string(a);
}

TEST(Evaluate, RejectsNonFinitePoint) {
  OpCounter ctr;
  for (Algo a : kAllAlgos) {
    EXPECT_THROW((void)evaluate(a, real_poly({1, 2, 3}), {std::nan(""), 0}, ctr), InvalidArgument);
  }
}

TEST(Evaluate, DeterministicAndCountDeltas) {
  std::mt19937_64 rng(9);
  const Polynomial p = random_complex(rng, 300);
  const ComplexScalar z = unit_point(rng);
  for (Algo a : kAllAlgos) {
    OpCounter ctr;
    const auto first = evaluate(a, p, z, ctr);
    const OpCounter after_first = ctr;
    const auto second = evaluate(a, p, z, ctr);
    EXPECT_EQ(first.value, second.value);
    EXPECT_EQ(first.counts, second.counts);
    EXPECT_EQ(after_first, first.counts);
    OpCounter twice = first.counts;
    twice += second.counts;
    EXPECT_EQ(ctr, twice);
  }
}

TEST(Evaluate, WithinForwardBoundOfOracle) {
  std::mt19937_64 rng(10);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t N = 2 + rng() % 400;
    const Polynomial p = random_complex(rng, N);
    const ComplexScalar z = rep % 2 == 0 ? unit_point(rng) : ComplexScalar(0.8, -0.3);
    const auto exact = oracle::eval(p.coeffs(), oracle::Complex(z));
    const PemaPlan plan = pema_plan(N);
    for (Algo a : kAllAlgos) {
      OpCounter ctr;
      const auto v = evaluate(a, p, z, ctr).value;
      const double err = oracle::modulus(oracle::Complex(v) - exact).to_double();
      EXPECT_LE(err, forward_error_bound(a, p, z, &plan)) << to_string(a) << " N=" << N;
    }
  }
}
