#include "polyeval/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "polyeval/cheb_oracle.hpp"
#include "polyeval/errors.hpp"
#include "polyeval/evaluators.hpp"
#include "polyeval/harness.hpp"
#include "polyeval/reference.hpp"

namespace polyeval {
namespace {

struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;
};

GaussianInt operator*(GaussianInt a, GaussianInt b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// sum a_n z^n with every power formed explicitly.
GaussianInt power_sum(const std::vector<std::int64_t>& a, GaussianInt z) {
  GaussianInt total;
  GaussianInt zn{1, 0};
  for (std::int64_t c : a) {
    total.re += c * zn.re;
    total.im += c * zn.im;
    zn = zn * z;
  }
  return total;
}

using Outcome = std::pair<bool, std::string>;

Outcome check_exact_instances(const VerifyOptions& opt) {
  const std::array<GaussianInt, 8> points = {{{0, 0}, {1, 0}, {-1, 0}, {2, 0}, {-2, 0}, {0, 1}, {0, -1}, {1, 1}}};
  const std::size_t max_deg = std::min<std::size_t>(8, opt.max_degree);
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::int64_t> coeff(-8, 8);
  std::uniform_int_distribution<std::size_t> deg(0, max_deg);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::int64_t> a(deg(rng) + 1);
    for (auto& c : a) c = coeff(rng);
    std::vector<ComplexScalar> ac(a.begin(), a.end());
    const Polynomial poly(std::move(ac));
    for (const auto& zi : points) {
      const GaussianInt expect = power_sum(a, zi);
      const ComplexScalar z(static_cast<double>(zi.re), static_cast<double>(zi.im));
      const ComplexScalar want(static_cast<double>(expect.re), static_cast<double>(expect.im));
      for (Algo algo : kAllAlgos) {
        OpCounter ctr;
        const auto got = evaluate(algo, poly, z, ctr).value;
        if (!(got == want)) {
          std::ostringstream msg;
          msg << to_string(algo) << " degree " << poly.degree() << " at (" << zi.re << "," << zi.im << ")";
          return {false, msg.str()};
        }
      }
    }
  }
  return {true, "1000 integer polynomials x 8 points x 4 algorithms exact"};
}

Polynomial random_complex_poly(std::mt19937_64& rng, std::size_t degree) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<ComplexScalar> a(degree + 1);
  for (auto& c : a) c = {d(rng), d(rng)};
  return Polynomial(std::move(a));
}

ComplexScalar random_unit_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double th = angle(rng);
  return {std::cos(th), std::sin(th)};
}

Outcome check_complexity(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed + 1);
  int checked = 0;
  for (std::size_t s : {2, 3, 4, 8, 32}) {
    for (std::size_t p : {1, 2, 3}) {
      const std::size_t N = static_cast<std::size_t>(std::pow(s, p));
      if (N > opt.max_degree) continue;
      const Polynomial poly = random_complex_poly(rng, N);
      const ComplexScalar z = {0.6, 0.7};
      OpCounter ctr;
      const auto out = pema(poly, z, PemaPlan::with_split(N, s, p), BaseScheme::horner, ctr);
      const std::uint64_t want = N + (s - 1) * (p - 1);
      if (out.counts.complex_mults != want || out.counts.real_mults != 4 * want) {
        return {false, "s=" + std::to_string(s) + " p=" + std::to_string(p) + ": " +
                           std::to_string(out.counts.complex_mults) + " complex products, expected " +
                           std::to_string(want)};
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " (s, p) splits match N + (s-1)(p-1)"};
}

Outcome check_goertzel_oracle(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed + 2);
  double worst = 0.0;
  for (std::size_t N : {4, 16, 64, 256}) {
    if (N > opt.max_degree) continue;
    for (int trial = 0; trial < 20; ++trial) {
      const Polynomial poly = random_complex_poly(rng, N);
      const ComplexScalar z = random_unit_point(rng);
      const auto traced = goertzel_traced(poly, z);
      const auto closed = goertzel_closed_form(poly, z);
      const auto env = goertzel_intermediate_envelope(poly, z);
      const auto g = majorant_sums(poly, z);
      for (std::size_t n = 1; n <= N; ++n) {
        const double diff = abs(traced.b_n(n) - closed.b_n(n));
        if (diff > env[n - 1]) {
          return {false, "b_" + std::to_string(n) + " outside envelope at N=" + std::to_string(N)};
        }
        if (abs(closed.b_n(n)) > static_cast<double>(N - n + 1) * g[n] * (1.0 + kMachineEps)) {
          return {false, "|b_n| <= (N-n+1) g_n violated at N=" + std::to_string(N)};
        }
        if (env[n - 1] > 0.0) worst = std::max(worst, diff / env[n - 1]);
      }
    }
  }
  std::ostringstream msg;
  msg << "max |b~ - b| / envelope = " << worst;
  return {true, msg.str()};
}

Outcome check_chebyshev(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed + 3);
  std::uniform_real_distribution<double> td(-1.0, 1.0);
  constexpr std::size_t K = 512;
  const double tol = 10.0 * K * kMachineEps;
  for (int trial = 0; trial < 100; ++trial) {
    const double t = td(rng);
    const auto ch = cheb_sequences(t, K);
    for (std::size_t k = 0; k <= K; ++k) {
      if (std::abs(ch.T[k]) > 1.0 + tol) return {false, "|T_k| > 1"};
      if (std::abs(ch.U[k]) > (k + 1.0) * (1.0 + tol)) return {false, "|U_k| > k+1"};
      if (k >= 2 && std::abs(ch.T[k] - (t * ch.U[k - 1] - ch.U[k - 2])) > tol) {
        return {false, "T_k != t U_{k-1} - U_{k-2}"};
      }
    }
    const ComplexScalar z = random_unit_point(rng);
    if (z.im != 0.0 && rotation_identity_residual(z, K) > 50.0 * K * kMachineEps) {
      return {false, "rotation identity residual too large"};
    }
  }
  return {true, "bounds, connection identity and rotation identity hold for K = 512"};
}

Outcome check_padding(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed + 4);
  const std::size_t cap = std::max<std::size_t>(opt.max_degree, 5);
  std::uniform_int_distribution<std::size_t> nd(3, std::min<std::size_t>(cap, 4096));
  std::uniform_int_distribution<std::size_t> pd(1, 3);
  int done = 0;
  while (done < 20) {
    const std::size_t N = nd(rng);
    const std::size_t p = pd(rng);
    const PemaPlan tight = pema_plan(N, FixedP{p});
    if (tight.padding() == 0) continue;
    const PemaPlan wide = PemaPlan::with_split(N, tight.s + 1, p);
    const Polynomial poly = random_complex_poly(rng, N);
    const ComplexScalar z = random_unit_point(rng);
    const ComplexScalar ref = reference_eval(poly, z);
    for (BaseScheme base : {BaseScheme::horner, BaseScheme::goertzel}) {
      const Algo algo = base == BaseScheme::horner ? Algo::pema_horner : Algo::pema_goertzel;
      OpCounter c1;
      OpCounter c2;
      const auto a = pema(poly, z, tight, base, c1).value;
      const auto b = pema(poly, z, wide, base, c2).value;
      const double bound_a = forward_error_bound(algo, poly, z, &tight);
      const double bound_b = forward_error_bound(algo, poly, z, &wide);
      if (abs(a - b) > 10.0 * (bound_a + bound_b)) return {false, "padded plans disagree"};
      if (abs(a - ref) > bound_a) return {false, "padded PEMA outside its forward bound"};
    }
    ++done;
  }
  return {true, "20 padded plans agree with wider plans and the reference"};
}

Outcome check_goertzel_paths(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed + 5);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  const std::size_t N = std::clamp<std::size_t>(opt.max_degree, 2, 1024);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> a(N + 1);
    for (auto& c : a) c = d(rng);
    const Polynomial poly = Polynomial::from_real(a);

    OpCounter ctr;
    const double x = 2.0 * d(rng) - 1.0;
    const auto real_point = goertzel(poly, ComplexScalar(x, 0.0), ctr).value;
    if (real_point.im != 0.0) return {false, "real point produced nonzero imaginary part"};

    const ComplexScalar z = random_unit_point(rng);
    GoertzelOptions fast;
    fast.unit_circle_real_fast_path = true;
    const auto w_fast = goertzel(poly, z, ctr, fast).value;
    const auto w_ref = reference_eval(poly, z);
    const double bound = forward_error_bound(Algo::goertzel, poly, z);
    if (abs(w_fast - w_ref) > bound) return {false, "unit-circle fast path outside Goertzel bound"};
  }
  return {true, "real points give real values; fast path within bound"};
}

std::vector<std::size_t> corpus_degrees(const VerifyOptions& opt) {
  std::vector<std::size_t> degrees;
  for (std::size_t N = 16; N <= opt.max_degree; N *= 4) degrees.push_back(N);
  if (opt.large) {
    for (std::size_t N : {std::size_t{1} << 20, std::size_t{1} << 22}) {
      if (std::find(degrees.begin(), degrees.end(), N) == degrees.end()) degrees.push_back(N);
    }
  }
  return degrees;
}

Outcome check_corpus(const VerifyOptions& opt, std::ostream& log) {
  const auto degrees = corpus_degrees(opt);
  if (degrees.empty()) return {true, "no corpus degrees below max-degree"};
  BenchmarkConfig cfg;
  cfg.threads = opt.threads;
  std::ostringstream notes;
  for (const auto& family :
       {CoefficientFamily::random(opt.seed), CoefficientFamily::trig(), CoefficientFamily::sqrt()}) {
    const auto records = run_benchmark(family, degrees, kAllAlgos, cfg);
    std::map<std::pair<std::size_t, Algo>, double> err;
    for (const auto& r : records) {
      if (!(r.error <= r.bound)) {
        std::ostringstream msg;
        msg << family.name() << " N=" << r.N << " " << to_string(r.algo) << ": error " << r.error
            << " > bound " << r.bound;
        return {false, msg.str()};
      }
      err[{r.N, r.algo}] = r.error;
    }
    for (std::size_t N : degrees) {
      if (N < (std::size_t{1} << 14)) continue;
      const double g = err[{N, Algo::goertzel}];
      const double pg = err[{N, Algo::pema_goertzel}];
      if (pg > g) {
        return {false, family.name() + " N=" + std::to_string(N) + ": PEMA(Goertzel) worse than Goertzel"};
      }
    }
    log << "  corpus " << family.name() << ": " << records.size() << " records within bounds\n";
  }
  return {true, "corpus within forward bounds; PEMA(Goertzel) <= Goertzel from 2^14"};
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verification(const VerifyOptions& options, std::ostream& log) {
  VerifyReport report;
  auto run = [&](const std::string& name, const std::function<Outcome()>& fn) {
    CheckResult res{name, false, {}};
    try {
      auto [ok, detail] = fn();
      res.passed = ok;
      res.detail = std::move(detail);
    } catch (const std::exception& e) {
      res.detail = std::string("exception: ") + e.what();
    }
    log << (res.passed ? "[PASS] " : "[FAIL] ") << res.name << ": " << res.detail << '\n';
    report.checks.push_back(std::move(res));
  };

  run("exact-instances", [&] { return check_exact_instances(options); });
  run("complexity-identity", [&] { return check_complexity(options); });
  run("goertzel-oracle", [&] { return check_goertzel_oracle(options); });
  run("chebyshev-identities", [&] { return check_chebyshev(options); });
  run("padding-neutrality", [&] { return check_padding(options); });
  run("goertzel-paths", [&] { return check_goertzel_paths(options); });
  run("benchmark-corpus", [&] { return check_corpus(options, log); });
  return report;
}

}  // namespace polyeval
