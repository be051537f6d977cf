#include "polyeval/cheb_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "polyeval/errors.hpp"
#include "polyeval/reference.hpp"

namespace polyeval {
namespace {

DoubleDouble modulus(const ComplexScalar& z) { return abs(ExtendedComplex(z)); }

}  // namespace

ChebPairExtended cheb_sequences_extended(DoubleDouble t, std::size_t K) {
  ChebPairExtended out;
  out.T.resize(K + 1);
  out.U.resize(K + 1);
  out.T[0] = 1.0;
  out.U[0] = 1.0;
  if (K >= 1) {
    out.T[1] = t;
    out.U[1] = DoubleDouble(2.0) * t;
  }
  const DoubleDouble two_t = DoubleDouble(2.0) * t;
  for (std::size_t k = 2; k <= K; ++k) {
    out.T[k] = two_t * out.T[k - 1] - out.T[k - 2];
    out.U[k] = two_t * out.U[k - 1] - out.U[k - 2];
  }
  return out;
}

ChebPair cheb_sequences(double t, std::size_t K) {
  if (!(std::abs(t) <= 1.0)) {
    throw DomainError("Chebyshev argument must lie in [-1, 1]");
  }
  const auto ext = cheb_sequences_extended(t, K);
  ChebPair out;
  out.t = t;
  out.T.reserve(K + 1);
  out.U.reserve(K + 1);
  for (std::size_t k = 0; k <= K; ++k) {
    out.T.push_back(ext.T[k].to_double());
    out.U.push_back(ext.U[k].to_double());
  }
  return out;
}

GoertzelTrace goertzel_closed_form(const Polynomial& poly, ComplexScalar z) {
  require_finite(z, "evaluation point");
  if (z.re == 0.0 && z.im == 0.0) {
    throw ZeroPoint("closed form needs z != 0");
  }
  const std::size_t N = poly.degree();
  if (N < 2) {
    throw DegreeTooSmall("closed form needs degree >= 2");
  }
  const DoubleDouble r = modulus(z);
  const DoubleDouble t = DoubleDouble(z.re) / r;
  const auto cheb = cheb_sequences_extended(t, N);

  // r^j T_j(t) and r^j U_j(t).
  std::vector<DoubleDouble> scaled_T(N + 1);
  std::vector<DoubleDouble> scaled_U(N + 1);
  DoubleDouble rj = 1.0;
  for (std::size_t j = 0; j <= N; ++j) {
    scaled_T[j] = rj * cheb.T[j];
    scaled_U[j] = rj * cheb.U[j];
    rj *= r;
  }

  GoertzelTrace out;
  out.b.resize(N);
  ExtendedComplex b1;
  for (std::size_t n = 1; n <= N; ++n) {
    ExtendedComplex bn;
    for (std::size_t k = n; k <= N; ++k) {
      bn = bn + scaled_U[k - n] * ExtendedComplex(poly[k]);
    }
    out.b[n - 1] = bn.to_working();
    if (n == 1) b1 = bn;
  }
  ExtendedComplex u;
  for (std::size_t k = 0; k <= N; ++k) {
    u = u + scaled_T[k] * ExtendedComplex(poly[k]);
  }
  const ExtendedComplex v = DoubleDouble(z.im) * b1;
  const DoubleDouble x(z.re);
  const DoubleDouble y(z.im);
  out.p_hat = (DoubleDouble(2.0) * x).to_double();
  out.q_hat = (-(x * x + y * y)).to_double();
  out.u = u.to_working();
  out.v = v.to_working();
  return out;
}

double rotation_identity_residual(ComplexScalar z, std::size_t K, SineFactor factor) {
  require_finite(z, "evaluation point");
  if (z.re == 0.0 && z.im == 0.0) {
    throw ZeroPoint("rotation identity needs z != 0");
  }
  if (z.im == 0.0) {
    throw ZeroImaginary("rotation identity needs Im z != 0");
  }
  const DoubleDouble r = modulus(z);
  const DoubleDouble t = DoubleDouble(z.re) / r;
  const DoubleDouble sigma =
      factor == SineFactor::y_over_abs_z ? DoubleDouble(z.im) / r : DoubleDouble(z.im > 0.0 ? 1.0 : -1.0);
  const auto cheb = cheb_sequences_extended(t, K);
  const ExtendedComplex unit(t, DoubleDouble(z.im) / r);

  ExtendedComplex power(DoubleDouble(1.0));
  double worst = 0.0;
  for (std::size_t k = 0; k <= K; ++k) {
    const DoubleDouble u_prev = k == 0 ? DoubleDouble(0.0) : cheb.U[k - 1];
    const ExtendedComplex identity(cheb.T[k], sigma * u_prev);
    worst = std::max(worst, abs(power - identity).to_double());
    power = power * unit;
  }
  return worst;
}

std::vector<double> majorant_sums(const Polynomial& poly, ComplexScalar z) {
  const std::size_t N = poly.degree();
  const DoubleDouble r = modulus(z);
  std::vector<double> g(N + 1);
  DoubleDouble acc = 0.0;
  for (std::size_t n = N + 1; n-- > 0;) {
    acc = abs(ExtendedComplex(poly[n])) + r * acc;
    g[n] = acc.to_double();
  }
  return g;
}

std::vector<double> goertzel_intermediate_envelope(const Polynomial& poly, ComplexScalar z) {
  const std::size_t N = poly.degree();
  const double r = abs(z);
  const auto g = majorant_sums(poly, z);
  auto g_at = [&](std::size_t k) { return k <= N ? g[k] : 0.0; };

  std::vector<double> eta(N + 1);
  for (std::size_t k = 0; k <= N; ++k) {
    const double steps = static_cast<double>(N - k);
    const double steps_next = k + 1 <= N ? static_cast<double>(N - k - 1) : 0.0;
    eta[k] = kGoertzelStepConstant * kMachineEps *
             (abs(poly[k]) + steps * r * g_at(k + 1) + steps_next * r * r * g_at(k + 2));
  }
  std::vector<double> env(N);
  // tail = sum_{k=n}^{N} eta_k r^{k-n}
  double tail = eta[N];
  for (std::size_t n = N; n >= 1; --n) {
    if (n < N) tail = eta[n] + r * tail;
    env[n - 1] = static_cast<double>(N - n + 1) * tail;
  }
  return env;
}

BoundReport error_bound_report(const Polynomial& poly, ComplexScalar z, double observed_error,
                               const GoertzelTrace* trace) {
  require_finite(z, "evaluation point");
  const std::size_t N = poly.degree();
  BoundReport report;
  report.g = majorant_sums(poly, z);
  const double n1 = static_cast<double>(N + 1);
  report.A_N = 2.0 * kGoertzelStepConstant * n1 * n1;
  report.bound = report.A_N * kMachineEps * report.g[0];
  report.observed = observed_error;
  if (trace != nullptr && trace->degree() == N && N >= 1) {
    // The magnitude bound holds for exact b_n; computed values may exceed it
    // by at most their rounding envelope.
    const auto env = goertzel_intermediate_envelope(poly, z);
    bool ok = true;
    for (std::size_t n = 1; n <= N; ++n) {
      const double limit = static_cast<double>(N - n + 1) * report.g[n] + env[n - 1];
      ok = ok && abs(trace->b_n(n)) <= limit;
    }
    report.b_magnitudes_ok = ok;
  }
  return report;
}

double product_constant(const Polynomial& poly, ComplexScalar z) {
  return poly.has_real_coeffs() && z.is_real() ? 1.0 : kComplexMulConstant;
}

StabilityConstants stability_constants(Algo algo, const Polynomial& poly, ComplexScalar z,
                                       const PemaPlan* plan) {
  const double c = product_constant(poly, z);
  const double N = static_cast<double>(poly.degree());
  switch (algo) {
    case Algo::horner:
      return {(c + 1.0) * N, 0.0};
    case Algo::goertzel:
      return {2.0 * kGoertzelStepConstant * (N + 1.0) * (N + 1.0), 0.0};
    case Algo::pema_horner:
    case Algo::pema_goertzel: {
      if (plan == nullptr) {
        throw InvalidArgument("PEMA stability constants need a plan");
      }
      const double s = static_cast<double>(plan->s);
      const double p = static_cast<double>(plan->p);
      if (algo == Algo::pema_horner) {
        return {p * s * (2.0 * c + 1.0), c};
      }
      return {10.0 * p * s * s + p * s * c, c};
    }
  }
  return {};
}

double forward_error_bound(Algo algo, const Polynomial& poly, ComplexScalar z, const PemaPlan* plan) {
  const auto k = stability_constants(algo, poly, z, plan);
  const double g0 = majorant_sums(poly, z).front();
  double derivative_term = 0.0;
  if (k.Z != 0.0) {
    const ExtendedComplex dw = reference_eval_extended(poly.derivative(), ExtendedComplex(z));
    derivative_term = k.Z * abs(z) * abs(dw).to_double();
  }
  return kMachineEps * (k.A * g0 + derivative_term);
}

}  // namespace polyeval
