#pragma once

// Independent oracles for Goertzel's algorithm built on Chebyshev
// polynomials. With t = x/|z| (z = x + iy) the exact Goertzel quantities are
//
//   b_n = sum_{k=n}^{N} a_k |z|^{k-n} U_{k-n}(t)
//   u   = sum_{k=0}^{N} a_k |z|^k T_k(t),      v = y b_1
//
// and the rounding errors obey |w~ - w| <= 2K (N+1)^2 eps g_0 with K = 5
// and g_n = sum_{k=n}^{N} |a_k| |z|^{k-n}.
//
// Everything here runs in double-double so that the oracle's own rounding
// is negligible against the envelopes it certifies.

#include <cstddef>
#include <optional>
#include <vector>

#include "polyeval/double_double.hpp"
#include "polyeval/evaluators.hpp"
#include "polyeval/polynomial.hpp"

namespace polyeval {

/// Constant K of the per-step Goertzel error model.
inline constexpr double kGoertzelStepConstant = 5.0;

struct ChebPair {
  double t = 0.0;
  std::vector<double> T;  // T_0..T_K
  std::vector<double> U;  // U_0..U_K
};

/// T_0..T_K and U_0..U_K by the three-term recurrences. The recurrence runs
/// in double-double and each entry is rounded once, so every entry is
/// within one rounding of the exact recurrence value at t. Throws
/// DomainError if |t| > 1.
[[nodiscard]] ChebPair cheb_sequences(double t, std::size_t K);

/// The same recurrences kept in double-double.
struct ChebPairExtended {
  std::vector<DoubleDouble> T;
  std::vector<DoubleDouble> U;
};
[[nodiscard]] ChebPairExtended cheb_sequences_extended(DoubleDouble t, std::size_t K);

/// b_n, u, v from the closed forms. Throws ZeroPoint for z = 0 and
/// DegreeTooSmall for N < 2. p_hat and q_hat hold the exact 2x and
/// -(x^2 + y^2) rounded once.
[[nodiscard]] GoertzelTrace goertzel_closed_form(const Polynomial& poly, ComplexScalar z);

/// Which imaginary factor multiplies U_{k-1}(t) in the rotation identity
/// z^k / |z|^k = T_k(t) + i sigma U_{k-1}(t).
enum class SineFactor {
  y_over_abs_z,  // sigma = sin(theta) = y/|z|
  sign_of_y,     // sigma = y/|y|, the identity as usually misprinted
};

/// max_{0<=k<=K} | z^k/|z|^k - (T_k(t) + i sigma U_{k-1}(t)) | with U_{-1} = 0.
/// Throws ZeroPoint for z = 0 and ZeroImaginary for Im z = 0.
[[nodiscard]] double rotation_identity_residual(ComplexScalar z, std::size_t K,
                                                SineFactor factor = SineFactor::y_over_abs_z);

struct BoundReport {
  std::vector<double> g;  // g_0..g_N
  double A_N = 0.0;       // 2K (N+1)^2
  double bound = 0.0;     // A_N eps g_0
  double observed = 0.0;
  /// Set when a trace was supplied: |b_n| <= (N-n+1) g_n for every n.
  std::optional<bool> b_magnitudes_ok;

  [[nodiscard]] bool holds() const { return observed <= bound && b_magnitudes_ok.value_or(true); }
};

/// g_n = sum_{k=n}^{N} |a_k| |z|^{k-n}, accumulated in double-double.
[[nodiscard]] std::vector<double> majorant_sums(const Polynomial& poly, ComplexScalar z);

[[nodiscard]] BoundReport error_bound_report(const Polynomial& poly, ComplexScalar z, double observed_error,
                                             const GoertzelTrace* trace = nullptr);

/// Bound on |b~_n - b_n| for n = 1..N (entry n-1) from propagating the
/// per-step perturbations
///   |eta_k| <= K eps (|a_k| + (N-k)|z| g_{k+1} + (N-k-1)|z|^2 g_{k+2})
/// through |e_n| <= (N-n+1) sum_{k=n}^{N} |eta_k| |z|^{k-n}.
[[nodiscard]] std::vector<double> goertzel_intermediate_envelope(const Polynomial& poly, ComplexScalar z);

/// Coefficient and argument growth constants (A, Z) of the backward error
/// model w~ = sum a_n (1 + D_n) [z (1 + b)]^n, |D_n| <= A eps, |b| <= Z eps.
struct StabilityConstants {
  double A = 0.0;
  double Z = 0.0;
};

/// c of the complex product error model: 1 when every product is real or
/// real x complex, 1 + sqrt 2 when complex x complex products occur.
[[nodiscard]] double product_constant(const Polynomial& poly, ComplexScalar z);

/// Constants for `algo`. `plan` is required for the PEMA variants and its
/// padded degree s^p is the N used there.
[[nodiscard]] StabilityConstants stability_constants(Algo algo, const Polynomial& poly, ComplexScalar z,
                                                     const PemaPlan* plan = nullptr);

/// First-order forward bound eps (A g_0 + Z |z| |w'(z)|).
[[nodiscard]] double forward_error_bound(Algo algo, const Polynomial& poly, ComplexScalar z,
                                         const PemaPlan* plan = nullptr);

}  // namespace polyeval
