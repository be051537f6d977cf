#pragma once

// Horner's rule, Goertzel's algorithm and the divide-and-conquer PEMA scheme
// built on top of either of them.
//
// Counting convention: Horner on a degree-N polynomial performs exactly N
// complex products. The first loop iteration (w = a_N + z * 0) is folded into
// the initialisation w = a_N and is neither executed nor counted. With this
// convention PEMA(Horner) on N = s^p costs N + (s-1)(p-1) complex products.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "polyeval/numeric.hpp"
#include "polyeval/polynomial.hpp"

namespace polyeval {

enum class Algo { horner, goertzel, pema_horner, pema_goertzel };
enum class BaseScheme { horner, goertzel };

inline constexpr Algo kAllAlgos[] = {Algo::horner, Algo::goertzel, Algo::pema_horner,
                                     Algo::pema_goertzel};

[[nodiscard]] std::string_view to_string(Algo algo);
/// Accepts "horner", "goertzel", "pema-horner", "pema-goertzel".
[[nodiscard]] Algo parse_algo(std::string_view name);

struct EvalOutcome {
  ComplexScalar value;
  OpCounter counts;
};

/// Intermediate quantities of Goertzel's recurrence.
struct GoertzelTrace {
  double p_hat = 0.0;
  double q_hat = 0.0;
  std::vector<ComplexScalar> b;  // b[n - 1] holds b_n, n = 1..N
  ComplexScalar u;
  ComplexScalar v;

  [[nodiscard]] std::size_t degree() const { return b.size(); }
  [[nodiscard]] const ComplexScalar& b_n(std::size_t n) const { return b.at(n - 1); }
  [[nodiscard]] ComplexScalar value() const { return {u.re - v.im, u.im + v.re}; }
};

struct GoertzelOptions {
  // Real coefficients on |z| = 1: real b_n and q = -1. The caller asserts
  // |z| = 1; the value of q is not recomputed from z.
  bool unit_circle_real_fast_path = false;
};

struct PemaPlan {
  std::size_t s = 2;
  std::size_t p = 1;
  std::size_t padded_degree = 2;  // s^p
  std::size_t original_degree = 0;

  [[nodiscard]] std::size_t padding() const { return padded_degree - original_degree; }

  /// Plan with explicit (s, p); throws PlanMismatch when s^p < N.
  static PemaPlan with_split(std::size_t degree, std::size_t s, std::size_t p);
};

struct FixedP {
  std::size_t p = 2;
};
struct FixedS {
  std::size_t s = 2;
};
using SplitPolicy = std::variant<FixedP, FixedS>;

/// fixed_p(p): smallest s >= 2 with s^p >= N. fixed_s(s): smallest p >= 1
/// with s^p >= N. Degree 0 is planned like degree 1.
[[nodiscard]] PemaPlan pema_plan(std::size_t degree, SplitPolicy policy = FixedP{2});

struct PemaOptions {
  // Worker threads for the independent stage coefficients. Results are
  // bit-identical to the sequential run for every thread count.
  unsigned threads = 1;
  GoertzelOptions goertzel;
};

/// Stage coefficients a^{(m)}, m = 0..p-1 (m = 0 is the padded input), and
/// the powers z_m.
struct PemaTrace {
  std::vector<std::vector<ComplexScalar>> stages;
  std::vector<ComplexScalar> points;
};

// Span kernels. `coeffs` is a_0..a_N and must be non-empty; no validation.
namespace kernels {

ComplexScalar horner(std::span<const ComplexScalar> coeffs, ComplexScalar z, OpCounter& ctr);
/// Requires coeffs.size() >= 3.
ComplexScalar goertzel(std::span<const ComplexScalar> coeffs, ComplexScalar z, OpCounter& ctr,
                       const GoertzelOptions& opts = {}, GoertzelTrace* trace = nullptr);
/// Goertzel for N >= 2, direct a_0 or a_0 + a_1 z below that.
ComplexScalar goertzel_or_direct(std::span<const ComplexScalar> coeffs, ComplexScalar z,
                                 OpCounter& ctr, const GoertzelOptions& opts = {});

}  // namespace kernels

EvalOutcome horner(const Polynomial& poly, ComplexScalar z, OpCounter& ctr);

/// Throws DegreeTooSmall for N < 2.
EvalOutcome goertzel(const Polynomial& poly, ComplexScalar z, OpCounter& ctr,
                     const GoertzelOptions& opts = {});

GoertzelTrace goertzel_traced(const Polynomial& poly, ComplexScalar z);

/// base^s by s-1 successive products base, base^2, ..., base^s.
ComplexScalar natural_power(ComplexScalar base, std::size_t s, OpCounter& ctr);

EvalOutcome pema(const Polynomial& poly, ComplexScalar z, const PemaPlan& plan, BaseScheme base,
                 OpCounter& ctr, const PemaOptions& opts = {}, PemaTrace* trace = nullptr);

struct EvalConfig {
  SplitPolicy split = FixedP{2};
  PemaOptions pema;
};

/// Dispatch by algorithm name. Goertzel falls back to the direct formula
/// for N < 2.
EvalOutcome evaluate(Algo algo, const Polynomial& poly, ComplexScalar z, OpCounter& ctr,
                     const EvalConfig& config = {});

}  // namespace polyeval
