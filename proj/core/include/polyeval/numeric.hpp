#pragma once

// Working-precision complex arithmetic with a fixed evaluation order.
//
// Every product and sum below is rounded on its own (the library is built
// with -ffp-contract=off), so the rounding-error profile is exactly that of
// the textbook "natural" complex product
//
//   (x1 + i y1)(x2 + i y2) = (x1 x2 - y1 y2) + i (x1 y2 + y1 x2)
//
// whose relative error is bounded by (1 + sqrt 2) * eps.

#include <cmath>
#include <cstdint>
#include <limits>

namespace polyeval {

/// Machine precision of binary64 (2^-52).
inline constexpr double kMachineEps = std::numeric_limits<double>::epsilon();

/// Relative-error constant of one complex product, c = 1 + sqrt(2).
inline constexpr double kComplexMulConstant = 2.4142135623730950488;

struct ComplexScalar {
  double re = 0.0;
  double im = 0.0;

  constexpr ComplexScalar() = default;
  constexpr ComplexScalar(double real, double imag = 0.0) : re(real), im(imag) {}

  [[nodiscard]] bool is_finite() const { return std::isfinite(re) && std::isfinite(im); }
  [[nodiscard]] constexpr bool is_real() const { return im == 0.0; }

  friend constexpr bool operator==(const ComplexScalar&, const ComplexScalar&) = default;
};

/// Modulus computed with hypot (no spurious overflow).
[[nodiscard]] inline double abs(const ComplexScalar& z) { return std::hypot(z.re, z.im); }

/// Operation tallies for one evaluation. Passed explicitly; never shared
/// between concurrent evaluations.
struct OpCounter {
  std::uint64_t real_mults = 0;
  std::uint64_t real_adds = 0;
  std::uint64_t complex_mults = 0;

  OpCounter& operator+=(const OpCounter& other) {
    real_mults += other.real_mults;
    real_adds += other.real_adds;
    complex_mults += other.complex_mults;
    return *this;
  }

  friend constexpr bool operator==(const OpCounter&, const OpCounter&) = default;
};

/// Complex x complex product in natural order: 4 real multiplies, 2 real adds.
inline ComplexScalar cmul(const ComplexScalar& a, const ComplexScalar& b, OpCounter& ctr) {
  ctr.real_mults += 4;
  ctr.real_adds += 2;
  ctr.complex_mults += 1;
  const double re = a.re * b.re - a.im * b.im;
  const double im = a.re * b.im + a.im * b.re;
  return {re, im};
}

/// Real x complex product: 2 real multiplies.
inline ComplexScalar rcmul(double r, const ComplexScalar& b, OpCounter& ctr) {
  ctr.real_mults += 2;
  return {r * b.re, r * b.im};
}

inline ComplexScalar cadd(const ComplexScalar& a, const ComplexScalar& b, OpCounter& ctr) {
  ctr.real_adds += 2;
  return {a.re + b.re, a.im + b.im};
}

/// Uncounted helpers for code outside the measured evaluation paths.
inline ComplexScalar operator+(const ComplexScalar& a, const ComplexScalar& b) {
  return {a.re + b.re, a.im + b.im};
}
inline ComplexScalar operator-(const ComplexScalar& a, const ComplexScalar& b) {
  return {a.re - b.re, a.im - b.im};
}
inline ComplexScalar operator*(double r, const ComplexScalar& b) { return {r * b.re, r * b.im}; }

/// Throws InvalidArgument naming `what` when z has a NaN or infinite part.
void require_finite(const ComplexScalar& z, const char* what);
void require_finite(double x, const char* what);

}  // namespace polyeval
