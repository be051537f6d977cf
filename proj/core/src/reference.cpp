#include "polyeval/reference.hpp"

#include <cmath>
#include <string>

#include "polyeval/errors.hpp"

namespace polyeval {
namespace {

const DoubleDouble kTwoPi = DoubleDouble::from_parts(6.283185307179586, 2.4492935982947064e-16);

// Taylor series for |x| <= pi/4; terms fall below 2^-110 well before n = 15.
void sin_cos(DoubleDouble x, DoubleDouble& s, DoubleDouble& c) {
  const DoubleDouble x2 = x * x;
  DoubleDouble term = x;
  s = x;
  for (int n = 1; n <= 15; ++n) {
    term = -(term * x2) / DoubleDouble(static_cast<double>((2 * n) * (2 * n + 1)));
    s += term;
  }
  term = 1.0;
  c = 1.0;
  for (int n = 1; n <= 15; ++n) {
    term = -(term * x2) / DoubleDouble(static_cast<double>((2 * n - 1) * (2 * n)));
    c += term;
  }
}

}  // namespace

ExtendedComplex reference_eval_extended(const Polynomial& poly, const ExtendedComplex& z) {
  const auto coeffs = poly.coeffs();
  ExtendedComplex w = coeffs.back();
  for (std::size_t n = coeffs.size() - 1; n-- > 0;) {
    w = ExtendedComplex(coeffs[n]) + z * w;
  }
  return w;
}

ComplexScalar reference_eval(const Polynomial& poly, ComplexScalar z) {
  require_finite(z, "evaluation point");
  return reference_eval_extended(poly, ExtendedComplex(z)).to_working();
}

ExtendedComplex exact_unit_root(std::size_t degree, std::size_t k) {
  if (k > degree) {
    throw IndexOutOfRange("root index " + std::to_string(k) + " exceeds degree " + std::to_string(degree));
  }
  // theta = 2 pi f, f = k/(N+1) in [0, 1). Split f = q/4 + r with |r| <= 1/8.
  const DoubleDouble f = DoubleDouble(static_cast<double>(k)) / DoubleDouble(static_cast<double>(degree + 1));
  const double q = std::nearbyint(4.0 * f.hi());
  const DoubleDouble r = f - DoubleDouble(q / 4.0);
  DoubleDouble s;
  DoubleDouble c;
  sin_cos(kTwoPi * r, s, c);
  DoubleDouble cos_theta;
  DoubleDouble sin_theta;
  switch (static_cast<int>(q) % 4) {
    case 0:
      cos_theta = c;
      sin_theta = s;
      break;
    case 1:
      cos_theta = -s;
      sin_theta = c;
      break;
    case 2:
      cos_theta = -c;
      sin_theta = -s;
      break;
    default:
      cos_theta = s;
      sin_theta = -c;
      break;
  }
  return {cos_theta, -sin_theta};
}

double relative_error(std::span<const ComplexScalar> y, std::span<const ComplexScalar> y_ref) {
  if (y.size() != y_ref.size() || y.empty()) {
    throw InvalidArgument("relative_error needs two non-empty sequences of equal length");
  }
  DoubleDouble diff2 = 0.0;
  DoubleDouble ref2 = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const ExtendedComplex d = ExtendedComplex(y[i]) - ExtendedComplex(y_ref[i]);
    diff2 += norm_squared(d);
    ref2 += norm_squared(ExtendedComplex(y_ref[i]));
  }
  if (ref2.hi() == 0.0) {
    throw ZeroReference("reference vector has zero norm");
  }
  return sqrt(diff2 / ref2).to_double();
}

}  // namespace polyeval
