#pragma once

#include <cstddef>
#include <span>

#include "polyeval/double_double.hpp"
#include "polyeval/numeric.hpp"
#include "polyeval/polynomial.hpp"

namespace polyeval {

/// Horner's rule carried out entirely in double-double.
[[nodiscard]] ExtendedComplex reference_eval_extended(const Polynomial& poly, const ExtendedComplex& z);

/// Ground-truth w(z): extended-precision Horner, rounded once at the end.
[[nodiscard]] ComplexScalar reference_eval(const Polynomial& poly, ComplexScalar z);

/// exp(-2 pi i k / (N + 1)) in double-double: the exact (N+1)-th root of
/// unity that unit_circle_points(N, {k}) approximates in binary64.
[[nodiscard]] ExtendedComplex exact_unit_root(std::size_t degree, std::size_t k);

/// ||y - y_ref||_2 / ||y_ref||_2 over complex entries, norms accumulated in
/// double-double. Throws InvalidArgument on length mismatch or empty input
/// and ZeroReference when ||y_ref||_2 = 0.
[[nodiscard]] double relative_error(std::span<const ComplexScalar> y, std::span<const ComplexScalar> y_ref);

}  // namespace polyeval
