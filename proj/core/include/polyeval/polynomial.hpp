#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polyeval/numeric.hpp"

namespace polyeval {

/// w(z) = sum_{n=0}^{N} a_n z^n, stored a_0 first. Never empty; every
/// coefficient finite.
class Polynomial {
 public:
  explicit Polynomial(std::vector<ComplexScalar> coeffs);
  static Polynomial from_real(std::span<const double> coeffs);

  [[nodiscard]] std::size_t degree() const { return coeffs_.size() - 1; }
  [[nodiscard]] std::span<const ComplexScalar> coeffs() const { return coeffs_; }
  [[nodiscard]] const ComplexScalar& operator[](std::size_t n) const { return coeffs_[n]; }
  [[nodiscard]] bool has_real_coeffs() const;

  /// Coefficients n * a_n of w'(z), as a polynomial of degree max(N-1, 0).
  [[nodiscard]] Polynomial derivative() const;

 private:
  std::vector<ComplexScalar> coeffs_;
};

}  // namespace polyeval
