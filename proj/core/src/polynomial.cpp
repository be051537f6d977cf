#include "polyeval/polynomial.hpp"

#include <algorithm>

#include "polyeval/errors.hpp"

namespace polyeval {

Polynomial::Polynomial(std::vector<ComplexScalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw InvalidArgument("polynomial needs at least one coefficient");
  }
  for (const auto& a : coeffs_) {
    require_finite(a, "polynomial coefficient");
  }
}

Polynomial Polynomial::from_real(std::span<const double> coeffs) {
  std::vector<ComplexScalar> c;
  c.reserve(coeffs.size());
  for (double a : coeffs) {
    c.emplace_back(a, 0.0);
  }
  return Polynomial(std::move(c));
}

bool Polynomial::has_real_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ComplexScalar& a) { return a.is_real(); });
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() == 1) {
    return Polynomial({ComplexScalar{}});
  }
  std::vector<ComplexScalar> d(coeffs_.size() - 1);
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    d[n - 1] = static_cast<double>(n) * coeffs_[n];
  }
  return Polynomial(std::move(d));
}

}  // namespace polyeval
