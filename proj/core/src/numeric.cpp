#include "polyeval/numeric.hpp"

#include <string>

#include "polyeval/errors.hpp"

namespace polyeval {

void require_finite(const ComplexScalar& z, const char* what) {
  if (!z.is_finite()) {
    throw InvalidArgument(std::string(what) + " must be finite");
  }
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw InvalidArgument(std::string(what) + " must be finite");
  }
}

}  // namespace polyeval
