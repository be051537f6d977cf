#pragma once

// Double-double arithmetic: an unevaluated sum hi + lo of two binary64
// numbers with |lo| <= ulp(hi)/2, about 106 significand bits. Built from
// the error-free transformations TwoSum and Dekker's TwoProduct; this only
// holds when products are not contracted into FMAs.

#include <cmath>

#include "polyeval/numeric.hpp"

namespace polyeval {

namespace eft {

struct Pair {
  double hi;
  double lo;
};

inline Pair two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline Pair quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline Pair split(double a) {
  constexpr double kSplitter = 134217729.0;  // 2^27 + 1
  const double t = kSplitter * a;
  const double hi = t - (t - a);
  return {hi, a - hi};
}

inline Pair two_prod(double a, double b) {
  const double p = a * b;
  const Pair as = split(a);
  const Pair bs = split(b);
  const double err = ((as.hi * bs.hi - p) + as.hi * bs.lo + as.lo * bs.hi) + as.lo * bs.lo;
  return {p, err};
}

}  // namespace eft

class DoubleDouble {
 public:
  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double x) : hi_(x), lo_(0.0) {}  // NOLINT: exact widening

  static constexpr DoubleDouble from_parts(double hi, double lo) {
    DoubleDouble r;
    r.hi_ = hi;
    r.lo_ = lo;
    return r;
  }

  [[nodiscard]] constexpr double hi() const { return hi_; }
  [[nodiscard]] constexpr double lo() const { return lo_; }
  /// Rounds once to binary64.
  [[nodiscard]] double to_double() const { return hi_ + lo_; }

  friend DoubleDouble operator+(DoubleDouble a, DoubleDouble b) {
    auto s = eft::two_sum(a.hi_, b.hi_);
    auto t = eft::two_sum(a.lo_, b.lo_);
    s.lo += t.hi;
    s = eft::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    s = eft::quick_two_sum(s.hi, s.lo);
    return from_parts(s.hi, s.lo);
  }

  friend DoubleDouble operator-(DoubleDouble a) { return from_parts(-a.hi_, -a.lo_); }
  friend DoubleDouble operator-(DoubleDouble a, DoubleDouble b) { return a + (-b); }

  friend DoubleDouble operator*(DoubleDouble a, DoubleDouble b) {
    auto p = eft::two_prod(a.hi_, b.hi_);
    p.lo += a.hi_ * b.lo_ + a.lo_ * b.hi_;
    p = eft::quick_two_sum(p.hi, p.lo);
    return from_parts(p.hi, p.lo);
  }

  friend DoubleDouble operator/(DoubleDouble a, DoubleDouble b) {
    // Two Newton-style correction steps on the leading quotient.
    const double q1 = a.hi_ / b.hi_;
    DoubleDouble r = a - b * DoubleDouble(q1);
    const double q2 = r.hi_ / b.hi_;
    r = r - b * DoubleDouble(q2);
    const double q3 = r.hi_ / b.hi_;
    auto q = eft::quick_two_sum(q1, q2);
    return from_parts(q.hi, q.lo) + DoubleDouble(q3);
  }

  DoubleDouble& operator+=(DoubleDouble b) { return *this = *this + b; }
  DoubleDouble& operator-=(DoubleDouble b) { return *this = *this - b; }
  DoubleDouble& operator*=(DoubleDouble b) { return *this = *this * b; }

  friend bool operator<(DoubleDouble a, DoubleDouble b) {
    return a.hi_ < b.hi_ || (a.hi_ == b.hi_ && a.lo_ < b.lo_);
  }
  friend bool operator==(DoubleDouble a, DoubleDouble b) { return a.hi_ == b.hi_ && a.lo_ == b.lo_; }

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

inline DoubleDouble abs(DoubleDouble a) { return a.hi() < 0.0 ? -a : a; }

inline DoubleDouble sqrt(DoubleDouble a) {
  if (a.hi() <= 0.0) return DoubleDouble(0.0);
  // One Newton step from the binary64 root doubles the precision.
  const double x = std::sqrt(a.hi());
  const DoubleDouble xx = DoubleDouble(x) * DoubleDouble(x);
  const double correction = (a - xx).hi() / (2.0 * x);
  auto r = eft::quick_two_sum(x, correction);
  return DoubleDouble::from_parts(r.hi, r.lo);
}

/// Complex number with double-double parts. Widening from ComplexScalar is
/// exact; to_working() rounds each part once.
struct ExtendedComplex {
  DoubleDouble re;
  DoubleDouble im;

  constexpr ExtendedComplex() = default;
  constexpr ExtendedComplex(DoubleDouble r, DoubleDouble i = 0.0) : re(r), im(i) {}
  constexpr ExtendedComplex(const ComplexScalar& z) : re(z.re), im(z.im) {}  // NOLINT

  [[nodiscard]] ComplexScalar to_working() const { return {re.to_double(), im.to_double()}; }

  friend ExtendedComplex operator+(const ExtendedComplex& a, const ExtendedComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExtendedComplex operator-(const ExtendedComplex& a, const ExtendedComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ExtendedComplex operator*(const ExtendedComplex& a, const ExtendedComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ExtendedComplex operator*(DoubleDouble r, const ExtendedComplex& b) {
    return {r * b.re, r * b.im};
  }
};

inline DoubleDouble norm_squared(const ExtendedComplex& z) { return z.re * z.re + z.im * z.im; }
inline DoubleDouble abs(const ExtendedComplex& z) { return sqrt(norm_squared(z)); }

}  // namespace polyeval
