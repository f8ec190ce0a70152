#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <utility>

// Exact amplitude arithmetic for Hadamard walks. After t unnormalized coin
// applications every amplitude is a Gaussian integer divided by sqrt(2)^t,
// so a (re, im, scale) triple represents each value with no rounding.

namespace qwm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned t) { return BigInt(1) << t; }

// Gaussian-integer numerator; the sqrt(2) scale lives on the containing
// vector (or on DyadicGaussian for standalone values).
struct GaussInt {
  BigInt re;
  BigInt im;

  bool is_zero() const { return re == 0 && im == 0; }
  BigInt norm() const { return re * re + im * im; }

  GaussInt& operator+=(const GaussInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussInt& operator-=(const GaussInt& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend bool operator==(const GaussInt&, const GaussInt&) = default;
};

// Value = (re + i*im) / sqrt(2)^scale.
struct DyadicGaussian {
  BigInt re;
  BigInt im;
  unsigned scale = 0;

  bool is_zero() const { return re == 0 && im == 0; }
};

// Minimal even reduction: (re, im, t) ~ (re*2^d, im*2^d, t + 2d), so the
// canonical representative divides out factors of 2 while t >= 2. Idempotent.
inline DyadicGaussian canonical(DyadicGaussian x) {
  if (x.is_zero()) {
    x.scale = 0;
    return x;
  }
  while (x.scale >= 2 && (x.re & 1) == 0 && (x.im & 1) == 0) {
    x.re >>= 1;
    x.im >>= 1;
    x.scale -= 2;
  }
  return x;
}

inline bool operator==(const DyadicGaussian& a, const DyadicGaussian& b) {
  DyadicGaussian ca = canonical(a);
  DyadicGaussian cb = canonical(b);
  return ca.re == cb.re && ca.im == cb.im && ca.scale == cb.scale;
}

// Exact sum at scale max(a.scale, b.scale); no canonicalization.
// Mixed-parity scales only combine when one operand is zero (a sqrt(2)
// factor cannot be absorbed into a Gaussian integer otherwise).
inline DyadicGaussian add_scaled(const DyadicGaussian& a, const DyadicGaussian& b) {
  const unsigned t = std::max(a.scale, b.scale);
  auto lift = [&](const DyadicGaussian& x, unsigned target) {
    const unsigned d = (target - x.scale) / 2;
    return DyadicGaussian{x.re << d, x.im << d, target};
  };
  if (a.is_zero() || b.is_zero()) {
    const DyadicGaussian& nz = a.is_zero() ? b : a;
    if (nz.is_zero()) return DyadicGaussian{0, 0, t};
    // Keep the parity of the nonzero side; lift past t if t has the other parity.
    const unsigned target = ((t - nz.scale) % 2 == 0) ? t : t + 1;
    return lift(nz, target);
  }
  if ((a.scale - b.scale) % 2 != 0)
    throw std::invalid_argument("add_scaled: incompatible sqrt(2) scales");
  DyadicGaussian la = lift(a, t);
  DyadicGaussian lb = lift(b, t);
  return DyadicGaussian{la.re + lb.re, la.im + lb.im, t};
}

inline Rational norm_squared(const DyadicGaussian& x) {
  return Rational(x.re * x.re + x.im * x.im, pow2(x.scale));
}

}  // namespace qwm
