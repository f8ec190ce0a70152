#pragma once

#include <map>
#include <utility>

#include "qwm/basis.hpp"
#include "qwm/dyadic.hpp"

namespace qwm {

// Sparse amplitude map keyed by (position, basis index) with one shared
// sqrt(2) scale: every coin application multiplies all branch weights by the
// same 1/sqrt(2), so a single counter keeps the numerators integral.
// Entries with value (0, 0) are never stored.
struct StateVector {
  int memory_order = 2;
  unsigned scale = 0;
  std::map<std::pair<int, int>, GaussInt> entries;

  void set(int k, int j, GaussInt a) {
    if (a.is_zero())
      entries.erase({k, j});
    else
      entries[{k, j}] = std::move(a);
  }

  void add(int k, int j, const GaussInt& a) {
    auto it = entries.find({k, j});
    if (it == entries.end()) {
      if (!a.is_zero()) entries.emplace(std::make_pair(k, j), a);
      return;
    }
    it->second += a;
    if (it->second.is_zero()) entries.erase(it);
  }

  friend bool operator==(const StateVector&, const StateVector&) = default;
};

inline DyadicGaussian amplitude_at(const StateVector& v, int k, int j) {
  auto it = v.entries.find({k, j});
  if (it == v.entries.end()) return DyadicGaussian{0, 0, v.scale};
  return DyadicGaussian{it->second.re, it->second.im, v.scale};
}

inline Rational norm_squared(const StateVector& v) {
  BigInt s = 0;
  for (const auto& [key, amp] : v.entries) s += amp.norm();
  return Rational(s, pow2(v.scale));
}

inline Rational probability_at(const StateVector& v, int k) {
  BigInt s = 0;
  auto it = v.entries.lower_bound({k, 0});
  for (; it != v.entries.end() && it->first.first == k; ++it) s += it->second.norm();
  return Rational(s, pow2(v.scale));
}

using Distribution = std::map<int, Rational>;

inline Distribution distribution(const StateVector& v) {
  std::map<int, BigInt> sums;
  for (const auto& [key, amp] : v.entries) sums[key.first] += amp.norm();
  Distribution d;
  const BigInt den = pow2(v.scale);
  for (const auto& [k, s] : sums) d.emplace(k, Rational(s, den));
  return d;
}

}  // namespace qwm
