#pragma once

#include <array>
#include <map>
#include <vector>

#include "qwm/dyadic.hpp"

// Independent dense-array reference for the symmetric-init order-3 walk:
// eight amplitude rows on a fixed grid, updated column by column with the
// hard-coded branch pattern, probabilities divided by 2^(n+3) at the end.
// Deliberately kept free of the sparse engine's machinery.

namespace testutil {

inline std::map<int, qwm::Rational> dense_symmetric_distribution(int n) {
  using qwm::BigInt;
  const int width = 2 * n + 3;  // one spare column on each side
  const int center = n + 1;
  std::vector<std::array<BigInt, 2>> amp(static_cast<std::size_t>(8) * width);
  auto at = [&](int j, int idx) -> std::array<BigInt, 2>& {
    return amp[static_cast<std::size_t>(j) * width + idx];
  };

  const long long a = 1, b = 1, c = 1, d = -1;
  for (int j = 0; j < 8; ++j) {
    if (j % 2 == 0)
      at(j, center) = {1, 0};
    else
      at(j, center) = {0, 1};
  }

  auto fma2 = [](std::array<BigInt, 2>& dst, long long w, const std::array<BigInt, 2>& src) {
    dst[0] += w * src[0];
    dst[1] += w * src[1];
  };

  for (int t = 0; t < n; ++t) {
    for (int k = center - t; k <= center + t; k += 2) {
      const auto s0 = at(0, k), s1 = at(1, k), s2 = at(2, k), s3 = at(3, k);
      const auto s4 = at(4, k), s5 = at(5, k), s6 = at(6, k), s7 = at(7, k);
      fma2(at(4, k + 1), a, s0);
      fma2(at(4, k + 1), b, s1);
      fma2(at(1, k - 1), c, s0);
      fma2(at(1, k - 1), d, s1);
      fma2(at(0, k - 1), a, s2);
      fma2(at(0, k - 1), b, s3);
      fma2(at(5, k + 1), c, s2);
      fma2(at(5, k + 1), d, s3);
      fma2(at(6, k + 1), a, s4);
      fma2(at(6, k + 1), b, s5);
      fma2(at(3, k - 1), c, s4);
      fma2(at(3, k - 1), d, s5);
      fma2(at(2, k - 1), a, s6);
      fma2(at(2, k - 1), b, s7);
      fma2(at(7, k + 1), c, s6);
      fma2(at(7, k + 1), d, s7);
      for (int j = 0; j < 8; ++j) at(j, k) = {0, 0};
    }
  }

  std::map<int, qwm::Rational> dist;
  const BigInt den = qwm::pow2(static_cast<unsigned>(n + 3));
  for (int k = center - n; k <= center + n; k += 2) {
    BigInt s = 0;
    for (int j = 0; j < 8; ++j) {
      const auto& v = at(j, k);
      s += v[0] * v[0] + v[1] * v[1];
    }
    if (s != 0) dist[k - center] = qwm::Rational(s, den);
  }
  return dist;
}

}  // namespace testutil
