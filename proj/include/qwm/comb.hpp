#pragma once

#include <array>
#include <atomic>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qwm/cluster.hpp"
#include "qwm/dyadic.hpp"

// Combinatorial symbols behind the closed-form amplitudes: compositions with
// constrained summands, a two-binomial placement count, multiset-permutation
// group counts, and the exact realized ranges of the size-two cluster count
// and of (g, r).

namespace qwm {

inline int kdelta(long long a, long long b) { return a == b ? 1 : 0; }
inline int pos_ind(long long x) { return x > 0 ? 1 : 0; }  // indicator of Z+

namespace detail {

// Pascal triangle of cpp_ints, grown on demand. Readers go through a fixed
// array of atomic row pointers, so growth never disturbs a concurrent read;
// rows live in a deque and are stable once published.
class BinomTable {
 public:
  static constexpr long long kMaxN = 1024;

  const BigInt& at(long long n, long long k) {
    static const BigInt zero = 0;
    if (n < 0 || k < 0 || k > n) return zero;
    if (n > kMaxN) throw std::length_error("binomial table limit exceeded");
    const std::vector<BigInt>* row = rows_[n].load(std::memory_order_acquire);
    if (!row) row = grow(static_cast<std::size_t>(n));
    return (*row)[static_cast<std::size_t>(k)];
  }

 private:
  const std::vector<BigInt>* grow(std::size_t need) {
    std::lock_guard<std::mutex> lock(mu_);
    while (built_ <= need) {
      std::vector<BigInt> row(built_ + 1);
      row[0] = 1;
      row[built_] = 1;
      if (built_ >= 2) {
        const std::vector<BigInt>& prev = storage_.back();
        for (std::size_t k = 1; k < built_; ++k) row[k] = prev[k - 1] + prev[k];
      }
      storage_.push_back(std::move(row));
      rows_[built_].store(&storage_.back(), std::memory_order_release);
      ++built_;
    }
    return rows_[need].load(std::memory_order_relaxed);
  }

  std::deque<std::vector<BigInt>> storage_;
  std::array<std::atomic<const std::vector<BigInt>*>, kMaxN + 1> rows_{};
  std::size_t built_ = 0;
  std::mutex mu_;
};

inline BinomTable& binom_table() {
  static BinomTable t;
  return t;
}

}  // namespace detail

inline const BigInt& binom(long long n, long long k) { return detail::binom_table().at(n, k); }

// Compositions of u into m parts with exactly v summands 2 and no summand 1.
// The impossible cases are defined to be 1 rather than 0 so the symbol can
// appear in amplitude formulas without special-casing.
inline BigInt comp_count(long long u, long long m, long long v) {
  if (u >= 3 * m - v && m > v) return binom(m, v) * binom(u - 2 * m - 1, m - v - 1);
  return 1;
}

// C(x, r) * C(u - x, m - r) when both factors are meaningful, else 0:
// r singular clusters into x positive places, the remaining m - r into the
// u - x negative places.
inline BigInt placement_count(long long u, long long m, long long x, long long r) {
  if (0 <= r && r <= x && 0 <= m - r && m - r <= u - x) return binom(x, r) * binom(u - x, m - r);
  return 0;
}

// Permutations of the multiset {x*S, y*M} forming exactly g alternating
// groups whose last element is permitted by t1 (ends S) / t0 (ends M).
// Equals exhaustive enumeration for every argument: for g >= 2 the two
// binomial products already vanish outside the realizable range, and the
// degenerate single-group cases honor the end constraint.
inline BigInt group_perm_count(long long x, long long y, long long g, bool t1, bool t0) {
  if (x < 0 || y < 0 || g < 0) return 0;
  if (g == 0) return (x == 0 && y == 0) ? 1 : 0;
  if (g == 1) {
    if (x > 0 && y == 0) return t1 ? 1 : 0;
    if (y > 0 && x == 0) return t0 ? 1 : 0;
    return 0;
  }
  const long long lo = g / 2, hi = (g + 1) / 2;
  BigInt total = 0;
  if (t0) total += binom(x - 1, lo - 1) * binom(y - 1, hi - 1);
  if (t1) total += binom(x - 1, hi - 1) * binom(y - 1, lo - 1);
  return total;
}

inline BigInt group_perm_count(long long x, long long y, long long g, int t1t0) {
  return group_perm_count(x, y, g, (t1t0 >> 1) & 1, t1t0 & 1);
}

// Realized values of the size-two cluster count for N elements split into C
// clusters, C1 of them of size one: the singleton C - C1 exactly when
// C1 = 2C - N (every multi-element cluster has size two), otherwise the
// interval [max(0, 3C - 2C1 - N), C - C1 - 1].
inline std::vector<long long> clsize2_values(long long N, long long C, long long C1) {
  if (!(0 <= C1 && C1 <= C && C <= N)) throw std::invalid_argument("clsize2_values: need 0 <= C1 <= C <= N");
  std::vector<long long> out;
  const long long lo = std::max<long long>(0, 3 * C - 2 * C1 - N);
  const long long hi = C - C1 - 1;
  for (long long v = lo; v <= hi; ++v) out.push_back(v);
  if (C1 == 2 * C - N) out.push_back(C - C1);
  return out;
}

// Ranges of g and of r for masks beginning with a marginal R cluster,
// parameterized by the end-type bits.
inline std::pair<long long, long long> g_range(long long CL, long long CL1, int t) {
  const int t2 = (t >> 2) & 1, t1 = (t >> 1) & 1, t0 = t & 1;
  const long long x = CL1 - t2;      // singular L clusters inside the mask
  const long long y = CL - CL1;      // multi-element L clusters
  const long long lo = 2 - kdelta(x, 0) - kdelta(y, 0);
  const long long hi = 2 * std::min(x, y) + t1 * pos_ind(x - y) + t0 * pos_ind(y - x);
  return {lo, hi};
}

inline std::pair<long long, long long> r_range(long long CR, long long CR1, long long g, int t) {
  const int t2 = (t >> 2) & 1, t1 = (t >> 1) & 1;
  const long long pos_places = g + static_cast<long long>(t1) * t2 - 1;
  const long long lo = std::max<long long>(0, CR1 - CR + pos_places);
  const long long hi = std::min(CR1 - 1, pos_places);
  return {lo, hi};
}

}  // namespace qwm
