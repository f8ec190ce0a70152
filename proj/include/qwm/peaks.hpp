#pragma once

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "qwm/state_vector.hpp"

namespace qwm {

struct Peak {
  int k = 0;
  Rational p;
};

struct PeakReport {
  std::vector<Peak> peaks;  // sorted by probability descending
  bool symmetric = false;   // p(k) == p(-k) exactly for all k
};

// Local maxima over the reachable-parity sublattice: a plateau of equal
// probability strictly greater than both flanking values (absent lattice
// points count as zero). A plateau is reported once, at its member with the
// smallest |k|.
inline PeakReport find_peaks(const Distribution& dist) {
  PeakReport rep;
  rep.symmetric = true;
  for (const auto& [k, p] : dist) {
    auto it = dist.find(-k);
    if (it == dist.end() || it->second != p) {
      rep.symmetric = false;
      break;
    }
  }
  if (dist.empty()) return rep;

  const int lo = dist.begin()->first;
  const int hi = dist.rbegin()->first;
  std::vector<int> ks;
  std::vector<Rational> ps;
  for (int k = lo; k <= hi; k += 2) {
    ks.push_back(k);
    auto it = dist.find(k);
    ps.push_back(it == dist.end() ? Rational(0) : it->second);
  }

  const std::size_t m = ks.size();
  const Rational zero(0);
  std::size_t i = 0;
  while (i < m) {
    std::size_t e = i;
    while (e + 1 < m && ps[e + 1] == ps[i]) ++e;
    const Rational& left = (i == 0) ? zero : ps[i - 1];
    const Rational& right = (e + 1 == m) ? zero : ps[e + 1];
    if (ps[i] > left && ps[i] > right && ps[i] > 0) {
      int best = ks[i];
      for (std::size_t t = i; t <= e; ++t)
        if (std::abs(ks[t]) < std::abs(best) ||
            (std::abs(ks[t]) == std::abs(best) && ks[t] < best))
          best = ks[t];
      rep.peaks.push_back({best, ps[i]});
    }
    i = e + 1;
  }

  std::sort(rep.peaks.begin(), rep.peaks.end(), [](const Peak& a, const Peak& b) {
    if (a.p != b.p) return a.p > b.p;
    if (std::abs(a.k) != std::abs(b.k)) return std::abs(a.k) < std::abs(b.k);
    return a.k < b.k;
  });
  return rep;
}

}  // namespace qwm
