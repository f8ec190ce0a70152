#pragma once

#include <string>
#include <vector>

#include "qwm/path_oracle.hpp"

// Cluster decomposition of direction sequences. A cluster is a maximal run of
// equal directions; size-one clusters are singular (S) when bordered by
// clusters on both sides and isolated marginal (I) at either end of the
// sequence; larger clusters are multi-element (M). R clusters carry the
// barred variants. The 11-field profile below determines a path's phase and,
// through the counting product, how many paths share it.

namespace qwm {

enum class MaskSym { S, M, I, Sbar, Mbar, Ibar };

inline bool is_left_symbol(MaskSym s) {
  return s == MaskSym::S || s == MaskSym::M || s == MaskSym::I;
}

struct ClusterRun {
  Dir dir;
  int size;
};

inline std::vector<ClusterRun> cluster_runs(const DirectionSequence& s) {
  std::vector<ClusterRun> runs;
  for (Dir d : s) {
    if (!runs.empty() && runs.back().dir == d)
      ++runs.back().size;
    else
      runs.push_back({d, 1});
  }
  return runs;
}

inline std::vector<MaskSym> cluster_mask(const DirectionSequence& s) {
  const auto runs = cluster_runs(s);
  std::vector<MaskSym> mask;
  mask.reserve(runs.size());
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const bool left = runs[i].dir == Dir::L;
    if (runs[i].size >= 2) {
      mask.push_back(left ? MaskSym::M : MaskSym::Mbar);
    } else if (i == 0 || i + 1 == runs.size()) {
      mask.push_back(left ? MaskSym::I : MaskSym::Ibar);
    } else {
      mask.push_back(left ? MaskSym::S : MaskSym::Sbar);
    }
  }
  return mask;
}

inline std::string mask_to_string(const std::vector<MaskSym>& mask) {
  std::string out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (i) out.push_back(' ');
    switch (mask[i]) {
      case MaskSym::S: out += "S"; break;
      case MaskSym::M: out += "M"; break;
      case MaskSym::I: out += "I"; break;
      case MaskSym::Sbar: out += "S̄"; break;
      case MaskSym::Mbar: out += "M̄"; break;
      case MaskSym::Ibar: out += "Ī"; break;
    }
  }
  return out;
}

// End-type code t2t1t0 packed into three bits (t2 = bit 2).
// 010: L mask ends with S; 001: ends with M; 110: ends with S,I;
// 101: ends with M,I. The aggregate 011 never comes from a concrete
// sequence; it only appears inside closed-form summations.
inline constexpr int kT010 = 0b010;
inline constexpr int kT001 = 0b001;
inline constexpr int kT110 = 0b110;
inline constexpr int kT101 = 0b101;
inline constexpr int kT011 = 0b011;

struct ClusterProfile {
  int NL = 0, NR = 0;    // direction counts
  int CL = 0, CR = 0;    // cluster counts
  int CL1 = 0, CR1 = 0;  // size-one cluster counts (singular + marginal)
  int CL2 = 0, CR2 = 0;  // size-two cluster counts
  int g = 0;             // S/M groups in the L cluster mask, I removed
  int r = 0;             // singular R clusters bordered by one S and one M or I
  int t = 0;             // end-type bits t2t1t0

  friend bool operator==(const ClusterProfile&, const ClusterProfile&) = default;
};

inline ClusterProfile profile(const DirectionSequence& s) {
  const auto runs = cluster_runs(s);
  const auto mask = cluster_mask(s);
  ClusterProfile p;
  for (const auto& run : runs) {
    if (run.dir == Dir::L) {
      p.NL += run.size;
      ++p.CL;
      if (run.size == 1) ++p.CL1;
      if (run.size == 2) ++p.CL2;
    } else {
      p.NR += run.size;
      ++p.CR;
      if (run.size == 1) ++p.CR1;
      if (run.size == 2) ++p.CR2;
    }
  }

  // g: alternating S/M group count after dropping I from the L mask.
  std::vector<MaskSym> lmask;
  for (MaskSym m : mask)
    if (is_left_symbol(m)) lmask.push_back(m);
  MaskSym prev = MaskSym::I;
  for (MaskSym m : lmask) {
    if (m == MaskSym::I) continue;
    if (m != prev) ++p.g;
    prev = m;
  }

  // r: each singular R cluster sees two L symbols; count those bordered by
  // exactly one S whose partner is non-singular (M or I).
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i] != MaskSym::Sbar) continue;
    const MaskSym a = mask[i - 1];
    const MaskSym b = mask[i + 1];
    const int singles = (a == MaskSym::S) + (b == MaskSym::S);
    if (singles == 1) ++p.r;
  }

  if (!lmask.empty()) {
    const MaskSym last = lmask.back();
    if (last == MaskSym::I) {
      if (lmask.size() >= 2) {
        p.t = (lmask[lmask.size() - 2] == MaskSym::S) ? kT110 : kT101;
      } else {
        p.t = 0b100;  // bare marginal L, no preceding group
      }
    } else {
      p.t = (last == MaskSym::S) ? kT010 : kT001;
    }
  }
  return p;
}

// Path phase from cluster statistics alone: long clusters contribute
// (-1)^(n + CL + CR + CL2 + CR2), alternating segments contribute (-1)^r,
// with n + 2 the sequence length.
inline int phase_from_profile(const ClusterProfile& p) {
  const long long n = static_cast<long long>(p.NL) + p.NR - 2;
  const long long e = n + p.CL + p.CR + p.CL2 + p.CR2 + p.r;
  return (e % 2 == 0) ? 1 : -1;
}

}  // namespace qwm
