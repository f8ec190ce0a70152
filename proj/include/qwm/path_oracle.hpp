#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "qwm/state_vector.hpp"
#include "qwm/transition.hpp"

// Brute-force ground truth for the order-3 walk started from |0,1,0,0>:
// every path is a direction sequence beginning with the fixed standard-walk
// prefix R,L, and each later move corresponds to exactly one coin branch, so
// enumerating all 2^n continuations and accumulating signs reproduces the
// state vector exactly.

namespace qwm {

using DirectionSequence = std::vector<Dir>;

inline DirectionSequence parse_directions(std::string_view text) {
  DirectionSequence s;
  s.reserve(text.size());
  for (char c : text) {
    if (c == 'L' || c == 'l')
      s.push_back(Dir::L);
    else if (c == 'R' || c == 'r')
      s.push_back(Dir::R);
    else
      throw std::invalid_argument(std::string("invalid direction character: ") + c);
  }
  return s;
}

inline std::string directions_to_string(const DirectionSequence& s) {
  std::string out;
  out.reserve(s.size());
  for (Dir d : s) out.push_back(d == Dir::L ? 'L' : 'R');
  return out;
}

struct PathOutcome {
  int final_basis = 0;
  int final_position = 0;
  int sign = 1;
};

namespace detail {

// After the prefix R,L the walker state is (dr2, dr1, p) = (R, L, 0).
// A requested move d selects the branch: d == dr2 forces coin 1, anything
// else forces coin 0 (the two branch directions are always distinct).
// A -1 weight occurs exactly when coin 1 follows coin 1.
struct PathState {
  Dir dr2 = Dir::R;
  Dir dr1 = Dir::L;
  int p = 0;
  int pos = 0;
  int sign = 1;

  void move(Dir d) {
    const int pn = (d == dr2) ? 1 : 0;
    if (p == 1 && pn == 1) sign = -sign;
    dr2 = dr1;
    dr1 = d;
    p = pn;
    pos += shift_of(d);
  }

  int basis() const { return basis_index(dr2, dr1, p); }
};

inline void check_prefix(const DirectionSequence& s) {
  if (s.size() < 2 || s[0] != Dir::R || s[1] != Dir::L)
    throw std::invalid_argument("order-3 direction sequences must begin with R,L");
}

}  // namespace detail

inline PathOutcome path_outcome(const DirectionSequence& s) {
  detail::check_prefix(s);
  detail::PathState st;
  for (std::size_t i = 2; i < s.size(); ++i) st.move(s[i]);
  return PathOutcome{st.basis(), st.pos, st.sign};
}

inline int path_sign(const DirectionSequence& s) { return path_outcome(s).sign; }

inline constexpr int kDefaultOracleCap = 24;

// Signed path counts for one lexicographic block of continuation indices
// [begin, end) (bit i of the index, most significant first, is move i with
// L = 0). Accumulation is plain integer addition, so any partition of the
// index space merges to the same result.
inline void oracle_accumulate(int n, std::uint64_t begin, std::uint64_t end,
                              std::vector<std::int64_t>& grid) {
  if (n < 0) throw std::invalid_argument("oracle_accumulate: steps must be >= 0");
  const std::size_t want = static_cast<std::size_t>(2 * n + 1) * 8;
  if (grid.size() < want) grid.resize(want);
  auto leaf = [&](const detail::PathState& st) {
    grid[static_cast<std::size_t>(st.pos + n) * 8 + st.basis()] += st.sign;
  };
  auto rec = [&](auto&& self, const detail::PathState& st, int depth, std::uint64_t lo) -> void {
    const std::uint64_t span = std::uint64_t{1} << (n - depth);
    if (lo >= end || lo + span <= begin) return;
    if (depth == n) {
      leaf(st);
      return;
    }
    detail::PathState left = st;
    left.move(Dir::L);
    self(self, left, depth + 1, lo);
    detail::PathState right = st;
    right.move(Dir::R);
    self(self, right, depth + 1, lo + span / 2);
  };
  rec(rec, detail::PathState{}, 0, 0);
}

inline StateVector oracle_state(int n, int cap = kDefaultOracleCap) {
  if (n < 0) throw std::invalid_argument("oracle_state: steps must be >= 0");
  if (n > cap) throw std::length_error("oracle_state: steps exceed the enumeration cap");
  const std::uint64_t total = std::uint64_t{1} << n;
  unsigned threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (n < 12) threads = 1;
  std::vector<std::vector<std::int64_t>> grids(threads);
  if (threads == 1) {
    oracle_accumulate(n, 0, total, grids[0]);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = total / threads;
    for (unsigned i = 0; i < threads; ++i) {
      const std::uint64_t b = i * chunk;
      const std::uint64_t e = (i + 1 == threads) ? total : b + chunk;
      pool.emplace_back([&, i, b, e] { oracle_accumulate(n, b, e, grids[i]); });
    }
    for (auto& th : pool) th.join();
  }
  StateVector v;
  v.memory_order = 2;
  v.scale = static_cast<unsigned>(n);
  for (int k = -n; k <= n; ++k) {
    for (int j = 0; j < 8; ++j) {
      std::int64_t c = 0;
      for (const auto& g : grids) {
        const std::size_t idx = static_cast<std::size_t>(k + n) * 8 + j;
        if (idx < g.size()) c += g[idx];
      }
      if (c != 0) v.set(k, j, GaussInt{c, 0});
    }
  }
  return v;
}

inline BigInt signed_count(int n, int k, int j, int cap = kDefaultOracleCap) {
  const StateVector v = oracle_state(n, cap);
  auto it = v.entries.find({k, j});
  return it == v.entries.end() ? BigInt(0) : it->second.re;
}

}  // namespace qwm
