#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "qwm/basis.hpp"

namespace qwm {

// Integer-weight 2x2 coin; w[p_new][p_old]. All walk machinery assumes the
// unnormalized Hadamard coin, whose 1/sqrt(2) lives in the vector scale.
struct CoinMatrix {
  std::array<std::array<int, 2>, 2> w{{{1, 1}, {1, -1}}};
};

struct Branch {
  std::uint8_t target = 0;  // basis index after the step
  std::int8_t shift = 0;    // position change, -1 or +1
  std::int8_t weight = 0;   // coin matrix entry, +1 or -1
};

// branch[j][p_new]: each source basis has exactly one branch per flipped coin,
// so the induced operator on (position x basis) space is unitary after the
// 1/sqrt(2) scaling.
struct TransitionTable {
  int memory_order = 2;
  std::array<std::array<Branch, 2>, 8> branch{};
};

// One step = coin flip, then direction determination, then shift.
// Order-3 rule on (dr2, dr1, p_new): coin 1 keeps the trend (d = dr2),
// coin 0 reflects it (d = dr1 when the directions differ, the opposite of
// dr1 when they agree).
inline Dir next_direction(Dir dr2, Dir dr1, int p_new) {
  if (p_new == 1) return dr2;
  return dr1 != dr2 ? dr1 : opposite(dr1);
}

// One-step memory: coin 0 reverses the previous direction, coin 1 repeats it
// (the two-step rule restricted to a single remembered direction).
inline Dir next_direction(Dir dr1, int p_new) {
  return p_new == 0 ? opposite(dr1) : dr1;
}

inline TransitionTable transition_table(int memory_order, const CoinMatrix& coin = {}) {
  TransitionTable t;
  t.memory_order = memory_order;
  const int nb = basis_count(memory_order);
  for (int j = 0; j < nb; ++j) {
    for (int pn = 0; pn < 2; ++pn) {
      Branch b;
      const int p = j & 1;
      b.weight = static_cast<std::int8_t>(coin.w[pn][p]);
      if (memory_order == 2) {
        const Dir dr1 = static_cast<Dir>((j >> 2) & 1);
        const Dir dr2 = static_cast<Dir>((j >> 1) & 1);
        const Dir d = next_direction(dr2, dr1, pn);
        b.target = static_cast<std::uint8_t>(basis_index(dr1, d, pn));
        b.shift = static_cast<std::int8_t>(shift_of(d));
      } else if (memory_order == 1) {
        const Dir dr1 = static_cast<Dir>((j >> 1) & 1);
        const Dir d = next_direction(dr1, pn);
        b.target = static_cast<std::uint8_t>(basis_index(d, pn));
        b.shift = static_cast<std::int8_t>(shift_of(d));
      } else {
        const Dir d = pn == 0 ? Dir::L : Dir::R;
        b.target = static_cast<std::uint8_t>(pn);
        b.shift = static_cast<std::int8_t>(shift_of(d));
      }
      t.branch[j][pn] = b;
    }
  }
  return t;
}

}  // namespace qwm
