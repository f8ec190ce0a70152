#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qwm/state_vector.hpp"
#include "qwm/transition.hpp"

namespace qwm {

inline StateVector step(const StateVector& v, const CoinMatrix& coin = {}) {
  const TransitionTable t = transition_table(v.memory_order, coin);
  StateVector out;
  out.memory_order = v.memory_order;
  out.scale = v.scale + 1;
  for (const auto& [key, amp] : v.entries) {
    for (int pn = 0; pn < 2; ++pn) {
      const Branch& b = t.branch[key.second][pn];
      GaussInt contrib = amp;
      if (b.weight < 0) {
        contrib.re = -contrib.re;
        contrib.im = -contrib.im;
      }
      out.add(key.first + b.shift, b.target, contrib);
    }
  }
  return out;
}

inline StateVector run(StateVector v, int steps, const CoinMatrix& coin = {}) {
  if (steps < 0) throw std::invalid_argument("run: steps must be >= 0");
  for (int i = 0; i < steps; ++i) v = step(v, coin);
  return v;
}

enum class InitPreset { Single, Symmetric };

inline InitPreset init_preset_from_name(std::string_view name) {
  if (name == "single") return InitPreset::Single;
  if (name == "symmetric") return InitPreset::Symmetric;
  throw std::invalid_argument("unknown init preset: " + std::string(name));
}

// Single-component inits give the three walks the same bias; symmetric inits
// pair each real component with an i-weighted coin-1 partner.
inline StateVector preset_init(InitPreset which, int memory_order) {
  const int nb = basis_count(memory_order);
  StateVector v;
  v.memory_order = memory_order;
  if (which == InitPreset::Single) {
    v.scale = 0;
    switch (memory_order) {
      case 2: v.set(0, 2, {1, 0}); break;  // |0,1,0,0>
      case 1: v.set(0, 0, {1, 0}); break;  // |1,0,0>
      case 0: v.set(0, 1, {1, 0}); break;  // |0,1>
      default: throw std::invalid_argument("memory order must be 0, 1 or 2");
    }
    return v;
  }
  // Symmetric: all basis states at the origin, 1 on coin 0, i on coin 1.
  v.scale = static_cast<unsigned>(memory_order + 1);
  for (int j = 0; j < nb; ++j) v.set(0, j, (j & 1) ? GaussInt{0, 1} : GaussInt{1, 0});
  return v;
}

}  // namespace qwm
