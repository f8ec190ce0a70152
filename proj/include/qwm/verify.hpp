#pragma once

#include <sstream>
#include <string>

#include "qwm/closed_form.hpp"
#include "qwm/path_oracle.hpp"
#include "qwm/walk.hpp"

namespace qwm {

struct VerifyReport {
  bool ok = true;
  int steps_checked = 0;
  // First mismatch, when any.
  int n = -1;
  int k = 0;
  int j = -1;
  BigInt simulator, oracle, closed;
  std::vector<std::string> failing_parts;
  std::string message;
};

// Full-state, exact Gaussian-integer equality of the three evaluators for
// n = 1..limit. On a closed-form mismatch the part audit names the culprits.
inline VerifyReport verify_equivalence(int limit, const Catalog& cat = catalog(),
                                       int oracle_cap = kDefaultOracleCap) {
  VerifyReport rep;
  const StateVector init = preset_init(InitPreset::Single, 2);
  StateVector sim = init;
  for (int n = 1; n <= limit; ++n) {
    sim = step(sim);
    const StateVector oracle = oracle_state(n, oracle_cap);
    const StateVector closed = closed_state(n, cat);
    for (int k = -n; k <= n; ++k) {
      if ((n - k) % 2 != 0) continue;
      for (int j = 0; j < 8; ++j) {
        const DyadicGaussian s = amplitude_at(sim, k, j);
        const DyadicGaussian o = amplitude_at(oracle, k, j);
        const DyadicGaussian c = amplitude_at(closed, k, j);
        if (s.im != 0 || o.im != 0)
          throw std::logic_error("single-component amplitudes must be real");
        if (s.re == o.re && o.re == c.re) continue;
        rep.ok = false;
        rep.n = n;
        rep.k = k;
        rep.j = j;
        rep.simulator = s.re;
        rep.oracle = o.re;
        rep.closed = c.re;
        if (c.re != o.re && n <= 14) {
          for (const auto& bad : cf::audit_parts(n, cat)) rep.failing_parts.push_back(bad.part);
        }
        std::ostringstream msg;
        msg << "mismatch at n=" << n << " k=" << k << " j=" << j << ": simulator=" << s.re
            << " oracle=" << o.re << " closed-form=" << c.re;
        if (!rep.failing_parts.empty()) {
          msg << " (failing parts:";
          for (const auto& id : rep.failing_parts) msg << ' ' << id;
          msg << ')';
        }
        rep.message = msg.str();
        return rep;
      }
    }
    rep.steps_checked = n;
  }
  return rep;
}

}  // namespace qwm
