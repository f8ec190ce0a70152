#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qwm/cluster.hpp"
#include "qwm/comb.hpp"
#include "qwm/path_oracle.hpp"
#include "qwm/state_vector.hpp"

// Closed-form evaluation of the eight amplitudes of the order-3 walk started
// from |0,1,0,0>. Every amplitude is a sum of "parts": nested integer sums
// over cluster statistics, each term a sign, an exact rational weight rho,
// and a product of combinatorial symbols. The parts are data (PartSpec), not
// code, so each one can be toggled, audited against bucketed path
// enumeration, and corrected individually. Wherever the catalog's original
// formula fails that audit, the shipped table carries the correction and a
// Deviation record keeps both readings.

namespace qwm::cf {

enum VarId : int { vCL = 0, vCL1, vCL2, vCR1, vCR2, vG, vR, kVarCount };

struct Env {
  long long n = 0, NL = 0, NR = 0;
  std::array<long long, kVarCount> v{};
};

class Expr {
 public:
  Expr() = default;
  Expr(long long c) : fn_([c](const Env&) { return c; }) {}  // NOLINT: implicit by design
  Expr(int c) : Expr(static_cast<long long>(c)) {}           // NOLINT
  explicit Expr(std::function<long long(const Env&)> f) : fn_(std::move(f)) {}
  long long operator()(const Env& e) const { return fn_(e); }
  explicit operator bool() const { return static_cast<bool>(fn_); }

 private:
  std::function<long long(const Env&)> fn_;
};

inline Expr evar(VarId id) {
  return Expr([id](const Env& e) { return e.v[id]; });
}
inline Expr operator+(Expr a, Expr b) {
  return Expr([a, b](const Env& e) { return a(e) + b(e); });
}
inline Expr operator-(Expr a, Expr b) {
  return Expr([a, b](const Env& e) { return a(e) - b(e); });
}
inline Expr operator*(Expr a, Expr b) {
  return Expr([a, b](const Env& e) { return a(e) * b(e); });
}
inline Expr emin(Expr a, Expr b) {
  return Expr([a, b](const Env& e) { return std::min(a(e), b(e)); });
}
inline Expr emax(Expr a, Expr b) {
  return Expr([a, b](const Env& e) { return std::max(a(e), b(e)); });
}
inline Expr floor2(Expr a) {
  return Expr([a](const Env& e) {
    const long long x = a(e);
    return x >= 0 ? x / 2 : -((-x + 1) / 2);
  });
}
inline Expr ceil2(Expr a) {
  return Expr([a](const Env& e) {
    const long long x = a(e);
    return x >= 0 ? (x + 1) / 2 : -((-x) / 2);
  });
}
inline Expr pos1(Expr a) {
  return Expr([a](const Env& e) { return a(e) > 0 ? 1LL : 0LL; });
}
inline Expr del(Expr a, Expr b) {
  return Expr([a, b](const Env& e) { return a(e) == b(e) ? 1LL : 0LL; });
}

enum class Sym { GP, PL, CC, BN };

struct Factor {
  Sym sym;
  Expr a, b, c, d;
  int t1 = 0, t0 = 0;  // GP only
};

struct SumVar {
  VarId id;
  Expr lo, hi;
};

// Case split used both by the catalog and by the enumeration audit: for each
// side, either every cluster has size one, or every multi-element cluster has
// size exactly two, or some cluster has size three or more.
enum class LCase { AllSingular, AllTwos, Interval };
enum class RCase { AllSingular, AllTwos, Interval };

struct PartSpec {
  std::string id;
  int j = 0;
  int tbits = 0;
  LCase lcase = LCase::Interval;
  RCase rcase = RCase::Interval;
  Expr ind_lo, ind_hi, ind_arg;  // optional indicator prefactor
  std::vector<SumVar> vars;      // nesting order; bounds may use earlier vars
  Expr sign_exp;                 // exponent of (-1); unset => +1
  Expr rho_num, rho_den;         // unset => 1
  std::vector<Factor> factors;
};

struct Deviation {
  std::string part;
  std::string field;
  std::string original;
  std::string corrected;
  bool evaluable_original = true;  // false: source notation too garbled to evaluate
};

enum class Variant { Original, Corrected };

struct Catalog {
  Variant variant = Variant::Corrected;
  std::vector<PartSpec> parts;
  std::vector<Deviation> deviations;
};

namespace detail {

struct PartBuilder {
  PartSpec p;

  PartBuilder(std::string id, int j, int t, LCase lc, RCase rc) {
    p.id = std::move(id);
    p.j = j;
    p.tbits = t;
    p.lcase = lc;
    p.rcase = rc;
  }
  PartBuilder& ind(Expr lo, Expr hi, Expr arg) {
    p.ind_lo = lo;
    p.ind_hi = hi;
    p.ind_arg = arg;
    return *this;
  }
  PartBuilder& sum(VarId v, Expr lo, Expr hi) {
    p.vars.push_back({v, lo, hi});
    return *this;
  }
  PartBuilder& sign(Expr e) {
    p.sign_exp = e;
    return *this;
  }
  PartBuilder& rho(Expr num, Expr den) {
    p.rho_num = num;
    p.rho_den = den;
    return *this;
  }
  PartBuilder& gp(Expr x, Expr y, Expr g, int t1, int t0) {
    p.factors.push_back({Sym::GP, x, y, g, Expr(), t1, t0});
    return *this;
  }
  PartBuilder& pl(Expr u, Expr m, Expr x, Expr r) {
    p.factors.push_back({Sym::PL, u, m, x, r, 0, 0});
    return *this;
  }
  PartBuilder& cc(Expr u, Expr m, Expr v) {
    p.factors.push_back({Sym::CC, u, m, v, Expr(), 0, 0});
    return *this;
  }
  PartBuilder& bn(Expr a, Expr b) {
    p.factors.push_back({Sym::BN, a, b, Expr(), Expr(), 0, 0});
    return *this;
  }
  PartSpec build() { return std::move(p); }
};

inline Catalog build_catalog(Variant variant) {
  Catalog cat;
  cat.variant = variant;

  const Expr N = Expr([](const Env& e) { return e.n; });
  const Expr NL = Expr([](const Env& e) { return e.NL; });
  const Expr NR = Expr([](const Env& e) { return e.NR; });
  const Expr CL = evar(vCL), CL1 = evar(vCL1), CL2 = evar(vCL2);
  const Expr CR1 = evar(vCR1), CR2 = evar(vCR2), G = evar(vG), R = evar(vR);

  // Pick the original or the corrected reading of one sub-expression and log
  // the difference. Corrections are justified only by the enumeration audit.
  auto lit = [&](const char* part, const char* field, Expr original, const char* orig_txt,
                 Expr corrected, const char* corr_txt) -> Expr {
    cat.deviations.push_back({part, field, orig_txt, corr_txt, true});
    return variant == Variant::Original ? original : corrected;
  };
  auto notation = [&](const char* part, const char* field, const char* orig_txt,
                      const char* corr_txt) {
    cat.deviations.push_back({part, field, orig_txt, corr_txt, false});
  };
  auto add = [&](PartBuilder& b) { cat.parts.push_back(std::move(b.p)); };

  const LCase LAS = LCase::AllSingular, LAT = LCase::AllTwos, LI = LCase::Interval;
  const RCase RAS = RCase::AllSingular, RAT = RCase::AllTwos, RI = RCase::Interval;

  // ---- a0: final state |k+2,k+1,k,0>, sequences ...RLL, t = 001, CR = CL.
  add(PartBuilder("a0.1", 0, kT001, LAT, RAS)
          .ind(ceil2(NL), NL - 1, NR)
          .sum(vG, 2 - del(2 * NR, NL), 2 * emin(2 * NR - NL, NL - NR) + pos1(2 * NL - 3 * NR))
          .sign(G - 1)
          .gp(2 * NR - NL, NL - NR, G, 0, 1));

  notation("a0.2", "CL2 range",
           "C_L^2 in [max(1, 3N_R-2C_L^1-N_L, N_R-C_L^1-1)] (delimiters garbled)",
           "C_L^2 in [max(1, 3N_R-2C_L^1-N_L), N_R-C_L^1-1]");
  add(PartBuilder("a0.2", 0, kT001, LI, RAS)
          .ind(2, NL - 3, NR)
          .sum(vCL1, emax(0, 2 * NR - NL + 1), NR - 2)
          .sum(vCL2, emax(1, 3 * NR - 2 * CL1 - NL), NR - CL1 - 1)
          .sum(vG, 2 - del(CL1, 0), 2 * emin(CL1, NR - CL1) + pos1(NR - 2 * CL1))
          .sign(N + CL2 + G - 1)
          .rho(CL2, NR - CL1)
          .gp(CL1, NR - CL1, G, 0, 1)
          .cc(NL - CL1, NR - CL1, CL2));

  add(PartBuilder("a0.3", 0, kT001, LAT, RAT)
          .sum(vCL, ceil2(emax(NL, NR + 1)), emin(NL, NR) - 1)
          .sum(vG, 2 - del(2 * CL, NL), 2 * emin(2 * CL - NL, NL - CL) + pos1(2 * NL - 3 * CL))
          .sum(vR, emax(0, CL - NR + G - 1), emin(2 * CL - NR - 1, G - 1))
          .sign(R)
          .gp(2 * CL - NL, NL - CL, G, 0, 1)
          .pl(CL - 1, 2 * CL - NR - 1, G - 1, R));

  add(PartBuilder("a0.4", 0, kT001, LI, RAT)
          .sum(vCL, 1 + floor2(NR), emin(NR, NL - 2) - 1)
          .sum(vCL1, emax(0, 2 * CL - NL + 1), CL - 2)
          .sum(vCL2, emax(1, 3 * CL - 2 * CL1 - NL), CL - CL1 - 1)
          .sum(vG, 2 - del(CL1, 0), 2 * emin(CL1, CL - CL1) + pos1(CL - 2 * CL1))
          .sum(vR, emax(0, CL - NR + G - 1), emin(2 * CL - NR - 1, G - 1))
          .sign(CL2 + NL - CL + R)
          .rho(CL2, CL - CL1)
          .gp(CL1, CL - CL1, G, 0, 1)
          .pl(CL - 1, 2 * CL - NR - 1, G - 1, R)
          .cc(NL - CL1, CL - CL1, CL2));

  add(PartBuilder("a0.5", 0, kT001, LAT, RI)
          .sum(vCL, emax(2, ceil2(NL)), emin(NL, NR - 1) - 1)
          .sum(vCR1, emax(1, 2 * CL - NR + 1), CL - 1)
          .sum(vCR2, emax(0, 3 * CL - 2 * CR1 - NR), CL - CR1 - 1)
          .sum(vG, 2 - del(2 * CL, NL), 2 * emin(2 * CL - NL, NL - CL) + pos1(2 * NL - 3 * CL))
          .sum(vR, emax(0, CR1 - CL + G - 1), emin(CR1 - 1, G - 1))
          .sign(NR - CL + CR2 + R)
          .gp(lit("a0.5", "group-permutation first argument", 2 * CL - CL, "2C_L-C_L",
                  2 * CL - NL, "2C_L-N_L"),
              NL - CL, G, 0, 1)
          .pl(CL - 1, CR1 - 1, G - 1, R)
          .cc(NR - CR1, CL - CR1, CR2));

  add(PartBuilder("a0.6", 0, kT001, LI, RI)
          .sum(vCL, 2, emin(NL - 1, NR) - 2)
          .sum(vCL1, emax(0, 2 * CL - NL + 1), CL - 2)
          .sum(vCL2, emax(1, 3 * CL - 2 * CL1 - NL), CL - CL1 - 1)
          .sum(vCR1, emax(0, 2 * CL - NR + 1), CL - 1)
          .sum(vCR2, emax(0, 3 * CL - 2 * CR1 - NR), CL - CR1 - 1)
          .sum(vG, 2 - del(CL1, 0), 2 * emin(CL1, CL - CL1) + pos1(CL - 2 * CL1))
          .sum(vR, emax(0, CR1 - CL + G - 1), emin(CR1 - 1, G - 1))
          .sign(N + CL2 + CR2 + R)
          .rho(CL2, CL - CL1)
          .gp(CL1, CL - CL1, G, 0, 1)
          .pl(CL - 1, CR1 - 1, G - 1, R)
          .cc(NL - CL1, CL - CL1, CL2)
          .cc(NR - CR1, CL - CR1, CR2));

  // ---- a1: |k+2,k+1,k,1>, sequences ...LLL, t = 001, CR = CL.
  add(PartBuilder("a1.1", 1, kT001, LI, RAS)
          .sum(vCL1, emax(0, 2 * NR - NL + 1), NR - 1)
          .sum(vCL2, emax(0, 3 * NR - 2 * CL1 - NL), NR - CL1 - 1)
          .sum(vG, 2 - del(CL1, 0), 2 * emin(CL1, NR - CL1) + pos1(NR - 2 * CL1))
          .sign(N + CL2 + G - 1)
          .rho(NR - CL1 - CL2, NR - CL1)
          .gp(CL1, NR - CL1, G, 0, 1)
          .cc(NL - CL1, NR - CL1, CL2));

  add(PartBuilder("a1.2", 1, kT001, LI, RAT)
          .sum(vCL, 1 + floor2(NR), emin(NR, NL - 1) - 1)
          .sum(vCL1, emax(0, 2 * CL - NL + 1), CL - 1)
          .sum(vCL2, emax(0, 3 * CL - 2 * CL1 - NL), CL - CL1 - 1)
          .sum(vG, 2 - del(CL1, 0), 2 * emin(CL1, CL - CL1) + pos1(CL - 2 * CL1))
          .sum(vR, emax(0, CL - NR + G - 1), emin(2 * CL - NR - 1, G - 1))
          .sign(CL2 + NL - CL + R)
          .rho(CL - CL1 - CL2, CL - CL1)
          .gp(CL1, CL - CL1, G, 0, 1)
          .pl(CL - 1, 2 * CL - NR - 1, G - 1, R)
          .cc(NL - CL1, CL - CL1, CL2));

  add(PartBuilder("a1.3", 1, kT001, LI, RI)
          .sum(vCL, 2, emin(NL, NR) - 2)
          .sum(vCL1, emax(0, 2 * CL - NL + 1), CL - 1)
          .sum(vCL2, emax(0, 3 * CL - 2 * CL1 - NL), CL - CL1 - 1)
          .sum(vCR1, emax(1, 2 * CL - NR + 1), CL - 1)
          .sum(vCR2, emax(0, 3 * CL - 2 * CR1 - NR), CL - CR1 - 1)
          .sum(vG, 2 - del(CL1, 0), 2 * emin(CL1, CL - CL1) + pos1(CL - 2 * CL1))
          .sum(vR, emax(0, CR1 - CL + G - 1), emin(CR1 - 1, G - 1))
          .sign(N + CL2 + CR2 + R)
          .rho(CL - CL1 - CL2, CL - CL1)
          .gp(CL1, CL - CL1, G, 0, 1)
          .pl(CL - 1, CR1 - 1, G - 1, R)
          .cc(NL - CL1, CL - CL1, CL2)
          .cc(NR - CR1, CL - CR1, CR2));

  // ---- a2: |k,k+1,k,0>, sequences ...RRL, CR = CL. Type i: mask ends S,I.
  add(PartBuilder("a2.i.1", 2, kT110, LAS, RAT)
          .ind(1 + floor2(NR), NR - 1, NL)
          .bn(NL - 2, 2 * NL - NR - 1));

  add(PartBuilder("a2.i.2", 2, kT110, LAS, RI)
          .sum(vCR1, emax(1, 2 * NL - NR + 1), NL - 1)
          .sum(vCR2, emax(0, 3 * NL - 2 * CR1 - NR), NL - CR1 - 1)
          .sign(N + CR2)
          .cc(NR - CR1, NL - CR1, CR2)
          .bn(NL - 2, CR1 - 1));

  add(PartBuilder("a2.i.3", 2, kT110, LAT, RAT)
          .sum(vCL, emax(ceil2(NL), floor2(NR)) + 1, emin(NL, NR) - 1)
          .sum(vG, 2, 2 * emin(2 * CL - NL - 1, NL - CL) + pos1(3 * CL - 2 * NL - 1))
          .sum(vR, emax(0, CL - NR + G), emin(2 * CL - NR - 1, G))
          .sign(R)
          .rho(G - R, G)
          .gp(2 * CL - NL - 1, NL - CL, G, 1, 0)
          .pl(CL - 1, 2 * CL - NR - 1, G, R));

  add(PartBuilder("a2.i.4", 2, kT110, LAT, RI)
          .sum(vCL, 1 + ceil2(NL), emin(NL, NR - 1) - 1)
          .sum(vCR1, emax(1, 2 * CL - NR + 1), CL - 1)
          .sum(vCR2, emax(0, 3 * CL - 2 * CR1 - NR), CL - CR1 - 1)
          .sum(vG, 2, 2 * emin(2 * CL - NL - 1, NL - CL) + pos1(3 * CL - 2 * NL - 1))
          .sum(vR, emax(0, CR1 - CL + G), emin(CR1 - 1, G))
          .sign(NR - CL + CR2 + R)
          .rho(G - R, G)
          .gp(2 * CL - NL - 1, NL - CL, G, 1, 0)
          .pl(CL - 1, CR1 - 1, G, R)
          .cc(NR - CR1, CL - CR1, CR2));

  add(PartBuilder("a2.i.5", 2, kT110, LI, RAT)
          .sum(vCL, 1 + floor2(NR), emin(NR, NL - 1) - 1)
          .sum(vCL1, emax(2, 2 * CL - NL + 1), CL - 1)
          .sum(vCL2, emax(0, 3 * CL - 2 * CL1 - NL), CL - CL1 - 1)
          .sum(vG, 2, 2 * emin(CL1 - 1, CL - CL1) + pos1(2 * CL1 - CL - 1))
          .sum(vR, emax(0, CL - NR + G), emin(2 * CL - NR - 1, G))
          .sign(CL2 + NL - CL + R)
          .rho(G - R, G)
          .gp(CL1 - 1, CL - CL1, G, 1, 0)
          .pl(CL - 1, 2 * CL - NR - 1, G, R)
          .cc(NL - CL1, CL - CL1, CL2));

  add(PartBuilder("a2.i.6", 2, kT110, LI, RI)
          .sum(vCL, 2, emin(NL, NR) - 2)
          .sum(vCL1, emax(1, 2 * CL - NL + 1), CL - 1)
          .sum(vCL2, emax(0, 3 * CL - 2 * CL1 - NL), CL - CL1 - 1)
          .sum(vCR1, emax(1, 2 * CL - NR + 1), CL - 1)
          .sum(vCR2, emax(0, 3 * CL - 2 * CR1 - NR), CL - CR1 - 1)
          .sum(vG, 2, 2 * emin(CL1, CL - CL1) + pos1(2 * CL1 - CL - 1))
          .sum(vR, emax(0, CR1 - CL + G), emin(CR1 - 1, G))
          .sign(N + CL2 + CR2 + R)
          .rho(G - R, G)
          .gp(CL1 - 1, CL - CL1, G, 1, 0)
          .pl(CL - 1, CR1 - 1, G, R)
          .cc(NL - CL1, CL - CL1, CL2)
          .cc(NR - CR1, CL - CR1, CR2));

  // Type ii: mask ends M,I.
  add(PartBuilder("a2.ii.1", 2, kT101, LAT, RAT)
          .sum(vCL, floor2(emax(NL, NR)) + 1, emin(NL, NR) - 1)
          .sum(vG, 2 - del(2 * CL, NL + 1),
               2 * emin(2 * CL - NL - 1, NL - CL) + pos1(2 * NL - 3 * CL + 1))
          .sum(vR, emax(0, CL - NR + G - 1), emin(2 * CL - NR - 1, G - 1))
          .sign(R)
          .rho(NR - CL - G + R + 1, CL - G)
          .gp(2 * CL - NL - 1, NL - CL, G, 0, 1)
          .pl(CL - 1, 2 * CL - NR - 1, G - 1, R));

  add(PartBuilder("a2.ii.2", 2, kT101, LAT, RI)
          .sum(vCL, 1 + floor2(NL), emin(NL, NR - 1) - 1)
          .sum(vCR1, emax(1, 2 * CL - NR + 1), CL - 1)
          .sum(vCR2, emax(0, 3 * CL - 2 * CR1 - NR), CL - CR1 - 1)
          .sum(vG, 2 - del(2 * CL, NL + 1),
               2 * emin(2 * CL - NL - 1, NL - CL) + pos1(2 * NL - 3 * CL + 1))
          .sum(vR, emax(0, CR1 - CL + G - 1), emin(CR1 - 1, G - 1))
          .sign(NR - CL + CR2 + R)
          .rho(CL - CR1 - G + R + 1, CL - G)
          .gp(2 * CL - NL - 1, NL - CL, G, 0, 1)
          .pl(CL - 1, CR1 - 1, G - 1, R)
          .cc(NR - CR1, CL - CR1, CR2));

  add(PartBuilder("a2.ii.3", 2, kT101, LI, RAT)
          .sum(vCL, 1 + floor2(NR), emin(NR, NL - 1) - 1)
          .sum(vCL1, emax(1, 2 * CL - NL + 1), CL - 1)
          .sum(vCL2, emax(0, 3 * CL - 2 * CL1 - NL), CL - CL1 - 1)
          .sum(vG, 2 - del(CL1, 1), 2 * emin(CL1 - 1, CL - CL1) + pos1(CL - 2 * CL1 + 1))
          .sum(vR, emax(0, CL - NR + G - 1), emin(2 * CL - NR - 1, G - 1))
          .sign(CL2 + NL - CL + R)
          .rho(NR - CL - G + R + 1, CL - G)
          .gp(CL1 - 1, CL - CL1, G, 0, 1)
          .pl(CL - 1, 2 * CL - NR - 1, G - 1, R)
          .cc(NL - CL1, CL - CL1, CL2));

  add(PartBuilder("a2.ii.4", 2, kT101, LI, RI)
          .sum(vCL, 2, emin(NL, NR) - 2)
          .sum(vCL1, emax(1, 2 * CL - NL + 1), CL - 1)
          .sum(vCL2, emax(0, 3 * CL - 2 * CL1 - NL), CL - CL1 - 1)
          .sum(vCR1, emax(1, 2 * CL - NR + 1), CL - 1)
          .sum(vCR2, emax(0, 3 * CL - 2 * CR1 - NR), CL - CR1 - 1)
          .sum(vG, 2 - del(CL1, 1), 2 * emin(CL1 - 1, CL - CL1) + pos1(CL - 2 * CL1 + 1))
          .sum(vR, emax(0, CR1 - CL + G - 1), emin(CR1 - 1, G - 1))
          .sign(N + CL2 + CR2 + R)
          .rho(CL - CR1 - G + R + 1, CL - G)
          .gp(CL1 - 1, CL - CL1, G, 0, 1)
          .pl(CL - 1, CR1 - 1, G - 1, R)
          .cc(NL - CL1, CL - CL1, CL2)
          .cc(NR - CR1, CL - CR1, CR2));

  // ---- a3: |k,k+1,k,1>, sequences ...LRL, CR = CL. Type i: mask ends S,I.
  add(PartBuilder("a3.i.1", 3, kT110, LAS, RAS).ind(NR, NR, NL).sign(1));

  add(PartBuilder("a3.i.2", 3, kT110, LAS, RAT)
          .ind(1 + ceil2(NR), NR - 1, NL)
          .sign(1)
          .bn(NL - 2, 2 * NL - NR - 2));

  add(PartBuilder("a3.i.3", 3, kT110, LAT, RAS)
          .ind(1 + ceil2(NL), NL - 1, NR)
          .sum(vG, 2, 2 * emin(2 * NR - NL - 1, NL - NR) + pos1(3 * NR - 2 * NL - 1))
          .sign(G)
          .gp(2 * NR - NL - 1, NL - NR, G, 1, 0));

  add(PartBuilder("a3.i.4", 3, kT110, LAS, RI)
          .sum(vCR1, emax(2, 2 * NL - NR + 1), NL - 1)
          .sum(vCR2, emax(0, 3 * NL - 2 * CR1 - NR), NL - CR1 - 1)
          .sign(N + CR2 + 1)
          .cc(NR - CR1, NL - CR1, CR2)
          .bn(NL - 2, CR1 - 2));

  add(PartBuilder("a3.i.5", 3, kT110, LI, RAS)
          .sum(vCL1, emax(2, 2 * NR - NL + 1), NR - 1)
          .sum(vCL2, emax(0, 3 * NR - 2 * CL1 - NL), NR - CL1 - 1)
          .sum(vG, 2, 2 * emin(CL1 - 1, NR - CL1) + pos1(2 * CL1 - NR - 1))
          .sign(N + CL2 + G)
          .gp(CL1 - 1, NR - CL1, G, 1, 0)
          .cc(NL - CL1, NR - CL1, CL2));

  add(PartBuilder("a3.i.6", 3, kT110, LAT, RAT)
          .sum(vCL, ceil2(emax(NL, NR)) + 1, emin(NL, NR) - 1)
          .sum(vG, 2, 2 * emin(2 * CL - NL - 1, NL - CL) + pos1(3 * CL - 2 * NL - 1))
          .sum(vR, emax(0, CL - NR + G), emin(2 * CL - NR - 1, G))
          .sign(R)
          .rho(R, G)
          .gp(2 * CL - NL - 1, NL - CL, G, 1, 0)
          .pl(CL - 1, 2 * CL - NR - 1, G, R));

  add(PartBuilder("a3.i.7", 3, kT110, LAT, RI)
          .sum(vCL, 1 + ceil2(NL), emin(NL, NR - 1) - 1)
          .sum(vCR1, emax(2, 2 * CL - NR + 1), CL - 1)
          .sum(vCR2, emax(0, 3 * CL - 2 * CR1 - NR), CL - CR1 - 1)
          .sum(vG, 2, 2 * emin(2 * CL - NL - 1, NL - CL) + pos1(3 * CL - 2 * NL - 1))
          .sum(vR, emax(0, CR1 - CL + G), emin(CR1 - 1, G))
          .sign(NR - CL + CR2 + R)
          .rho(R, G)
          .gp(2 * CL - NL - 1, NL - CL, G, 1, 0)
          .pl(CL - 1, CR1 - 1, G, R)
          .cc(NR - CR1, CL - CR1, CR2));

  add(PartBuilder("a3.i.8", 3, kT110, LI, RAT)
          .sum(vCL, 1 + ceil2(NR), emin(NL - 1, NR) - 1)
          .sum(vCL1, emax(2, 2 * CL - NL + 1), CL - 1)
          .sum(vCL2, emax(0, 3 * CL - 2 * CL1 - NL), CL - CL1 - 1)
          .sum(vG, 2, 2 * emin(CL1 - 1, CL - CL1) + pos1(2 * CL1 - CL - 1))
          .sum(vR, emax(0, CL - NR + G), emin(2 * CL - NR - 1, G))
          .sign(CL2 + NL - CL + R)
          .rho(R, G)
          .gp(CL1 - 1, CL - CL1, G, 1, 0)
          .pl(CL - 1, 2 * CL - NR - 1, G, R)
          .cc(NL - CL1, CL - CL1, CL2));

  add(PartBuilder("a3.i.9", 3, kT110, LI, RI)
          .sum(vCL, 3, emin(NL, NR) - 2)
          .sum(vCL1, emax(2, 2 * CL - NL + 1), CL - 1)
          .sum(vCL2, emax(0, 3 * CL - 2 * CL1 - NL), CL - CL1 - 1)
          .sum(vCR1, emax(2, 2 * CL - NR + 1), CL - 1)
          .sum(vCR2, emax(0, 3 * CL - 2 * CR1 - NR), CL - CR1 - 1)
          .sum(vG, 2, 2 * emin(CL1 - 1, CL - CL1) + pos1(2 * CL1 - CL - 1))
          .sum(vR, emax(0, CR1 - CL + G), emin(CR1 - 1, G))
          .sign(N + CL2 + CR2 + R)
          .rho(R, G)
          .gp(CL1 - 1, CL - CL1, G, 1, 0)
          .pl(CL - 1, CR1 - 1, G, R)
          .cc(NL - CL1, CL - CL1, CL2)
          .cc(NR - CR1, CL - CR1, CR2));

  // Type ii: mask ends M,I.
  add(PartBuilder("a3.ii.1", 3, kT101, LAT, RAS)
          .ind(1 + floor2(NL), NL - 1, NR)
          .sum(vG, 2 - del(2 * NR, NL + 1),
               2 * emin(2 * NR - NL - 1, NL - NR) + pos1(2 * NL - 3 * NR + 1))
          .sign(G - 1)
          .gp(2 * NR - NL - 1, NL - NR, G, 0, 1));

  add(PartBuilder("a3.ii.2", 3, kT101, LI, RAS)
          .sum(vCL1, emax(1, 2 * NR - NL + 1), NR - 1)
          .sum(vCL2, emax(0, 3 * NR - 2 * CL1 - NL), NR - CL1 - 1)
          .sum(vG, 2 - del(CL1, 1), 2 * emin(CL1 - 1, NR - CL1) + pos1(NR - 2 * CL1 + 1))
          .sign(N + CL2 + G - 1)
          .gp(CL1 - 1, NR - CL1, G, 0, 1)
          .cc(NL - CL1, NR - CL1, CL2));

  add(PartBuilder("a3.ii.3", 3, kT101, LAT, RAT)
          .sum(vCL, emax(floor2(NL), ceil2(NR)) + 1, emin(NL, NR) - 1)
          .sum(vG, 2 - del(2 * CL, NL + 1),
               2 * emin(2 * CL - NL - 1, NL - CL) + pos1(2 * NL - 3 * CL + 1))
          .sum(vR, emax(0, CL - NR + G - 1), emin(2 * CL - NR - 1, G - 1))
          .sign(R)
          .rho(2 * CL - NR - R - 1, CL - G)
          .gp(2 * CL - NL - 1, NL - CL, G, 0, 1)
          .pl(CL - 1, 2 * CL - NR - 1, G - 1, R));

  add(PartBuilder("a3.ii.4", 3, kT101, LI, RAT)
          .sum(vCL, 1 + ceil2(NR), emin(NR, NL - 1) - 1)
          .sum(vCL1, emax(1, 2 * CL - NL + 1), CL - 1)
          .sum(vCL2, emax(0, 3 * CL - 2 * CL1 - NL), CL - CL1 - 1)
          .sum(vG, 2 - lit("a3.ii.4", "g lower bound delta", del(CL1, 0), "2-delta_{C_L^1,0}",
                           del(CL1, 1), "2-delta_{C_L^1,1}"),
               2 * emin(CL1 - 1, CL - CL1) + pos1(CL - 2 * CL1 + 1))
          .sum(vR, emax(0, CL - NR + G - 1), emin(2 * CL - NR - 1, G - 1))
          .sign(CL2 + NL - CL + R)
          .rho(2 * CL - NR - R - 1, CL - G)
          .gp(CL1 - 1, CL - CL1, G, 0, 1)
          .pl(CL - 1, 2 * CL - NR - 1,
              lit("a3.ii.4", "placement third argument", G, "g", G - 1, "g-1"), R)
          .cc(NL - CL1, CL - CL1, CL2));

  add(PartBuilder("a3.ii.5", 3, kT101, LAT, RI)
          .sum(vCL, emax(3, floor2(NL) + 1), emin(NL, NR - 1) - 1)
          .sum(vCR1, emax(2, 2 * CL - NR + 1), CL - 1)
          .sum(vCR2, emax(0, 3 * CL - 2 * CR1 - NR), CL - CR1 - 1)
          .sum(vG, 2 - del(2 * CL, NL + 1),
               2 * emin(2 * CL - NL - 1, NL - CL) + pos1(2 * NL - 3 * CL + 1))
          .sum(vR, emax(0, CR1 - CL + G - 1), emin(CR1 - 1, G - 1))
          .sign(NR - CL + CR2 + R)
          .rho(CR1 - R - 1, CL - G)
          .gp(2 * CL - NL - 1, NL - CL, G, 0, 1)
          .pl(CL - 1, CR1 - 1, G - 1, R)
          .cc(NR - CR1, CL - CR1, CR2));

  add(PartBuilder("a3.ii.6", 3, kT101, LI, RI)
          .sum(vCL, 3, emin(NL, NR) - 2)
          .sum(vCL1, emax(1, 2 * CL - NL + 1), CL - 1)
          .sum(vCL2, emax(0, 3 * CL - 2 * CL1 - NL), CL - CL1 - 1)
          .sum(vCR1, emax(2, 2 * CL - NR + 1), CL - 1)
          .sum(vCR2, emax(0, 3 * CL - 2 * CR1 - NR), CL - CR1 - 1)
          .sum(vG, 2 - del(CL1, 1), 2 * emin(CL1 - 1, CL - CL1) + pos1(CL - 2 * CL1 + 1))
          .sum(vR, emax(0, CR1 - CL + G - 1), emin(CR1 - 1, G - 1))
          .sign(N + CL2 + CR2 + R)
          .rho(CR1 - R - 1, CL - G)
          .gp(CL1 - 1, CL - CL1, G, 0, 1)
          .pl(CL - 1, CR1 - 1, G - 1, R)
          .cc(NL - CL1, CL - CL1, CL2)
          .cc(NR - CR1, CL - CR1, CR2));

  // ---- a4: |k,k-1,k,0>, sequences ...LLR, t = 001, CR = CL + 1.
  add(PartBuilder("a4.1", 4, kT001, LAT, RAS)
          .ind(ceil2(NL) + 1, NL, NR)
          .sum(vG, 2 - del(2 * NR, NL + 2),
               2 * emin(2 * NR - NL - 2, NL - NR + 1) + pos1(2 * NL - 3 * NR + 3))
          .sign(G - 1)
          .gp(2 * NR - NL - 2, NL - NR + 1, G, 0, 1));

  add(PartBuilder("a4.2", 4, kT001, LI, RAS)
          .sum(vCL1, emax(0, 2 * NR - NL - 1), NR - 2)
          .sum(vCL2, emax(0, 3 * NR - 2 * CL1 - NL - 3), NR - CL1 - 2)
          .sum(vG, 2 - del(CL1, 0), 2 * emin(CL1, NR - CL1 - 1) + pos1(NR - 2 * CL1 - 1))
          .sign(N + CL2 + G)
          .gp(CL1, NR - CL1 - 1, G, 0, 1)
          .cc(NL - CL1, NR - CL1 - 1, CL2));

  add(PartBuilder("a4.3", 4, kT001, LAT, RAT)
          .sum(vCL, ceil2(emax(NL, NR)), emin(NL, NR - 1) - 1)
          .sum(vG, 2 - del(2 * CL, NL), 2 * emin(2 * CL - NL, NL - CL) + pos1(2 * NL - 3 * CL))
          .sum(vR, emax(0, CL - NR + G), emin(2 * CL - NR + 1, G - 1))
          .sign(R)
          .rho(2 * CL - NR - R + 1, CL - G + 1)
          .gp(2 * CL - NL, NL - CL, G, 0, 1)
          .pl(CL, 2 * CL - NR + 1, G - 1, R));

  add(PartBuilder("a4.4", 4, kT001, LI, RAT)
          .sum(vCL, ceil2(NR), emin(NL, NR) - 2)
          .sum(vCL1, emax(0, 2 * CL - NL + 1), CL - 1)
          .sum(vCL2, emax(0, 3 * CL - 2 * CL1 - NL), CL - CL1 - 1)
          .sum(vG, 2 - del(CL1, 0), 2 * emin(CL1, CL - CL1) + pos1(CL - 2 * CL1))
          .sum(vR, emax(0, CL - NR + G), emin(2 * CL - NR + 1, G - 1))
          .sign(CL2 + NL - CL + R)
          .rho(2 * CL - NR - R + 1, CL - G + 1)
          .gp(CL1, CL - CL1, G, 0, 1)
          .pl(CL, 2 * CL - NR + 1, G - 1, R)
          .cc(NL - CL1, CL - CL1, CL2));

  add(PartBuilder("a4.5", 4, kT001, LAT, RI)
          .sum(vCL, emax(2, ceil2(NL)), emin(NL, NR - 2) - 1)
          .sum(vCR1, emax(2, 2 * CL - NR + 3), CL)
          .sum(vCR2, emax(0, 3 * CL - 2 * CR1 - NR + 3), CL - CR1)
          .sum(vG, 2 - del(2 * CL, NL), 2 * emin(2 * CL - NL, NL - CL) + pos1(2 * NL - 3 * CL))
          .sum(vR, emax(0, CR1 - CL + G - 2), emin(CR1 - 1, G - 1))
          .sign(NR - CL + CR2 + R + 1)
          .rho(CR1 - R - 1, CL - G + 1)
          .gp(2 * CL - NL, NL - CL, G, 0, 1)
          .pl(CL, CR1 - 1, G - 1, R)
          .cc(NR - CR1, CL - CR1 + 1, CR2));

  add(PartBuilder("a4.6", 4, kT001, LI, RI)
          .sum(vCL, 2, emin(NL - 2, NR - 3))
          .sum(vCL1, emax(0, 2 * CL - NL + 1), CL - 1)
          .sum(vCL2, emax(0, 3 * CL - 2 * CL1 - NL), CL - CL1 - 1)
          .sum(vCR1, emax(2, 2 * CL - NR + 3), CL)
          .sum(vCR2, emax(0, 3 * CL - 2 * CR1 - NR + 3), CL - CR1)
          .sum(vG, 2 - del(CL1, 0), 2 * emin(CL1, CL - CL1) + pos1(CL - 2 * CL1))
          .sum(vR, emax(0, CR1 - CL + G - 2), emin(CR1 - 1, G - 1))
          .sign(N + CL2 + CR2 + R + 1)
          .rho(CR1 - R - 1, CL - G + 1)
          .gp(CL1, CL - CL1, G, 0, 1)
          .pl(CL, CR1 - 1, G - 1, R)
          .cc(NL - CL1, CL - CL1, CL2)
          .cc(NR - CR1,
              lit("a4.6", "composition second argument", CL - CR1, "C_L-C_R^1", CL - CR1 + 1,
                  "C_L-C_R^1+1"),
              CR2));

  // ---- a5: |k,k-1,k,1>, sequences ...RLR, t = 010, CR = CL + 1.
  add(PartBuilder("a5.1", 5, kT010, LAS, RAS).ind(NR - 1, NR - 1, NL));

  add(PartBuilder("a5.2", 5, kT010, LAS, RAT)
          .ind(ceil2(NR), NR - 2, NL)
          .rho(2 * NL - NR + 1, NL)
          .bn(NL, 2 * NL - NR + 1));

  add(PartBuilder("a5.3", 5, kT010, LAT, RAS)
          .ind(floor2(NL) + 2, NL, NR)
          .sum(vG, 2, 2 * emin(2 * NR - NL - 2, NL - NR + 1) + pos1(3 * NR - 2 * NL - 3))
          .sign(G - 1)
          .gp(2 * NR - NL - 2, NL - NR + 1, G, 1, 0));

  add(PartBuilder("a5.4", 5, kT010, LAS, RI)
          .sum(vCR1, emax(2, 2 * NL - NR + 3), NL)
          .sum(vCR2, emax(0, 3 * NL - 2 * CR1 - NR + 3), NL - CR1)
          .sign(N + CR2 + 1)
          .rho(CR1 - 1, NL)
          .cc(NR - CR1, NL - CR1 + 1, CR2)
          .bn(NL, CR1 - 1));

  add(PartBuilder("a5.5", 5, kT010, LI, RAS)
          .sum(vCL1,
               lit("a5.5", "CL1 lower bound", emax(1, 2 * NR - NL + 1), "max(1, 2N_R-N_L+1)",
                   emax(1, 2 * NR - NL - 1), "max(1, 2N_R-N_L-1)"),
               NR - 2)
          .sum(vCL2, emax(0, 3 * NR - 2 * CL1 - NL - 3), NR - CL1 - 2)
          .sum(vG, 2, 2 * emin(CL1, NR - CL1 - 1) + pos1(2 * CL1 - NR + 1))
          .sign(N + CL2 + G)
          .gp(CL1, NR - CL1 - 1, G, 1, 0)
          .cc(NL - CL1, NR - CL1 - 1, CL2));

  add(PartBuilder("a5.6", 5, kT010, LAT, RAT)
          .sum(vCL, ceil2(emax(NL + 1, NR)), emin(NL, NR - 1) - 1)
          .sum(vG, 2, 2 * emin(2 * CL - NL, NL - CL) + pos1(3 * CL - 2 * NL))
          .sum(vR, emax(0, CL - NR + G), emin(2 * CL - NR + 1, G - 1))
          .sign(R)
          .rho(2 * CL - NR - R + 1, CL - G + 1)
          .gp(2 * CL - NL, NL - CL, G, 1, 0)
          .pl(CL, 2 * CL - NR + 1, G - 1, R));

  add(PartBuilder("a5.7", 5, kT010, LAT, RI)
          .sum(vCL, 1 + floor2(NL), emin(NL, NR - 2) - 1)
          .sum(vCR1, emax(2, 2 * CL - NR + 3), CL)
          .sum(vCR2, emax(0, 3 * CL - 2 * CR1 - NR + 3), CL - CR1)
          .sum(vG, 2, 2 * emin(2 * CL - NL, NL - CL) + pos1(3 * CL - 2 * NL))
          .sum(vR, emax(0, CR1 - CL + G - 2), emin(CR1 - 1, G - 1))
          .sign(NR - CL + CR2 + R + 1)
          .rho(CR1 - R - 1, CL - G + 1)
          .gp(2 * CL - NL, NL - CL, G, 1, 0)
          .pl(CL, CR1 - 1, G - 1, R)
          .cc(NR - CR1, CL - CR1 + 1, CR2));

  add(PartBuilder("a5.8", 5, kT010, LI, RAT)
          .sum(vCL, ceil2(NR), emin(NL, NR) - 2)
          .sum(vCL1, emax(1, 2 * CL - NL + 1), CL - 1)
          .sum(vCL2, emax(0, 3 * CL - 2 * CL1 - NL), CL - CL1 - 1)
          .sum(vG, 2, 2 * emin(CL1, CL - CL1) + pos1(2 * CL1 - CL))
          .sum(vR, emax(0, CL - NR + G), emin(2 * CL - NR + 1, G - 1))
          .sign(CL2 + NL - CL + R)
          .rho(2 * CL - NR - R + 1, CL - G + 1)
          .gp(CL1, CL - CL1, G, 1, 0)
          .pl(CL, 2 * CL - NR + 1, G - 1, R)
          .cc(NL - CL1, CL - CL1, CL2));

  add(PartBuilder("a5.9", 5, kT010, LI, RI)
          .sum(vCL, 2, emin(NL, NR - 1) - 2)
          .sum(vCL1, emax(1, 2 * CL - NL + 1), CL - 1)
          .sum(vCL2, emax(0, 3 * CL - 2 * CL1 - NL), CL - CL1 - 1)
          .sum(vCR1, emax(2, 2 * CL - NR + 3), CL)
          .sum(vCR2, emax(0, 3 * CL - 2 * CR1 - NR + 3), CL - CR1)
          .sum(vG, 2, 2 * emin(CL1, CL - CL1) + pos1(2 * CL1 - CL))
          .sum(vR, emax(0, CR1 - CL + G - 2), emin(CR1 - 1, G - 1))
          .sign(N + CL2 + CR2 + R + 1)
          .rho(CR1 - R - 1, CL - G + 1)
          .gp(CL1, CL - CL1, G, 1, 0)
          .pl(CL, CR1 - 1, G - 1, R)
          .cc(NL - CL1, CL - CL1, CL2)
          .cc(NR - CR1, CL - CR1 + 1, CR2));

  // ---- a6: |k-2,k-1,k,0>, sequences ...LRR, aggregate t = 011, CR = CL + 1.
  add(PartBuilder("a6.1", 6, kT011, LAS, RAT)
          .ind(floor2(NR), NR - 2, NL)
          .rho(NR - NL - 1, NL)
          .bn(NL, 2 * NL - NR + 1));

  add(PartBuilder("a6.2", 6, kT011, LAS, RI)
          .sum(vCR1, emax(1, 2 * NL - NR + 3), NL - 1)
          .sum(vCR2, emax(1, 3 * NL - 2 * CR1 - NR + 3), NL - CR1)
          .sign(N + CR2 + 1)
          .rho(CR2, NL)
          .cc(NR - CR1, NL - CR1 + 1, CR2)
          .bn(NL, CR1 - 1));

  add(PartBuilder("a6.3", 6, kT011, LAT, RAT)
          .sum(vCL, emax(ceil2(NL), floor2(NR)), emin(NL, NR - 1) - 1)
          .sum(vG, 2 - del(2 * CL, NL),
               2 * emin(2 * CL - NL, NL - CL) + 1 - del(2 * CL - NL, NL - CL))
          .sum(vR, emax(0, CL - NR + G + 1), emin(2 * CL - NR + 1, G - 1))
          .sign(R)
          .rho(NR - CL - G + R, CL - G + 1)
          .gp(2 * CL - NL, NL - CL, G, 1, 1)
          .pl(CL, 2 * CL - NR + 1, G - 1, R));

  add(PartBuilder("a6.4", 6, kT011, LAT, RI)
          .sum(vCL, emax(2, ceil2(NL)), emin(NL, NR - 3) - 1)
          .sum(vCR1, emax(1, 2 * CL - NR + 3), CL - 1)
          .sum(vCR2, emax(1, 3 * CL - 2 * CR1 - NR + 3), CL - CR1)
          .sum(vG, 2 - del(2 * CL, NL),
               2 * emin(2 * CL - NL, NL - CL) + 1 - del(2 * CL - NL, NL - CL))
          .sum(vR, emax(0, CR1 - CL + G - 2), emin(CR1 - 1, G - 1))
          .sign(NR - CL + CR2 + R + 1)
          .rho((CL - CR1 - G + R + 2) * CR2, (CL - G + 1) * (CL - CR1 + 1))
          .gp(2 * CL - NL, NL - CL, G, 1, 1)
          .pl(CL, CR1 - 1, G - 1, R)
          .cc(NR - CR1, CL - CR1 + 1, CR2));

  add(PartBuilder("a6.5", 6, kT011, LI, RAT)
          .sum(vCL, floor2(NR), emin(NL, NR) - 2)
          .sum(vCL1, emax(0, 2 * CL - NL + 1), CL - 1)
          .sum(vCL2, emax(0, 3 * CL - 2 * CL1 - NL), CL - CL1 - 1)
          .sum(vG, 2 - del(CL1, 0), 2 * emin(CL1, CL - CL1) + 1 - del(CL1, CL - CL1))
          .sum(vR, emax(0, CL - NR + G), emin(2 * CL - NR + 1, G - 1))
          .sign(CL2 + NL - CL + R)
          .rho(NR - CL - G + R, CL - G + 1)
          .gp(CL1, CL - CL1, G, 1, 1)
          .pl(CL, 2 * CL - NR + 1, G - 1, R)
          .cc(NL - CL1, CL - CL1, CL2));

  add(PartBuilder("a6.6", 6, kT011, LI, RI)
          .sum(vCL, 2, emin(NL, NR - 2) - 2)
          .sum(vCL1, emax(0, 2 * CL - NL + 1), CL - 1)
          .sum(vCL2, emax(0, 3 * CL - 2 * CL1 - NL), CL - CL1 - 1)
          .sum(vCR1, emax(1, 2 * CL - NR + 3), CL - 1)
          .sum(vCR2, emax(1, 3 * CL - 2 * CR1 - NR + 3), CL - CR1)
          .sum(vG, 2 - del(CL1, 0), 2 * emin(CL1, CL - CL1) + 1 - del(CL1, CL - CL1))
          .sum(vR, emax(0, CR1 - CL + G - 2), emin(CR1 - 1, G - 1))
          .sign(N + CL2 + CR2 + R + 1)
          .rho((CL - CR1 - G + R + 2) * CR2, (CL - G + 1) * (CL - CR1 + 1))
          .gp(CL1, CL - CL1, G, 1, 1)
          .pl(CL, CR1 - 1, G - 1, R)
          .cc(NL - CL1, CL - CL1, CL2)
          .cc(NR - CR1, CL - CR1 + 1, CR2));

  // ---- a7: |k-2,k-1,k,1>, sequences ...RRR, aggregate t = 011, CR = CL + 1.
  add(PartBuilder("a7.1", 7, kT011, LAS, RI)
          .sum(vCR1, emax(1, 2 * NL - NR + 3), NL)
          .sum(vCR2, emax(0, 3 * NL - 2 * CR1 - NR + 3), NL - CR1)
          .sign(N + CR2 + 1)
          .rho(NL - CR1 - CR2 + 1, NL)
          .cc(NR - CR1, NL - CR1 + 1, CR2)
          .bn(NL, CR1 - 1));

  add(PartBuilder("a7.2", 7, kT011, LAT, RI)
          .sum(vCL, ceil2(NL), emin(NL, NR - 2) - 1)
          .sum(vCR1, emax(1, 2 * CL - NR + 3), CL)
          .sum(vCR2, emax(0, 3 * CL - 2 * CR1 - NR + 3), CL - CR1)
          .sum(vG, 2 - del(2 * CL, NL),
               2 * emin(2 * CL - NL, NL - CL) + 1 - del(2 * CL - NL, NL - CL))
          .sum(vR, emax(0, CR1 - CL + G - 2), emin(CR1 - 1, G - 1))
          .sign(NR - CL + CR2 + R + 1)
          .rho((CL - CR1 - G + R + 2) * (CL - CR1 - CR2 + 1), (CL - G + 1) * (CL - CR1 + 1))
          .gp(2 * CL - NL, NL - CL, G, 1, 1)
          .pl(CL, CR1 - 1, G - 1, R)
          .cc(NR - CR1, CL - CR1 + 1, CR2));

  add(PartBuilder("a7.3", 7, kT011, LI, RI)
          .sum(vCL, 1, emin(NL, NR - 1) - 2)
          .sum(vCL1, emax(0, 2 * CL - NL + 1), CL - 1)
          .sum(vCL2, emax(0, 3 * CL - 2 * CL1 - NL), CL - CL1 - 1)
          .sum(vCR1, emax(1, 2 * CL - NR + 3), CL)
          .sum(vCR2, emax(0, 3 * CL - 2 * CR1 - NR + 3), CL - CR1)
          .sum(vG, 2 - del(CL1, 0), 2 * emin(CL1, CL - CL1) + 1 - del(CL1, CL - CL1))
          .sum(vR, emax(0, CR1 - CL + G - 2), emin(CR1 - 1, G - 1))
          .sign(N + CL2 + CR2 + R + 1)
          .rho((CL - CR1 - G + R + 2) * (CL - CR1 - CR2 + 1), (CL - G + 1) * (CL - CR1 + 1))
          .gp(CL1, CL - CL1, G, 1, 1)
          .pl(CL, CR1 - 1, G - 1, R)
          .cc(NL - CL1, CL - CL1, CL2)
          .cc(NR - CR1, CL - CR1 + 1, CR2));

  return cat;
}

}  // namespace detail

inline const Catalog& catalog(Variant v = Variant::Corrected) {
  static const Catalog corrected = detail::build_catalog(Variant::Corrected);
  static const Catalog original = detail::build_catalog(Variant::Original);
  return v == Variant::Corrected ? corrected : original;
}

struct PartValue {
  Rational value;
  bool integral = true;
};

// Nested-sum evaluation of one part at (n, k). Empty ranges contribute zero;
// a zero rho denominator alongside a nonzero term is a formula defect.
inline PartValue eval_part(const PartSpec& p, long long n, long long k) {
  PartValue out;
  if ((n - k) % 2 != 0) return out;
  Env e;
  e.n = n;
  e.NL = (n - k) / 2 + 1;
  e.NR = (n + k) / 2 + 1;
  if (e.NL < 1 || e.NR < 1) return out;
  if (p.ind_arg) {
    const long long x = p.ind_arg(e);
    if (x < p.ind_lo(e) || x > p.ind_hi(e)) return out;
  }

  std::map<long long, BigInt> by_den;
  auto leaf = [&]() {
    BigInt term = 1;
    for (const Factor& f : p.factors) {
      BigInt fv;
      switch (f.sym) {
        case Sym::GP: fv = group_perm_count(f.a(e), f.b(e), f.c(e), f.t1 != 0, f.t0 != 0); break;
        case Sym::PL: fv = placement_count(f.a(e), f.b(e), f.c(e), f.d(e)); break;
        case Sym::CC: fv = comp_count(f.a(e), f.b(e), f.c(e)); break;
        case Sym::BN: fv = binom(f.a(e), f.b(e)); break;
      }
      if (fv == 0) return;
      term *= fv;
    }
    long long rn = 1, rd = 1;
    if (p.rho_num) {
      rn = p.rho_num(e);
      rd = p.rho_den(e);
      if (rn == 0) return;
      if (rd == 0) throw std::runtime_error("part " + p.id + ": rho denominator is zero");
      if (rd < 0) {
        rd = -rd;
        rn = -rn;
      }
    }
    if (p.sign_exp && p.sign_exp(e) % 2 != 0) rn = -rn;
    by_den[rd] += term * rn;
  };
  auto rec = [&](auto&& self, std::size_t level) -> void {
    if (level == p.vars.size()) {
      leaf();
      return;
    }
    const SumVar& sv = p.vars[level];
    const long long lo = sv.lo(e), hi = sv.hi(e);
    for (long long x = lo; x <= hi; ++x) {
      e.v[sv.id] = x;
      self(self, level + 1);
    }
  };
  rec(rec, 0);

  for (const auto& [den, num] : by_den) out.value += Rational(num, BigInt(den));
  out.integral = denominator(out.value) == 1;
  return out;
}

struct ClosedAmplitude {
  BigInt count;      // signed path count; value = count / sqrt(2)^scale
  unsigned scale = 0;
};

inline ClosedAmplitude closed_amplitude(int j, long long n, long long k,
                                        const Catalog& cat = catalog()) {
  if (n < 1) throw std::invalid_argument("closed_amplitude: need n >= 1");
  ClosedAmplitude a;
  a.scale = static_cast<unsigned>(n);
  if ((n - k) % 2 != 0 || k < -n || k > n) return a;
  Rational total = 0;
  for (const PartSpec& p : cat.parts) {
    if (p.j != j) continue;
    const PartValue pv = eval_part(p, n, k);
    if (!pv.integral)
      throw std::runtime_error("part " + p.id + ": non-integer signed count at n=" +
                               std::to_string(n) + " k=" + std::to_string(k));
    total += pv.value;
  }
  if (denominator(total) != 1)
    throw std::runtime_error("closed_amplitude: non-integer total for j=" + std::to_string(j));
  a.count = numerator(total);
  return a;
}

inline StateVector closed_state(long long n, const Catalog& cat = catalog()) {
  StateVector v;
  v.memory_order = 2;
  v.scale = static_cast<unsigned>(n);
  for (long long k = -n; k <= n; ++k) {
    if ((n - k) % 2 != 0) continue;
    for (int j = 0; j < 8; ++j) {
      ClosedAmplitude a = closed_amplitude(j, n, k, cat);
      if (a.count != 0) v.set(static_cast<int>(k), j, GaussInt{a.count, 0});
    }
  }
  return v;
}

inline Distribution closed_distribution(long long n, const Catalog& cat = catalog()) {
  return distribution(closed_state(n, cat));
}

// Counting product of the general amplitude formula: the number of
// direction sequences sharing one profile. The third placement argument is
// the number of positive places, g + t1*t2 - 1; the alternate g + t1*t0 - 1
// wiring stays available so tests can show enumeration rejects it.
enum class Wiring { T1T2, T1T0 };

inline BigInt sequence_count(const ClusterProfile& l, Wiring w = Wiring::T1T2) {
  const int t2 = (l.t >> 2) & 1, t1 = (l.t >> 1) & 1, t0 = l.t & 1;
  const int tt = (w == Wiring::T1T2) ? t1 * t2 : t1 * t0;
  const BigInt n1 = group_perm_count(l.CL1 - t2, l.CL - l.CL1, l.g, t1 != 0, t0 != 0);
  const BigInt n2 = comp_count(l.NL - l.CL1, l.CL - l.CL1, l.CL2);
  const BigInt n3 = placement_count(l.CR - 1, l.CR1 - 1, l.g + tt - 1, l.r);
  const BigInt n4 = comp_count(l.NR - l.CR1, l.CR - l.CR1, l.CR2);
  return n1 * n2 * n3 * n4;
}

inline LCase l_case(const ClusterProfile& p) {
  if (p.CL1 == p.CL) return LCase::AllSingular;
  if (p.CL2 == p.NL - p.CL) return LCase::AllTwos;
  return LCase::Interval;
}
inline RCase r_case(const ClusterProfile& p) {
  if (p.CR1 == p.CR) return RCase::AllSingular;
  if (p.CR2 == p.NR - p.CR) return RCase::AllTwos;
  return RCase::Interval;
}

// The part a sequence with this final state and profile belongs to. The cases
// tile the profile space of each final state; exactly one part matches.
inline const PartSpec* classify_part(int j, const ClusterProfile& pr, const Catalog& cat) {
  const LCase lc = l_case(pr);
  const RCase rc = r_case(pr);
  const PartSpec* found = nullptr;
  for (const PartSpec& p : cat.parts) {
    if (p.j != j || p.lcase != lc || p.rcase != rc) continue;
    if ((j == 2 || j == 3) && p.tbits != pr.t) continue;
    if (found) throw std::logic_error("classify_part: ambiguous for part " + p.id);
    found = &p;
  }
  return found;
}

struct PartCheck {
  std::string part;
  long long n = 0;
  long long k = 0;
  BigInt enumerated;
  Rational formula;
  bool integral = true;
  bool match = true;
};

// Exhaustively bucket all 2^n continuations by (part, final position) and
// compare each bucket's signed path count against the part formula.
inline std::vector<PartCheck> audit_parts(int n, const Catalog& cat,
                                          bool mismatches_only = true) {
  std::map<std::pair<const PartSpec*, int>, long long> buckets;
  DirectionSequence seq;
  seq.reserve(n + 2);
  seq.push_back(Dir::R);
  seq.push_back(Dir::L);
  auto rec = [&](auto&& self, const qwm::detail::PathState& st, int depth) -> void {
    if (depth == n) {
      const ClusterProfile pr = profile(seq);
      const PartSpec* part = classify_part(st.basis(), pr, cat);
      if (!part)
        throw std::logic_error("audit_parts: no part for sequence " + directions_to_string(seq));
      buckets[{part, st.pos}] += st.sign;
      return;
    }
    for (Dir d : {Dir::L, Dir::R}) {
      auto next = st;
      next.move(d);
      seq.push_back(d);
      self(self, next, depth + 1);
      seq.pop_back();
    }
  };
  rec(rec, qwm::detail::PathState{}, 0);

  std::vector<PartCheck> out;
  for (const PartSpec& p : cat.parts) {
    for (long long k = -n; k <= n; ++k) {
      if ((n - k) % 2 != 0) continue;
      PartCheck c;
      c.part = p.id;
      c.n = n;
      c.k = k;
      auto it = buckets.find({&p, static_cast<int>(k)});
      c.enumerated = (it == buckets.end()) ? 0 : it->second;
      const PartValue pv = eval_part(p, n, k);
      c.formula = pv.value;
      c.integral = pv.integral;
      c.match = pv.integral && pv.value == Rational(c.enumerated);
      if (!mismatches_only || !c.match) out.push_back(std::move(c));
    }
  }
  return out;
}

struct DeviationWitness {
  long long n = 0;
  long long k = 0;
  Rational original_value;
  BigInt enumerated;
};

// First (n, k) at which each corrected part's original formula disagrees
// with its enumeration bucket.
inline std::map<std::string, DeviationWitness> deviation_witnesses(int max_n = 12) {
  std::map<std::string, DeviationWitness> out;
  const Catalog& original = catalog(Variant::Original);
  for (int n = 1; n <= max_n; ++n) {
    for (const PartCheck& c : audit_parts(n, original)) {
      if (out.count(c.part)) continue;
      out.emplace(c.part, DeviationWitness{c.n, c.k, c.formula, c.enumerated});
    }
  }
  return out;
}

}  // namespace qwm::cf

namespace qwm {
using cf::catalog;
using cf::Catalog;
using cf::ClosedAmplitude;
using cf::closed_amplitude;
using cf::closed_distribution;
using cf::closed_state;
using cf::Deviation;
using cf::sequence_count;
using cf::Variant;
using cf::Wiring;
}  // namespace qwm
