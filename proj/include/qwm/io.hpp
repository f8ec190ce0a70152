#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qwm/closed_form.hpp"
#include "qwm/peaks.hpp"
#include "qwm/state_vector.hpp"
#include "qwm/walk.hpp"

namespace qwm {

inline BigInt pow10(int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

// Exact decimal rendering: round to `sig` significant digits (half away from
// zero), then drop trailing fractional zeros. Exactness lives in the
// num/den fields of the JSON output; this is display only.
inline std::string to_decimal(const Rational& v, int sig = 12) {
  if (sig < 1) sig = 1;
  if (v == 0) return "0";
  BigInt num = numerator(v);
  BigInt den = denominator(v);
  const bool neg = num < 0;
  if (neg) num = -num;

  int e = 0;  // floor(log10(value))
  if (num >= den) {
    BigInt t = den;
    while (num >= t * 10) {
      t *= 10;
      ++e;
    }
  } else {
    BigInt t = num * 10;
    e = -1;
    while (t < den) {
      t *= 10;
      --e;
    }
  }

  const int shift = sig - 1 - e;
  BigInt sn = num, sd = den;
  if (shift >= 0)
    sn *= pow10(shift);
  else
    sd *= pow10(-shift);
  BigInt q = sn / sd;
  const BigInt rem = sn % sd;
  if (2 * rem >= sd) ++q;
  std::string digits = q.str();
  if (static_cast<int>(digits.size()) > sig) {  // rounding carried into a new digit
    ++e;
    digits.pop_back();
  }

  std::string out;
  if (e >= 0) {
    std::string intpart;
    if (e + 1 >= static_cast<int>(digits.size())) {
      intpart = digits + std::string(e + 1 - digits.size(), '0');
      digits.clear();
    } else {
      intpart = digits.substr(0, e + 1);
      digits = digits.substr(e + 1);
    }
    out = intpart;
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    if (!digits.empty()) out += "." + digits;
  } else {
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out = "0." + std::string(-e - 1, '0') + digits;
    if (digits.empty()) out = "0";
  }
  return neg ? "-" + out : out;
}

inline std::string rational_string(const Rational& v) {
  std::ostringstream os;
  os << numerator(v) << '/' << denominator(v);
  return os.str();
}

inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(BigInt(text));
  return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

// Rows over the reachable-parity sublattice between the support bounds,
// explicit zeros included. Mixed-parity support (possible with custom init
// files) falls back to the nonzero positions only.
inline std::vector<std::pair<int, Rational>> distribution_rows(const Distribution& d) {
  std::vector<std::pair<int, Rational>> rows;
  if (d.empty()) return rows;
  const int lo = d.begin()->first;
  const int hi = d.rbegin()->first;
  bool single_parity = true;
  for (const auto& [k, p] : d)
    if (((k - lo) % 2 + 2) % 2 != 0) single_parity = false;
  if (!single_parity) {
    for (const auto& [k, p] : d) rows.emplace_back(k, p);
    return rows;
  }
  for (int k = lo; k <= hi; k += 2) {
    auto it = d.find(k);
    rows.emplace_back(k, it == d.end() ? Rational(0) : it->second);
  }
  return rows;
}

inline void write_csv(std::ostream& os, const Distribution& d, int precision = 12) {
  os << "position,probability\n";
  for (const auto& [k, p] : distribution_rows(d)) os << k << ',' << to_decimal(p, precision) << '\n';
}

inline nlohmann::ordered_json distribution_json(int memory, int steps, const Distribution& d) {
  nlohmann::ordered_json out;
  out["memory"] = memory;
  out["steps"] = steps;
  out["entries"] = nlohmann::ordered_json::array();
  for (const auto& [k, p] : distribution_rows(d)) {
    nlohmann::ordered_json row;
    row["k"] = k;
    row["p"] = rational_string(p);
    out["entries"].push_back(std::move(row));
  }
  return out;
}

inline Distribution distribution_from_json(const nlohmann::json& j) {
  Distribution d;
  for (const auto& row : j.at("entries"))
    d[row.at("k").get<int>()] = parse_rational(row.at("p").get<std::string>());
  return d;
}

inline nlohmann::ordered_json peaks_json(int memory, int steps, const PeakReport& rep,
                                         int precision = 12) {
  nlohmann::ordered_json out;
  out["memory"] = memory;
  out["steps"] = steps;
  out["symmetric"] = rep.symmetric;
  out["peaks"] = nlohmann::ordered_json::array();
  for (const Peak& pk : rep.peaks) {
    nlohmann::ordered_json row;
    row["k"] = pk.k;
    row["p"] = rational_string(pk.p);
    row["decimal"] = to_decimal(pk.p, precision);
    out["peaks"].push_back(std::move(row));
  }
  return out;
}

// Custom initial state file for the order-3 walk: `scale <t>` followed by
// one record per line, `n3 n2 n1 p re im`. Consecutive positions must differ
// by one, records must be unique, and the squared norm must be exactly 1.
inline StateVector parse_init_file(std::istream& is) {
  StateVector v;
  v.memory_order = 2;
  bool have_scale = false;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("init file line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!have_scale) {
      if (first != "scale") fail("expected 'scale <t>' before any record");
      long long t = -1;
      if (!(ls >> t) || t < 0) fail("scale must be a non-negative integer");
      v.scale = static_cast<unsigned>(t);
      have_scale = true;
      continue;
    }
    OriginalState s;
    std::string re_text, im_text;
    std::istringstream rs(line);
    if (!(rs >> s.n3 >> s.n2 >> s.n1 >> s.p >> re_text >> im_text))
      fail("expected record 'n3 n2 n1 p re im'");
    int j = 0;
    try {
      j = encode_basis(s);
    } catch (const std::invalid_argument& err) {
      fail(err.what());
    }
    GaussInt amp;
    try {
      amp.re = BigInt(re_text);
      amp.im = BigInt(im_text);
    } catch (const std::exception&) {
      fail("amplitudes must be integers");
    }
    const int k = static_cast<int>(s.n1);
    if (v.entries.count({k, j})) fail("duplicate record for one basis state");
    if (!amp.is_zero()) v.set(k, j, amp);
  }
  if (!have_scale) throw std::invalid_argument("init file: missing 'scale <t>' line");
  const Rational norm = norm_squared(v);
  if (norm != 1)
    throw std::invalid_argument("init file: squared norm is " + rational_string(norm) +
                                ", expected exactly 1");
  return v;
}

using DeviationWitnesses = std::map<std::string, cf::DeviationWitness>;

inline void write_deviations_text(std::ostream& os, const Catalog& cat,
                                  const DeviationWitnesses& witnesses = {}) {
  if (cat.deviations.empty()) {
    os << "no deviations recorded\n";
    return;
  }
  for (const auto& d : cat.deviations) {
    os << d.part << " [" << d.field << "]\n";
    os << "  original:  " << d.original << '\n';
    os << "  corrected: " << d.corrected << '\n';
    if (!d.evaluable_original)
      os << "  note: original notation is not machine-evaluable; corrected reading used\n";
    if (auto it = witnesses.find(d.part); it != witnesses.end()) {
      const auto& w = it->second;
      os << "  witness:   n=" << w.n << " k=" << w.k << " original evaluates to "
         << w.original_value << ", enumeration gives " << w.enumerated << '\n';
    }
  }
}

inline nlohmann::ordered_json deviations_json(const Catalog& cat,
                                              const DeviationWitnesses& witnesses = {}) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& d : cat.deviations) {
    nlohmann::ordered_json row;
    row["part"] = d.part;
    row["field"] = d.field;
    row["original"] = d.original;
    row["corrected"] = d.corrected;
    row["evaluable_original"] = d.evaluable_original;
    if (auto it = witnesses.find(d.part); it != witnesses.end()) {
      const auto& w = it->second;
      nlohmann::ordered_json wit;
      wit["n"] = w.n;
      wit["k"] = w.k;
      {
        std::ostringstream tmp;
        tmp << w.original_value;
        wit["original_value"] = tmp.str();
      }
      wit["enumerated"] = w.enumerated.str();
      row["witness"] = std::move(wit);
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace qwm
