#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qwm/qwm.hpp"

// qwm: exact evaluator for 1-D Hadamard walks with 0/1/2-step memory.
// Exit codes: 0 success, 1 verification mismatch, 2 invalid input.

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

struct OutputOpts {
  std::string format = "csv";
  std::string out_path;
  int precision = 12;
};

void add_output_opts(CLI::App* cmd, OutputOpts& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out_path, "output path (default: stdout)");
  cmd->add_option("--precision", o.precision, "significant decimal digits")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
}

int emit(const OutputOpts& o, int memory, int steps, const qwm::Distribution& dist) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      std::cerr << "cannot open output file: " << o.out_path << '\n';
      return kExitInvalid;
    }
    os = &file;
  }
  if (o.format == "json")
    *os << qwm::distribution_json(memory, steps, dist).dump(2) << '\n';
  else
    qwm::write_csv(*os, dist, o.precision);
  return kExitOk;
}

qwm::StateVector load_init(const std::string& init, int memory) {
  if (init.rfind("file:", 0) == 0) {
    if (memory != 2)
      throw std::invalid_argument("custom init files describe order-3 states; use --memory 2");
    const std::string path = init.substr(5);
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open init file: " + path);
    return qwm::parse_init_file(is);
  }
  return qwm::preset_init(qwm::init_preset_from_name(init), memory);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hadamard walks with zero-, one- and two-step memory"};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "evolve an initial state and emit the distribution");
  int sim_memory = 2, sim_steps = 0;
  std::string sim_init = "single";
  OutputOpts sim_out;
  sim->add_option("--memory", sim_memory, "memory order")->check(CLI::IsMember({0, 1, 2}));
  sim->add_option("--steps", sim_steps, "number of steps")->check(CLI::NonNegativeNumber);
  sim->add_option("--init", sim_init, "single | symmetric | file:PATH");
  add_output_opts(sim, sim_out);

  // oracle
  auto* orc = app.add_subcommand("oracle", "brute-force path enumeration (order-3, single init)");
  int orc_steps = 0, orc_cap = qwm::kDefaultOracleCap;
  OutputOpts orc_out;
  orc->add_option("--steps", orc_steps, "number of steps")->check(CLI::NonNegativeNumber);
  orc->add_option("--max-oracle", orc_cap, "enumeration cap")->capture_default_str();
  add_output_opts(orc, orc_out);

  // closed-form
  auto* clf = app.add_subcommand("closed-form",
                                 "closed-form distribution (order-3, single init)");
  int clf_steps = 1;
  bool clf_devs = false;
  OutputOpts clf_out;
  clf->add_option("--steps", clf_steps, "number of steps")->check(CLI::PositiveNumber);
  clf->add_flag("--deviations", clf_devs, "print the formula-catalog deviation report instead");
  add_output_opts(clf, clf_out);

  // verify
  auto* ver = app.add_subcommand("verify", "simulator vs path oracle vs closed form, exact");
  int ver_steps = 12, ver_cap = qwm::kDefaultOracleCap;
  ver->add_option("--steps", ver_steps, "check n = 1..steps")->check(CLI::PositiveNumber);
  ver->add_option("--max-oracle", ver_cap, "enumeration cap")->capture_default_str();

  // profile
  auto* prf = app.add_subcommand("profile", "cluster mask, 11-field profile and phase");
  std::string prf_seq;
  prf->add_option("sequence", prf_seq, "direction sequence over {L,R}")->required();

  // peaks
  auto* pks = app.add_subcommand("peaks", "local maxima of the distribution");
  int pks_memory = 2, pks_steps = 0;
  std::string pks_init = "symmetric";
  OutputOpts pks_out;
  pks->add_option("--memory", pks_memory, "memory order")->check(CLI::IsMember({0, 1, 2}));
  pks->add_option("--steps", pks_steps, "number of steps")->check(CLI::NonNegativeNumber);
  pks->add_option("--init", pks_init, "single | symmetric | file:PATH");
  add_output_opts(pks, pks_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (sim->parsed()) {
      const qwm::StateVector init = load_init(sim_init, sim_memory);
      const qwm::StateVector v = qwm::run(init, sim_steps);
      return emit(sim_out, sim_memory, sim_steps, qwm::distribution(v));
    }

    if (orc->parsed()) {
      const qwm::StateVector v = qwm::oracle_state(orc_steps, orc_cap);
      return emit(orc_out, 2, orc_steps, qwm::distribution(v));
    }

    if (clf->parsed()) {
      if (clf_devs) {
        std::ofstream file;
        std::ostream* os = &std::cout;
        if (!clf_out.out_path.empty()) {
          file.open(clf_out.out_path);
          os = &file;
        }
        const auto witnesses = qwm::cf::deviation_witnesses();
        if (clf_out.format == "json")
          *os << qwm::deviations_json(qwm::catalog(), witnesses).dump(2) << '\n';
        else
          qwm::write_deviations_text(*os, qwm::catalog(), witnesses);
        return kExitOk;
      }
      return emit(clf_out, 2, clf_steps, qwm::closed_distribution(clf_steps));
    }

    if (ver->parsed()) {
      if (ver_steps > ver_cap) {
        std::cerr << "verify: --steps exceeds --max-oracle\n";
        return kExitInvalid;
      }
      const qwm::VerifyReport rep = qwm::verify_equivalence(ver_steps, qwm::catalog(), ver_cap);
      if (rep.ok) {
        std::cout << "verify: simulator, oracle and closed form agree exactly for n = 1.."
                  << rep.steps_checked << '\n';
        return kExitOk;
      }
      std::cout << "verify: " << rep.message << '\n';
      return kExitMismatch;
    }

    if (prf->parsed()) {
      const qwm::DirectionSequence seq = qwm::parse_directions(prf_seq);
      if (seq.empty()) {
        std::cerr << "profile: empty sequence\n";
        return kExitInvalid;
      }
      const auto mask = qwm::cluster_mask(seq);
      const qwm::ClusterProfile p = qwm::profile(seq);
      std::cout << "sequence: " << qwm::directions_to_string(seq) << '\n';
      std::cout << "mask:     " << qwm::mask_to_string(mask) << '\n';
      std::cout << "profile:  NL=" << p.NL << " NR=" << p.NR << " CL=" << p.CL << " CR=" << p.CR
                << " CL1=" << p.CL1 << " CR1=" << p.CR1 << " CL2=" << p.CL2 << " CR2=" << p.CR2
                << " g=" << p.g << " r=" << p.r << " t=" << ((p.t >> 2) & 1) << ((p.t >> 1) & 1)
                << (p.t & 1) << '\n';
      const int phase = qwm::phase_from_profile(p);
      std::cout << "phase:    " << (phase > 0 ? "+1" : "-1") << '\n';
      if (seq.size() >= 3 && seq[0] == qwm::Dir::R && seq[1] == qwm::Dir::L) {
        const int dyn = qwm::path_sign(seq);
        std::cout << "dynamic sign: " << (dyn > 0 ? "+1" : "-1")
                  << (dyn == phase ? " (matches phase)" : " (MISMATCH)") << '\n';
        if (dyn != phase) return kExitMismatch;
      }
      return kExitOk;
    }

    if (pks->parsed()) {
      const qwm::StateVector init = load_init(pks_init, pks_memory);
      const qwm::StateVector v = qwm::run(init, pks_steps);
      const qwm::PeakReport rep = qwm::find_peaks(qwm::distribution(v));
      std::ofstream file;
      std::ostream* os = &std::cout;
      if (!pks_out.out_path.empty()) {
        file.open(pks_out.out_path);
        os = &file;
      }
      if (pks_out.format == "json") {
        *os << qwm::peaks_json(pks_memory, pks_steps, rep, pks_out.precision).dump(2) << '\n';
      } else {
        *os << "symmetric," << (rep.symmetric ? "true" : "false") << '\n';
        *os << "position,probability\n";
        for (const qwm::Peak& pk : rep.peaks)
          *os << pk.k << ',' << qwm::to_decimal(pk.p, pks_out.precision) << '\n';
      }
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}
