// Acceptance harness: one line per check, [PASS]/[FAIL] prefix, exit code is
// the number of failed checks.  Statistical windows are four standard errors
// wide; algebraic comparisons use fixed absolute tolerances.
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qss/adversary/attack.hpp"
#include "qss/analysis/efficiency.hpp"
#include "qss/analysis/security.hpp"
#include "qss/cli/cli.hpp"
#include "qss/protocol/session.hpp"
#include "qss/quantum/density.hpp"
#include "qss/quantum/state.hpp"

namespace {

namespace fs = std::filesystem;
using qss::protocol::SessionConfig;
using qss::protocol::SessionReport;
using qss::protocol::SessionResult;
using qss::quantum::DensityMatrix;

std::string fmt(double v) {
  std::ostringstream oss;
  oss << std::setprecision(6) << v;
  return oss.str();
}

bool in_window(double value, double expect, double tol, std::string& detail) {
  detail += "value=" + fmt(value) + " expect=" + fmt(expect) + " tol=" + fmt(tol);
  return std::abs(value - expect) <= tol;
}

SessionResult run_attacked(const SessionConfig& cfg, const std::string& attack) {
  const auto spec = qss::adversary::AttackSpec::parse(attack);
  const auto hook = qss::adversary::make_strategy(spec, cfg.seed, cfg.perm_alphabet);
  return qss::protocol::run_session(cfg, hook.get());
}

struct KeyDamage {
  long pairs = 0;
  long pair_errors = 0;
  long groups = 0;
  long dirty_groups = 0;
  bool well_formed = false;
};

// Requires a session where every pair reaches the key (p_check = 0, no
// decoys), so group g owns key bits [8g, 8g+8).
KeyDamage key_damage(const SessionReport& r) {
  KeyDamage d;
  const auto expected = r.key_bob.xored(r.key_charlie);
  if (r.key_alice.size() != expected.size() || r.key_alice.size() % 8 != 0) return d;
  d.well_formed = true;
  d.pairs = static_cast<long>(r.key_alice.size() / 2);
  d.groups = static_cast<long>(r.key_alice.size() / 8);
  for (long g = 0; g < d.groups; ++g) {
    bool dirty = false;
    for (int p = 0; p < 4; ++p) {
      const std::size_t at = static_cast<std::size_t>(8 * g + 2 * p);
      if (r.key_alice.bits[at] != expected.bits[at] ||
          r.key_alice.bits[at + 1] != expected.bits[at + 1]) {
        ++d.pair_errors;
        dirty = true;
      }
    }
    if (dirty) ++d.dirty_groups;
  }
  return d;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Silences the one-line "wrote <path>" notes the command emits, so the
// harness prints exactly one line per check.
struct StdoutSilencer {
  std::ostringstream sink;
  std::streambuf* saved = std::cout.rdbuf(sink.rdbuf());
  ~StdoutSilencer() { std::cout.rdbuf(saved); }
};

// C1: the dense-coding bookkeeping closes for all 64 kind/op/op cases.
bool c1(std::string& detail) {
  const auto rows = qss::analysis::verify_dense_coding_table();
  long ok = 0;
  for (const auto& r : rows)
    if (r.ok) ++ok;
  detail = std::to_string(ok) + "/" + std::to_string(rows.size()) + " cases decode correctly";
  return rows.size() == 64 && ok == 64;
}

// C2: honest sessions are clean across seeds: no abort, exact key agreement,
// zero check and decoy errors, and the expected fraction of pairs kept.
bool c2(std::string& detail) {
  long used = 0, total = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SessionConfig cfg;
    cfg.n_groups = 1000;
    cfg.p_check = 0.1;
    cfg.seed = seed;
    const SessionReport r = qss::protocol::run_session(cfg).report;
    if (r.aborted || r.check_errors != 0 ||
        !(r.key_alice == r.key_bob.xored(r.key_charlie))) {
      detail = "seed " + std::to_string(seed) + " produced an abort, error, or key mismatch";
      return false;
    }
    used += r.pairs_used;
    total += r.pairs_total;
  }

  SessionConfig dcfg;
  dcfg.n_groups = 500;
  dcfg.p_check = 0.3;
  dcfg.decoy_fraction = 0.3;
  dcfg.seed = 42;
  const SessionReport dr = qss::protocol::run_session(dcfg).report;
  if (dr.decoy_scored <= 0 || dr.decoy_errors != 0) {
    detail = "decoy run scored " + std::to_string(dr.decoy_scored) + " slots with " +
             std::to_string(dr.decoy_errors) + " errors (want > 0 scored, 0 errors)";
    return false;
  }

  const double frac = static_cast<double>(used) / static_cast<double>(total);
  const double expect = 0.81;  // both agents code with probability (1 - 0.1)^2
  const double tol = 4.0 * std::sqrt(expect * (1.0 - expect) / static_cast<double>(total));
  detail = "10 clean seeds; kept-pair fraction ";
  return in_window(frac, expect, tol, detail);
}

// C3: intercept-resend on the dealer-to-charlie channel disturbs one quarter
// of scored comparisons.
bool c3(std::string& detail) {
  SessionConfig cfg;
  cfg.n_groups = 15000;
  cfg.p_check = 0.5;
  cfg.seed = 303;
  const SessionReport r = run_attacked(cfg, "intercept-resend:ac").report;
  const double tol = 4.0 * std::sqrt(0.25 * 0.75 / static_cast<double>(r.check_scored));
  detail = "scored=" + std::to_string(r.check_scored) + " ";
  return r.check_scored > 30000 && in_window(r.check_error_rate, 0.25, tol, detail);
}

// C4: guessing the rearrangement poisons the key at the exact rates, and the
// full 24-letter alphabet contaminates strictly more groups than the
// disjoint 4-letter one.
bool c4(std::string& detail) {
  SessionConfig cfg;
  cfg.n_groups = 8000;
  cfg.p_check = 0.0;
  cfg.seed = 404;

  const KeyDamage d4 = key_damage(run_attacked(cfg, "bell-guess").report);
  cfg.perm_alphabet = 24;
  cfg.seed = 405;
  const KeyDamage d24 = key_damage(run_attacked(cfg, "bell-guess").report);
  if (!d4.well_formed || !d24.well_formed) {
    detail = "key streams malformed";
    return false;
  }

  const double g4 = static_cast<double>(cfg.n_groups);
  const double pair_rate = static_cast<double>(d4.pair_errors) / static_cast<double>(d4.pairs);
  // Per-group error-count variance is 45/16; errors within a group correlate.
  const double pair_tol = 4.0 * std::sqrt(45.0 / 16.0) / (4.0 * std::sqrt(g4));
  std::string w1 = "pair ";
  const bool ok_pair = in_window(pair_rate, 0.5625, pair_tol, w1);

  const double c4_rate = static_cast<double>(d4.dirty_groups) / g4;
  const double c4_expect = 45.0 / 64.0;
  const double c4_sig = std::sqrt(c4_expect * (1.0 - c4_expect) / g4);
  std::string w2 = "dirty4 ";
  const bool ok_c4 = in_window(c4_rate, c4_expect, 4.0 * c4_sig, w2);

  const double c24_rate = static_cast<double>(d24.dirty_groups) / g4;
  const double c24_expect = 1.0 - 3.28125 / 24.0;
  const double c24_sig = std::sqrt(c24_expect * (1.0 - c24_expect) / g4);
  std::string w3 = "dirty24 ";
  const bool ok_c24 = in_window(c24_rate, c24_expect, 4.0 * c24_sig, w3);

  const double gap_tol = 4.0 * std::sqrt(c4_sig * c4_sig + c24_sig * c24_sig);
  const bool ok_gap = c24_rate > c4_rate + gap_tol;

  detail = w1 + "; " + w2 + "; " + w3 + "; gap=" + fmt(c24_rate - c4_rate) +
           (ok_gap ? " > " : " <= ") + fmt(gap_tol);
  return ok_pair && ok_c4 && ok_c24 && ok_gap;
}

// C5: either particle of any pair alone is the maximally mixed state, and
// the product of the two marginals is the uniform two-qubit state.
bool c5(std::string& detail) {
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) {
    const auto rho =
        qss::quantum::density_from_pure(qss::quantum::bell_state(
            qss::quantum::bell_kind_from_bits(static_cast<std::uint8_t>(k))));
    DensityMatrix halves[2] = {qss::quantum::partial_trace(rho, std::vector<char>{'B'}),
                               qss::quantum::partial_trace(rho, std::vector<char>{'C'})};
    for (const auto& h : halves) {
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          const double want = r == c ? 0.5 : 0.0;
          worst = std::max(worst, std::abs(h.at(r, c) - want));
        }
      }
    }
    const DensityMatrix prod = DensityMatrix::tensor(halves[0], halves[1]);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        const double want = r == c ? 0.25 : 0.0;
        worst = std::max(worst, std::abs(prod.at(r, c) - want));
      }
    }
  }
  detail = "worst deviation from maximally mixed marginals = " + fmt(worst);
  return worst <= 1e-12;
}

// C6: for a grid of probe angles, the sampled disturbance matches
// sin(phi)^2/2, and the reduced dealer-probe state matches its closed form
// entrywise and spectrally.
bool c6(std::string& detail) {
  const double pi = 4.0 * std::atan(1.0);
  const double grid[] = {0.0, pi / 12.0, pi / 8.0, pi / 6.0, pi / 4.0};
  const long trials = 120000;
  double worst_entry = 0.0, worst_eig = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double phi = grid[i];
    const double expect = qss::analysis::epsilon_exact(phi);
    const double got = qss::analysis::empirical_epsilon(phi, trials, 600 + static_cast<std::uint64_t>(i));
    if (phi == 0.0) {
      if (got != 0.0) {
        detail = "zero-angle probe produced coincidences";
        return false;
      }
    } else {
      const double tol = 4.0 * std::sqrt(expect * (1.0 - expect) / static_cast<double>(trials));
      if (std::abs(got - expect) > tol) {
        detail = "phi=" + fmt(phi) + " sampled=" + fmt(got) + " expect=" + fmt(expect) +
                 " tol=" + fmt(tol);
        return false;
      }
    }

    const auto rho = qss::analysis::probe_reduced_density(phi);
    const double c2 = std::cos(phi) * std::cos(phi);
    const double s = std::sin(phi);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        double want = 0.0;
        if (r == 0 && c == 0) want = 0.5 * c2;
        if (r == 1 && c == 1) want = 0.5 * s * s;
        if (r == 2 && c == 2) want = 0.5;
        if ((r == 1 && c == 2) || (r == 2 && c == 1)) want = -0.5 * s;
        worst_entry = std::max(worst_entry, std::abs(rho.at(r, c) - want));
      }
    }
    const auto num = qss::analysis::probe_eigenvalues(phi);
    const auto exact = qss::analysis::probe_eigenvalues_exact(phi);
    for (int j = 0; j < 4; ++j) worst_eig = std::max(worst_eig, std::abs(num[j] - exact[j]));
  }
  detail = "5 angles; worst entry dev=" + fmt(worst_entry) + " (tol 1e-12), worst eigenvalue dev=" +
           fmt(worst_eig) + " (tol 1e-10), sampled rates within 4 sigma";
  return worst_entry <= 1e-12 && worst_eig <= 1e-10;
}

// C7: the leak-versus-angle curve is internally consistent (numerical and
// closed-form spectra agree pointwise) and hits both endpoints.
bool c7(std::string& detail) {
  const auto curve = qss::analysis::information_curve(33);
  double worst_gap = 0.0;
  for (const auto& pt : curve) {
    const auto exact = qss::analysis::probe_eigenvalues_exact(pt.phi);
    const double via_exact = qss::quantum::shannon_entropy_bits(exact);
    worst_gap = std::max(worst_gap, std::abs(pt.info_spectral_bits - via_exact));
  }
  const double at_zero = curve.front().info_spectral_bits;
  const double at_max = curve.back().info_spectral_bits;
  detail = "dual-evaluation gap=" + fmt(worst_gap) + " (tol 1e-9), I(0)=" + fmt(at_zero) +
           ", I(max)=" + fmt(at_max);
  return curve.size() == 33 && worst_gap <= 1e-9 && std::abs(at_zero - 1.0) <= 1e-9 &&
         std::abs(at_max - 0.811278) <= 1e-6;
}

// C8: the measure-and-resend forgery is caught: decoy disturbance sits at
// 1/4, every threshold preset aborts, and the chance a rate that high slips
// under the loosest preset is vanishing.
bool c8(std::string& detail) {
  SessionConfig cfg;
  cfg.n_groups = 12000;
  cfg.p_check = 0.5;
  cfg.decoy_fraction = 0.2;
  cfg.epsilon_threshold = 0.45;  // measuring run: keep rates observable
  cfg.seed = 808;
  const SessionReport r = run_attacked(cfg, "fake-signal").report;
  if (!r.decoy_error_rate) {
    detail = "no decoy slots scored";
    return false;
  }
  const double tol = 4.0 * std::sqrt(0.25 * 0.75 / static_cast<double>(r.decoy_scored));
  std::string w = "decoy ";
  const bool ok_rate = in_window(*r.decoy_error_rate, 0.25, tol, w);

  bool all_abort = true;
  for (double tau : {0.07, 0.11, 0.19}) {
    SessionConfig tight = cfg;
    tight.n_groups = 2000;
    tight.epsilon_threshold = tau;
    if (!run_attacked(tight, "fake-signal").report.aborted) all_abort = false;
  }

  // One-sided tail bound for a true 1/4 decoy rate observed below the
  // loosest preset (0.19): exp(-2 n delta^2).
  const double miss =
      std::exp(-2.0 * static_cast<double>(r.decoy_scored) * (0.25 - 0.19) * (0.25 - 0.19));
  detail = w + "; presets {0.07, 0.11, 0.19} " + (all_abort ? "all abort" : "MISSED an abort") +
           "; miss bound=" + fmt(miss);
  return ok_rate && all_abort && miss <= 1e-3;
}

// C9: at a 1% checking rate the classical cost of key release sits in the
// expected band just above the 1/4-bit floor.
bool c9(std::string& detail) {
  SessionConfig cfg;
  cfg.n_groups = 10000;
  cfg.p_check = 0.01;
  cfg.seed = 909;
  const SessionReport r = qss::protocol::run_session(cfg).report;
  const auto eff = qss::analysis::summarize(r);
  if (!eff.available) {
    detail = "efficiency unavailable";
    return false;
  }
  detail = "classical bits per key bit = " + fmt(eff.classical_bits_per_key_bit) +
           " (want within [0.24, 0.27]); full tally = " +
           fmt(eff.classical_bits_per_key_bit_total);
  return eff.classical_bits_per_key_bit >= 0.24 && eff.classical_bits_per_key_bit <= 0.27;
}

// C10: byte-identical artifacts for identical invocations.
bool c10(std::string& detail) {
  const fs::path dir = fs::temp_directory_path() / "qss_acceptance";
  fs::create_directories(dir);
  const std::string a = (dir / "a.json").string();
  const std::string b = (dir / "b.json").string();
  const std::vector<std::string> run{"run",       "--groups", "120", "--p-check", "0.2",
                                     "--decoy-fraction", "0.1", "--seed", "77", "--out"};
  auto with = [&](const std::vector<std::string>& base, const std::string& o) {
    std::vector<std::string> v = base;
    v.push_back(o);
    return v;
  };
  int rc_run = 0;
  {
    StdoutSilencer quiet;
    rc_run = qss::cli::dispatch(with(run, a)) + qss::cli::dispatch(with(run, b));
  }
  if (rc_run != 0) {
    detail = "session invocations failed";
    return false;
  }
  const bool json_same = read_file(a) == read_file(b) && !read_file(a).empty();
  const bool tsv_same = read_file(a + ".transcript") == read_file(b + ".transcript");

  const std::string sa = (dir / "sweep_a.csv").string();
  const std::string sb = (dir / "sweep_b.csv").string();
  const std::vector<std::string> sweep{"sweep-phi", "--points", "33", "--out"};
  int rc_sweep = 0;
  {
    StdoutSilencer quiet;
    rc_sweep = qss::cli::dispatch(with(sweep, sa)) + qss::cli::dispatch(with(sweep, sb));
  }
  if (rc_sweep != 0) {
    detail = "sweep invocations failed";
    return false;
  }
  const bool csv_same = read_file(sa) == read_file(sb) && !read_file(sa).empty();

  detail = std::string("report ") + (json_same ? "identical" : "DIFFERS") + ", transcript " +
           (tsv_same ? "identical" : "DIFFERS") + ", sweep " + (csv_same ? "identical" : "DIFFERS");
  return json_same && tsv_same && csv_same;
}

}  // namespace

int main() {
  struct Check {
    const char* label;
    bool (*fn)(std::string&);
  };
  const Check checks[] = {
      {"C1 dense-coding decode table", c1},
      {"C2 honest sessions stay clean", c2},
      {"C3 intercept-resend disturbance", c3},
      {"C4 rearrangement-guess key damage", c4},
      {"C5 marginals carry no information", c5},
      {"C6 probe grid: disturbance and reduced state", c6},
      {"C7 leak curve consistency and endpoints", c7},
      {"C8 forged-photon detection", c8},
      {"C9 classical cost of key release", c9},
      {"C10 deterministic artifacts", c10},
  };

  int failures = 0;
  for (const Check& c : checks) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
      ok = false;
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.label << " -- " << detail << "\n";
    if (!ok) ++failures;
  }
  std::cout << "acceptance: " << (10 - failures) << "/10 checks passed\n";
  return failures;
}
