#include "qss/cli/output.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace qss::cli {

using nlohmann::ordered_json;

std::string format_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double round12(double v) { return std::strtod(format_g(v).c_str(), nullptr); }

namespace {

std::string bits2(std::uint8_t v) {
  std::string s = "00";
  s[0] = static_cast<char>('0' + ((v >> 1) & 1));
  s[1] = static_cast<char>('0' + (v & 1));
  return s;
}

}  // namespace

ordered_json report_json(const protocol::SessionConfig& cfg, const std::string& attack_display,
                         const protocol::SessionReport& rep,
                         const analysis::EfficiencyReport& eff) {
  ordered_json j;
  j["config"] = {
      {"groups", cfg.n_groups},
      {"p_check", round12(cfg.p_check)},
      {"decoy_fraction", round12(cfg.decoy_fraction)},
      {"threshold", round12(cfg.epsilon_threshold)},
      {"noise", round12(cfg.noise)},
      {"seed", cfg.seed},
      {"perm_alphabet", cfg.perm_alphabet},
      {"attack", attack_display},
  };

  bool consistent = true;
  if (rep.key_alice.size() > 0) consistent = rep.key_alice == rep.key_bob.xored(rep.key_charlie);

  ordered_json r;
  r["aborted"] = rep.aborted;
  r["pairs_total"] = rep.pairs_total;
  r["pairs_used"] = rep.pairs_used;
  r["pairs_checked"] = rep.pairs_checked;
  r["decoy_pairs"] = rep.decoy_pairs;
  r["decoy_slots"] = rep.decoy_slots;
  r["check_scored"] = rep.check_scored;
  r["check_errors"] = rep.check_errors;
  r["check_error_rate"] = round12(rep.check_error_rate);
  r["check_scored_z"] = rep.check_scored_z;
  r["check_errors_z"] = rep.check_errors_z;
  r["decoy_scored"] = rep.decoy_scored;
  r["decoy_errors"] = rep.decoy_errors;
  if (rep.decoy_error_rate)
    r["decoy_error_rate"] = round12(*rep.decoy_error_rate);
  else
    r["decoy_error_rate"] = nullptr;
  r["classical_bits_exchanged"] = rep.classical_bits_exchanged;
  r["permutation_bits"] = rep.permutation_bits;
  r["key_bits"] = rep.key_alice.size();
  r["keys_consistent"] = consistent;
  r["key_alice"] = rep.key_alice.to_hex();
  r["key_bob"] = rep.key_bob.to_hex();
  r["key_charlie"] = rep.key_charlie.to_hex();
  j["result"] = std::move(r);

  if (eff.available) {
    j["efficiency"] = {
        {"intrinsic_efficiency", round12(eff.intrinsic_efficiency)},
        {"bits_per_pair", round12(eff.bits_per_pair)},
        {"classical_bits_per_key_bit", round12(eff.classical_bits_per_key_bit)},
        {"classical_bits_per_key_bit_total", round12(eff.classical_bits_per_key_bit_total)},
    };
  } else {
    j["efficiency"] = nullptr;
  }
  return j;
}

std::string curve_csv(const std::vector<analysis::CurvePoint>& curve) {
  std::string out = "phi,epsilon,info_spectral_bits,info_twoterm_bits\n";
  for (const auto& p : curve) {
    out += format_g(p.phi);
    out += ',';
    out += format_g(p.epsilon);
    out += ',';
    out += format_g(p.info_spectral_bits);
    out += ',';
    out += format_g(p.info_twoterm_bits);
    out += '\n';
  }
  return out;
}

std::string efficiency_csv(const protocol::SessionConfig& cfg,
                           const analysis::EfficiencyReport& eff) {
  std::string out =
      "p_check,decoy_fraction,perm_alphabet,intrinsic_efficiency,bits_per_pair,"
      "classical_bits_per_key_bit,classical_bits_per_key_bit_total\n";
  if (!eff.available) return out;
  out += format_g(cfg.p_check);
  out += ',';
  out += format_g(cfg.decoy_fraction);
  out += ',';
  out += std::to_string(cfg.perm_alphabet);
  out += ',';
  out += format_g(eff.intrinsic_efficiency);
  out += ',';
  out += format_g(eff.bits_per_pair);
  out += ',';
  out += format_g(eff.classical_bits_per_key_bit);
  out += ',';
  out += format_g(eff.classical_bits_per_key_bit_total);
  out += '\n';
  return out;
}

std::string table_text(const std::vector<analysis::DenseCodingCase>& rows) {
  std::string out = "initial\top_b\top_c\tmeasured\tdecoded\texpected\tok\n";
  int ok_count = 0;
  for (const auto& r : rows) {
    out += quantum::name(r.initial);
    out += '\t';
    out += quantum::name(r.op_b);
    out += '\t';
    out += quantum::name(r.op_c);
    out += '\t';
    out += quantum::name(r.measured);
    out += '\t';
    out += bits2(r.decoded);
    out += '\t';
    out += bits2(r.expected);
    out += '\t';
    out += r.ok ? "yes" : "NO";
    out += '\n';
    if (r.ok) ++ok_count;
  }
  out += "consistent: " + std::to_string(ok_count) + "/" + std::to_string(rows.size()) + "\n";
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace qss::cli
