#include "qss/cli/cli.hpp"

#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "qss/adversary/attack.hpp"
#include "qss/analysis/efficiency.hpp"
#include "qss/analysis/security.hpp"
#include "qss/cli/output.hpp"
#include "qss/protocol/session.hpp"

namespace qss::cli {

namespace {

struct Options {
  protocol::SessionConfig config;
  std::string attack = "none";
  std::string out;
  std::string format;  // per-command default when empty
  int points = 33;
};

// Emits to --out when given (with a one-line note on stdout), else to stdout.
void emit(const Options& opt, const std::string& content) {
  if (opt.out.empty()) {
    std::cout << content;
  } else {
    write_file(opt.out, content);
    std::cout << "wrote " << opt.out << "\n";
  }
}

void check_format(const Options& opt, const std::string& expected) {
  if (!opt.format.empty() && opt.format != expected)
    throw std::invalid_argument("this command emits only " + expected);
}

int do_run(const Options& opt, bool attack_required) {
  check_format(opt, "json");
  const adversary::AttackSpec spec = adversary::AttackSpec::parse(opt.attack);
  if (attack_required && spec.kind == adversary::AttackKind::None)
    throw std::invalid_argument("the attack command needs --attack NAME[:PARAM]");

  auto hook = adversary::make_strategy(spec, opt.config.seed, opt.config.perm_alphabet);
  const protocol::SessionResult res = protocol::run_session(opt.config, hook.get());
  const analysis::EfficiencyReport eff = analysis::summarize(res.report);

  const std::string text = report_json(opt.config, spec.display(), res.report, eff).dump(2) + "\n";
  emit(opt, text);
  if (!opt.out.empty()) write_file(opt.out + ".transcript", res.transcript.to_tsv());
  return res.report.aborted ? 2 : 0;
}

int do_sweep(const Options& opt) {
  check_format(opt, "csv");
  emit(opt, curve_csv(analysis::information_curve(opt.points)));
  return 0;
}

int do_table(const Options& opt) {
  check_format(opt, "text");
  const auto rows = analysis::verify_dense_coding_table();
  emit(opt, table_text(rows));
  for (const auto& r : rows)
    if (!r.ok) return 3;
  return 0;
}

int do_efficiency(const Options& opt) {
  check_format(opt, "csv");
  const adversary::AttackSpec spec = adversary::AttackSpec::parse(opt.attack);
  auto hook = adversary::make_strategy(spec, opt.config.seed, opt.config.perm_alphabet);
  const protocol::SessionResult res = protocol::run_session(opt.config, hook.get());
  const analysis::EfficiencyReport eff = analysis::summarize(res.report);
  emit(opt, efficiency_csv(opt.config, eff));
  return res.report.aborted ? 2 : 0;
}

}  // namespace

int dispatch(int argc, char** argv) {
  CLI::App app{"Three-party EPR-pair secret-sharing simulator"};
  app.require_subcommand(1);

  Options opt;
  app.set_config("--config", "", "Read defaults from a key=value file");
  app.add_option("--seed", opt.config.seed, "Master seed for all randomness")
      ->capture_default_str();
  app.add_option("--groups", opt.config.n_groups, "Number of four-pair dispatch groups")
      ->capture_default_str();
  app.add_option("--p-check", opt.config.p_check, "Per-slot probability an agent checks")
      ->capture_default_str();
  app.add_option("--decoy-fraction", opt.config.decoy_fraction,
                 "Per-slot probability of a decoy photon")
      ->capture_default_str();
  app.add_option("--threshold", opt.config.epsilon_threshold,
                 "Error-rate threshold for the abort verdict")
      ->capture_default_str();
  app.add_option("--noise", opt.config.noise, "Depolarizing probability per channel traversal")
      ->capture_default_str();
  app.add_option("--attack", opt.attack,
                 "none | intercept-resend[:ab|ac|both] | bell-guess | individual:PHI | fake-signal")
      ->capture_default_str();
  app.add_option("--perm-alphabet", opt.config.perm_alphabet,
                 "Rearrangement alphabet size (1, 4, or 24)")
      ->capture_default_str();
  app.add_option("--out", opt.out, "Write output to this file instead of stdout");
  app.add_option("--format", opt.format, "Output format (informational; fixed per command)");
  app.add_option("--points", opt.points, "Sample count for sweep-phi")->capture_default_str();

  CLI::App* cmd_run =
      app.add_subcommand("run", "Run a session and report the outcome as JSON");
  CLI::App* cmd_attack =
      app.add_subcommand("attack", "Run a session under --attack (JSON report)");
  CLI::App* cmd_sweep =
      app.add_subcommand("sweep-phi", "Probe-angle sweep of leak and disturbance (CSV)");
  CLI::App* cmd_table =
      app.add_subcommand("verify-table", "Exercise the 64-entry dense-coding bookkeeping table");
  CLI::App* cmd_eff = app.add_subcommand("efficiency", "Resource accounting for a session (CSV)");
  for (CLI::App* sub : {cmd_run, cmd_attack, cmd_sweep, cmd_table, cmd_eff}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (cmd_run->parsed()) return do_run(opt, false);
    if (cmd_attack->parsed()) return do_run(opt, true);
    if (cmd_sweep->parsed()) return do_sweep(opt);
    if (cmd_table->parsed()) return do_table(opt);
    if (cmd_eff->parsed()) return do_efficiency(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

int dispatch(const std::vector<std::string>& args) {
  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.emplace_back("qss");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(full.size());
  for (std::string& s : full) argv.push_back(s.data());
  return dispatch(static_cast<int>(argv.size()), argv.data());
}

}  // namespace qss::cli
