#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qss/analysis/efficiency.hpp"
#include "qss/analysis/security.hpp"
#include "qss/protocol/session.hpp"
#include "qss/quantum/density.hpp"

using namespace qss::analysis;
using qss::quantum::DensityMatrix;
using qss::quantum::PureState;

namespace {
constexpr double kQuarterPi = 0.78539816339744830962;
const double kPhiGrid[] = {0.0, kQuarterPi / 3.0, kQuarterPi / 2.0, 2.0 * kQuarterPi / 3.0,
                           kQuarterPi};
}  // namespace

TEST_CASE("probe joint state at the maximal angle") {
  const PureState s = probe_joint_state(kQuarterPi);
  REQUIRE(s.labels == std::vector<char>{'A', 'C', 'P'});
  CHECK(s.amps[0b010].real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.amps[0b001].real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.amps[0b100].real() == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-12));
  for (int i : {0b000, 0b011, 0b101, 0b110, 0b111}) {
    CHECK(std::abs(s.amps[static_cast<std::size_t>(i)]) < 1e-12);
  }
}

TEST_CASE("reduced dealer-probe state has the closed-form entries") {
  for (double phi : kPhiGrid) {
    const DensityMatrix rho = probe_reduced_density(phi);
    REQUIRE(rho.labels == std::vector<char>{'A', 'P'});
    const double c2 = std::cos(phi) * std::cos(phi);
    const double s = std::sin(phi);
    CHECK(std::abs(rho.at(0, 0).real() - 0.5 * c2) < 1e-12);
    CHECK(std::abs(rho.at(1, 1).real() - 0.5 * s * s) < 1e-12);
    CHECK(std::abs(rho.at(2, 2).real() - 0.5) < 1e-12);
    CHECK(std::abs(rho.at(3, 3)) < 1e-12);
    CHECK(std::abs(rho.at(1, 2).real() + 0.5 * s) < 1e-12);
    CHECK(std::abs(rho.at(2, 1).real() + 0.5 * s) < 1e-12);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        if (r == c || (r == 1 && c == 2) || (r == 2 && c == 1)) continue;
        CHECK(std::abs(rho.at(r, c)) < 1e-12);
      }
    }
    CHECK(rho.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("numerical spectrum matches the closed form") {
  for (double phi : kPhiGrid) {
    const auto num = probe_eigenvalues(phi);
    const auto exact = probe_eigenvalues_exact(phi);
    REQUIRE(num.size() == 4);
    REQUIRE(exact.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(num[i] - exact[i]) < 1e-10);
  }
}

TEST_CASE("information bound endpoints and dual evaluation") {
  CHECK(std::abs(info_spectral_bits(0.0) - 1.0) < 1e-9);
  CHECK(std::abs(info_spectral_bits(kQuarterPi) - 0.8112781244591328) < 1e-9);
  for (int i = 0; i < 33; ++i) {
    const double phi = kQuarterPi * i / 32.0;
    const double direct = info_spectral_bits(phi);
    const double via_exact = qss::quantum::shannon_entropy_bits(probe_eigenvalues_exact(phi));
    CHECK(std::abs(direct - via_exact) < 1e-9);
  }
}

TEST_CASE("two-term bound values and domain") {
  CHECK(std::abs(info_twoterm_bits(0.0) - 1.0) < 1e-12);
  CHECK(std::abs(info_twoterm_bits(0.25) - 0.9237949406953988) < 1e-12);
  CHECK_THROWS_AS(info_twoterm_bits(-0.01), std::invalid_argument);
  CHECK_THROWS_AS(info_twoterm_bits(0.26), std::invalid_argument);
}

TEST_CASE("induced error rate closed form") {
  CHECK(epsilon_exact(0.0) == 0.0);
  const double pi = 4.0 * std::atan(1.0);
  CHECK(std::abs(epsilon_exact(pi / 12.0) - 0.03349364905389033) < 1e-12);
  CHECK(std::abs(epsilon_exact(pi / 8.0) - 0.0732233047033631) < 1e-12);
  CHECK(std::abs(epsilon_exact(pi / 6.0) - 0.125) < 1e-12);
  CHECK(std::abs(epsilon_exact(pi / 4.0) - 0.25) < 1e-12);
}

TEST_CASE("sampled error rate converges to the closed form") {
  // An untouched pair never produces a coincidence.
  CHECK(empirical_epsilon(0.0, 2000, 1) == 0.0);
  const long trials = 20000;
  for (double phi : {kPhiGrid[2], kPhiGrid[3], kPhiGrid[4]}) {
    const double expect = epsilon_exact(phi);
    const double got = empirical_epsilon(phi, trials, 7);
    const double sigma = std::sqrt(expect * (1 - expect) / trials);
    CHECK(std::abs(got - expect) < 4 * sigma);
  }
  CHECK(empirical_epsilon(0.5, 5000, 3) == empirical_epsilon(0.5, 5000, 3));
  CHECK_THROWS_AS(empirical_epsilon(0.5, 0, 3), std::invalid_argument);
}

TEST_CASE("information curve shape") {
  const auto curve = information_curve();
  REQUIRE(curve.size() == 33);
  CHECK(curve.front().phi == 0.0);
  CHECK(std::abs(curve.back().phi - kQuarterPi) < 1e-15);
  CHECK(std::abs(curve.front().info_spectral_bits - 1.0) < 1e-9);
  CHECK(std::abs(curve.front().info_twoterm_bits - 1.0) < 1e-12);
  CHECK(std::abs(curve.back().info_spectral_bits - 0.8112781244591328) < 1e-6);
  CHECK(std::abs(curve.back().info_twoterm_bits - 0.9237949406953988) < 1e-12);
  for (std::size_t i = 1; i < curve.size(); ++i) {
    CHECK(curve[i].epsilon >= curve[i - 1].epsilon);
    CHECK(curve[i].info_spectral_bits <= curve[i - 1].info_spectral_bits + 1e-12);
  }
  // The two-term form never undercuts the spectral bound.
  for (const auto& pt : curve) {
    CHECK(pt.info_twoterm_bits + 1e-12 >= pt.info_spectral_bits);
    CHECK(std::abs(pt.epsilon - epsilon_exact(pt.phi)) < 1e-15);
  }
  CHECK_THROWS_AS(information_curve(1), std::invalid_argument);
}

TEST_CASE("dense-coding bookkeeping table is exhaustive and exact") {
  const auto rows = verify_dense_coding_table();
  REQUIRE(rows.size() == 64);
  int idx = 0;
  for (int k = 0; k < 4; ++k) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c, ++idx) {
        const DenseCodingCase& row = rows[static_cast<std::size_t>(idx)];
        CHECK(qss::quantum::bits(row.initial) == k);
        CHECK(qss::quantum::bits(row.op_b) == b);
        CHECK(qss::quantum::bits(row.op_c) == c);
        CHECK(row.expected == (b ^ c));
        CHECK(row.decoded == row.expected);
        CHECK(qss::quantum::bits(row.measured) == (k ^ b ^ c));
        CHECK(row.ok);
      }
    }
  }
}

TEST_CASE("efficiency summary arithmetic") {
  qss::protocol::SessionReport r;
  r.pairs_total = 100;
  r.pairs_used = 80;
  for (int i = 0; i < 80; ++i) r.key_alice.append2(0b01);
  r.permutation_bits = 50;
  r.classical_bits_exchanged = 400;

  const EfficiencyReport eff = summarize(r);
  REQUIRE(eff.available);
  CHECK(eff.intrinsic_efficiency == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(eff.bits_per_pair == doctest::Approx(1.6).epsilon(1e-15));
  CHECK(eff.classical_bits_per_key_bit == doctest::Approx(0.3125).epsilon(1e-15));
  CHECK(eff.classical_bits_per_key_bit_total == doctest::Approx(2.5).epsilon(1e-15));

  qss::protocol::SessionReport aborted = r;
  aborted.aborted = true;
  CHECK_FALSE(summarize(aborted).available);
  qss::protocol::SessionReport empty;
  empty.pairs_total = 10;
  CHECK_FALSE(summarize(empty).available);
}

TEST_CASE("all-coding sessions reach the two-bit-per-pair ceiling") {
  qss::protocol::SessionConfig cfg;
  cfg.n_groups = 250;
  cfg.p_check = 0.0;
  cfg.seed = 9;
  const auto rep = qss::protocol::run_session(cfg).report;
  const EfficiencyReport eff = summarize(rep);
  REQUIRE(eff.available);
  CHECK(eff.intrinsic_efficiency == 1.0);
  CHECK(eff.bits_per_pair == 2.0);
  // With no checking traffic, the only classical cost is one rearrangement
  // reveal per group: 2 bits against 8 key bits.
  CHECK(eff.classical_bits_per_key_bit == 0.25);
  CHECK(eff.classical_bits_per_key_bit_total == 0.25);
}
