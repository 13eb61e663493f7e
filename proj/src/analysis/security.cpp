#include "qss/analysis/security.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qss/quantum/rng.hpp"

namespace qss::analysis {

using quantum::Amp;
using quantum::BellKind;
using quantum::CodingOp;
using quantum::DensityMatrix;
using quantum::MeasBasis;
using quantum::PureState;
using quantum::RngStream;

PureState probe_joint_state(double phi) {
  PureState s = PureState::tensor(quantum::bell_state(BellKind::PsiMinus, 'A', 'C'),
                                  PureState::single('P', {Amp{1.0}, Amp{0.0}}));
  quantum::apply_probe(s, 'C', 'P', phi);
  return s;
}

DensityMatrix probe_reduced_density(double phi) {
  return quantum::partial_trace(quantum::density_from_pure(probe_joint_state(phi)),
                                std::vector<char>{'A', 'P'});
}

std::vector<double> probe_eigenvalues(double phi) {
  return quantum::hermitian_eigenvalues(probe_reduced_density(phi));
}

std::vector<double> probe_eigenvalues_exact(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  std::vector<double> lam{0.0, 0.0, 0.5 * c * c, 0.5 * (1.0 + s * s)};
  std::sort(lam.begin(), lam.end());
  return lam;
}

double epsilon_exact(double phi) {
  const double s = std::sin(phi);
  return 0.5 * s * s;
}

double info_spectral_bits(double phi) {
  return quantum::von_neumann_entropy(probe_reduced_density(phi));
}

double info_twoterm_bits(double epsilon) {
  if (epsilon < 0.0 || epsilon > 0.25 + 1e-12)
    throw std::invalid_argument("info_twoterm_bits: epsilon outside [0, 1/4]");
  auto term = [](double w) { return w > 0.0 ? -w * std::log2(w) : 0.0; };
  return term(0.5 - epsilon) + term(0.5 * (1.0 + epsilon));
}

std::vector<CurvePoint> information_curve(int points) {
  if (points < 2) throw std::invalid_argument("information_curve: need at least two points");
  const double quarter_pi = std::atan(1.0);
  std::vector<CurvePoint> out;
  out.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double phi = quarter_pi * i / (points - 1);
    const double eps = epsilon_exact(phi);
    out.push_back({phi, eps, info_spectral_bits(phi), info_twoterm_bits(eps)});
  }
  return out;
}

double empirical_epsilon(double phi, long trials, std::uint64_t seed) {
  if (trials <= 0) throw std::invalid_argument("empirical_epsilon: need positive trials");
  RngStream rng = RngStream::substream(seed, "analysis.epsilon");
  long coincidences = 0;
  for (long t = 0; t < trials; ++t) {
    PureState s = probe_joint_state(phi);
    const int a = quantum::measure_qubit(s, 'A', MeasBasis::Z, rng);
    const int c = quantum::measure_qubit(s, 'C', MeasBasis::Z, rng);
    if (a == c) ++coincidences;  // the pair is anti-correlated when untouched
  }
  return static_cast<double>(coincidences) / static_cast<double>(trials);
}

std::vector<DenseCodingCase> verify_dense_coding_table() {
  std::vector<DenseCodingCase> rows;
  rows.reserve(64);
  RngStream rng(0);  // the measurement below is deterministic
  for (int k = 0; k < 4; ++k) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        DenseCodingCase row{};
        row.initial = quantum::bell_kind_from_bits(static_cast<std::uint8_t>(k));
        row.op_b = quantum::coding_op_from_bits(static_cast<std::uint8_t>(b));
        row.op_c = quantum::coding_op_from_bits(static_cast<std::uint8_t>(c));
        PureState s = quantum::bell_state(row.initial, 'B', 'C');
        quantum::apply_coding(s, 'B', row.op_b);
        quantum::apply_coding(s, 'C', row.op_c);
        row.measured = quantum::bell_measure(s, 'B', 'C', rng);
        row.decoded = quantum::decode_key(row.initial, row.measured);
        row.expected = static_cast<std::uint8_t>(b ^ c);
        row.ok = row.decoded == row.expected;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

}  // namespace qss::analysis
