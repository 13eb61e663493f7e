#pragma once

#include <cstdint>
#include <vector>

#include "qss/quantum/density.hpp"
#include "qss/quantum/state.hpp"

namespace qss::analysis {

// Joint pure state of the dealer's particle (A), the probed travelling
// particle (C), and the probe ancilla (P) after the entangling probe of
// angle phi acts on one half of a PsiMinus pair.
quantum::PureState probe_joint_state(double phi);

// Reduced state of (A, P) after the travelling particle is traced out.
quantum::DensityMatrix probe_reduced_density(double phi);

// Spectrum of the reduced state, ascending: numerical diagonalization, and
// the closed form {0, 0, cos(phi)^2/2, (1 + sin(phi)^2)/2}.
std::vector<double> probe_eigenvalues(double phi);
std::vector<double> probe_eigenvalues_exact(double phi);

// Induced error rate on Z-basis comparisons across the probed channel.
double epsilon_exact(double phi);

// Eavesdropper information bound in bits, via the reduced-state entropy.
double info_spectral_bits(double phi);

// The same bound written as a two-term closed form in the error rate; kept
// alongside the spectral route because the two disagree for epsilon > 0 and
// both are reported.
double info_twoterm_bits(double epsilon);

struct CurvePoint {
  double phi;
  double epsilon;
  double info_spectral_bits;
  double info_twoterm_bits;
};

// Evenly spaced sweep of [0, pi/4].
std::vector<CurvePoint> information_curve(int points = 33);

// Monte Carlo estimate of the induced error rate: prepare, probe, measure
// both halves in Z, count coincidences that violate the anti-correlation.
double empirical_epsilon(double phi, long trials, std::uint64_t seed);

// One dense-coding bookkeeping case: prepare, code on both sides, read back.
struct DenseCodingCase {
  quantum::BellKind initial;
  quantum::CodingOp op_b;
  quantum::CodingOp op_c;
  quantum::BellKind measured;
  std::uint8_t decoded;
  std::uint8_t expected;
  bool ok;
};

// Exercises all 4 x 4 x 4 combinations through the state machinery.
std::vector<DenseCodingCase> verify_dense_coding_table();

}  // namespace qss::analysis
