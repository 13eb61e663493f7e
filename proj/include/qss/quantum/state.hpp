#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "qss/quantum/rng.hpp"

namespace qss::quantum {

using Amp = std::complex<double>;

// Absolute tolerance for exact-algebra comparisons.
inline constexpr double kTol = 1e-12;

enum class MeasBasis : std::uint8_t { Z, X };

// The four maximally entangled two-qubit states.  Amplitude conventions
// (basis |b1 b2> with |0> before |1>):
//   PsiMinus = (|01> - |10>)/sqrt2     PsiPlus = (|01> + |10>)/sqrt2
//   PhiMinus = (|00> - |11>)/sqrt2     PhiPlus = (|00> + |11>)/sqrt2
enum class BellKind : std::uint8_t { PsiMinus = 0, PsiPlus = 1, PhiMinus = 2, PhiPlus = 3 };

// Dense-coding operations, each mapped to a two-bit value:
//   I = identity (00), Z = sigma_z (01), X = sigma_x (10), Y = i*sigma_y (11).
// All four matrices are real; Y = |0><1| - |1><0|.
enum class CodingOp : std::uint8_t { I = 0, Z = 1, X = 2, Y = 3 };

constexpr std::uint8_t bits(CodingOp op) { return static_cast<std::uint8_t>(op); }
constexpr CodingOp coding_op_from_bits(std::uint8_t b) { return static_cast<CodingOp>(b & 3); }

// Two-bit coordinates for Bell kinds, chosen so that applying the coding op
// with bits b to either qubit of a Bell state maps kind k to the kind with
// coordinates bits(k) XOR b.  PsiMinus is the base point (00).
constexpr std::uint8_t bits(BellKind k) { return static_cast<std::uint8_t>(k); }
constexpr BellKind bell_kind_from_bits(std::uint8_t b) { return static_cast<BellKind>(b & 3); }

const char* name(BellKind k);
const char* name(CodingOp op);
const char* name(MeasBasis b);

// Pure state over 1..4 named qubits.  labels[0] owns the most significant
// bit of the amplitude index; basis states are ordered lexicographically
// with |0> before |1>.
struct PureState {
  std::vector<char> labels;
  std::vector<Amp> amps;

  static PureState single(char label, const std::array<Amp, 2>& v);
  static PureState tensor(const PureState& a, const PureState& b);

  int num_qubits() const { return static_cast<int>(labels.size()); }
  std::size_t dim() const { return amps.size(); }
  int index_of(char label) const;  // throws std::invalid_argument if absent
  double norm2() const;
  void normalize();

  // True when the states describe the same physical state: identical label
  // lists and |<a|b>| = 1 within tol.
  bool equals_up_to_phase(const PureState& other, double tol = kTol) const;
};

// Eigenvector of the given basis for the given outcome (0 = +1 eigenvalue,
// i.e. |0> resp. |+x>; 1 = -1 eigenvalue, i.e. |1> resp. |-x>).
std::array<Amp, 2> basis_eigenvector(MeasBasis basis, int outcome);

// One-qubit state prepared in a definite Z or X eigenstate.
PureState eigenstate(char label, MeasBasis basis, int outcome);

// Bell state over two named qubits (default labels B and C).
PureState bell_state(BellKind kind, char a = 'B', char b = 'C');

// Applies the 2x2 coding matrix to the named qubit in place.
void apply_coding(PureState& state, char target, CodingOp op);

// Projective measurement of one qubit in the Z or X basis.  Samples the Born
// distribution via rng, collapses the state in place (the measured qubit is
// kept, left in its post-measurement eigenstate), and returns the outcome.
// A zero-probability branch is never returned.
int measure_qubit(PureState& state, char target, MeasBasis basis, RngStream& rng);

// Projective measurement of two named qubits in the Bell basis.  Samples the
// Born distribution, collapses the state in place, and returns the observed
// kind.  Outcome probabilities are insensitive to global phase.
BellKind bell_measure(PureState& state, char a, char b, RngStream& rng);

// Recovers the two key bits encoded between preparation and measurement of a
// Bell pair: the coordinates of the unique coding operation (product of both
// agents' operations, signs immaterial) linking the two kinds.
std::uint8_t decode_key(BellKind initial, BellKind measured);

// True when outcomes of measuring both qubits of the Bell state in the given
// basis are perfectly anti-correlated (they are otherwise perfectly
// correlated).
bool anti_correlated(BellKind kind, MeasBasis basis);

// True when the coding operation flips the outcome of a subsequent
// measurement in the given basis (sigma_x and Y flip Z outcomes; sigma_z and
// Y flip X outcomes).
bool flips_basis(CodingOp op, MeasBasis basis);

// Projects the state onto a known sub-state of some of its qubits and
// returns the normalized remainder over the other labels (original order).
// sub_amps is indexed by the bits of sub_labels in the order given, first
// label most significant.  Throws std::logic_error if the overlap is zero.
PureState contract(const PureState& state, const std::vector<char>& sub_labels,
                   const std::vector<Amp>& sub_amps);

// Entangling probe: a conditional rotation coupling the target qubit to a
// fresh ancilla.  On the precondition subspace (ancilla in |0>):
//   |0>|0> -> |0>|0>
//   |1>|0> -> cos(phi)|1>|0> + sin(phi)|0>|1>
// phi must lie in [0, pi/4]; the ancilla must be in |0> on entry.
void apply_probe(PureState& state, char target, char ancilla, double phi);

// Exact Bell-kind detection for a two-qubit state: returns the kind whose
// overlap magnitude is 1 within tolerance, or nullopt if the state is not a
// pure Bell state.
std::optional<BellKind> bell_kind_of(const PureState& state);

// Entanglement swapping: given two Bell pairs (a1,a2) of kind k1 and (b1,b2)
// of kind k2, a Bell measurement of (a1,b1) with outcome m leaves (a2,b2) in
// the Bell state returned here.  Outcomes are uniform over the four kinds.
// The rule is the XOR of the two-bit coordinates; it is validated against a
// brute-force four-qubit computation in the test suite.
BellKind entanglement_swap_kind(BellKind k1, BellKind k2, BellKind measured);

}  // namespace qss::quantum
