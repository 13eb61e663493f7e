#pragma once

#include <array>
#include <vector>

#include "qss/protocol/types.hpp"
#include "qss/quantum/state.hpp"

namespace qss::protocol {

// Quantum memory for one dispatch group: four Bell pairs (keys 2*pair for
// the B particle and 2*pair+1 for the C particle) plus up to four probe
// ancillas (keys 8+pair).  States are held as independent clusters that are
// merged lazily, so pairs mixed by an attacker are tracked exactly; a
// cluster never exceeds four live qubits under the supported attack models.
class GroupRegister {
 public:
  static constexpr int kKeys = 12;

  static int qubit_key(int pair, Side side) { return 2 * pair + (side == Side::C ? 1 : 0); }
  static int ancilla_key(int pair) { return 8 + pair; }
  static int pair_of(int key) { return key < 8 ? key / 2 : key - 8; }
  static char label_of(int key) { return static_cast<char>('a' + key); }

  explicit GroupRegister(const std::array<quantum::BellKind, kPairsPerGroup>& kinds);

  // Replaces the pair with two unentangled photons in definite eigenstates.
  void make_decoy(int pair, MeasBasis b_basis, int b_bit, MeasBasis c_basis, int c_bit);

  bool is_live(int key) const;

  void apply_op(int key, CodingOp op);

  // Measures and re-emits the qubit (it stays live in its post-measurement
  // eigenstate), as an intercepting eavesdropper would.
  int measure_keep(int key, MeasBasis basis, quantum::RngStream& rng);

  // Measures and removes the qubit from the register.
  int measure_consume(int key, MeasBasis basis, quantum::RngStream& rng);

  // Bell measurement of two live qubits; both are consumed.  Qubits from
  // different clusters are merged first, so mispaired measurements perform
  // entanglement swapping and leave the partner qubits entangled.
  quantum::BellKind bell_measure_consume(int key_a, int key_b, quantum::RngStream& rng);

  // Entangles the probe ancilla of the target's pair with the target qubit.
  void attach_probe(int target_key, double phi);

  // Test introspection: the cluster currently holding the key, or nullptr.
  const quantum::PureState* cluster_of(int key) const;

 private:
  int index_of(int key) const;  // throws std::logic_error if not live
  int merge(int idx_a, int idx_b);
  void remove_from_cluster(int key, const std::vector<quantum::Amp>& sub_amps);
  void erase_cluster(int idx);

  std::vector<quantum::PureState> clusters_;
  std::array<int, kKeys> where_{};  // key -> index into clusters_, -1 if dead
};

}  // namespace qss::protocol
