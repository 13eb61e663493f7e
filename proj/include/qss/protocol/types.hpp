#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qss/quantum/state.hpp"

namespace qss::protocol {

using quantum::BellKind;
using quantum::CodingOp;
using quantum::MeasBasis;

inline constexpr int kPairsPerGroup = 4;

// Sides of an entangled pair: the B particle travels the Alice<->Bob channel,
// the C particle the Alice<->Charlie channel.
enum class Side : std::uint8_t { B, C };

enum class Agent : std::uint8_t { Bob, Charlie };

inline Agent agent_of(Side s) { return s == Side::B ? Agent::Bob : Agent::Charlie; }
const char* name(Side s);
const char* name(Agent a);

// Order rearrangement applied to the C sequence of a group before dispatch.
// source[q] is the pair whose C particle occupies stream position q.  The
// default alphabet is the four pairwise-disjoint rearrangements
//   E0 = identity            (c1,c2,c3,c4)
//   E1 = swap 1<->2, 3<->4   (c2,c1,c4,c3)
//   E2 = swap 1<->3, 2<->4   (c3,c4,c1,c2)
//   E3 = swap 1<->4, 2<->3   (c4,c3,c2,c1)
// which differ from one another at every position, so a wrong guess of the
// rearrangement mispairs every particle in the group.  The extended alphabet
// holds all 24 orderings (ids 0..3 as above, remainder in lexicographic
// order).  Alphabet size 1 (identity only) is supported for diagnostics.
struct Permutation {
  std::uint8_t id = 0;
  std::array<std::uint8_t, kPairsPerGroup> source{0, 1, 2, 3};

  // Stream position carrying the C particle of `pair`.
  int position_of_pair(int pair) const;

  static const std::vector<Permutation>& alphabet(int size);  // size in {1, 4, 24}
  static int reveal_bits(int alphabet_size);                  // ceil(log2(size))
};

// Per-particle decision taken by an agent in step (3).
struct ModeDecision {
  bool checking = false;
  MeasBasis basis = MeasBasis::Z;  // checking mode
  CodingOp op = CodingOp::I;       // coding mode
};

// A slot whose particle Alice replaced with a photon in a definite eigenstate.
// Only the designated slot is tracked for verification; its partner particle
// is sacrificed along with the pair and contributes nothing to the key.
struct DecoySlot {
  int group = 0;
  int pair = 0;
  Side side = Side::B;
  MeasBasis basis = MeasBasis::Z;
  int bit = 0;
};

// A dispatch group: four pairs prepared with recorded kinds and one
// rearrangement of the C sequence.
struct EprGroup {
  int index = 0;
  std::array<BellKind, kPairsPerGroup> kinds{};
  Permutation perm;
};

struct SessionConfig {
  int n_groups = 1;
  double p_check = 0.1;
  double decoy_fraction = 0.0;
  double epsilon_threshold = 0.0;
  double noise = 0.0;
  std::uint64_t seed = 0;
  int perm_alphabet = 4;

  void validate() const;  // throws std::invalid_argument
};

// Published error-rate thresholds commonly used for the abort decision.
inline constexpr std::array<double, 4> kThresholdPresets{0.00, 0.07, 0.11, 0.19};

// Bit string; two bits per key pair, most significant bit first.
struct KeyBits {
  std::vector<std::uint8_t> bits;

  void append2(std::uint8_t two_bits);
  std::size_t size() const { return bits.size(); }
  bool operator==(const KeyBits&) const = default;
  KeyBits xored(const KeyBits& other) const;
  std::string to_hex() const;  // big-endian nibbles, '-' when empty
};

struct SessionReport {
  KeyBits key_alice, key_bob, key_charlie;

  long pairs_total = 0;
  long pairs_used = 0;     // both agents coded, pair not sacrificed to decoys
  long pairs_checked = 0;  // at least one agent checked (decoy pairs excluded)
  long decoy_slots = 0;
  long decoy_pairs = 0;

  long check_scored = 0, check_errors = 0;
  long check_scored_z = 0, check_errors_z = 0;  // Z-basis subtotal
  double check_error_rate = 0.0;

  long decoy_scored = 0, decoy_errors = 0;
  std::optional<double> decoy_error_rate;  // absent when nothing was scored

  bool aborted = false;

  // Full classical tally: rearrangement reveals, check-position
  // announcements, delayed basis/result reveals, coding-op reveals.
  long classical_bits_exchanged = 0;
  // Key-reconstruction overhead alone (rearrangement reveals).
  long permutation_bits = 0;
};

}  // namespace qss::protocol
