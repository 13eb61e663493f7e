#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "qss/protocol/adversary_hook.hpp"

namespace qss::adversary {

enum class AttackKind : std::uint8_t {
  None,
  InterceptResend,  // measure each tapped particle, re-emit the eigenstate
  BellGuess,        // re-order the C sequence under a guessed rearrangement
  Individual,       // entangle a probe ancilla with every C particle
  FakeSignal,       // measure-and-resend on both outbound sequences
};

// Parsed form of --attack NAME[:PARAM]:
//   none
//   intercept-resend[:ab|ac|both]   (default channel: ac)
//   bell-guess
//   individual:PHI                  (PHI in [0, pi/4], radians)
//   fake-signal
struct AttackSpec {
  AttackKind kind = AttackKind::None;
  bool tap_ab = false;
  bool tap_ac = false;
  double phi = 0.0;

  static AttackSpec parse(const std::string& text);  // throws std::invalid_argument
  std::string display() const;
};

// Instantiates the strategy behind a spec; returns nullptr for None.
// Eavesdropper randomness is drawn from substreams of master_seed; the
// guessing attack guesses over the session's rearrangement alphabet.
std::unique_ptr<protocol::AdversaryHook> make_strategy(const AttackSpec& spec,
                                                       std::uint64_t master_seed,
                                                       int perm_alphabet);

}  // namespace qss::adversary
