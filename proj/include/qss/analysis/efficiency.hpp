#pragma once

#include "qss/protocol/types.hpp"

namespace qss::analysis {

// Resource accounting for a completed session.  Unavailable when the
// session aborted or distilled no key.
struct EfficiencyReport {
  bool available = false;
  double intrinsic_efficiency = 0.0;  // key pairs / pairs dispatched
  double bits_per_pair = 0.0;         // key bits / pairs dispatched
  // Key-reconstruction overhead: rearrangement reveal bits per key bit.
  double classical_bits_per_key_bit = 0.0;
  // Full tally: every classical bit of the session per key bit.
  double classical_bits_per_key_bit_total = 0.0;
};

EfficiencyReport summarize(const protocol::SessionReport& report);

}  // namespace qss::analysis
