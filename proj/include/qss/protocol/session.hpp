#pragma once

#include "qss/protocol/adversary_hook.hpp"
#include "qss/protocol/transcript.hpp"
#include "qss/protocol/types.hpp"

namespace qss::protocol {

// Abort rule: the session is discarded when either observed error rate
// exceeds the threshold.
bool should_abort(double check_rate, std::optional<double> decoy_rate, double threshold);

struct SessionResult {
  SessionReport report;
  Transcript transcript;
};

// Runs a full session: group preparation, rearranged dispatch, channel
// noise, optional eavesdropping, agent checking/coding, return transport,
// delayed reveals, scoring, verdict, and (on proceed) key assembly.
// Deterministic for a fixed config: every random choice is drawn from a
// named substream of config.seed in a documented order.
SessionResult run_session(const SessionConfig& config, AdversaryHook* hook = nullptr);

}  // namespace qss::protocol
