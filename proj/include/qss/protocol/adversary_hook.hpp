#pragma once

#include <vector>

#include "qss/protocol/register.hpp"
#include "qss/protocol/types.hpp"

namespace qss::protocol {

// View of one outbound particle sequence while it crosses the channel.
// slots maps stream position to register qubit key and may be re-ordered by
// the eavesdropper; the receiving agent and the dealer address particles by
// stream position only.
struct OutboundContext {
  int group;
  Side side;
  std::vector<int>& slots;
  GroupRegister& reg;
};

// Extension point for channel eavesdroppers.  Called once per group per
// outbound sequence, after channel noise and before the agent receives.
class AdversaryHook {
 public:
  virtual ~AdversaryHook() = default;
  virtual void on_outbound(OutboundContext& ctx) { (void)ctx; }
};

}  // namespace qss::protocol
