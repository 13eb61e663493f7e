#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qss::protocol {

enum class Actor : std::uint8_t { Alice, Bob, Charlie };

// Classical and quantum traffic recorded during a session.  Bit costs count
// classical information content only: quantum dispatches and fixed-meaning
// prompts are free, a check-position announcement addresses one of four
// slots (2 bits), a delayed reveal carries basis plus outcome (2 bits), an
// operation reveal names one of four operations (2 bits), and a
// rearrangement reveal carries ceil(log2(alphabet)) bits.
enum class MessageKind : std::uint8_t {
  SendQuantum,        // particle sequence dispatched or returned
  AnnounceCheck,      // agent names a checked slot
  RequestReveal,      // dealer asks for the delayed basis/outcome
  RevealCheck,        // agent reveals basis and outcome
  RequestOp,          // dealer asks the coder of a half-checked pair
  RevealOp,           // agent reveals the coding operation
  Verdict,            // dealer announces proceed or abort
  RevealPermutation,  // dealer reveals a group's rearrangement
};

const char* name(Actor a);
const char* name(MessageKind k);

struct Message {
  int group = -1;  // -1 for session-level messages
  Actor actor = Actor::Alice;
  MessageKind kind = MessageKind::SendQuantum;
  int slot = -1;  // stream position, when applicable
  int bits = 0;
  std::string payload;
};

// Ordered message log with light well-formedness enforcement: reveals must
// answer a pending request, the verdict is unique, and rearrangements are
// revealed only after a proceed verdict.
class Transcript {
 public:
  void append(const Message& m);  // throws std::logic_error on violations

  const std::vector<Message>& messages() const { return messages_; }
  long total_bits() const { return total_bits_; }
  long bits_of(MessageKind k) const;
  bool verdict_reached() const { return verdict_reached_; }
  bool verdict_proceed() const { return verdict_proceed_; }

  // One line per message: index, group, actor, kind, slot, bits, payload.
  // Tab-separated, "-" for absent fields, LF line endings.
  std::string to_tsv() const;

 private:
  std::vector<Message> messages_;
  long total_bits_ = 0;
  int pending_reveal_ = 0;
  int pending_op_ = 0;
  bool verdict_reached_ = false;
  bool verdict_proceed_ = false;
};

}  // namespace qss::protocol
