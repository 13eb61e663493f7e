#include "qss/protocol/transcript.hpp"

#include <stdexcept>

namespace qss::protocol {

const char* name(Actor a) {
  switch (a) {
    case Actor::Alice: return "alice";
    case Actor::Bob: return "bob";
    case Actor::Charlie: return "charlie";
  }
  return "?";
}

const char* name(MessageKind k) {
  switch (k) {
    case MessageKind::SendQuantum: return "send-quantum";
    case MessageKind::AnnounceCheck: return "announce-check";
    case MessageKind::RequestReveal: return "request-reveal";
    case MessageKind::RevealCheck: return "reveal-check";
    case MessageKind::RequestOp: return "request-op";
    case MessageKind::RevealOp: return "reveal-op";
    case MessageKind::Verdict: return "verdict";
    case MessageKind::RevealPermutation: return "reveal-permutation";
  }
  return "?";
}

void Transcript::append(const Message& m) {
  if (verdict_reached_ && m.kind != MessageKind::RevealPermutation)
    throw std::logic_error("transcript: only rearrangement reveals may follow the verdict");
  switch (m.kind) {
    case MessageKind::SendQuantum:
    case MessageKind::AnnounceCheck:
      break;
    case MessageKind::RequestReveal:
      ++pending_reveal_;
      break;
    case MessageKind::RevealCheck:
      if (pending_reveal_ <= 0) throw std::logic_error("transcript: reveal without request");
      --pending_reveal_;
      break;
    case MessageKind::RequestOp:
      ++pending_op_;
      break;
    case MessageKind::RevealOp:
      if (pending_op_ <= 0) throw std::logic_error("transcript: operation reveal without request");
      --pending_op_;
      break;
    case MessageKind::Verdict:
      if (pending_reveal_ > 0 || pending_op_ > 0)
        throw std::logic_error("transcript: verdict with unanswered requests");
      verdict_reached_ = true;
      verdict_proceed_ = (m.payload == "proceed");
      break;
    case MessageKind::RevealPermutation:
      if (!verdict_reached_ || !verdict_proceed_)
        throw std::logic_error("transcript: rearrangement reveal requires a proceed verdict");
      break;
  }
  if (m.bits < 0) throw std::logic_error("transcript: negative bit count");
  messages_.push_back(m);
  total_bits_ += m.bits;
}

long Transcript::bits_of(MessageKind k) const {
  long sum = 0;
  for (const Message& m : messages_)
    if (m.kind == k) sum += m.bits;
  return sum;
}

std::string Transcript::to_tsv() const {
  std::string out;
  for (std::size_t i = 0; i < messages_.size(); ++i) {
    const Message& m = messages_[i];
    out += std::to_string(i);
    out += '\t';
    out += m.group < 0 ? "-" : std::to_string(m.group);
    out += '\t';
    out += name(m.actor);
    out += '\t';
    out += name(m.kind);
    out += '\t';
    out += m.slot < 0 ? "-" : std::to_string(m.slot);
    out += '\t';
    out += std::to_string(m.bits);
    out += '\t';
    out += m.payload.empty() ? "-" : m.payload;
    out += '\n';
  }
  return out;
}

}  // namespace qss::protocol
