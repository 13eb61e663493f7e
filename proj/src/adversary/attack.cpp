#include "qss/adversary/attack.hpp"

#include <stdexcept>
#include <vector>

#include "qss/quantum/rng.hpp"

namespace qss::adversary {

using protocol::OutboundContext;
using protocol::Permutation;
using protocol::Side;
using quantum::MeasBasis;
using quantum::RngStream;

namespace {

// Measures every tapped particle in a random basis and re-emits the
// post-measurement eigenstate.
class InterceptResendHook final : public protocol::AdversaryHook {
 public:
  InterceptResendHook(bool tap_ab, bool tap_ac, std::uint64_t seed)
      : tap_ab_(tap_ab),
        tap_ac_(tap_ac),
        basis_(RngStream::substream(seed, "eve.basis")),
        meas_(RngStream::substream(seed, "eve.meas")) {}

  void on_outbound(OutboundContext& ctx) override {
    if (ctx.side == Side::B ? !tap_ab_ : !tap_ac_) return;
    for (int key : ctx.slots)
      ctx.reg.measure_keep(key, basis_.bit() ? MeasBasis::X : MeasBasis::Z, meas_);
  }

 private:
  bool tap_ab_, tap_ac_;
  RngStream basis_, meas_;
};

// Guesses the rearrangement of the C sequence and re-sorts it accordingly.
// A correct guess leaves the stream untouched; a wrong one scrambles which
// partner the dealer later pairs with each B particle.
class BellGuessHook final : public protocol::AdversaryHook {
 public:
  BellGuessHook(int alphabet_size, std::uint64_t seed)
      : alphabet_(Permutation::alphabet(alphabet_size)),
        guess_(RngStream::substream(seed, "eve.guess")) {}

  void on_outbound(OutboundContext& ctx) override {
    if (ctx.side != Side::C) return;
    const Permutation& g = alphabet_[static_cast<std::size_t>(
        guess_.uniform_int(static_cast<int>(alphabet_.size())))];
    const std::vector<int> before = ctx.slots;
    for (int q = 0; q < protocol::kPairsPerGroup; ++q)
      ctx.slots[static_cast<std::size_t>(q)] =
          before[static_cast<std::size_t>(g.position_of_pair(q))];
  }

 private:
  const std::vector<Permutation>& alphabet_;
  RngStream guess_;
};

// Couples a probe ancilla to every C particle with rotation angle phi.
class IndividualHook final : public protocol::AdversaryHook {
 public:
  explicit IndividualHook(double phi) : phi_(phi) {}

  void on_outbound(OutboundContext& ctx) override {
    if (ctx.side != Side::C) return;
    for (int key : ctx.slots) ctx.reg.attach_probe(key, phi_);
  }

 private:
  double phi_;
};

}  // namespace

AttackSpec AttackSpec::parse(const std::string& text) {
  std::string name = text;
  std::string param;
  if (auto pos = text.find(':'); pos != std::string::npos) {
    name = text.substr(0, pos);
    param = text.substr(pos + 1);
  }

  AttackSpec spec;
  if (name == "none") {
    if (!param.empty()) throw std::invalid_argument("attack 'none' takes no parameter");
    return spec;
  }
  if (name == "intercept-resend") {
    spec.kind = AttackKind::InterceptResend;
    if (param.empty() || param == "ac") {
      spec.tap_ac = true;
    } else if (param == "ab") {
      spec.tap_ab = true;
    } else if (param == "both") {
      spec.tap_ab = spec.tap_ac = true;
    } else {
      throw std::invalid_argument("intercept-resend channel must be ab, ac, or both");
    }
    return spec;
  }
  if (name == "bell-guess") {
    if (!param.empty()) throw std::invalid_argument("attack 'bell-guess' takes no parameter");
    spec.kind = AttackKind::BellGuess;
    spec.tap_ac = true;
    return spec;
  }
  if (name == "individual") {
    if (param.empty()) throw std::invalid_argument("attack 'individual' needs an angle: individual:PHI");
    std::size_t used = 0;
    double phi = 0.0;
    try {
      phi = std::stod(param, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("attack 'individual': bad angle");
    }
    if (used != param.size()) throw std::invalid_argument("attack 'individual': bad angle");
    if (phi < 0.0 || phi > 0.7853981633974484)
      throw std::invalid_argument("attack 'individual': angle must lie in [0, pi/4]");
    spec.kind = AttackKind::Individual;
    spec.tap_ac = true;
    spec.phi = phi;
    return spec;
  }
  if (name == "fake-signal") {
    if (!param.empty()) throw std::invalid_argument("attack 'fake-signal' takes no parameter");
    spec.kind = AttackKind::FakeSignal;
    spec.tap_ab = spec.tap_ac = true;
    return spec;
  }
  throw std::invalid_argument("unknown attack '" + name + "'");
}

std::string AttackSpec::display() const {
  switch (kind) {
    case AttackKind::None:
      return "none";
    case AttackKind::InterceptResend:
      if (tap_ab && tap_ac) return "intercept-resend:both";
      return tap_ab ? "intercept-resend:ab" : "intercept-resend:ac";
    case AttackKind::BellGuess:
      return "bell-guess";
    case AttackKind::Individual:
      return "individual:" + std::to_string(phi);
    case AttackKind::FakeSignal:
      return "fake-signal";
  }
  return "?";
}

std::unique_ptr<protocol::AdversaryHook> make_strategy(const AttackSpec& spec,
                                                       std::uint64_t master_seed,
                                                       int perm_alphabet) {
  switch (spec.kind) {
    case AttackKind::None:
      return nullptr;
    case AttackKind::InterceptResend:
      return std::make_unique<InterceptResendHook>(spec.tap_ab, spec.tap_ac, master_seed);
    case AttackKind::BellGuess:
      return std::make_unique<BellGuessHook>(perm_alphabet, master_seed);
    case AttackKind::Individual:
      return std::make_unique<IndividualHook>(spec.phi);
    case AttackKind::FakeSignal:
      return std::make_unique<InterceptResendHook>(true, true, master_seed);
  }
  return nullptr;
}

}  // namespace qss::adversary
