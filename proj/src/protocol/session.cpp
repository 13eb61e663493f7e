#include "qss/protocol/session.hpp"

#include <string>

#include "qss/quantum/rng.hpp"

namespace qss::protocol {

using quantum::BellKind;
using quantum::CodingOp;
using quantum::RngStream;

bool should_abort(double check_rate, std::optional<double> decoy_rate, double threshold) {
  double worst = check_rate;
  if (decoy_rate && *decoy_rate > worst) worst = *decoy_rate;
  return worst > threshold;
}

namespace {

struct SlotAction {
  bool checked = false;
  MeasBasis basis = MeasBasis::Z;
  int outcome = 0;
  CodingOp op = CodingOp::I;
};

struct DecoyPrep {
  bool designated_b = false;
  bool designated_c = false;
  MeasBasis basis_b = MeasBasis::Z, basis_c = MeasBasis::Z;
  int bit_b = 0, bit_c = 0;
  bool is_decoy() const { return designated_b || designated_c; }
};

MeasBasis basis_from_bit(int b) { return b ? MeasBasis::X : MeasBasis::Z; }

}  // namespace

SessionResult run_session(const SessionConfig& cfg, AdversaryHook* hook) {
  cfg.validate();

  // Named substreams; each draw below names its stream, and draws within a
  // stream happen in slot order, B sequence before C sequence.
  RngStream a_kinds = RngStream::substream(cfg.seed, "alice.kinds");
  RngStream a_perm = RngStream::substream(cfg.seed, "alice.perm");
  RngStream a_decoy = RngStream::substream(cfg.seed, "alice.decoy");
  RngStream a_meas = RngStream::substream(cfg.seed, "alice.meas");
  RngStream b_mode = RngStream::substream(cfg.seed, "bob.mode");
  RngStream b_basis = RngStream::substream(cfg.seed, "bob.basis");
  RngStream b_op = RngStream::substream(cfg.seed, "bob.op");
  RngStream b_meas = RngStream::substream(cfg.seed, "bob.meas");
  RngStream c_mode = RngStream::substream(cfg.seed, "charlie.mode");
  RngStream c_basis = RngStream::substream(cfg.seed, "charlie.basis");
  RngStream c_op = RngStream::substream(cfg.seed, "charlie.op");
  RngStream c_meas = RngStream::substream(cfg.seed, "charlie.meas");
  RngStream noise_rng = RngStream::substream(cfg.seed, "channel.noise");

  const auto& alphabet = Permutation::alphabet(cfg.perm_alphabet);
  const int perm_bits = Permutation::reveal_bits(cfg.perm_alphabet);

  SessionResult res;
  SessionReport& rep = res.report;
  Transcript& tr = res.transcript;

  std::vector<std::uint8_t> perm_ids;
  perm_ids.reserve(static_cast<std::size_t>(cfg.n_groups));

  for (int g = 0; g < cfg.n_groups; ++g) {
    // ---- preparation: pair kinds, rearrangement, decoy substitution ----
    std::array<BellKind, kPairsPerGroup> kinds{};
    for (auto& k : kinds)
      k = quantum::bell_kind_from_bits(static_cast<std::uint8_t>(a_kinds.uniform_int(4)));
    const Permutation perm = alphabet[static_cast<std::size_t>(
        a_perm.uniform_int(static_cast<int>(alphabet.size())))];
    perm_ids.push_back(perm.id);

    std::array<DecoyPrep, kPairsPerGroup> decoys{};
    for (auto& d : decoys) {
      d.designated_b = a_decoy.bernoulli(cfg.decoy_fraction);
      d.designated_c = a_decoy.bernoulli(cfg.decoy_fraction);
    }

    GroupRegister reg(kinds);
    for (int p = 0; p < kPairsPerGroup; ++p) {
      DecoyPrep& d = decoys[p];
      if (!d.is_decoy()) continue;
      d.basis_b = basis_from_bit(a_decoy.bit());
      d.bit_b = a_decoy.bit();
      d.basis_c = basis_from_bit(a_decoy.bit());
      d.bit_c = a_decoy.bit();
      reg.make_decoy(p, d.basis_b, d.bit_b, d.basis_c, d.bit_c);
      ++rep.decoy_pairs;
      rep.decoy_slots += (d.designated_b ? 1 : 0) + (d.designated_c ? 1 : 0);
    }

    // ---- outbound transport (noise, then the eavesdropper's tap) ----
    std::vector<int> slots_b(kPairsPerGroup), slots_c(kPairsPerGroup);
    for (int q = 0; q < kPairsPerGroup; ++q) {
      slots_b[q] = GroupRegister::qubit_key(q, Side::B);
      slots_c[q] = GroupRegister::qubit_key(perm.source[q], Side::C);
    }
    tr.append({g, Actor::Alice, MessageKind::SendQuantum, -1, 0, "A->B"});
    tr.append({g, Actor::Alice, MessageKind::SendQuantum, -1, 0, "A->C"});

    auto depolarize = [&](int key) {
      if (noise_rng.bernoulli(cfg.noise))
        reg.apply_op(key, quantum::coding_op_from_bits(
                              static_cast<std::uint8_t>(noise_rng.uniform_int(4))));
    };
    for (int q = 0; q < kPairsPerGroup; ++q) depolarize(slots_b[q]);
    for (int q = 0; q < kPairsPerGroup; ++q) depolarize(slots_c[q]);

    if (hook) {
      OutboundContext cb{g, Side::B, slots_b, reg};
      hook->on_outbound(cb);
      OutboundContext cc{g, Side::C, slots_c, reg};
      hook->on_outbound(cc);
    }

    // ---- agents: per slot, check (measure) or code ----
    std::array<SlotAction, kPairsPerGroup> bob{}, charlie{};
    auto agent_pass = [&](std::vector<int>& slots, std::array<SlotAction, kPairsPerGroup>& acts,
                          RngStream& mode, RngStream& basis_rng, RngStream& op_rng,
                          RngStream& meas) {
      for (int q = 0; q < kPairsPerGroup; ++q) {
        SlotAction& a = acts[q];
        a.checked = mode.bernoulli(cfg.p_check);
        if (a.checked) {
          a.basis = basis_from_bit(basis_rng.bit());
          a.outcome = reg.measure_consume(slots[q], a.basis, meas);
        } else {
          a.op = quantum::coding_op_from_bits(static_cast<std::uint8_t>(op_rng.uniform_int(4)));
          reg.apply_op(slots[q], a.op);
        }
      }
    };
    agent_pass(slots_b, bob, b_mode, b_basis, b_op, b_meas);
    agent_pass(slots_c, charlie, c_mode, c_basis, c_op, c_meas);

    // ---- return transport (coded slots only) ----
    tr.append({g, Actor::Bob, MessageKind::SendQuantum, -1, 0, "B->A"});
    tr.append({g, Actor::Charlie, MessageKind::SendQuantum, -1, 0, "C->A"});
    for (int q = 0; q < kPairsPerGroup; ++q)
      if (!bob[q].checked) depolarize(slots_b[q]);
    for (int q = 0; q < kPairsPerGroup; ++q)
      if (!charlie[q].checked) depolarize(slots_c[q]);

    // ---- announcements and delayed reveals ----
    auto announce = [&](Actor actor, const std::array<SlotAction, kPairsPerGroup>& acts) {
      for (int q = 0; q < kPairsPerGroup; ++q)
        if (acts[q].checked) tr.append({g, actor, MessageKind::AnnounceCheck, q, 2, ""});
    };
    announce(Actor::Bob, bob);
    announce(Actor::Charlie, charlie);
    auto reveal = [&](Actor actor, const std::array<SlotAction, kPairsPerGroup>& acts) {
      for (int q = 0; q < kPairsPerGroup; ++q) {
        if (!acts[q].checked) continue;
        tr.append({g, Actor::Alice, MessageKind::RequestReveal, q, 0, ""});
        tr.append({g, actor, MessageKind::RevealCheck, q, 2,
                   std::string(quantum::name(acts[q].basis)) + std::to_string(acts[q].outcome)});
      }
    };
    reveal(Actor::Bob, bob);
    reveal(Actor::Charlie, charlie);

    // ---- dealer scoring and key extraction, pair by pair ----
    for (int p = 0; p < kPairsPerGroup; ++p) {
      ++rep.pairs_total;
      const int qb = p;                         // B sequence travels unrearranged
      const int qc = perm.position_of_pair(p);  // expected C stream position
      const SlotAction& ab = bob[qb];
      const SlotAction& ac = charlie[qc];
      const DecoyPrep& d = decoys[p];

      if (d.is_decoy()) {
        // A designated slot scores when the agent happened to check it in the
        // preparation basis; the rest of the pair is sacrificed.
        if (d.designated_b && ab.checked && ab.basis == d.basis_b) {
          ++rep.decoy_scored;
          if (ab.outcome != d.bit_b) ++rep.decoy_errors;
        }
        if (d.designated_c && ac.checked && ac.basis == d.basis_c) {
          ++rep.decoy_scored;
          if (ac.outcome != d.bit_c) ++rep.decoy_errors;
        }
        continue;
      }

      if (ab.checked && ac.checked) {
        ++rep.pairs_checked;
        if (ab.basis != ac.basis) continue;  // incompatible bases, discard
        const bool outcomes_differ = ab.outcome != ac.outcome;
        const bool err = outcomes_differ != quantum::anti_correlated(kinds[p], ab.basis);
        ++rep.check_scored;
        if (err) ++rep.check_errors;
        if (ab.basis == MeasBasis::Z) {
          ++rep.check_scored_z;
          if (err) ++rep.check_errors_z;
        }
      } else if (ab.checked || ac.checked) {
        ++rep.pairs_checked;
        const bool bob_checked = ab.checked;
        const MeasBasis beta = bob_checked ? ab.basis : ac.basis;
        const int checker_out = bob_checked ? ab.outcome : ac.outcome;
        const CodingOp coder_op = bob_checked ? ac.op : ab.op;
        const int coder_slot = bob_checked ? qc : qb;
        tr.append({g, Actor::Alice, MessageKind::RequestOp, coder_slot, 0, ""});
        tr.append({g, bob_checked ? Actor::Charlie : Actor::Bob, MessageKind::RevealOp, coder_slot,
                   2, quantum::name(coder_op)});

        const int returned_key = bob_checked ? slots_c[qc] : slots_b[qb];
        const int alice_out = reg.measure_consume(returned_key, beta, a_meas);
        const int expected = checker_out ^ (quantum::anti_correlated(kinds[p], beta) ? 1 : 0) ^
                             (quantum::flips_basis(coder_op, beta) ? 1 : 0);
        const bool err = alice_out != expected;
        ++rep.check_scored;
        if (err) ++rep.check_errors;
        if (beta == MeasBasis::Z) {
          ++rep.check_scored_z;
          if (err) ++rep.check_errors_z;
        }
      } else {
        const BellKind measured = reg.bell_measure_consume(slots_b[qb], slots_c[qc], a_meas);
        ++rep.pairs_used;
        rep.key_alice.append2(quantum::decode_key(kinds[p], measured));
        rep.key_bob.append2(quantum::bits(ab.op));
        rep.key_charlie.append2(quantum::bits(ac.op));
      }
    }
  }

  // ---- verdict, then key release via rearrangement reveals ----
  rep.check_error_rate =
      rep.check_scored > 0 ? static_cast<double>(rep.check_errors) / rep.check_scored : 0.0;
  if (rep.decoy_scored > 0)
    rep.decoy_error_rate = static_cast<double>(rep.decoy_errors) / rep.decoy_scored;
  rep.aborted = should_abort(rep.check_error_rate, rep.decoy_error_rate, cfg.epsilon_threshold);
  tr.append({-1, Actor::Alice, MessageKind::Verdict, -1, 0, rep.aborted ? "abort" : "proceed"});

  if (rep.aborted) {
    rep.key_alice = KeyBits{};
    rep.key_bob = KeyBits{};
    rep.key_charlie = KeyBits{};
  } else {
    for (int g = 0; g < cfg.n_groups; ++g)
      tr.append({g, Actor::Alice, MessageKind::RevealPermutation, -1, perm_bits,
                 "E" + std::to_string(perm_ids[static_cast<std::size_t>(g)])});
    rep.permutation_bits = static_cast<long>(cfg.n_groups) * perm_bits;
  }
  rep.classical_bits_exchanged = tr.total_bits();
  return res;
}

}  // namespace qss::protocol
