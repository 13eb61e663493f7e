#include "qss/protocol/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qss::protocol {

const char* name(Side s) { return s == Side::B ? "B" : "C"; }
const char* name(Agent a) { return a == Agent::Bob ? "bob" : "charlie"; }

int Permutation::position_of_pair(int pair) const {
  for (int q = 0; q < kPairsPerGroup; ++q) {
    if (source[q] == pair) return q;
  }
  throw std::logic_error("permutation does not cover pair");
}

namespace {

std::vector<Permutation> build_alphabet(int size) {
  const std::array<std::array<std::uint8_t, 4>, 4> disjoint{{
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  }};
  std::vector<Permutation> out;
  if (size == 1) {
    out.push_back(Permutation{0, disjoint[0]});
    return out;
  }
  for (std::uint8_t id = 0; id < 4; ++id) out.push_back(Permutation{id, disjoint[id]});
  if (size == 4) return out;

  // ids 4..23: every other ordering, lexicographically.
  std::array<std::uint8_t, 4> p{0, 1, 2, 3};
  std::uint8_t next_id = 4;
  do {
    bool taken = std::any_of(disjoint.begin(), disjoint.end(),
                             [&](const auto& d) { return d == p; });
    if (!taken) out.push_back(Permutation{next_id++, p});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

const std::vector<Permutation>& Permutation::alphabet(int size) {
  if (size != 1 && size != 4 && size != 24) {
    throw std::invalid_argument("permutation alphabet size must be 1, 4, or 24");
  }
  static const std::vector<Permutation> one = build_alphabet(1);
  static const std::vector<Permutation> four = build_alphabet(4);
  static const std::vector<Permutation> all = build_alphabet(24);
  return size == 1 ? one : size == 4 ? four : all;
}

int Permutation::reveal_bits(int alphabet_size) {
  int bits = 0;
  while ((1 << bits) < alphabet_size) ++bits;
  return bits;
}

void SessionConfig::validate() const {
  if (n_groups < 1) throw std::invalid_argument("n_groups must be positive");
  if (!(p_check >= 0.0 && p_check <= 1.0)) throw std::invalid_argument("p_check must lie in [0,1]");
  if (!(decoy_fraction >= 0.0 && decoy_fraction <= 1.0))
    throw std::invalid_argument("decoy_fraction must lie in [0,1]");
  if (!(epsilon_threshold >= 0.0 && epsilon_threshold < 0.5))
    throw std::invalid_argument("epsilon_threshold must lie in [0,0.5)");
  if (!(noise >= 0.0 && noise <= 1.0)) throw std::invalid_argument("noise must lie in [0,1]");
  if (perm_alphabet != 1 && perm_alphabet != 4 && perm_alphabet != 24)
    throw std::invalid_argument("perm_alphabet must be 1, 4, or 24");
}

void KeyBits::append2(std::uint8_t two_bits) {
  bits.push_back((two_bits >> 1) & 1u);
  bits.push_back(two_bits & 1u);
}

KeyBits KeyBits::xored(const KeyBits& other) const {
  if (bits.size() != other.bits.size()) throw std::invalid_argument("key length mismatch");
  KeyBits out;
  out.bits.resize(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) out.bits[i] = bits[i] ^ other.bits[i];
  return out;
}

std::string KeyBits::to_hex() const {
  if (bits.empty()) return "-";
  std::string out;
  out.reserve((bits.size() + 3) / 4);
  std::size_t i = 0;
  // Leading partial nibble, then full nibbles.
  std::size_t lead = bits.size() % 4;
  auto nibble = [&](std::size_t count) {
    unsigned v = 0;
    for (std::size_t k = 0; k < count; ++k) v = (v << 1) | bits[i++];
    out.push_back("0123456789abcdef"[v]);
  };
  if (lead != 0) nibble(lead);
  while (i < bits.size()) nibble(4);
  return out;
}

}  // namespace qss::protocol
