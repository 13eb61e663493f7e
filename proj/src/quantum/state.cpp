#include "qss/quantum/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qss::quantum {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Coding matrices, row-major [out][in].  All real.
constexpr std::array<std::array<double, 2>, 2> kCodingMatrix[4] = {
    {{{1.0, 0.0}, {0.0, 1.0}}},    // I
    {{{1.0, 0.0}, {0.0, -1.0}}},   // Z
    {{{0.0, 1.0}, {1.0, 0.0}}},    // X
    {{{0.0, 1.0}, {-1.0, 0.0}}},   // Y = |0><1| - |1><0|
};

// Bell amplitudes indexed [kind][(b1<<1)|b2].
constexpr std::array<double, 4> kBellAmps[4] = {
    {0.0, kInvSqrt2, -kInvSqrt2, 0.0},  // PsiMinus
    {0.0, kInvSqrt2, kInvSqrt2, 0.0},   // PsiPlus
    {kInvSqrt2, 0.0, 0.0, -kInvSqrt2},  // PhiMinus
    {kInvSqrt2, 0.0, 0.0, kInvSqrt2},   // PhiPlus
};

int bit_shift(const PureState& s, char label) {
  return s.num_qubits() - 1 - s.index_of(label);
}

// Samples an index from a small discrete distribution.  Entries below kTol
// are treated as exactly zero and never selected.
int sample_discrete(const double* p, int n, RngStream& rng) {
  double u = rng.uniform01();
  double cum = 0.0;
  int last_nonzero = -1;
  for (int i = 0; i < n; ++i) {
    if (p[i] < kTol) continue;
    last_nonzero = i;
    cum += p[i];
    if (u < cum) return i;
  }
  if (last_nonzero < 0) throw std::logic_error("sample_discrete: all branches have zero probability");
  return last_nonzero;  // u landed in the rounding gap above the final entry
}

}  // namespace

const char* name(BellKind k) {
  switch (k) {
    case BellKind::PsiMinus: return "psi-";
    case BellKind::PsiPlus: return "psi+";
    case BellKind::PhiMinus: return "phi-";
    case BellKind::PhiPlus: return "phi+";
  }
  return "?";
}

const char* name(CodingOp op) {
  switch (op) {
    case CodingOp::I: return "I";
    case CodingOp::Z: return "Z";
    case CodingOp::X: return "X";
    case CodingOp::Y: return "Y";
  }
  return "?";
}

const char* name(MeasBasis b) { return b == MeasBasis::Z ? "Z" : "X"; }

PureState PureState::single(char label, const std::array<Amp, 2>& v) {
  PureState s;
  s.labels = {label};
  s.amps = {v[0], v[1]};
  return s;
}

PureState PureState::tensor(const PureState& a, const PureState& b) {
  for (char la : a.labels)
    for (char lb : b.labels)
      if (la == lb) throw std::invalid_argument("tensor: duplicate qubit label");
  if (a.num_qubits() + b.num_qubits() > 4)
    throw std::invalid_argument("tensor: more than four qubits");
  PureState s;
  s.labels = a.labels;
  s.labels.insert(s.labels.end(), b.labels.begin(), b.labels.end());
  s.amps.resize(a.dim() * b.dim());
  for (std::size_t ia = 0; ia < a.dim(); ++ia)
    for (std::size_t ib = 0; ib < b.dim(); ++ib)
      s.amps[(ia << b.num_qubits()) | ib] = a.amps[ia] * b.amps[ib];
  return s;
}

int PureState::index_of(char label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  throw std::invalid_argument(std::string("unknown qubit label '") + label + "'");
}

double PureState::norm2() const {
  double n = 0.0;
  for (const Amp& a : amps) n += std::norm(a);
  return n;
}

void PureState::normalize() {
  double n = std::sqrt(norm2());
  if (n <= 0.0) throw std::logic_error("normalize: zero state");
  for (Amp& a : amps) a /= n;
}

bool PureState::equals_up_to_phase(const PureState& other, double tol) const {
  if (labels != other.labels) return false;
  Amp overlap = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) overlap += std::conj(amps[i]) * other.amps[i];
  return std::abs(std::abs(overlap) - 1.0) < tol;
}

std::array<Amp, 2> basis_eigenvector(MeasBasis basis, int outcome) {
  if (basis == MeasBasis::Z)
    return outcome == 0 ? std::array<Amp, 2>{1.0, 0.0} : std::array<Amp, 2>{0.0, 1.0};
  return outcome == 0 ? std::array<Amp, 2>{kInvSqrt2, kInvSqrt2}
                      : std::array<Amp, 2>{kInvSqrt2, -kInvSqrt2};
}

PureState eigenstate(char label, MeasBasis basis, int outcome) {
  return PureState::single(label, basis_eigenvector(basis, outcome));
}

PureState bell_state(BellKind kind, char a, char b) {
  if (a == b) throw std::invalid_argument("bell_state: duplicate qubit label");
  PureState s;
  s.labels = {a, b};
  const auto& t = kBellAmps[static_cast<int>(kind)];
  s.amps = {t[0], t[1], t[2], t[3]};
  return s;
}

void apply_coding(PureState& state, char target, CodingOp op) {
  const auto& m = kCodingMatrix[static_cast<int>(op)];
  const std::size_t mask = std::size_t{1} << bit_shift(state, target);
  for (std::size_t i0 = 0; i0 < state.dim(); ++i0) {
    if (i0 & mask) continue;
    const std::size_t i1 = i0 | mask;
    const Amp a0 = state.amps[i0];
    const Amp a1 = state.amps[i1];
    state.amps[i0] = m[0][0] * a0 + m[0][1] * a1;
    state.amps[i1] = m[1][0] * a0 + m[1][1] * a1;
  }
}

int measure_qubit(PureState& state, char target, MeasBasis basis, RngStream& rng) {
  const std::size_t mask = std::size_t{1} << bit_shift(state, target);
  const std::array<Amp, 2> e[2] = {basis_eigenvector(basis, 0), basis_eigenvector(basis, 1)};

  double prob[2] = {0.0, 0.0};
  for (std::size_t i0 = 0; i0 < state.dim(); ++i0) {
    if (i0 & mask) continue;
    const Amp a0 = state.amps[i0];
    const Amp a1 = state.amps[i0 | mask];
    for (int s = 0; s < 2; ++s)
      prob[s] += std::norm(std::conj(e[s][0]) * a0 + std::conj(e[s][1]) * a1);
  }

  const int outcome = sample_discrete(prob, 2, rng);

  // Collapse onto the observed eigenstate and renormalize.
  const double inv = 1.0 / std::sqrt(prob[outcome]);
  for (std::size_t i0 = 0; i0 < state.dim(); ++i0) {
    if (i0 & mask) continue;
    const std::size_t i1 = i0 | mask;
    const Amp c = (std::conj(e[outcome][0]) * state.amps[i0] +
                   std::conj(e[outcome][1]) * state.amps[i1]) * inv;
    state.amps[i0] = c * e[outcome][0];
    state.amps[i1] = c * e[outcome][1];
  }
  return outcome;
}

BellKind bell_measure(PureState& state, char a, char b, RngStream& rng) {
  const int n = state.num_qubits();
  if (n < 2) throw std::invalid_argument("bell_measure: needs two qubits");
  const std::size_t mask_a = std::size_t{1} << bit_shift(state, a);
  const std::size_t mask_b = std::size_t{1} << bit_shift(state, b);

  // Environment indices: all assignments of the remaining qubits.
  std::vector<std::size_t> env;
  for (std::size_t i = 0; i < state.dim(); ++i)
    if (!(i & mask_a) && !(i & mask_b)) env.push_back(i);

  auto full_index = [&](std::size_t e, int ba, int bb) {
    return e | (ba ? mask_a : 0) | (bb ? mask_b : 0);
  };

  // Projection coefficients c[kind][env].
  std::array<std::vector<Amp>, 4> coef;
  double prob[4] = {0.0, 0.0, 0.0, 0.0};
  for (int k = 0; k < 4; ++k) {
    coef[k].resize(env.size());
    for (std::size_t ei = 0; ei < env.size(); ++ei) {
      Amp c = 0.0;
      for (int ba = 0; ba < 2; ++ba)
        for (int bb = 0; bb < 2; ++bb)
          c += kBellAmps[k][(ba << 1) | bb] * state.amps[full_index(env[ei], ba, bb)];
      coef[k][ei] = c;
      prob[k] += std::norm(c);
    }
  }

  const int k = sample_discrete(prob, 4, rng);

  const double inv = 1.0 / std::sqrt(prob[k]);
  std::fill(state.amps.begin(), state.amps.end(), Amp{0.0});
  for (std::size_t ei = 0; ei < env.size(); ++ei)
    for (int ba = 0; ba < 2; ++ba)
      for (int bb = 0; bb < 2; ++bb)
        state.amps[full_index(env[ei], ba, bb)] =
            kBellAmps[k][(ba << 1) | bb] * coef[k][ei] * inv;
  return static_cast<BellKind>(k);
}

std::uint8_t decode_key(BellKind initial, BellKind measured) {
  return bits(initial) ^ bits(measured);
}

bool anti_correlated(BellKind kind, MeasBasis basis) {
  // Z outcomes differ for the psi kinds; X outcomes differ for the minus kinds.
  if (basis == MeasBasis::Z) return (bits(kind) & 2) == 0;
  return (bits(kind) & 1) == 0;
}

bool flips_basis(CodingOp op, MeasBasis basis) {
  if (basis == MeasBasis::Z) return (bits(op) & 2) != 0;  // X, Y
  return (bits(op) & 1) != 0;                             // Z, Y
}

PureState contract(const PureState& state, const std::vector<char>& sub_labels,
                   const std::vector<Amp>& sub_amps) {
  if (sub_labels.empty() || sub_labels.size() >= state.labels.size())
    throw std::invalid_argument("contract: sub-system must be a proper subset");
  if (sub_amps.size() != (std::size_t{1} << sub_labels.size()))
    throw std::invalid_argument("contract: amplitude count mismatch");

  std::vector<std::size_t> sub_masks;
  for (char l : sub_labels) sub_masks.push_back(std::size_t{1} << bit_shift(state, l));

  PureState out;
  std::vector<std::size_t> keep_masks;
  for (char l : state.labels) {
    bool in_sub = std::find(sub_labels.begin(), sub_labels.end(), l) != sub_labels.end();
    if (!in_sub) {
      out.labels.push_back(l);
      keep_masks.push_back(std::size_t{1} << bit_shift(state, l));
    }
  }

  out.amps.assign(std::size_t{1} << out.labels.size(), Amp{0.0});
  for (std::size_t ke = 0; ke < out.amps.size(); ++ke) {
    std::size_t base = 0;
    for (std::size_t j = 0; j < keep_masks.size(); ++j)
      if (ke & (std::size_t{1} << (keep_masks.size() - 1 - j))) base |= keep_masks[j];
    Amp c = 0.0;
    for (std::size_t se = 0; se < sub_amps.size(); ++se) {
      std::size_t idx = base;
      for (std::size_t j = 0; j < sub_masks.size(); ++j)
        if (se & (std::size_t{1} << (sub_masks.size() - 1 - j))) idx |= sub_masks[j];
      c += std::conj(sub_amps[se]) * state.amps[idx];
    }
    out.amps[ke] = c;
  }

  if (out.norm2() < kTol) throw std::logic_error("contract: zero overlap with sub-state");
  out.normalize();
  return out;
}

void apply_probe(PureState& state, char target, char ancilla, double phi) {
  if (phi < 0.0 || phi > std::atan(1.0) + kTol)  // [0, pi/4]
    throw std::invalid_argument("apply_probe: phi outside [0, pi/4]");
  const std::size_t mask_t = std::size_t{1} << bit_shift(state, target);
  const std::size_t mask_p = std::size_t{1} << bit_shift(state, ancilla);

  for (std::size_t i = 0; i < state.dim(); ++i)
    if ((i & mask_p) && std::abs(state.amps[i]) > kTol)
      throw std::invalid_argument("apply_probe: ancilla not in |0>");

  // Rotation in the {|t=1,p=0>, |t=0,p=1>} plane; identity elsewhere.
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  for (std::size_t i = 0; i < state.dim(); ++i) {
    if ((i & mask_t) || (i & mask_p)) continue;  // enumerate t=0,p=0 representatives
    const std::size_t i10 = i | mask_t;
    const std::size_t i01 = i | mask_p;
    const Amp a10 = state.amps[i10];
    const Amp a01 = state.amps[i01];
    state.amps[i10] = c * a10 - s * a01;
    state.amps[i01] = s * a10 + c * a01;
  }
}

std::optional<BellKind> bell_kind_of(const PureState& state) {
  if (state.num_qubits() != 2) return std::nullopt;
  for (int k = 0; k < 4; ++k) {
    Amp overlap = 0.0;
    for (int i = 0; i < 4; ++i) overlap += kBellAmps[k][i] * state.amps[i];
    if (std::abs(std::abs(overlap) - 1.0) < 1e-9) return static_cast<BellKind>(k);
  }
  return std::nullopt;
}

BellKind entanglement_swap_kind(BellKind k1, BellKind k2, BellKind measured) {
  return bell_kind_from_bits(bits(k1) ^ bits(k2) ^ bits(measured));
}

}  // namespace qss::quantum
