#include "qss/protocol/register.hpp"

#include <stdexcept>

namespace qss::protocol {

using quantum::Amp;
using quantum::BellKind;
using quantum::PureState;
using quantum::RngStream;

GroupRegister::GroupRegister(const std::array<BellKind, kPairsPerGroup>& kinds) {
  where_.fill(-1);
  for (int p = 0; p < kPairsPerGroup; ++p) {
    clusters_.push_back(quantum::bell_state(kinds[p], label_of(qubit_key(p, Side::B)),
                                            label_of(qubit_key(p, Side::C))));
    where_[qubit_key(p, Side::B)] = p;
    where_[qubit_key(p, Side::C)] = p;
  }
}

void GroupRegister::make_decoy(int pair, MeasBasis b_basis, int b_bit, MeasBasis c_basis,
                               int c_bit) {
  const int kb = qubit_key(pair, Side::B);
  const int kc = qubit_key(pair, Side::C);
  if (where_[kb] < 0 || where_[kb] != where_[kc] || clusters_[where_[kb]].num_qubits() != 2)
    throw std::logic_error("make_decoy: pair is no longer pristine");
  erase_cluster(where_[kb]);
  where_[kb] = static_cast<int>(clusters_.size());
  clusters_.push_back(quantum::eigenstate(label_of(kb), b_basis, b_bit));
  where_[kc] = static_cast<int>(clusters_.size());
  clusters_.push_back(quantum::eigenstate(label_of(kc), c_basis, c_bit));
}

bool GroupRegister::is_live(int key) const {
  return key >= 0 && key < kKeys && where_[key] >= 0;
}

int GroupRegister::index_of(int key) const {
  if (!is_live(key)) throw std::logic_error("register: qubit is not live");
  return where_[key];
}

void GroupRegister::apply_op(int key, CodingOp op) {
  quantum::apply_coding(clusters_[index_of(key)], label_of(key), op);
}

int GroupRegister::measure_keep(int key, MeasBasis basis, RngStream& rng) {
  return quantum::measure_qubit(clusters_[index_of(key)], label_of(key), basis, rng);
}

int GroupRegister::measure_consume(int key, MeasBasis basis, RngStream& rng) {
  const int outcome = measure_keep(key, basis, rng);
  const auto e = quantum::basis_eigenvector(basis, outcome);
  remove_from_cluster(key, {e[0], e[1]});
  return outcome;
}

BellKind GroupRegister::bell_measure_consume(int key_a, int key_b, RngStream& rng) {
  int ia = index_of(key_a);
  const int ib = index_of(key_b);
  if (ia != ib) ia = merge(ia, ib);
  PureState& cluster = clusters_[ia];
  const BellKind kind = quantum::bell_measure(cluster, label_of(key_a), label_of(key_b), rng);

  const PureState projector = quantum::bell_state(kind, label_of(key_a), label_of(key_b));
  if (cluster.num_qubits() == 2) {
    erase_cluster(ia);
  } else {
    clusters_[ia] = quantum::contract(cluster, projector.labels, projector.amps);
  }
  where_[key_a] = -1;
  where_[key_b] = -1;
  return kind;
}

void GroupRegister::attach_probe(int target_key, double phi) {
  const int akey = ancilla_key(pair_of(target_key));
  if (where_[akey] >= 0) throw std::logic_error("attach_probe: ancilla already in use");
  const int idx = index_of(target_key);
  clusters_[idx] = PureState::tensor(clusters_[idx],
                                     PureState::single(label_of(akey), {Amp{1.0}, Amp{0.0}}));
  where_[akey] = idx;
  quantum::apply_probe(clusters_[idx], label_of(target_key), label_of(akey), phi);
}

const PureState* GroupRegister::cluster_of(int key) const {
  if (!is_live(key)) return nullptr;
  return &clusters_[where_[key]];
}

int GroupRegister::merge(int idx_a, int idx_b) {
  PureState merged = PureState::tensor(clusters_[idx_a], clusters_[idx_b]);
  const int anchor_key = clusters_[idx_a].labels[0] - 'a';
  clusters_[idx_a] = std::move(merged);
  for (int key = 0; key < kKeys; ++key)
    if (where_[key] == idx_b) where_[key] = idx_a;
  erase_cluster(idx_b);  // may relocate the merged cluster; where_ stays exact
  return where_[anchor_key];
}

void GroupRegister::remove_from_cluster(int key, const std::vector<Amp>& sub_amps) {
  const int idx = index_of(key);
  if (clusters_[idx].num_qubits() == 1) {
    erase_cluster(idx);
  } else {
    clusters_[idx] = quantum::contract(clusters_[idx], {label_of(key)}, sub_amps);
  }
  where_[key] = -1;
}

void GroupRegister::erase_cluster(int idx) {
  const int last = static_cast<int>(clusters_.size()) - 1;
  if (idx != last) {
    clusters_[idx] = std::move(clusters_[last]);
    for (int key = 0; key < kKeys; ++key)
      if (where_[key] == last) where_[key] = idx;
  }
  clusters_.pop_back();
}

}  // namespace qss::protocol
