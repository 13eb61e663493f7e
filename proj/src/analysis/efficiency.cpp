#include "qss/analysis/efficiency.hpp"

namespace qss::analysis {

EfficiencyReport summarize(const protocol::SessionReport& report) {
  EfficiencyReport eff;
  const double key_bits = static_cast<double>(report.key_alice.size());
  if (report.aborted || key_bits <= 0.0 || report.pairs_total <= 0) return eff;
  eff.available = true;
  eff.intrinsic_efficiency =
      static_cast<double>(report.pairs_used) / static_cast<double>(report.pairs_total);
  eff.bits_per_pair = key_bits / static_cast<double>(report.pairs_total);
  eff.classical_bits_per_key_bit = static_cast<double>(report.permutation_bits) / key_bits;
  eff.classical_bits_per_key_bit_total =
      static_cast<double>(report.classical_bits_exchanged) / key_bits;
  return eff;
}

}  // namespace qss::analysis
