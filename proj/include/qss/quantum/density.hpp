#pragma once

#include <span>
#include <vector>

#include "qss/quantum/state.hpp"

namespace qss::quantum {

// Density operator over 1..3 named qubits (dimension 2, 4 or 8), row-major.
// Label and basis-ordering conventions match PureState.
struct DensityMatrix {
  std::vector<char> labels;
  std::vector<Amp> m;

  int dim() const { return 1 << labels.size(); }
  Amp& at(int r, int c) { return m[static_cast<std::size_t>(r) * dim() + c]; }
  const Amp& at(int r, int c) const { return m[static_cast<std::size_t>(r) * dim() + c]; }

  static DensityMatrix zero(std::vector<char> labels);
  static DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

  Amp trace() const;
  bool is_hermitian(double tol = kTol) const;
};

// Outer product |psi><psi|.
DensityMatrix density_from_pure(const PureState& state);

// Traces out every qubit not in `keep`.  Kept labels retain their original
// relative order.  The keep set must be a non-empty subset of the labels.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const char> keep);

// Eigenvalues of a Hermitian matrix, ascending.  Dimension 2 uses the closed
// form; larger dimensions use cyclic Jacobi rotations with pivoting, iterated
// until the off-diagonal norm falls below 1e-14 of the matrix scale.
std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho);

// Von Neumann entropy -sum(lambda * log2(lambda)) in bits.  Eigenvalues are
// clamped to [0, 1]; values below -1e-10 indicate a non-positive matrix and
// raise std::invalid_argument.
double von_neumann_entropy(const DensityMatrix& rho);

// Shannon entropy of a probability vector in bits, with 0*log(0) = 0.
double shannon_entropy_bits(std::span<const double> probs);

}  // namespace qss::quantum
