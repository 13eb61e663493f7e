#include "qss/quantum/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qss::quantum {

DensityMatrix DensityMatrix::zero(std::vector<char> labels) {
  DensityMatrix rho;
  rho.labels = std::move(labels);
  rho.m.assign(static_cast<std::size_t>(rho.dim()) * rho.dim(), Amp{0.0});
  return rho;
}

DensityMatrix DensityMatrix::tensor(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<char> labels = a.labels;
  labels.insert(labels.end(), b.labels.begin(), b.labels.end());
  DensityMatrix out = zero(std::move(labels));
  const int db = b.dim();
  for (int ra = 0; ra < a.dim(); ++ra)
    for (int ca = 0; ca < a.dim(); ++ca)
      for (int rb = 0; rb < db; ++rb)
        for (int cb = 0; cb < db; ++cb)
          out.at(ra * db + rb, ca * db + cb) = a.at(ra, ca) * b.at(rb, cb);
  return out;
}

Amp DensityMatrix::trace() const {
  Amp t = 0.0;
  for (int i = 0; i < dim(); ++i) t += at(i, i);
  return t;
}

bool DensityMatrix::is_hermitian(double tol) const {
  for (int r = 0; r < dim(); ++r)
    for (int c = r; c < dim(); ++c)
      if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) return false;
  return true;
}

DensityMatrix density_from_pure(const PureState& state) {
  DensityMatrix rho = DensityMatrix::zero(state.labels);
  for (int r = 0; r < rho.dim(); ++r)
    for (int c = 0; c < rho.dim(); ++c)
      rho.at(r, c) = state.amps[r] * std::conj(state.amps[c]);
  return rho;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const char> keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");

  const int n = static_cast<int>(rho.labels.size());
  std::vector<int> kept_pos, traced_pos;
  for (int i = 0; i < n; ++i) {
    bool k = std::find(keep.begin(), keep.end(), rho.labels[i]) != keep.end();
    (k ? kept_pos : traced_pos).push_back(i);
  }
  if (kept_pos.size() != keep.size())
    throw std::invalid_argument("partial_trace: keep set is not a subset of the labels");

  std::vector<char> out_labels;
  for (int p : kept_pos) out_labels.push_back(rho.labels[p]);
  DensityMatrix out = DensityMatrix::zero(out_labels);

  // Bit significance in the source index: label position i has shift n-1-i.
  auto scatter = [n](const std::vector<int>& pos, int packed) {
    int idx = 0;
    for (std::size_t j = 0; j < pos.size(); ++j) {
      int bit = (packed >> (pos.size() - 1 - j)) & 1;
      idx |= bit << (n - 1 - pos[j]);
    }
    return idx;
  };

  const int kept_dim = 1 << kept_pos.size();
  const int traced_dim = 1 << traced_pos.size();
  for (int r = 0; r < kept_dim; ++r)
    for (int c = 0; c < kept_dim; ++c) {
      Amp sum = 0.0;
      for (int t = 0; t < traced_dim; ++t) {
        const int tr = scatter(traced_pos, t);
        sum += rho.at(scatter(kept_pos, r) | tr, scatter(kept_pos, c) | tr);
      }
      out.at(r, c) = sum;
    }
  return out;
}

namespace {

std::vector<double> eigenvalues_2x2(const DensityMatrix& rho) {
  const double a = rho.at(0, 0).real();
  const double b = rho.at(1, 1).real();
  const double h = std::hypot(0.5 * (a - b), std::abs(rho.at(0, 1)));
  return {0.5 * (a + b) - h, 0.5 * (a + b) + h};
}

// Cyclic Jacobi with pivoting for complex Hermitian matrices.  Each step
// diagonalizes the 2x2 block at the largest off-diagonal element with the
// exact 2x2 eigenbasis and applies the rotation to the full matrix.
std::vector<double> eigenvalues_jacobi(const DensityMatrix& input) {
  const int n = input.dim();
  std::vector<Amp> a = input.m;
  auto at = [&](int r, int c) -> Amp& { return a[static_cast<std::size_t>(r) * n + c]; };

  double scale = 0.0;
  for (const Amp& x : a) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return std::vector<double>(n, 0.0);
  const double stop = 1e-14 * scale;

  for (int iter = 0; iter < 100 * n * n; ++iter) {
    // Pivot: largest off-diagonal magnitude.
    int p = 0, q = 1;
    double off = 0.0;
    for (int r = 0; r < n; ++r)
      for (int c = r + 1; c < n; ++c)
        if (std::abs(at(r, c)) > off) {
          off = std::abs(at(r, c));
          p = r;
          q = c;
        }
    if (off <= stop) break;

    // Eigenbasis of the Hermitian block [[app, apq], [conj(apq), aqq]].
    const double app = at(p, p).real();
    const double aqq = at(q, q).real();
    const Amp apq = at(p, q);
    const double h = std::hypot(0.5 * (app - aqq), std::abs(apq));
    const double lo = 0.5 * (app + aqq) - h;

    // Unit eigenvector (u0, u1) for the smaller eigenvalue; the companion
    // column (-conj(u1), conj(u0)) completes the 2x2 unitary.
    Amp u0, u1;
    if (std::abs(apq) + std::abs(lo - app) == 0.0) {
      u0 = 1.0;
      u1 = 0.0;
    } else if (std::abs(lo - app) >= std::abs(apq)) {
      u0 = apq / (lo - app);
      u1 = 1.0;
    } else {
      u0 = 1.0;
      u1 = (lo - app) / apq;
    }
    const double inv = 1.0 / std::sqrt(std::norm(u0) + std::norm(u1));
    u0 *= inv;
    u1 *= inv;
    const Amp v0 = -std::conj(u1);
    const Amp v1 = std::conj(u0);

    // A <- U^dagger A U restricted to rows/columns p and q.
    for (int k = 0; k < n; ++k) {
      const Amp rp = at(p, k), rq = at(q, k);
      at(p, k) = std::conj(u0) * rp + std::conj(u1) * rq;
      at(q, k) = std::conj(v0) * rp + std::conj(v1) * rq;
    }
    for (int k = 0; k < n; ++k) {
      const Amp cp = at(k, p), cq = at(k, q);
      at(k, p) = cp * u0 + cq * u1;
      at(k, q) = cp * v0 + cq * v1;
    }
    at(p, q) = 0.0;
    at(q, p) = 0.0;
  }

  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = at(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho) {
  if (!rho.is_hermitian(1e-10))
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
  if (rho.dim() == 2) return eigenvalues_2x2(rho);
  return eigenvalues_jacobi(rho);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  std::vector<double> ev = hermitian_eigenvalues(rho);
  for (double& v : ev) {
    if (v < -1e-10) throw std::invalid_argument("von_neumann_entropy: negative eigenvalue");
    v = std::clamp(v, 0.0, 1.0);
  }
  return shannon_entropy_bits(ev);
}

double shannon_entropy_bits(std::span<const double> probs) {
  double s = 0.0;
  for (double p : probs)
    if (p > 0.0) s -= p * std::log2(p);
  return s;
}

}  // namespace qss::quantum
