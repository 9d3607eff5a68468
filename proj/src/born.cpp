#include "dslab/born.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace dslab {

BipartiteState make_state(const Cmat& coeffs) {
  if (coeffs.rows() < 2 || coeffs.cols() < 2)
    throw std::invalid_argument("make_state: dims must be >= 2");
  const double n2 = coeffs.squaredNorm();
  if (std::abs(n2 - 1.0) > 1e-12)
    throw std::invalid_argument("make_state: coefficients must have unit norm");
  return {coeffs};
}

bool density_invariants_hold(const DensityMatrix& rho, double* worst) {
  const Cmat& m = rho.entries;
  double w = 0.0;
  w = std::max(w, (m - m.adjoint()).norm());
  w = std::max(w, std::abs(m.trace().real() - 1.0));
  w = std::max(w, std::abs(m.trace().imag()));
  Eigen::SelfAdjointEigenSolver<Cmat> es(0.5 * (m + m.adjoint()));
  const double min_eig = es.eigenvalues().minCoeff();
  if (worst) *worst = std::max(w, std::max(0.0, -min_eig));
  return w <= 1e-12 && min_eig >= -1e-10;
}

DensityMatrix partial_trace_a(const BipartiteState& state) {
  const Cmat& a = state.coeffs;
  // rho_{j'j} = sum_i alpha_{ij'} conj(alpha_{ij})
  Cmat rho = a.transpose() * a.conjugate();
  return {rho};
}

BipartiteState rotate_alice(const BipartiteState& state, const Cmat& unitary) {
  if (unitary.rows() != state.dim_a() || unitary.cols() != state.dim_a())
    throw std::invalid_argument("rotate_alice: unitary dimension mismatch");
  const Cmat defect = unitary.adjoint() * unitary - Cmat::Identity(unitary.rows(), unitary.cols());
  if (defect.norm() > 1e-10)
    throw std::invalid_argument("rotate_alice: matrix is not unitary");
  BipartiteState out;
  out.coeffs = unitary * state.coeffs;
  return out;
}

DensityMatrix measure_average(const BipartiteState& state, const Cmat& alice_unitary,
                              const CollapseRule& rule) {
  if (!(rule.exponent_p > 0.0) || !std::isfinite(rule.exponent_p))
    throw std::invalid_argument("measure_average: exponent must be positive and finite");
  const BipartiteState rotated = rotate_alice(state, alice_unitary);
  const Cmat& a = rotated.coeffs;
  const int da = rotated.dim_a();
  const int db = rotated.dim_b();

  std::vector<double> n(da);
  double wsum = 0.0;
  std::vector<double> w(da);
  for (int i = 0; i < da; ++i) {
    n[i] = a.row(i).norm();
    w[i] = n[i] > 0.0 ? std::pow(n[i], rule.exponent_p) : 0.0;
    wsum += w[i];
  }
  Cmat rho = Cmat::Zero(db, db);
  for (int i = 0; i < da; ++i) {
    if (n[i] == 0.0) continue;
    const Eigen::VectorXcd b = a.row(i).transpose() / n[i];
    rho += (w[i] / wsum) * (b * b.adjoint());
  }
  return {rho};
}

double signaling_gap(const BipartiteState& state, const std::vector<Cmat>& unitaries,
                     const CollapseRule& rule) {
  if (unitaries.size() < 2)
    throw std::invalid_argument("signaling_gap: need at least two unitaries");
  std::vector<DensityMatrix> rhos;
  rhos.reserve(unitaries.size());
  for (const auto& u : unitaries) rhos.push_back(measure_average(state, u, rule));
  double gap = 0.0;
  for (size_t i = 0; i < rhos.size(); ++i)
    for (size_t j = i + 1; j < rhos.size(); ++j) {
      const Cmat d = rhos[i].entries - rhos[j].entries;
      Eigen::SelfAdjointEigenSolver<Cmat> es(0.5 * (d + d.adjoint()));
      gap = std::max(gap, es.eigenvalues().cwiseAbs().maxCoeff());
    }
  return gap;
}

namespace {
Cmat ginibre(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Cmat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = g(rng);
      const double im = g(rng);
      m(i, j) = std::complex<double>(re, im);
    }
  return m;
}
}  // namespace

BipartiteState random_state(int d_a, int d_b, std::uint64_t seed) {
  Cmat m = ginibre(d_a, d_b, seed);
  m /= m.norm();
  return {m};
}

Cmat random_unitary(int d, std::uint64_t seed) {
  const Cmat m = ginibre(d, d, seed ^ 0x9e3779b97f4a7c15ULL);
  Eigen::HouseholderQR<Cmat> qr(m);
  Cmat q = qr.householderQ();
  const Cmat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phase convention so the factorization is unique
  for (int j = 0; j < d; ++j) {
    const std::complex<double> rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return q;
}

}  // namespace dslab
