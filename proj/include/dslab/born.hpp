#ifndef DSLAB_BORN_HPP
#define DSLAB_BORN_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace dslab {

using Cmat = Eigen::MatrixXcd;

// Pure bipartite state sum_ij alpha_ij |i>^A |j>^B as the d_A x d_B
// coefficient matrix; rows index Alice, columns Bob. Unit Frobenius norm.
struct BipartiteState {
  Cmat coeffs;

  int dim_a() const { return static_cast<int>(coeffs.rows()); }
  int dim_b() const { return static_cast<int>(coeffs.cols()); }
};

BipartiteState make_state(const Cmat& coeffs);  // validates dims >= 2 and norm

// Hermitian, trace-one, positive-semidefinite (within tolerances).
struct DensityMatrix {
  Cmat entries;
};

bool density_invariants_hold(const DensityMatrix& rho, double* worst = nullptr);

// Outcome weights P_i proportional to n_i^p where n_i is the modulus of the
// projection; p = 2 is the Born rule.
struct CollapseRule {
  double exponent_p = 2.0;
};

// rho^B with entries rho_{j'j} = sum_i alpha_{ij'} alpha*_{ij}.
DensityMatrix partial_trace_a(const BipartiteState& state);

// Alice applies a local unitary: coefficient matrix becomes U * coeffs.
BipartiteState rotate_alice(const BipartiteState& state, const Cmat& unitary);

// After rotating, collapse on Alice outcomes i with weights n_i^p / sum n_k^p
// and average the renormalized Bob projectors. Equals partial_trace_a exactly
// at p = 2.
DensityMatrix measure_average(const BipartiteState& state, const Cmat& alice_unitary,
                              const CollapseRule& rule);

// Max over unitary pairs of the spectral norm of the difference of
// measure_average results; any positive gap means some local Bob observable
// distinguishes Alice's choices.
double signaling_gap(const BipartiteState& state, const std::vector<Cmat>& unitaries,
                     const CollapseRule& rule);

// Deterministic Haar-ish random state / unitary generators for tests & scans.
BipartiteState random_state(int d_a, int d_b, std::uint64_t seed);
Cmat random_unitary(int d, std::uint64_t seed);

}  // namespace dslab

#endif
