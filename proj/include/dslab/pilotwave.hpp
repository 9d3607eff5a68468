#ifndef DSLAB_PILOTWAVE_HPP
#define DSLAB_PILOTWAVE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dslab/field.hpp"

namespace dslab {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// ---------------------------------------------------------------------------
// guidance velocity / quantum potential on 1D grids

struct GridVectorField {
  std::vector<double> values;
  std::vector<std::uint8_t> defined;  // 0 where |psi|^2 < eps_node * max
};

// Velocity threshold: points with |psi|^2 below this fraction of max|psi|^2
// are nodes; velocity evaluation there is refused, never silently divided.
constexpr double kNodeFraction = 1e-12;

// v = Im(psi* d_z psi) / (m |psi|^2), the phase-gradient law without
// unwrapping.
GridVectorField velocity_field(const ComplexField& psi, double mass);

// Q = -(hbar^2 / 2 R) (d^2_z R) / m with R = |psi|, spectral Laplacian.
GridVectorField quantum_potential(const ComplexField& psi, double mass, double hbar = 1.0);

// ---------------------------------------------------------------------------
// 2D box eigenmode superpositions (analytic in time)

struct BoxMode {
  int m = 1;
  int k = 1;
  Complex coeff;
};

// psi(t,x,y) = sum_q c_q (2/L) sin(m_q pi x / L) sin(k_q pi y / L) e^{-i E_q t}
// with E_q = hbar^2 pi^2 (m_q^2 + k_q^2) / (2 mass L^2), hbar = mass = 1.
// Modes must be distinct, m,k >= 1, count <= 64, sum |c|^2 = 1 (1e-12).
class BoxWaveFunction2D {
 public:
  BoxWaveFunction2D(double side_l, std::vector<BoxMode> modes);

  double side() const { return side_l_; }
  const std::vector<BoxMode>& modes() const { return modes_; }

  // Common period of all mode phases: 4 L^2 / pi (hbar = mass = 1).
  double period() const;

  Complex value(double t, double x, double y) const;
  void value_and_gradient(double t, double x, double y, Complex& f, Complex& fx,
                          Complex& fy) const;

  // velocity = Im(psi* grad psi) / |psi|^2; false when |psi|^2 is below
  // node_floor (an absolute density threshold).
  bool velocity(double t, Vec2 p, Vec2& v) const;
  double density(double t, Vec2 p) const;
  double node_floor() const { return node_floor_; }
  double density_upper_bound() const { return max_density_bound_; }

  // Q = -(1/(2 R)) (Lap R) with hbar = mass = 1, from analytic derivatives.
  double quantum_potential(double t, double x, double y) const;
  Vec2 grad_quantum_potential(double t, double x, double y, double h = 1e-5) const;

  // Exact cell masses of |psi(t)|^2 on an m x m partition of the box
  // (closed-form sine-product integrals), normalized to sum to 1.
  std::vector<double> cell_probabilities(double t, int cells) const;

 private:
  double side_l_;
  std::vector<BoxMode> modes_;
  double node_floor_;
  double max_density_bound_;
  int max_index_;
};

// The 16 lowest modes (m,k in 1..4) with |c| = 1/4 and the repository's
// frozen phases.
BoxWaveFunction2D standard_sixteen_mode_box(double side_l = M_PI);
extern const double kSixteenModePhases[16];

// ---------------------------------------------------------------------------
// trajectory ensembles

enum class SampleStatus : std::uint8_t { active = 0, failed = 1 };

struct TrajectoryEnsemble {
  std::vector<Vec2> positions;
  std::vector<SampleStatus> status;
  double time_tag = 0.0;
  std::uint64_t rng_seed = 0;

  int size() const { return static_cast<int>(positions.size()); }
  int failed_count() const;
  // a run is valid while the failed fraction stays below 1%
  bool valid() const;
};

struct IntegrateOptions {
  double tol = 1e-6;
  int max_node_rejections = 1000;
  int threads = 0;  // 0 = hardware concurrency
};

// Adaptive Dormand-Prince guidance integration of every active sample from
// ens.time_tag to t_final. Deterministic given (ensemble, tol): each
// trajectory depends only on its own initial condition, so results are
// bit-identical regardless of the thread partition.
TrajectoryEnsemble integrate_ensemble(const TrajectoryEnsemble& ens,
                                      const BoxWaveFunction2D& psi, double t_final,
                                      const IntegrateOptions& opt = {});

// ---------------------------------------------------------------------------
// coarse graining and the H-function

struct CoarseGrid {
  int m = 16;  // m x m cells, m >= 8
  double x0 = 0.0, x1 = 1.0;
  double y0 = 0.0, y1 = 1.0;

  double cell_measure() const { return (x1 - x0) * (y1 - y0) / (m * m); }
};

void validate(const CoarseGrid& g);

// Histogram of samples, as a cell-wise density normalized to integrate to 1.
// Failed samples are skipped.
std::vector<double> coarse_grain(const TrajectoryEnsemble& samples, const CoarseGrid& grid);

// Cell-mean of a continuous density by per-cell Gauss-Legendre quadrature,
// normalized to integrate to 1.
std::vector<double> coarse_grain(const std::function<double(double, double)>& density,
                                 const CoarseGrid& grid, int gauss_order = 12);

// H = sum_cells rho ln(rho / psi2) * cell_measure; cells with rho = 0
// contribute 0; psi2 = 0 where rho > 0 yields +infinity.
double h_function(const std::vector<double>& rho_bar, const std::vector<double>& psi2_bar,
                  double cell_measure);

// ---------------------------------------------------------------------------
// experiments

struct RelaxationOptions {
  int samples = 10000;
  int cells = 16;
  double t_final = 0.0;  // 0 = eight box periods
  int records = 16;
  double tol = 1e-6;
  std::uint64_t seed = 1;
  bool equilibrium_start = false;  // sample from |psi(0)|^2 instead of |phi_11|^2
  int threads = 0;
};

struct HSeries {
  std::vector<double> times;
  std::vector<double> h_bar;
  std::vector<int> failed_counts;
  int samples = 0;
  bool valid = false;
};

HSeries relaxation_experiment(const BoxWaveFunction2D& psi, const RelaxationOptions& opt);

// Expected coarse-grained H of an M-sample equilibrium histogram,
// (occupied_cells - 1) / (2M) to leading order.
double h_sampling_floor(int cells_occupied, int samples);

// ---------------------------------------------------------------------------
// branch trapping (1D free Gaussian branches)

struct BranchSpec {
  std::vector<Complex> coeffs;   // c_n, sum |c_n|^2 = 1
  std::vector<double> centers;   // strictly increasing, separation >= 6 sigma
  double sigma = 1.0;
};

struct BranchOptions {
  int samples = 10000;
  double t_final = 1.0;
  double tol = 1e-8;
  std::uint64_t seed = 1;
  int threads = 0;
};

struct BranchResult {
  std::vector<double> frequencies;  // occupation per branch over active samples
  int crossings = 0;                // trajectories that switched branch mid-run
  int failed = 0;                   // integration failures + dead-zone samples
  double k_factor = 0.0;            // 1 / int |psi|^2 used for rho = K |psi|^2
};

// Samples M positions from K|psi(0)|^2, integrates the guidance equation
// under free evolution of the branch Gaussians, and assigns each surviving
// trajectory to the branch whose support contains it (nearest center, dead
// zone -> failed). No crossing is tolerated.
BranchResult branch_experiment(const BranchSpec& spec, const BranchOptions& opt);

}  // namespace dslab

#endif
