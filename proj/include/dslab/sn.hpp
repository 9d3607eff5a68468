#ifndef DSLAB_SN_HPP
#define DSLAB_SN_HPP

#include <vector>

#include "dslab/grid.hpp"

namespace dslab {

struct SnParams {
  double hbar = 1.0;
  double mass = 1.0;
  double grav = 1.0;
};

void validate(const SnParams& p);

// Gravitational energy term of the wave equation,
//   Phi(r) = -G m^2 [ (1/r) int_0^r rho 4 pi s^2 ds + int_r^rmax rho 4 pi s ds ],
// the closed-form radial Green's-function solution. The cumulative integrals
// use a piecewise-parabolic reconstruction of rho, giving ~O(dr^4) accuracy
// on smooth densities (the self-consistency tests need much better than the
// plain midpoint rule's O(dr^2)).
std::vector<double> radial_poisson(const std::vector<double>& density, const RadialGrid& grid,
                                   const SnParams& params);

// (1/2) int Phi |psi|^2 4 pi r^2 dr with Phi from radial_poisson; always <= 0.
double self_energy(const RadialField& field, const SnParams& params);

struct SnObservables {
  double norm_n = 0.0;
  double kinetic_ek = 0.0;
  double potential_ep = 0.0;
  double energy_e = 0.0;
  double rms_radius = 0.0;
};

// N = 4 pi int |psi|^2 r^2 dr; E_K spectral via the u = r psi substitution;
// E_P = self_energy; rms = sqrt(<r^2>).
SnObservables sn_observables(const RadialField& field, const SnParams& params);

struct SnGroundState {
  RadialField field;
  double energy = 0.0;
  double kinetic_ek = 0.0;
  double potential_ep = 0.0;
  double norm = 0.0;
  double rms_radius = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Nodeless stationary state with N = norm_target, found by imaginary-time
// propagation of u = r psi (sine-spectral kinetic step) with renormalization
// after every step, alternated with self-consistent potential updates. The
// potential is refreshed from the normalized pre-step state so the fixed
// point is exactly self-consistent. A decreasing d_tau schedule runs until
// successive energies differ by less than tol relatively. converged
// additionally requires virial |2E_K + E_P| / |E_P| < 1e-4.
SnGroundState sn_ground_state(const SnParams& params, double norm_target,
                              const RadialGrid& grid, double tol);

struct SnEvolveResult {
  std::vector<double> times;
  std::vector<SnObservables> series;
  RadialField final_field;
  double max_norm_drift = 0.0;
  double max_energy_drift = 0.0;
  bool boundary_reflection_warning = false;
};

struct SnEvolveOptions {
  double t_final = 1.0;
  double dt = 5e-4;
  int record_every = 100;
  // density at the outer edge above this fraction of the peak flags the
  // boundary-reflection warning
  double edge_density_warn = 1e-8;
};

// Split-step integration of the radial equation
//   i hbar psi_t = -(hbar^2/2m) Lap psi + Phi[|psi|^2] psi
// via u = r psi (Dirichlet sine basis, u(0) = u(rmax) = 0). Conserves N to
// machine precision; total energy drifts at O(dt^2).
SnEvolveResult sn_evolve(const RadialField& field, const SnParams& params,
                         const SnEvolveOptions& opt);

struct CollapseCheck {
  bool within_bound = false;
  double threshold = 0.0;
};

// Size-mass inequality for gravitational self-collapse of a Gaussian packet:
// within_bound = (rms_radius <= (1.14)^3 hbar^2 / (G M^3)). The boundary is
// approximate; trend tests stay a factor 2 away from it.
CollapseCheck collapse_criterion(double rms_radius, const SnParams& params);

// Radial Gaussian psi ~ exp(-r^2 / (4 sigma^2)) with sqrt(<r^2>) = rms and
// norm N.
RadialField radial_gaussian(const RadialGrid& grid, double rms, double norm);

}  // namespace dslab

#endif
