#ifndef DSLAB_NLS_HPP
#define DSLAB_NLS_HPP

#include <functional>
#include <vector>

#include "dslab/field.hpp"
#include "dslab/observables.hpp"

namespace dslab {

// AppendixC:    i psi_s + psi_zz + |psi|^2 psi = 0   (dispersion coeff 1)
// SelfFocusing: i psi_xi + (1/2) psi_tautau + |psi|^2 psi = 0
// Results are never mixed across conventions.
enum class NlsConvention { AppendixC, SelfFocusing };

double dispersion_coefficient(NlsConvention conv);  // 1 or 1/2
constexpr double kNlsCoupling = 1.0;                // g in E_P = -(g/2) int |psi|^4

// Bright soliton family sqrt(2) lambda sech(lambda Z + delta), beta = lambda^2,
// optionally boosted to velocity v by the Galilean phase.
struct SolitonParams {
  double lambda = 1.0;
  double delta = 0.0;
  double boost_v = 0.0;

  double beta() const { return lambda * lambda; }
};

// Boosted soliton at the given time:
//   psi(z,t) = sqrt(2) L sech(L (z - v t) + delta) exp(i[(v/2) z + (beta - v^2/4) t])
// Solves the AppendixC equation to spectral accuracy. Warns (via return flag
// in check_boundary_decay) rather than throwing when the profile does not
// decay below 1e-12 at the domain edges.
ComplexField soliton_exact(const SolitonParams& p, const Grid1D& grid, double time);

// True when the sampled field's edge magnitude is below 1e-12 * max|psi|.
bool check_boundary_decay(const ComplexField& field);

// Unit-background completion of the rational rogue-wave profile:
//   psi(xi,tau) = [4(1+2i xi)/(1+4 tau^2+4 xi^2) - 1] e^{i xi},
// an exact solution of the SelfFocusing equation.
ComplexField peregrine_exact(const Grid1D& tau_grid, double xi);
Complex peregrine_value(double xi, double tau);

// One Strang-symmetrized step: half nonlinear phase e^{i g |psi|^2 dt/2},
// full dispersion step in Fourier space, half nonlinear phase. Conserves
// int |psi|^2 to machine precision by construction.
// Preconditions: dt > 0 and disp * k_max^2 * dt < pi.
ComplexField split_step(const ComplexField& field, double dt, NlsConvention conv);

struct EvolveOptions {
  double t_final = 1.0;
  double dt = 1e-3;
  int record_every = 100;
  // 2 = plain Strang, 4 = triple-jump composition of Strang substeps
  // (Strang alone leaves O(dt^2) phase drift that the tight shape
  // tolerances cannot absorb; the composition keeps exact N conservation).
  int order = 4;
  bool keep_snapshots = false;
};

struct EvolveResult {
  std::vector<double> times;
  std::vector<ObservableRecord> series;
  std::vector<ComplexField> snapshots;  // filled when keep_snapshots
  ComplexField final_field;
  double max_norm_drift = 0.0;    // max |N - N0| / N0
  double max_energy_drift = 0.0;  // max |E - E0| / |E0|
};

// Repeated split stepping with observable records every record_every steps.
// Throws std::runtime_error (with the offending time) if the field goes
// non-finite mid-run.
EvolveResult evolve(const ComplexField& field, const EvolveOptions& opt, NlsConvention conv);

// L2 norm of i psi_t(centered FD) + disp * psi_xx(spectral) + g |psi|^2 psi
// at the middle of three equally spaced snapshots.
double pde_residual(const ComplexField& before, const ComplexField& middle,
                    const ComplexField& after, double dt, NlsConvention conv);

// Spectral L2 residual of the stationary profile equation
// phi'' + |phi|^2 phi - beta phi = 0.
double stationary_residual(const ComplexField& phi, double beta);

}  // namespace dslab

#endif
