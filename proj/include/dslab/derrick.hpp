#ifndef DSLAB_DERRICK_HPP
#define DSLAB_DERRICK_HPP

#include <vector>

#include "dslab/field.hpp"
#include "dslab/observables.hpp"

namespace dslab {

// Dilation families acting on a profile phi(Z):
//   AmplitudePreserving: phi_zeta(Z) = phi(zeta Z)
//   NormPreserving:      phi_xi(Z)   = xi^{-1/2} phi(Z/xi)
//   StationaryRescale:   phi_eta(Z)  = eta^{-1} phi(Z/eta)
enum class DilationFamily { AmplitudePreserving, NormPreserving, StationaryRescale };

// Resamples by trigonometric (band-limited) interpolation onto the original
// grid. Squeezes that would push spectral support past Nyquist are rejected.
ComplexField dilate(const ComplexField& field, DilationFamily family, double param);

struct CurvePoint {
  double param, norm_n, kinetic_ek, potential_ep, energy_e;
};

// Observables of each dilated field; params must be sorted and positive.
std::vector<CurvePoint> energy_curve(const ComplexField& field, DilationFamily family,
                                     const std::vector<double>& params);

// Scaling derivatives evaluated from the undilated field's observables:
//   dE_zeta/dzeta|_1   = E_K - E_P        (nonzero for solitons: Derrick's
//                                          criterion fails to detect them)
//   d2E_zeta/dzeta2|_1 = 2 E_P
//   dA_xi/dxi|_1       = -(2 E_K + E_P)   (zero for stationary states)
// with gamma = beta the Lagrange multiplier of the conserved norm.
struct ScalingReport {
  double d_e_zeta_at_1 = 0.0;
  double d2_e_zeta_at_1 = 0.0;
  double d_a_xi_at_1 = 0.0;
  double virial_residual = 0.0;   // 2 E_K + E_P
  double derrick_residual = 0.0;  // E_K - E_P
  double gamma = 0.0;
};

ScalingReport stationarity_check(const ComplexField& field, double beta);

// Centered finite-difference derivative of the dilation energy curve at
// param = 1 (relative step 1e-4, one Richardson refinement). For
// NormPreserving the function differentiated is A(xi) = gamma N + E_K + E_P
// of the dilated field; otherwise it is E.
double numeric_curve_derivative(const ComplexField& field, DilationFamily family,
                                double gamma = 0.0);

}  // namespace dslab

#endif
