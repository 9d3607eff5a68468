#ifndef DSLAB_OBSERVABLES_HPP
#define DSLAB_OBSERVABLES_HPP

#include <optional>

#include "dslab/field.hpp"

namespace dslab {

// Conserved-quantity record for a 1D field:
//   N   = int |psi|^2 dz
//   P   = i int (psi d_z psi* - psi* d_z psi) dz   (spatial-derivative form,
//         the sign/derivative choice for which dR/ds = P/N holds)
//   E_K = int |d_z psi|^2 dz
//   E_P = -(g/2) int |psi|^4 dz
//   E   = E_K + E_P
//   R   = (1/N) int z |psi|^2 dz, unavailable when N = 0
struct ObservableRecord {
  double norm_n = 0.0;
  double momentum_p = 0.0;
  double kinetic_ek = 0.0;
  double potential_ep = 0.0;
  double energy_e = 0.0;
  std::optional<double> center_r;
};

// Quadrature is the rectangle rule on the periodic grid (spectrally accurate
// for smooth periodic integrands). Derivatives are spectral.
ObservableRecord observables(const ComplexField& field, double nonlinearity_coupling);

}  // namespace dslab

#endif
