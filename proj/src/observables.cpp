#include "dslab/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "dslab/spectral.hpp"

namespace dslab {

ObservableRecord observables(const ComplexField& field, double nonlinearity_coupling) {
  const Grid1D& g = field.grid;
  const ComplexField dpsi = spectral_derivative(field, 1);

  double n = 0.0, p = 0.0, ek = 0.0, ep = 0.0, zr = 0.0;
  for (int i = 0; i < g.n; ++i) {
    const Complex psi = field.values[i];
    const double a2 = std::norm(psi);
    n += a2;
    ek += std::norm(dpsi.values[i]);
    ep += a2 * a2;
    p += 2.0 * std::imag(std::conj(psi) * dpsi.values[i]);
    zr += g.z(i) * a2;
  }
  ObservableRecord rec;
  rec.norm_n = n * g.dz;
  rec.momentum_p = p * g.dz;
  rec.kinetic_ek = ek * g.dz;
  rec.potential_ep = -0.5 * nonlinearity_coupling * ep * g.dz;
  rec.energy_e = rec.kinetic_ek + rec.potential_ep;
  if (rec.norm_n > 0.0) rec.center_r = zr * g.dz / rec.norm_n;
  return rec;
}

double field_distance(const ComplexField& a, const ComplexField& b, Metric metric) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("field_distance: grid mismatch");
  if (metric == Metric::L2) {
    double s = 0.0;
    for (int i = 0; i < a.grid.n; ++i) s += std::norm(a.values[i] - b.values[i]);
    return std::sqrt(s * a.grid.dz);
  }
  double m = 0.0;
  for (int i = 0; i < a.grid.n; ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

}  // namespace dslab
