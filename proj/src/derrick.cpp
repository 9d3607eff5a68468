#include "dslab/derrick.hpp"

#include <cmath>
#include <stdexcept>

#include "dslab/nls.hpp"
#include "dslab/spectral.hpp"

namespace dslab {

namespace {

// Spectral squeeze factor: the dilated field's spectrum is the source
// spectrum stretched by this factor.
double squeeze_factor(DilationFamily family, double param) {
  return family == DilationFamily::AmplitudePreserving ? param : 1.0 / param;
}

double amplitude_scale(DilationFamily family, double param) {
  switch (family) {
    case DilationFamily::AmplitudePreserving:
      return 1.0;
    case DilationFamily::NormPreserving:
      return 1.0 / std::sqrt(param);
    case DilationFamily::StationaryRescale:
      return 1.0 / param;
  }
  return 1.0;
}

double argument_scale(DilationFamily family, double param) {
  return family == DilationFamily::AmplitudePreserving ? param : 1.0 / param;
}

}  // namespace

ComplexField dilate(const ComplexField& field, DilationFamily family, double param) {
  if (!(param > 0.0)) throw std::invalid_argument("dilate: param must be positive");
  if (param == 1.0) return field;

  const double squeeze = squeeze_factor(family, param);
  if (squeeze > 1.0 && spectral_tail_fraction(field, 1.0 / squeeze) > 1e-10)
    throw std::invalid_argument(
        "dilate: squeeze would alias (spectral support past Nyquist/param)");

  const Grid1D& g = field.grid;
  const double arg_scale = argument_scale(family, param);
  const double amp = amplitude_scale(family, param);
  std::vector<double> pts(g.n);
  for (int i = 0; i < g.n; ++i) pts[i] = arg_scale * g.z(i);
  const std::vector<Complex> vals = trig_interpolate(field, pts);
  ComplexField out(g, field.time_tag);
  for (int i = 0; i < g.n; ++i) out.values[i] = amp * vals[i];
  return out;
}

std::vector<CurvePoint> energy_curve(const ComplexField& field, DilationFamily family,
                                     const std::vector<double>& params) {
  std::vector<CurvePoint> out;
  out.reserve(params.size());
  double prev = 0.0;
  for (double p : params) {
    if (!(p > 0.0)) throw std::invalid_argument("energy_curve: params must be positive");
    if (!out.empty() && !(p > prev))
      throw std::invalid_argument("energy_curve: params must be sorted ascending");
    prev = p;
    const ComplexField d = dilate(field, family, p);
    const ObservableRecord rec = observables(d, kNlsCoupling);
    out.push_back({p, rec.norm_n, rec.kinetic_ek, rec.potential_ep, rec.energy_e});
  }
  return out;
}

ScalingReport stationarity_check(const ComplexField& field, double beta) {
  const ObservableRecord rec = observables(field, kNlsCoupling);
  ScalingReport rep;
  rep.d_e_zeta_at_1 = rec.kinetic_ek - rec.potential_ep;
  rep.d2_e_zeta_at_1 = 2.0 * rec.potential_ep;
  rep.d_a_xi_at_1 = -(2.0 * rec.kinetic_ek + rec.potential_ep);
  rep.virial_residual = 2.0 * rec.kinetic_ek + rec.potential_ep;
  rep.derrick_residual = rec.kinetic_ek - rec.potential_ep;
  rep.gamma = beta;
  return rep;
}

double numeric_curve_derivative(const ComplexField& field, DilationFamily family,
                                double gamma) {
  auto value = [&](double p) {
    const ComplexField d = dilate(field, family, p);
    const ObservableRecord rec = observables(d, kNlsCoupling);
    if (family == DilationFamily::NormPreserving)
      return gamma * rec.norm_n + rec.kinetic_ek + rec.potential_ep;
    return rec.energy_e;
  };
  auto central = [&](double h) { return (value(1.0 + h) - value(1.0 - h)) / (2.0 * h); };
  const double h = 1e-4;
  const double d_h = central(h);
  const double d_h2 = central(0.5 * h);
  return (4.0 * d_h2 - d_h) / 3.0;
}

}  // namespace dslab
