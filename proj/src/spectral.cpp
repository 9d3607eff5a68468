#include "dslab/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "dslab/fft.hpp"

namespace dslab {

ComplexField spectral_derivative(const ComplexField& field, int order) {
  if (order != 1 && order != 2)
    throw std::invalid_argument("spectral_derivative: order must be 1 or 2");
  const Grid1D& g = field.grid;
  Fft1d fft(g.n);
  std::vector<Complex> hat = field.values;
  fft.forward_norm(hat);
  const auto k = fft_wavenumbers(g);
  if (order == 1) {
    for (int i = 0; i < g.n; ++i) hat[i] *= Complex(0.0, k[i]);
    hat[g.n / 2] = 0.0;
  } else {
    for (int i = 0; i < g.n; ++i) hat[i] *= -k[i] * k[i];
  }
  fft.inverse_unnorm(hat);
  ComplexField out(g, field.time_tag);
  out.values = std::move(hat);
  return out;
}

std::vector<Complex> trig_interpolate(const ComplexField& field,
                                      const std::vector<double>& z) {
  const Grid1D& g = field.grid;
  Fft1d fft(g.n);
  std::vector<Complex> hat = field.values;
  fft.forward_norm(hat);
  const auto k = fft_wavenumbers(g);
  // Split the Nyquist mode symmetrically so the interpolant is real for real
  // input and agrees with the samples at grid points.
  std::vector<Complex> out(z.size());
  const double L = g.length();
  const int n = g.n;
  for (size_t p = 0; p < z.size(); ++p) {
    double x = std::fmod(z[p] - g.z_min, L);
    if (x < 0) x += L;
    Complex acc = 0.0;
    for (int i = 0; i < n; ++i) {
      if (i == n / 2) {
        acc += hat[i] * std::cos(k[i] * x);
      } else {
        acc += hat[i] * std::polar(1.0, k[i] * x);
      }
    }
    out[p] = acc;
  }
  return out;
}

double spectral_tail_fraction(const ComplexField& field, double frac) {
  const Grid1D& g = field.grid;
  Fft1d fft(g.n);
  std::vector<Complex> hat = field.values;
  fft.forward_norm(hat);
  const auto k = fft_wavenumbers(g);
  const double k_cut = frac * M_PI / g.dz;
  double tail = 0.0, total = 0.0;
  for (int i = 0; i < g.n; ++i) {
    const double p = std::norm(hat[i]);
    total += p;
    if (std::abs(k[i]) > k_cut) tail += p;
  }
  return total > 0.0 ? tail / total : 0.0;
}

}  // namespace dslab
