#include "dslab/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dslab {

void validate(const ResonanceParams& p) {
  if (!(p.k > 0.0 && p.k < 1.0))
    throw std::invalid_argument("ResonanceParams: k must be in (0, 1)");
}

namespace {

struct Terms {
  double w0, w1, w2;  // exp(theta_i - max) for theta = {0, th1, th2}
};

Terms scaled_terms(double x, double t, const ResonanceParams& p) {
  const double th1 = p.k * p.k * p.k * t - p.k * x;
  const double th2 = (1.0 + 3.0 * p.k * (p.k - 1.0)) * t - x + p.delta;
  const double m = std::max(0.0, std::max(th1, th2));
  return {std::exp(-m), std::exp(th1 - m), std::exp(th2 - m)};
}

}  // namespace

double resonant_value(double x, double t, const ResonanceParams& p) {
  const Terms w = scaled_terms(x, t, p);
  const double F = w.w0 + w.w1 + w.w2;
  const double Fp = -p.k * w.w1 - w.w2;
  const double Fpp = p.k * p.k * w.w1 + w.w2;
  return 4.0 * (Fpp * F - Fp * Fp) / (F * F);
}

double resonant_log_slope(double x, double t, const ResonanceParams& p) {
  const Terms w = scaled_terms(x, t, p);
  return (-p.k * w.w1 - w.w2) / (w.w0 + w.w1 + w.w2);
}

std::vector<double> resonant_field(const Grid1D& x_grid, double t, const ResonanceParams& p) {
  validate(p);
  std::vector<double> u(x_grid.n);
  for (int i = 0; i < x_grid.n; ++i) u[i] = resonant_value(x_grid.z(i), t, p);
  return u;
}

HumpList hump_analysis(const std::vector<double>& field, const Grid1D& grid,
                       double noise_floor, double extraction_time) {
  if (!(noise_floor > 0.0))
    throw std::invalid_argument("hump_analysis: noise_floor must be positive");
  if (static_cast<int>(field.size()) != grid.n)
    throw std::invalid_argument("hump_analysis: field size does not match grid");

  HumpList list;
  list.extraction_time = extraction_time;
  const int n = grid.n;
  for (int i = 1; i + 1 < n; ++i) {
    if (!(field[i] > field[i - 1] && field[i] > field[i + 1] && field[i] > noise_floor))
      continue;
    // parabolic refinement through the three points around the maximum
    const double denom = field[i - 1] - 2.0 * field[i] + field[i + 1];
    double shift = 0.0, height = field[i];
    if (denom < 0.0) {
      shift = 0.5 * (field[i - 1] - field[i + 1]) / denom;
      height = field[i] - 0.25 * (field[i - 1] - field[i + 1]) * shift;
    }
    const double pos = grid.z(i) + shift * grid.dz;
    // half-height crossings by linear interpolation outward from the peak
    const double half = 0.5 * height;
    double left = grid.z(i), right = grid.z(i);
    for (int j = i; j > 0; --j)
      if (field[j - 1] <= half && field[j] > half) {
        left = grid.z(j - 1) + grid.dz * (half - field[j - 1]) / (field[j] - field[j - 1]);
        break;
      }
    for (int j = i; j + 1 < n; ++j)
      if (field[j + 1] <= half && field[j] > half) {
        right = grid.z(j) + grid.dz * (field[j] - half) / (field[j] - field[j + 1]);
        break;
      }
    list.entries.push_back({pos, height, right - left});
  }
  return list;
}

std::vector<double> hump_speeds(const Grid1D& grid, double t0, double t1,
                                const ResonanceParams& p, double noise_floor) {
  if (t0 == t1) throw std::invalid_argument("hump_speeds: need two distinct times");
  const HumpList a = hump_analysis(resonant_field(grid, t0, p), grid, noise_floor, t0);
  const HumpList b = hump_analysis(resonant_field(grid, t1, p), grid, noise_floor, t1);
  if (a.entries.size() != b.entries.size())
    throw std::runtime_error("hump_speeds: hump count changed between the two times");
  std::vector<double> v(a.entries.size());
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = (b.entries[i].position - a.entries[i].position) / (t1 - t0);
  return v;
}

}  // namespace dslab
