#include "dslab/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dslab {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

Grid1D make_grid(int n, double z_min, double z_max) {
  if (n < 8 || !is_power_of_two(n))
    throw std::invalid_argument("make_grid: n must be a power of two >= 8, got " +
                                std::to_string(n));
  if (!(z_max > z_min))
    throw std::invalid_argument("make_grid: degenerate domain [" + std::to_string(z_min) +
                                ", " + std::to_string(z_max) + "]");
  Grid1D g;
  g.n = n;
  g.z_min = z_min;
  g.z_max = z_max;
  g.dz = (z_max - z_min) / n;
  return g;
}

RadialGrid make_radial_grid(int n, double r_max) {
  if (n < 64) throw std::invalid_argument("make_radial_grid: n must be >= 64");
  if (!(r_max > 0.0)) throw std::invalid_argument("make_radial_grid: r_max must be positive");
  RadialGrid g;
  g.n = n;
  g.r_max = r_max;
  g.dr = r_max / n;
  return g;
}

bool ComplexField::all_finite() const {
  for (const auto& v : values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

double ComplexField::max_abs() const {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

double ComplexField::boundary_abs() const {
  if (values.empty()) return 0.0;
  return std::max(std::abs(values.front()), std::abs(values.back()));
}

bool RadialField::all_finite() const {
  for (const auto& v : values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

}  // namespace dslab
