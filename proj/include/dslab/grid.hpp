#ifndef DSLAB_GRID_HPP
#define DSLAB_GRID_HPP

#include <complex>
#include <vector>

namespace dslab {

using Complex = std::complex<double>;

// Uniform periodic 1D grid. Sample i sits at z_min + i*dz; the point z_max
// aliases back to sample 0.
struct Grid1D {
  int n = 0;
  double z_min = 0.0;
  double z_max = 0.0;
  double dz = 0.0;

  double z(int i) const { return z_min + i * dz; }
  double length() const { return z_max - z_min; }
  bool operator==(const Grid1D&) const = default;
};

// n must be a power of two >= 8 so transforms stay radix-2.
Grid1D make_grid(int n, double z_min, double z_max);

bool is_power_of_two(int n);

// Complex wave function sampled on a Grid1D.
struct ComplexField {
  Grid1D grid;
  std::vector<Complex> values;
  double time_tag = 0.0;

  ComplexField() = default;
  ComplexField(Grid1D g, double t = 0.0) : grid(g), values(g.n), time_tag(t) {}

  int size() const { return static_cast<int>(values.size()); }
  bool all_finite() const;
  double max_abs() const;
  // Largest |value| among the first and last sample; localized studies need
  // this to sit below ~1e-12 * max_abs so the periodic wrap is harmless.
  double boundary_abs() const;
};

// Cell-centered radial grid: r_i = (i + 1/2) dr, i = 0..n-1. Cell centering
// keeps every sample away from the r = 0 coordinate singularity.
struct RadialGrid {
  int n = 0;
  double r_max = 0.0;
  double dr = 0.0;

  double r(int i) const { return (i + 0.5) * dr; }
  bool operator==(const RadialGrid&) const = default;
};

RadialGrid make_radial_grid(int n, double r_max);

// Radial wave function; values are psi(r_i) on a RadialGrid.
struct RadialField {
  RadialGrid grid;
  std::vector<Complex> values;
  double time_tag = 0.0;

  RadialField() = default;
  RadialField(RadialGrid g, double t = 0.0) : grid(g), values(g.n), time_tag(t) {}

  int size() const { return static_cast<int>(values.size()); }
  bool all_finite() const;
};

}  // namespace dslab

#endif
