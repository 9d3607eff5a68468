#ifndef DSLAB_RESONANCE_HPP
#define DSLAB_RESONANCE_HPP

#include <vector>

#include "dslab/grid.hpp"

namespace dslab {

// Resonant solitary wave u = 4 d^2/dx^2 log(1 + e^{th1} + e^{th2}) with
//   th1 = k^3 t - k x,  th2 = [1 + 3k(k-1)] t - x + delta,  0 < k < 1.
// The single hump (amplitude 1, speed 1+3k(k-1)) fissions into two stable
// humps; measured peak heights equal k^2 and (1-k)^2 while the internal
// wavenumber parameters are k and 1-k (reported separately as mode_param).
struct ResonanceParams {
  double k = 0.6;
  double delta = 0.0;
};

void validate(const ResonanceParams& p);

// Closed-form evaluation 4 (F'' F - F'^2) / F^2 in log-sum-exp form; exact
// and overflow-safe for any (x, t).
double resonant_value(double x, double t, const ResonanceParams& p);
std::vector<double> resonant_field(const Grid1D& x_grid, double t, const ResonanceParams& p);

// Analytic d/dx log F, used for the exact mass integral
// int_a^b u dx = 4 [d_x log F]_a^b.
double resonant_log_slope(double x, double t, const ResonanceParams& p);

struct Hump {
  double position = 0.0;
  double height = 0.0;
  double width = 0.0;  // full width at half height
};

struct HumpList {
  std::vector<Hump> entries;  // positions strictly increasing
  double extraction_time = 0.0;
};

// Local maxima above noise_floor with parabolic sub-grid refinement of the
// peak and half-height widths by linear interpolation. Empty list when no
// hump clears the floor.
HumpList hump_analysis(const std::vector<double>& field, const Grid1D& grid,
                       double noise_floor, double extraction_time = 0.0);

// Peak speeds from two-time tracking: pairs humps at t0 and t1 by rank and
// returns (position difference) / (t1 - t0) per hump.
std::vector<double> hump_speeds(const Grid1D& grid, double t0, double t1,
                                const ResonanceParams& p, double noise_floor);

}  // namespace dslab

#endif
