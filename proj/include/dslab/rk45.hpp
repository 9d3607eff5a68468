#ifndef DSLAB_RK45_HPP
#define DSLAB_RK45_HPP

#include <algorithm>
#include <cmath>

#include "dslab/pilotwave.hpp"

namespace dslab {

// Adaptive Dormand-Prince 5(4) for a single guidance trajectory.
//
// Field requirements: bool velocity(double t, Vec2 p, Vec2& v) — returning
// false marks a node / invalid region; the step is rejected and halved.
// Observer: void operator()(double t, Vec2 p) after every accepted step.
//
// Returns false (trajectory failed) after max_node_rejections rejections or
// when the step size underflows.

struct RkResult {
  Vec2 position;
  bool ok = false;
  long accepted_steps = 0;
};

namespace rk_detail {
// Dormand-Prince tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
}  // namespace rk_detail

template <class Field, class Observer>
RkResult integrate_trajectory(const Field& field, Vec2 p0, double t0, double t1, double tol,
                              int max_node_rejections, Observer&& observe) {
  using namespace rk_detail;
  RkResult res;
  res.position = p0;
  if (t1 == t0) {
    res.ok = true;
    return res;
  }
  const double dir = t1 > t0 ? 1.0 : -1.0;
  double t = t0;
  Vec2 p = p0;
  double h = dir * std::min(1e-2, std::abs(t1 - t0));
  int rejections = 0;

  Vec2 k1;
  if (!field.velocity(t, p, k1)) return res;  // starting on a node

  while (dir * (t1 - t) > 0.0) {
    if (dir * (t + h - t1) > 0.0) h = t1 - t;

    Vec2 k2, k3, k4, k5, k6, k7;
    Vec2 q;
    bool ok = true;
    auto stage = [&](double cf, double sx, double sy, Vec2& out) {
      q = {p.x + h * sx, p.y + h * sy};
      return field.velocity(t + cf * h, q, out);
    };
    ok = ok && stage(c2, a21 * k1.x, a21 * k1.y, k2);
    ok = ok && stage(c3, a31 * k1.x + a32 * k2.x, a31 * k1.y + a32 * k2.y, k3);
    ok = ok && stage(c4, a41 * k1.x + a42 * k2.x + a43 * k3.x,
                     a41 * k1.y + a42 * k2.y + a43 * k3.y, k4);
    ok = ok && stage(c5, a51 * k1.x + a52 * k2.x + a53 * k3.x + a54 * k4.x,
                     a51 * k1.y + a52 * k2.y + a53 * k3.y + a54 * k4.y, k5);
    ok = ok && stage(1.0, a61 * k1.x + a62 * k2.x + a63 * k3.x + a64 * k4.x + a65 * k5.x,
                     a61 * k1.y + a62 * k2.y + a63 * k3.y + a64 * k4.y + a65 * k5.y, k6);
    Vec2 pn;
    if (ok) {
      pn = {p.x + h * (b1 * k1.x + b3 * k3.x + b4 * k4.x + b5 * k5.x + b6 * k6.x),
            p.y + h * (b1 * k1.y + b3 * k3.y + b4 * k4.y + b5 * k5.y + b6 * k6.y)};
      ok = field.velocity(t + h, pn, k7);
    }
    if (!ok) {
      h *= 0.5;
      if (++rejections > max_node_rejections || std::abs(h) < 1e-14) return res;
      continue;
    }
    const double errx =
        h * (e1 * k1.x + e3 * k3.x + e4 * k4.x + e5 * k5.x + e6 * k6.x + e7 * k7.x);
    const double erry =
        h * (e1 * k1.y + e3 * k3.y + e4 * k4.y + e5 * k5.y + e6 * k6.y + e7 * k7.y);
    const double scale = tol * (1.0 + std::max(std::abs(p.x) + std::abs(p.y),
                                               std::abs(pn.x) + std::abs(pn.y)));
    const double err = std::hypot(errx, erry) / scale;
    if (err <= 1.0) {
      t += h;
      p = pn;
      k1 = k7;  // FSAL
      ++res.accepted_steps;
      observe(t, p);
      const double grow = err > 1e-12 ? 0.9 * std::pow(err, -0.2) : 5.0;
      h *= std::clamp(grow, 0.2, 5.0);
    } else {
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
      if (++rejections > max_node_rejections || std::abs(h) < 1e-14) return res;
    }
  }
  res.position = p;
  res.ok = true;
  return res;
}

template <class Field>
RkResult integrate_trajectory(const Field& field, Vec2 p0, double t0, double t1, double tol,
                              int max_node_rejections = 1000) {
  return integrate_trajectory(field, p0, t0, t1, tol, max_node_rejections,
                              [](double, Vec2) {});
}

}  // namespace dslab

#endif
