#include "dslab/sn.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dslab/fft.hpp"

namespace dslab {

void validate(const SnParams& p) {
  if (!(p.hbar > 0.0) || !(p.mass > 0.0) || !(p.grav > 0.0))
    throw std::invalid_argument("SnParams: hbar, mass, grav must all be positive");
}

namespace {

// Per-cell parabolic reconstruction p(s) = A + B s + C s^2 fitted through the
// cell value and its neighbors, with exact moment integrals against s^2 and s.
struct CellMoments {
  std::vector<double> inner;  // int_0^{r_i} rho s^2 ds
  std::vector<double> outer;  // int_{r_i}^{rmax} rho s ds
};

CellMoments cumulative_moments(const std::vector<double>& rho, const RadialGrid& g) {
  const int n = g.n;
  const double dr = g.dr;
  std::vector<double> A(n), B(n), C(n);
  for (int i = 0; i < n; ++i) {
    double b, c;
    if (i == 0) {
      b = -1.5 * rho[0] + 2.0 * rho[1] - 0.5 * rho[2];
      c = 0.5 * rho[0] - rho[1] + 0.5 * rho[2];
    } else if (i == n - 1) {
      b = 1.5 * rho[n - 1] - 2.0 * rho[n - 2] + 0.5 * rho[n - 3];
      c = 0.5 * rho[n - 1] - rho[n - 2] + 0.5 * rho[n - 3];
    } else {
      b = 0.5 * (rho[i + 1] - rho[i - 1]);
      c = 0.5 * (rho[i + 1] - 2.0 * rho[i] + rho[i - 1]);
    }
    const double bb = b / dr;
    const double cc = c / (dr * dr);
    const double ri = g.r(i);
    A[i] = rho[i] - bb * ri + cc * ri * ri;
    B[i] = bb - 2.0 * cc * ri;
    C[i] = cc;
  }
  auto I2 = [&](double t, int i) {
    return A[i] * t * t * t / 3.0 + B[i] * t * t * t * t / 4.0 + C[i] * t * t * t * t * t / 5.0;
  };
  auto I1 = [&](double t, int i) {
    return A[i] * t * t / 2.0 + B[i] * t * t * t / 3.0 + C[i] * t * t * t * t / 4.0;
  };

  CellMoments m;
  m.inner.resize(n);
  m.outer.resize(n);
  std::vector<double> cell2(n), cell1(n);
  for (int i = 0; i < n; ++i) {
    const double e0 = i * dr, e1 = e0 + dr;
    cell2[i] = I2(e1, i) - I2(e0, i);
    cell1[i] = I1(e1, i) - I1(e0, i);
  }
  double acc2 = 0.0;
  double tot1 = 0.0;
  for (int i = 0; i < n; ++i) tot1 += cell1[i];
  double acc1 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double e0 = i * dr;
    m.inner[i] = acc2 + (I2(g.r(i), i) - I2(e0, i));
    m.outer[i] = (tot1 - acc1) - (I1(g.r(i), i) - I1(e0, i));
    acc2 += cell2[i];
    acc1 += cell1[i];
  }
  return m;
}

}  // namespace

std::vector<double> radial_poisson(const std::vector<double>& density, const RadialGrid& grid,
                                   const SnParams& params) {
  validate(params);
  if (static_cast<int>(density.size()) != grid.n)
    throw std::invalid_argument("radial_poisson: density size does not match grid");
  for (double d : density)
    if (d < 0.0) throw std::invalid_argument("radial_poisson: negative density sample");

  const CellMoments m = cumulative_moments(density, grid);
  const double pref = -params.grav * params.mass * params.mass * 4.0 * M_PI;
  std::vector<double> phi(grid.n);
  for (int i = 0; i < grid.n; ++i) phi[i] = pref * (m.inner[i] / grid.r(i) + m.outer[i]);
  return phi;
}

namespace {

std::vector<double> density_of(const RadialField& f) {
  std::vector<double> rho(f.grid.n);
  for (int i = 0; i < f.grid.n; ++i) rho[i] = std::norm(f.values[i]);
  return rho;
}

double norm_of_u(const std::vector<double>& ur, const std::vector<double>& ui, double dr) {
  double s = 0.0;
  for (size_t i = 0; i < ur.size(); ++i) s += ur[i] * ur[i] + ui[i] * ui[i];
  return 4.0 * M_PI * s * dr;
}

// kinetic energy (hbar^2/2m) 4 pi int |u'|^2 dr with u' from the sine series
double kinetic_of_u(SineTransform& st, const std::vector<double>& ur,
                    const std::vector<double>& ui, const RadialGrid& g, const SnParams& p) {
  const int n = g.n;
  std::vector<double> c(n), f(n), du(n);
  double acc = 0.0;
  for (const std::vector<double>* comp : {&ur, &ui}) {
    st.coefficients(comp->data(), c.data());
    for (int j = 0; j < n; ++j) f[j] = c[j] * ((j + 1) * M_PI / g.r_max);
    st.cosine_series(f.data(), du.data());
    for (int i = 0; i < n; ++i) acc += du[i] * du[i];
  }
  return (p.hbar * p.hbar / (2.0 * p.mass)) * 4.0 * M_PI * acc * g.dr;
}

}  // namespace

double self_energy(const RadialField& field, const SnParams& params) {
  const std::vector<double> rho = density_of(field);
  const std::vector<double> phi = radial_poisson(rho, field.grid, params);
  double acc = 0.0;
  for (int i = 0; i < field.grid.n; ++i) {
    const double r = field.grid.r(i);
    acc += phi[i] * rho[i] * r * r;
  }
  return 0.5 * 4.0 * M_PI * acc * field.grid.dr;
}

SnObservables sn_observables(const RadialField& field, const SnParams& params) {
  validate(params);
  const RadialGrid& g = field.grid;
  SineTransform st(g.n);
  std::vector<double> ur(g.n), ui(g.n);
  for (int i = 0; i < g.n; ++i) {
    ur[i] = g.r(i) * field.values[i].real();
    ui[i] = g.r(i) * field.values[i].imag();
  }
  SnObservables obs;
  obs.norm_n = norm_of_u(ur, ui, g.dr);
  obs.kinetic_ek = kinetic_of_u(st, ur, ui, g, params);
  obs.potential_ep = self_energy(field, params);
  obs.energy_e = obs.kinetic_ek + obs.potential_ep;
  double r2 = 0.0;
  for (int i = 0; i < g.n; ++i) {
    const double r = g.r(i);
    r2 += r * r * (ur[i] * ur[i] + ui[i] * ui[i]);
  }
  obs.rms_radius = obs.norm_n > 0.0 ? std::sqrt(4.0 * M_PI * r2 * g.dr / obs.norm_n) : 0.0;
  return obs;
}

RadialField radial_gaussian(const RadialGrid& grid, double rms, double norm) {
  if (!(rms > 0.0) || !(norm > 0.0))
    throw std::invalid_argument("radial_gaussian: rms and norm must be positive");
  const double sigma = rms / std::sqrt(3.0);
  RadialField f(grid);
  double acc = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    const double r = grid.r(i);
    const double v = std::exp(-r * r / (4.0 * sigma * sigma));
    f.values[i] = v;
    acc += v * v * r * r;
  }
  const double n0 = 4.0 * M_PI * acc * grid.dr;
  const double s = std::sqrt(norm / n0);
  for (auto& v : f.values) v *= s;
  return f;
}

SnGroundState sn_ground_state(const SnParams& params, double norm_target,
                              const RadialGrid& grid, double tol) {
  validate(params);
  if (!(norm_target > 0.0)) throw std::invalid_argument("sn_ground_state: norm_target > 0");
  if (!(tol > 0.0)) throw std::invalid_argument("sn_ground_state: tol > 0");

  const int n = grid.n;
  const double dr = grid.dr;
  SineTransform st(n);

  // natural length scale hbar^2/(G m^3 N) sets the initial guess width
  const double ell = params.hbar * params.hbar /
                     (params.grav * std::pow(params.mass, 3) * norm_target);
  std::vector<double> u(n);
  for (int i = 0; i < n; ++i) {
    const double r = grid.r(i);
    u[i] = r * std::exp(-r * r / (2.0 * std::pow(3.0 * ell, 2)));
  }
  auto renorm = [&](std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    s = std::sqrt(norm_target / (4.0 * M_PI * s * dr));
    for (double& x : v) x *= s;
  };
  renorm(u);

  std::vector<double> c(n), rho(n), phi(n), zero(n, 0.0);
  auto kinetic_half = [&](std::vector<double>& v, const std::vector<double>& fac) {
    st.coefficients(v.data(), c.data());
    for (int j = 0; j < n; ++j) c[j] *= fac[j];
    st.samples(c.data(), v.data());
  };
  auto energy_now = [&]() {
    RadialField f(grid);
    for (int i = 0; i < n; ++i) f.values[i] = u[i] / grid.r(i);
    return sn_observables(f, params);
  };

  // energy scale G^2 m^5 N^2 / hbar^2 sets the imaginary-time unit
  const double tau_unit = std::pow(params.hbar, 3) /
                          (params.grav * params.grav * std::pow(params.mass, 5) *
                           norm_target * norm_target);
  const double schedule[] = {2.0, 0.5, 0.1, 0.02};
  const int max_iterations = 200000;

  int iterations = 0;
  double energy_prev = 0.0;
  bool have_prev = false;
  for (double dtau_rel : schedule) {
    const double dtau = dtau_rel * tau_unit;
    std::vector<double> fac(n);
    for (int j = 0; j < n; ++j) {
      const double kj = (j + 1) * M_PI / grid.r_max;
      fac[j] = std::exp(-params.hbar * kj * kj * dtau / (4.0 * params.mass));
    }
    have_prev = false;
    while (iterations < max_iterations) {
      ++iterations;
      for (int i = 0; i < n; ++i) rho[i] = u[i] * u[i] / (grid.r(i) * grid.r(i));
      phi = radial_poisson(rho, grid, params);
      kinetic_half(u, fac);
      for (int i = 0; i < n; ++i) u[i] *= std::exp(-phi[i] * dtau / params.hbar);
      kinetic_half(u, fac);
      renorm(u);
      if (iterations % 25 == 0) {
        const double e = energy_now().energy_e;
        if (have_prev && std::abs(e - energy_prev) < tol * std::abs(e)) break;
        energy_prev = e;
        have_prev = true;
      }
    }
  }

  SnGroundState gs;
  gs.field = RadialField(grid);
  for (int i = 0; i < n; ++i) gs.field.values[i] = u[i] / grid.r(i);
  const SnObservables obs = sn_observables(gs.field, params);
  gs.energy = obs.energy_e;
  gs.kinetic_ek = obs.kinetic_ek;
  gs.potential_ep = obs.potential_ep;
  gs.norm = obs.norm_n;
  gs.rms_radius = obs.rms_radius;
  gs.iterations = iterations;
  const double virial = std::abs(2.0 * obs.kinetic_ek + obs.potential_ep);
  gs.converged = iterations < max_iterations && virial < 1e-4 * std::abs(obs.potential_ep);
  return gs;
}

SnEvolveResult sn_evolve(const RadialField& field, const SnParams& params,
                         const SnEvolveOptions& opt) {
  validate(params);
  if (!(opt.dt > 0.0)) throw std::invalid_argument("sn_evolve: dt must be positive");
  const RadialGrid& g = field.grid;
  const int n = g.n;
  const double dr = g.dr;
  SineTransform st(n);

  std::vector<double> ur(n), ui(n), c(n), rho(n), phi(n);
  for (int i = 0; i < n; ++i) {
    ur[i] = g.r(i) * field.values[i].real();
    ui[i] = g.r(i) * field.values[i].imag();
  }

  // half kinetic step in the sine basis, applied to both components:
  // (ur + i ui) *= exp(-i hbar k^2 dt / (4 m)) mode-wise
  std::vector<double> cos_fac(n), sin_fac(n);
  for (int j = 0; j < n; ++j) {
    const double kj = (j + 1) * M_PI / g.r_max;
    const long double theta = -static_cast<long double>(params.hbar) * kj * kj * opt.dt /
                              (4.0L * params.mass);
    cos_fac[j] = static_cast<double>(cosl(theta));
    sin_fac[j] = static_cast<double>(sinl(theta));
  }
  std::vector<double> cr(n), ci(n);
  auto kinetic_half = [&]() {
    st.coefficients(ur.data(), cr.data());
    st.coefficients(ui.data(), ci.data());
    for (int j = 0; j < n; ++j) {
      const double re = cr[j] * cos_fac[j] - ci[j] * sin_fac[j];
      const double im = cr[j] * sin_fac[j] + ci[j] * cos_fac[j];
      cr[j] = re;
      ci[j] = im;
    }
    st.samples(cr.data(), ur.data());
    st.samples(ci.data(), ui.data());
  };

  auto snapshot = [&](double t) {
    RadialField f(g, t);
    for (int i = 0; i < n; ++i) f.values[i] = Complex(ur[i], ui[i]) / g.r(i);
    return f;
  };

  SnEvolveResult res;
  const SnObservables obs0 = sn_observables(snapshot(field.time_tag), params);
  res.times.push_back(field.time_tag);
  res.series.push_back(obs0);

  const long steps = std::lround(opt.t_final / opt.dt);
  for (long s = 0; s < steps; ++s) {
    kinetic_half();
    for (int i = 0; i < n; ++i) {
      const double r2 = g.r(i) * g.r(i);
      rho[i] = (ur[i] * ur[i] + ui[i] * ui[i]) / r2;
    }
    phi = radial_poisson(rho, g, params);
    for (int i = 0; i < n; ++i) {
      const double theta = -phi[i] * opt.dt / params.hbar;
      const double cth = std::cos(theta), sth = std::sin(theta);
      const double re = ur[i] * cth - ui[i] * sth;
      const double im = ur[i] * sth + ui[i] * cth;
      ur[i] = re;
      ui[i] = im;
    }
    kinetic_half();

    const bool record = ((s + 1) % opt.record_every == 0) || s + 1 == steps;
    if (!record) continue;
    const double t = field.time_tag + (s + 1) * opt.dt;
    RadialField f = snapshot(t);
    if (!f.all_finite())
      throw std::runtime_error("sn_evolve: non-finite field at t = " + std::to_string(t));
    const SnObservables obs = sn_observables(f, params);
    res.times.push_back(t);
    res.series.push_back(obs);
    if (obs0.norm_n > 0.0)
      res.max_norm_drift =
          std::max(res.max_norm_drift, std::abs(obs.norm_n - obs0.norm_n) / obs0.norm_n);
    if (obs0.energy_e != 0.0)
      res.max_energy_drift =
          std::max(res.max_energy_drift,
                   std::abs(obs.energy_e - obs0.energy_e) / std::abs(obs0.energy_e));
    double peak = 0.0;
    for (int i = 0; i < n; ++i)
      peak = std::max(peak, (ur[i] * ur[i] + ui[i] * ui[i]) / (g.r(i) * g.r(i)));
    const double edge = (ur[n - 1] * ur[n - 1] + ui[n - 1] * ui[n - 1]) /
                        (g.r(n - 1) * g.r(n - 1));
    if (peak > 0.0 && edge > opt.edge_density_warn * peak)
      res.boundary_reflection_warning = true;
  }
  res.final_field = snapshot(field.time_tag + steps * opt.dt);
  return res;
}

CollapseCheck collapse_criterion(double rms_radius, const SnParams& params) {
  validate(params);
  if (!(rms_radius > 0.0))
    throw std::invalid_argument("collapse_criterion: rms_radius must be positive");
  CollapseCheck c;
  c.threshold = std::pow(1.14, 3) * params.hbar * params.hbar /
                (params.grav * std::pow(params.mass, 3));
  c.within_bound = rms_radius <= c.threshold;
  return c;
}

}  // namespace dslab
