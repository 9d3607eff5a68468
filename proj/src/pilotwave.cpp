#include "dslab/pilotwave.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "dslab/rk45.hpp"
#include "dslab/rng.hpp"
#include "dslab/spectral.hpp"

namespace dslab {

GridVectorField velocity_field(const ComplexField& psi, double mass) {
  if (!(mass > 0.0)) throw std::invalid_argument("velocity_field: mass must be positive");
  const ComplexField dpsi = spectral_derivative(psi, 1);
  const double m2 = psi.max_abs();
  const double floor = kNodeFraction * m2 * m2;
  GridVectorField out;
  out.values.resize(psi.size());
  out.defined.resize(psi.size());
  for (int i = 0; i < psi.size(); ++i) {
    const double a2 = std::norm(psi.values[i]);
    if (a2 < floor) {
      out.values[i] = 0.0;
      out.defined[i] = 0;
    } else {
      out.values[i] = std::imag(std::conj(psi.values[i]) * dpsi.values[i]) / (mass * a2);
      out.defined[i] = 1;
    }
  }
  return out;
}

GridVectorField quantum_potential(const ComplexField& psi, double mass, double hbar) {
  if (!(mass > 0.0)) throw std::invalid_argument("quantum_potential: mass must be positive");
  ComplexField r_field(psi.grid, psi.time_tag);
  for (int i = 0; i < psi.size(); ++i) r_field.values[i] = std::abs(psi.values[i]);
  const ComplexField d2r = spectral_derivative(r_field, 2);
  const double m2 = psi.max_abs();
  const double floor = kNodeFraction * m2 * m2;
  GridVectorField out;
  out.values.resize(psi.size());
  out.defined.resize(psi.size());
  for (int i = 0; i < psi.size(); ++i) {
    const double a2 = std::norm(psi.values[i]);
    if (a2 < floor) {
      out.values[i] = 0.0;
      out.defined[i] = 0;
    } else {
      out.values[i] = -0.5 * hbar * hbar * d2r.values[i].real() /
                      (mass * r_field.values[i].real());
      out.defined[i] = 1;
    }
  }
  return out;
}

int TrajectoryEnsemble::failed_count() const {
  int n = 0;
  for (auto s : status)
    if (s == SampleStatus::failed) ++n;
  return n;
}

bool TrajectoryEnsemble::valid() const {
  return size() >= 100 && failed_count() < 0.01 * size();
}

void validate(const CoarseGrid& g) {
  if (g.m < 8) throw std::invalid_argument("CoarseGrid: need at least 8x8 cells");
  if (!(g.x1 > g.x0) || !(g.y1 > g.y0))
    throw std::invalid_argument("CoarseGrid: degenerate domain");
}

std::vector<double> coarse_grain(const TrajectoryEnsemble& samples, const CoarseGrid& grid) {
  validate(grid);
  const int m = grid.m;
  std::vector<double> cells(m * m, 0.0);
  long used = 0;
  for (int i = 0; i < samples.size(); ++i) {
    if (samples.status[i] == SampleStatus::failed) continue;
    const Vec2& p = samples.positions[i];
    int cx = static_cast<int>((p.x - grid.x0) / (grid.x1 - grid.x0) * m);
    int cy = static_cast<int>((p.y - grid.y0) / (grid.y1 - grid.y0) * m);
    if (cx < 0 || cx >= m || cy < 0 || cy >= m) continue;
    cells[cx * m + cy] += 1.0;
    ++used;
  }
  if (used == 0) throw std::invalid_argument("coarse_grain: no samples inside the domain");
  const double norm = 1.0 / (used * grid.cell_measure());
  for (auto& c : cells) c *= norm;
  return cells;
}

namespace {
// nodes/weights for Gauss-Legendre on [-1, 1], generated by Newton iteration
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) {
        x[i] = t;
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        break;
      }
    }
  }
}
}  // namespace

std::vector<double> coarse_grain(const std::function<double(double, double)>& density,
                                 const CoarseGrid& grid, int gauss_order) {
  validate(grid);
  std::vector<double> gx, gw;
  gauss_legendre(gauss_order, gx, gw);
  const int m = grid.m;
  const double wx = (grid.x1 - grid.x0) / m;
  const double wy = (grid.y1 - grid.y0) / m;
  std::vector<double> cells(m * m, 0.0);
  double total = 0.0;
  for (int cx = 0; cx < m; ++cx)
    for (int cy = 0; cy < m; ++cy) {
      const double x0 = grid.x0 + cx * wx, y0 = grid.y0 + cy * wy;
      double acc = 0.0;
      for (int i = 0; i < gauss_order; ++i)
        for (int j = 0; j < gauss_order; ++j) {
          const double x = x0 + 0.5 * wx * (1.0 + gx[i]);
          const double y = y0 + 0.5 * wy * (1.0 + gx[j]);
          acc += gw[i] * gw[j] * density(x, y);
        }
      const double mass = acc * 0.25 * wx * wy;
      cells[cx * m + cy] = mass;
      total += mass;
    }
  const double norm = 1.0 / (total * grid.cell_measure());
  for (auto& c : cells) c *= norm;
  return cells;
}

double h_function(const std::vector<double>& rho_bar, const std::vector<double>& psi2_bar,
                  double cell_measure) {
  if (rho_bar.size() != psi2_bar.size())
    throw std::invalid_argument("h_function: cell count mismatch");
  double h = 0.0;
  for (size_t i = 0; i < rho_bar.size(); ++i) {
    const double rho = rho_bar[i];
    if (rho <= 0.0) continue;  // x ln x -> 0
    if (psi2_bar[i] <= 0.0) return std::numeric_limits<double>::infinity();
    h += rho * std::log(rho / psi2_bar[i]) * cell_measure;
  }
  return h;
}

double h_sampling_floor(int cells_occupied, int samples) {
  return (cells_occupied - 1) / (2.0 * samples);
}

// ---------------------------------------------------------------------------

TrajectoryEnsemble integrate_ensemble(const TrajectoryEnsemble& ens,
                                      const BoxWaveFunction2D& psi, double t_final,
                                      const IntegrateOptions& opt) {
  TrajectoryEnsemble out = ens;
  const int n = ens.size();
  int nthreads = opt.threads > 0 ? opt.threads
                                 : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min(nthreads, std::max(1, n));
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n) return;
      if (out.status[i] == SampleStatus::failed) continue;
      const RkResult r = integrate_trajectory(psi, out.positions[i], ens.time_tag, t_final,
                                              opt.tol, opt.max_node_rejections);
      if (r.ok)
        out.positions[i] = r.position;
      else
        out.status[i] = SampleStatus::failed;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  out.time_tag = t_final;
  return out;
}

// ---------------------------------------------------------------------------
// samplers

namespace {

// inverse CDF of the ground-mode density (2/L) sin^2(pi u / L) on [0, L]
double sample_sin2(double L, double target) {
  double u = L * target;  // good starting guess: CDF is close to linear
  for (int it = 0; it < 80; ++it) {
    const double F = u / L - std::sin(2.0 * M_PI * u / L) / (2.0 * M_PI);
    const double pdf = 2.0 / L * std::pow(std::sin(M_PI * u / L), 2);
    double du = (F - target) / std::max(pdf, 1e-14);
    du = std::clamp(du, -0.1 * L, 0.1 * L);
    u = std::clamp(u - du, 1e-12 * L, L * (1.0 - 1e-12));
    if (std::abs(du) < 1e-15 * L) break;
  }
  return u;
}

}  // namespace

HSeries relaxation_experiment(const BoxWaveFunction2D& psi, const RelaxationOptions& opt) {
  if (opt.samples < 100) throw std::invalid_argument("relaxation_experiment: need >= 100 samples");
  const double L = psi.side();
  const double t_final = opt.t_final > 0.0 ? opt.t_final : 8.0 * psi.period();
  CoarseGrid grid{opt.cells, 0.0, L, 0.0, L};
  validate(grid);

  TrajectoryEnsemble ens;
  ens.positions.resize(opt.samples);
  ens.status.assign(opt.samples, SampleStatus::active);
  ens.rng_seed = opt.seed;
  ens.time_tag = 0.0;
  const double bound = psi.density_upper_bound();
  for (int i = 0; i < opt.samples; ++i) {
    SplitMix64 rng = stream_for(opt.seed, i);
    if (opt.equilibrium_start) {
      // rejection sampling from |psi(0)|^2 with the amplitude-sum bound
      for (;;) {
        const double x = L * rng.uniform();
        const double y = L * rng.uniform();
        if (bound * rng.uniform() <= psi.density(0.0, {x, y})) {
          ens.positions[i] = {x, y};
          break;
        }
      }
    } else {
      ens.positions[i] = {sample_sin2(L, rng.uniform()), sample_sin2(L, rng.uniform())};
    }
  }

  HSeries series;
  series.samples = opt.samples;
  IntegrateOptions iopt;
  iopt.tol = opt.tol;
  iopt.threads = opt.threads;
  const int records = std::max(1, opt.records);
  for (int rec = 0; rec <= records; ++rec) {
    const double t = t_final * rec / records;
    if (rec > 0) ens = integrate_ensemble(ens, psi, t, iopt);
    const std::vector<double> rho = coarse_grain(ens, grid);
    const std::vector<double> p2 = psi.cell_probabilities(t, opt.cells);
    std::vector<double> psi2(p2.size());
    for (size_t c = 0; c < p2.size(); ++c) psi2[c] = p2[c] / grid.cell_measure();
    series.times.push_back(t);
    series.h_bar.push_back(h_function(rho, psi2, grid.cell_measure()));
    series.failed_counts.push_back(ens.failed_count());
  }
  series.valid = ens.valid();
  return series;
}

// ---------------------------------------------------------------------------
// free Gaussian branches

namespace {

// psi(x,t) = sum_n c_n g_n(x,t) with g_n the freely evolved Gaussian
//   g_n(x,t) = sigma0 / sqrt(sigma0^2 + i t/2) exp(-(x-a_n)^2 / (4 (sigma0^2 + i t/2)))
// (hbar = m = 1); branch norms are conserved.
struct FreeGaussianBranches {
  std::vector<Complex> coeffs;
  std::vector<double> centers;
  double sigma0 = 1.0;
  double node_floor = 0.0;

  Complex s(double t) const { return Complex(sigma0 * sigma0, 0.5 * t); }

  void value_and_slope(double t, double x, Complex& f, Complex& fx) const {
    const Complex st = s(t);
    const Complex pref = sigma0 / std::sqrt(st);
    f = fx = 0.0;
    for (size_t n = 0; n < coeffs.size(); ++n) {
      const double dx = x - centers[n];
      const Complex g = coeffs[n] * pref * std::exp(-dx * dx / (4.0 * st));
      f += g;
      fx += g * (-dx / (2.0 * st));
    }
  }

  // 2D adapter for the trajectory integrator; y is carried along unused
  bool velocity(double t, Vec2 p, Vec2& v) const {
    Complex f, fx;
    value_and_slope(t, p.x, f, fx);
    const double a2 = std::norm(f);
    if (a2 < node_floor) return false;
    v.x = std::imag(std::conj(f) * fx) / a2;
    v.y = 0.0;
    return true;
  }

  double density0(double x) const {
    Complex f, fx;
    value_and_slope(0.0, x, f, fx);
    return std::norm(f);
  }
};

}  // namespace

BranchResult branch_experiment(const BranchSpec& spec, const BranchOptions& opt) {
  const size_t nb = spec.coeffs.size();
  if (nb < 2 || spec.centers.size() != nb)
    throw std::invalid_argument("branch_experiment: need >= 2 branches with matching centers");
  if (!(spec.sigma > 0.0)) throw std::invalid_argument("branch_experiment: sigma must be positive");
  double c2 = 0.0;
  for (const auto& c : spec.coeffs) c2 += std::norm(c);
  if (std::abs(c2 - 1.0) > 1e-12)
    throw std::invalid_argument("branch_experiment: sum |c_n|^2 must be 1");
  for (size_t n = 0; n + 1 < nb; ++n) {
    if (!(spec.centers[n + 1] > spec.centers[n]))
      throw std::invalid_argument("branch_experiment: centers must be strictly increasing");
    if (spec.centers[n + 1] - spec.centers[n] < 6.0 * spec.sigma)
      throw std::invalid_argument("branch_experiment: branch supports must be >= 6 widths apart");
  }

  FreeGaussianBranches field;
  field.coeffs = spec.coeffs;
  field.centers = spec.centers;
  field.sigma0 = spec.sigma;

  // rho = K |psi|^2: K normalizes the (not necessarily normalized) psi
  const double span = 10.0 * spec.sigma;
  const double x_lo = spec.centers.front() - span, x_hi = spec.centers.back() + span;
  const int ncdf = 1 << 15;
  std::vector<double> cdf(ncdf + 1, 0.0);
  const double dx = (x_hi - x_lo) / ncdf;
  double peak = 0.0;
  for (int i = 0; i <= ncdf; ++i) peak = std::max(peak, field.density0(x_lo + i * dx));
  field.node_floor = kNodeFraction * peak;
  for (int i = 1; i <= ncdf; ++i) {
    const double xm = x_lo + (i - 0.5) * dx;
    cdf[i] = cdf[i - 1] + field.density0(xm) * dx;
  }
  const double total = cdf[ncdf];
  BranchResult res;
  res.k_factor = 1.0 / total;

  TrajectoryEnsemble ens;
  ens.positions.resize(opt.samples);
  ens.status.assign(opt.samples, SampleStatus::active);
  ens.rng_seed = opt.seed;
  auto branch_of = [&](double x) {
    int best = 0;
    double bestd = std::abs(x - spec.centers[0]);
    for (size_t n = 1; n < nb; ++n) {
      const double d = std::abs(x - spec.centers[n]);
      if (d < bestd) {
        bestd = d;
        best = static_cast<int>(n);
      }
    }
    return best;
  };

  for (int i = 0; i < opt.samples; ++i) {
    SplitMix64 rng = stream_for(opt.seed, i);
    const double target = total * rng.uniform();
    // binary search the gridded CDF, linear interpolation inside the cell
    int lo = 0, hi = ncdf;
    while (hi - lo > 1) {
      const int mid = (lo + hi) / 2;
      (cdf[mid] < target ? lo : hi) = mid;
    }
    const double frac = (target - cdf[lo]) / std::max(cdf[hi] - cdf[lo], 1e-300);
    ens.positions[i] = {x_lo + (lo + frac) * dx, 0.0};
  }

  // integrate, watching for branch changes after every accepted step
  std::atomic<int> crossings{0};
  std::atomic<int> next{0};
  const int n = opt.samples;
  int nthreads = opt.threads > 0 ? opt.threads
                                 : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min(nthreads, std::max(1, n));
  auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n) return;
      int branch = branch_of(ens.positions[i].x);
      bool crossed = false;
      auto watch = [&](double, Vec2 p) {
        const int b = branch_of(p.x);
        if (b != branch) {
          crossed = true;
          branch = b;
        }
      };
      const RkResult r = integrate_trajectory(field, ens.positions[i], 0.0, opt.t_final,
                                              opt.tol, 1000, watch);
      if (crossed) crossings.fetch_add(1);
      if (r.ok)
        ens.positions[i] = r.position;
      else
        ens.status[i] = SampleStatus::failed;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  ens.time_tag = opt.t_final;
  res.crossings = crossings.load();

  // final-time width of a freely spreading branch sets the dead zone
  const double sig_t = std::sqrt(std::pow(spec.sigma, 2) +
                                 std::pow(0.5 * opt.t_final / spec.sigma, 2));
  std::vector<long> counts(nb, 0);
  long active = 0;
  for (int i = 0; i < opt.samples; ++i) {
    if (ens.status[i] == SampleStatus::failed) {
      ++res.failed;
      continue;
    }
    const double x = ens.positions[i].x;
    const int b = branch_of(x);
    if (std::abs(x - spec.centers[b]) > 5.0 * sig_t) {
      ens.status[i] = SampleStatus::failed;  // dead zone
      ++res.failed;
      continue;
    }
    ++counts[b];
    ++active;
  }
  res.frequencies.resize(nb);
  for (size_t b = 0; b < nb; ++b)
    res.frequencies[b] = active > 0 ? static_cast<double>(counts[b]) / active : 0.0;
  return res;
}

}  // namespace dslab
