#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>

#include "dslab/fft.hpp"
#include "dslab/field.hpp"
#include "dslab/field_io.hpp"
#include "dslab/nls.hpp"
#include "dslab/observables.hpp"
#include "dslab/spectral.hpp"

using namespace dslab;

TEST_CASE("make_grid arithmetic and preconditions") {
  const Grid1D g = make_grid(8, 0.0, 8.0);
  CHECK(g.dz == doctest::Approx(1.0));
  for (int i = 0; i < 8; ++i) CHECK(g.z(i) == doctest::Approx(static_cast<double>(i)));

  const Grid1D g2 = make_grid(1024, -40.0, 40.0);
  CHECK(g2.dz == doctest::Approx(0.078125));

  CHECK_THROWS_AS(make_grid(12, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(4, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(64, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(64, 2.0, -1.0), std::invalid_argument);
}

TEST_CASE("spectral derivative on Fourier eigenfunctions") {
  const Grid1D g = make_grid(128, 0.0, 2.0 * M_PI);
  const double k = 5.0;  // grid-commensurate
  const ComplexField f = sample_field(g, [&](double z) { return std::polar(1.0, k * z); });

  const ComplexField d1 = spectral_derivative(f, 1);
  for (int i = 0; i < g.n; ++i) {
    const Complex expect = Complex(0.0, k) * f.values[i];
    CHECK(std::abs(d1.values[i] - expect) < 1e-12);
  }

  const ComplexField c = sample_field(g, [](double) { return Complex(2.5, -1.0); });
  const ComplexField d2 = spectral_derivative(c, 2);
  for (int i = 0; i < g.n; ++i) CHECK(std::abs(d2.values[i]) < 1e-12);

  CHECK_THROWS_AS(spectral_derivative(f, 3), std::invalid_argument);
}

TEST_CASE("spectral second derivative of sech matches finite differences") {
  const Grid1D g = make_grid(1024, -40.0, 40.0);
  const ComplexField f = sample_field(g, [](double z) { return 1.0 / std::cosh(z); });
  const ComplexField d2 = spectral_derivative(f, 2);
  // centered FD has O(dz^2) truncation; the spectral result is the reference
  double worst = 0.0;
  for (int i = 1; i + 1 < g.n; ++i) {
    const Complex fd =
        (f.values[i - 1] - 2.0 * f.values[i] + f.values[i + 1]) / (g.dz * g.dz);
    worst = std::max(worst, std::abs(fd - d2.values[i]));
  }
  // f'''' ~ O(1), dz^2/12 ~ 5e-4
  CHECK(worst < 1e-3);
  CHECK(worst > 1e-8);  // the FD error itself, not a bug in either side
}

TEST_CASE("observables of the lambda=1 soliton") {
  const Grid1D g = make_grid(1024, -40.0, 40.0);
  const ComplexField f = soliton_exact({1.0, 0.0, 0.0}, g, 0.0);
  const ObservableRecord rec = observables(f, 1.0);
  CHECK(rec.norm_n == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(rec.kinetic_ek == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(rec.potential_ep == doctest::Approx(-8.0 / 3.0).epsilon(1e-12));
  CHECK(rec.energy_e == doctest::Approx(-4.0 / 3.0).epsilon(1e-12));
  CHECK(rec.energy_e == rec.kinetic_ek + rec.potential_ep);
  CHECK(std::abs(rec.momentum_p) < 1e-12);
  REQUIRE(rec.center_r.has_value());
  CHECK(std::abs(*rec.center_r) < 1e-12);
}

TEST_CASE("observables of zero field and Gaussian") {
  const Grid1D g = make_grid(256, -20.0, 20.0);
  const ComplexField zero = sample_field(g, [](double) { return Complex(0.0, 0.0); });
  const ObservableRecord rz = observables(zero, 1.0);
  CHECK(rz.norm_n == 0.0);
  CHECK(rz.momentum_p == 0.0);
  CHECK(rz.energy_e == 0.0);
  CHECK(!rz.center_r.has_value());

  const ComplexField gauss = sample_field(g, [](double z) { return std::exp(-z * z); });
  const ObservableRecord rg = observables(gauss, 1.0);
  CHECK(rg.norm_n == doctest::Approx(std::sqrt(M_PI / 2.0)).epsilon(1e-12));
}

TEST_CASE("observables is globally phase invariant") {
  const Grid1D g = make_grid(256, -15.0, 17.0);
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    ComplexField f = sample_field(g, [&](double z) {
      return Complex(std::exp(-0.2 * z * z), 0.3 * std::sin(z));
    });
    for (auto& v : f.values) v += 0.05 * Complex(uni(rng), uni(rng));
    const double theta = 2.0 * M_PI * uni(rng);
    ComplexField fp = f;
    for (auto& v : fp.values) v *= std::polar(1.0, theta);
    const ObservableRecord a = observables(f, 1.0);
    const ObservableRecord b = observables(fp, 1.0);
    CHECK(a.norm_n == doctest::Approx(b.norm_n).epsilon(1e-12));
    CHECK(a.momentum_p == doctest::Approx(b.momentum_p).epsilon(1e-9));
    CHECK(a.kinetic_ek == doctest::Approx(b.kinetic_ek).epsilon(1e-12));
    CHECK(a.potential_ep == doctest::Approx(b.potential_ep).epsilon(1e-12));
    CHECK(*a.center_r == doctest::Approx(*b.center_r).epsilon(1e-12));
  }
}

TEST_CASE("Parseval identity for the spectral kinetic term") {
  const Grid1D g = make_grid(512, -30.0, 30.0);
  const ComplexField f = sample_field(g, [](double z) {
    return Complex(std::exp(-0.1 * z * z) * std::cos(2.0 * z),
                   0.5 * std::exp(-0.2 * z * z));
  });
  const ObservableRecord rec = observables(f, 1.0);

  Fft1d fft(g.n);
  std::vector<Complex> hat = f.values;
  fft.forward_norm(hat);
  const auto k = fft_wavenumbers(g);
  double ek_modes = 0.0;
  for (int i = 0; i < g.n; ++i) {
    if (i == g.n / 2) continue;  // Nyquist zeroed in the order-1 derivative
    ek_modes += k[i] * k[i] * std::norm(hat[i]);
  }
  ek_modes *= g.length();
  CHECK(std::abs(ek_modes - rec.kinetic_ek) / rec.kinetic_ek < 1e-12);
}

TEST_CASE("grid reflection negates P and R, preserves N and energies") {
  const Grid1D g = make_grid(512, -25.0, 25.0);
  const ComplexField f = soliton_exact({0.8, 0.3, 1.5}, g, 0.0);
  ComplexField r(g, f.time_tag);
  for (int i = 0; i < g.n; ++i) r.values[i] = f.values[(g.n - i) % g.n];
  const ObservableRecord a = observables(f, 1.0);
  const ObservableRecord b = observables(r, 1.0);
  CHECK(a.norm_n == doctest::Approx(b.norm_n).epsilon(1e-12));
  CHECK(a.kinetic_ek == doctest::Approx(b.kinetic_ek).epsilon(1e-10));
  CHECK(a.potential_ep == doctest::Approx(b.potential_ep).epsilon(1e-12));
  CHECK(a.momentum_p == doctest::Approx(-b.momentum_p).epsilon(1e-9));
  // R measured about the domain center (0 here); reflection pivots about
  // z = z_min, so compare against the wrapped image of the center
  const double center = 0.5 * (g.z_min + g.z_max);
  const double ra = *a.center_r - center;
  const double rb = *b.center_r - center;
  CHECK(ra == doctest::Approx(-(rb + 2.0 * center - 2.0 * g.z_min - g.length())).epsilon(1e-6));
}

TEST_CASE("field_distance metrics") {
  const Grid1D g = make_grid(256, -20.0, 20.0);
  const ComplexField f = soliton_exact({1.0, 0.0, 0.0}, g, 0.0);
  CHECK(field_distance(f, f, Metric::L2) == 0.0);

  ComplexField neg = f;
  for (auto& v : neg.values) v = -v;
  CHECK(field_distance(f, neg, Metric::Linf) ==
        doctest::Approx(2.0 * f.max_abs()).epsilon(1e-12));

  // soliton shifted by one grid cell, against a direct-sum oracle
  ComplexField shifted(g);
  for (int i = 0; i < g.n; ++i) shifted.values[i] = f.values[(i + g.n - 1) % g.n];
  double direct = 0.0;
  for (int i = 0; i < g.n; ++i) direct += std::norm(f.values[i] - shifted.values[i]);
  direct = std::sqrt(direct * g.dz);
  CHECK(direct > 0.0);
  CHECK(field_distance(f, shifted, Metric::L2) == doctest::Approx(direct).epsilon(1e-13));

  const Grid1D g2 = make_grid(256, -21.0, 20.0);
  const ComplexField other(g2);
  CHECK_THROWS_AS(field_distance(f, other, Metric::L2), std::invalid_argument);
}

TEST_CASE("field snapshot round trip is bit stable") {
  const Grid1D g = make_grid(64, -3.0, 5.0);
  ComplexField f = sample_field(g, [](double z) {
    return Complex(std::sin(1.7 * z) * 1e-7, std::cos(0.3 * z) / 3.0);
  });
  f.time_tag = 0.125;
  const std::string path = "test_field_roundtrip.dat";
  write_field(f, path);
  const ComplexField g1 = read_field(path);
  CHECK(g1.grid == f.grid);
  CHECK(g1.time_tag == f.time_tag);
  for (int i = 0; i < g.n; ++i) CHECK(g1.values[i] == f.values[i]);

  // writing the reread field reproduces the file byte for byte
  const std::string path2 = "test_field_roundtrip2.dat";
  write_field(g1, path2);
  std::ifstream a(path, std::ios::binary), b(path2, std::ios::binary);
  const std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
  const std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
  CHECK(sa == sb);
  std::remove(path.c_str());
  std::remove(path2.c_str());
}
