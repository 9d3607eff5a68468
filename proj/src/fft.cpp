#include "dslab/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace dslab {

namespace {
// FFTW plan creation is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fft1d::Fft1d(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("Fft1d: n must be >= 2");
  buf_in_ = reinterpret_cast<Complex*>(fftw_alloc_complex(n));
  buf_out_ = reinterpret_cast<Complex*>(fftw_alloc_complex(n));
  std::lock_guard<std::mutex> lock(planner_mutex());
  plan_fwd_ = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(buf_in_),
                               reinterpret_cast<fftw_complex*>(buf_out_), FFTW_FORWARD,
                               FFTW_ESTIMATE);
  plan_bwd_ = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(buf_in_),
                               reinterpret_cast<fftw_complex*>(buf_out_), FFTW_BACKWARD,
                               FFTW_ESTIMATE);
  if (!plan_fwd_ || !plan_bwd_) throw std::runtime_error("Fft1d: plan creation failed");
}

Fft1d::~Fft1d() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
  fftw_free(buf_in_);
  fftw_free(buf_out_);
}

void Fft1d::forward(const Complex* in, Complex* out) {
  for (int i = 0; i < n_; ++i) buf_in_[i] = in[i];
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  for (int i = 0; i < n_; ++i) out[i] = buf_out_[i];
}

void Fft1d::inverse(const Complex* in, Complex* out) {
  for (int i = 0; i < n_; ++i) buf_in_[i] = in[i];
  fftw_execute(static_cast<fftw_plan>(plan_bwd_));
  for (int i = 0; i < n_; ++i) out[i] = buf_out_[i];
}

void Fft1d::forward_norm(std::vector<Complex>& x) {
  forward(x.data(), x.data());
  const double s = 1.0 / n_;
  for (auto& v : x) v *= s;
}

void Fft1d::inverse_unnorm(std::vector<Complex>& x) { inverse(x.data(), x.data()); }

SineTransform::SineTransform(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("SineTransform: n must be >= 2");
  buf_a_ = fftw_alloc_real(n);
  buf_b_ = fftw_alloc_real(n);
  std::lock_guard<std::mutex> lock(planner_mutex());
  plan_dst2_ = fftw_plan_r2r_1d(n, buf_a_, buf_b_, FFTW_RODFT10, FFTW_ESTIMATE);
  plan_dst3_ = fftw_plan_r2r_1d(n, buf_a_, buf_b_, FFTW_RODFT01, FFTW_ESTIMATE);
  plan_dct3_ = fftw_plan_r2r_1d(n, buf_a_, buf_b_, FFTW_REDFT01, FFTW_ESTIMATE);
  if (!plan_dst2_ || !plan_dst3_ || !plan_dct3_)
    throw std::runtime_error("SineTransform: plan creation failed");
}

SineTransform::~SineTransform() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_dst2_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_dst3_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_dct3_));
  fftw_free(buf_a_);
  fftw_free(buf_b_);
}

void SineTransform::coefficients(const double* u, double* c) {
  // FFTW RODFT10: X_j = 2 sum_i u_i sin(pi (j+1)(i+1/2)/n). Coefficients of
  // the half-sample sine series are X_j/n for j+1 < n and X_{n-1}/(2n).
  for (int i = 0; i < n_; ++i) buf_a_[i] = u[i];
  fftw_execute(static_cast<fftw_plan>(plan_dst2_));
  const double s = 1.0 / n_;
  for (int j = 0; j < n_ - 1; ++j) c[j] = buf_b_[j] * s;
  c[n_ - 1] = buf_b_[n_ - 1] * (0.5 * s);
}

void SineTransform::samples(const double* c, double* u) {
  // FFTW RODFT01: y_i = (-1)^i x_{n-1} + 2 sum_{j<n-1} x_j sin(pi (j+1)(i+1/2)/n).
  for (int j = 0; j < n_ - 1; ++j) buf_a_[j] = 0.5 * c[j];
  buf_a_[n_ - 1] = c[n_ - 1];
  fftw_execute(static_cast<fftw_plan>(plan_dst3_));
  for (int i = 0; i < n_; ++i) u[i] = buf_b_[i];
}

void SineTransform::cosine_series(const double* f, double* out) {
  // out_i = sum_{j=1..n} f_j cos(pi j (i+1/2)/n); REDFT01 covers j = 0..n-1.
  // The j = n term vanishes at half-integer nodes (cos(pi(i+1/2)) = 0).
  buf_a_[0] = 0.0;
  for (int j = 1; j < n_; ++j) buf_a_[j] = 0.5 * f[j - 1];
  fftw_execute(static_cast<fftw_plan>(plan_dct3_));
  for (int i = 0; i < n_; ++i) out[i] = buf_b_[i];
}

std::vector<double> fft_wavenumbers(const Grid1D& grid) {
  const int n = grid.n;
  std::vector<double> k(n);
  const double dk = 2.0 * M_PI / grid.length();
  for (int i = 0; i <= n / 2; ++i) k[i] = i * dk;
  for (int i = n / 2 + 1; i < n; ++i) k[i] = (i - n) * dk;
  return k;
}

}  // namespace dslab
