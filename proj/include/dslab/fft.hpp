#ifndef DSLAB_FFT_HPP
#define DSLAB_FFT_HPP

#include <complex>
#include <vector>

#include "dslab/grid.hpp"

namespace dslab {

// Thin RAII wrappers around FFTW plans. Plans are created with FFTW_ESTIMATE
// so plan selection (and hence roundoff) is reproducible run to run.
// Each object owns its buffers; one object must not be shared across threads.

class Fft1d {
 public:
  explicit Fft1d(int n);
  ~Fft1d();
  Fft1d(const Fft1d&) = delete;
  Fft1d& operator=(const Fft1d&) = delete;

  int size() const { return n_; }

  // Unnormalized forward transform: out_k = sum_i in_i exp(-2 pi i k i / n).
  void forward(const Complex* in, Complex* out);
  // Unnormalized inverse; forward followed by inverse scales by n.
  void inverse(const Complex* in, Complex* out);

  // In-place normalized round trips for convenience.
  void forward_norm(std::vector<Complex>& x);   // x_hat = FFT(x)/n
  void inverse_unnorm(std::vector<Complex>& x); // x = sum_k x_hat_k e^{+ikz}

 private:
  int n_;
  void* plan_fwd_;
  void* plan_bwd_;
  Complex* buf_in_;
  Complex* buf_out_;
};

// DST-II / DST-III pair on n reals, matching a sine expansion with Dirichlet
// endpoints sampled at half-integer nodes:
//   u_i = sum_{j=1..n} c_j sin(pi j (i+1/2)/n)
// coefficients() fills c_j from samples; samples() inverts.
class SineTransform {
 public:
  explicit SineTransform(int n);
  ~SineTransform();
  SineTransform(const SineTransform&) = delete;
  SineTransform& operator=(const SineTransform&) = delete;

  int size() const { return n_; }

  void coefficients(const double* u, double* c);
  void samples(const double* c, double* u);

  // Cosine evaluation: given c_j, returns sum_j c_j k_j cos(pi j (i+1/2)/n)
  // scaled by caller-provided factors f_j = c_j * k_j (pass f as input).
  void cosine_series(const double* f, double* out);

 private:
  int n_;
  void* plan_dst2_;
  void* plan_dst3_;
  void* plan_dct3_;
  double* buf_a_;
  double* buf_b_;
};

// FFT frequencies 2*pi*[0,1,...,n/2,-n/2+1,...,-1]/L for a periodic grid.
std::vector<double> fft_wavenumbers(const Grid1D& grid);

}  // namespace dslab

#endif
