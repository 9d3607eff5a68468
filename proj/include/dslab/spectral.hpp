#ifndef DSLAB_SPECTRAL_HPP
#define DSLAB_SPECTRAL_HPP

#include "dslab/field.hpp"

namespace dslab {

// order-th spatial derivative via the discrete Fourier transform; exact for
// band-limited periodic fields. order must be 1 or 2. For odd orders the
// Nyquist mode is zeroed (its derivative sign is ambiguous on the grid).
ComplexField spectral_derivative(const ComplexField& field, int order);

// Evaluates the trigonometric interpolant of `field` at arbitrary points z
// (direct mode sum, O(n) per point). Points outside [z_min, z_max) wrap.
std::vector<Complex> trig_interpolate(const ComplexField& field,
                                      const std::vector<double>& z);

// Fraction of spectral power carried by modes with |k| > frac * k_nyquist.
double spectral_tail_fraction(const ComplexField& field, double frac);

}  // namespace dslab

#endif
