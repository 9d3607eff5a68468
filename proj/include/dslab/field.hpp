#ifndef DSLAB_FIELD_HPP
#define DSLAB_FIELD_HPP

#include "dslab/grid.hpp"

namespace dslab {

enum class Metric { L2, Linf };

// L2: sqrt(integral |a-b|^2 dz) by the rectangle rule; Linf: max pointwise
// |a-b|. Grids must match exactly.
double field_distance(const ComplexField& a, const ComplexField& b, Metric metric);

// Builds a field by sampling f(z) on the grid.
template <class F>
ComplexField sample_field(const Grid1D& grid, F&& f, double time_tag = 0.0) {
  ComplexField out(grid, time_tag);
  for (int i = 0; i < grid.n; ++i) out.values[i] = f(grid.z(i));
  return out;
}

}  // namespace dslab

#endif
