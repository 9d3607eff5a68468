#ifndef DSLAB_FIELD_IO_HPP
#define DSLAB_FIELD_IO_HPP

#include <string>

#include "dslab/grid.hpp"

namespace dslab {

// Snapshot file: line 1 "# n z_min z_max time", then n lines "z re im" with
// full round-trip double precision and '.' decimal separator.
void write_field(const ComplexField& field, const std::string& path);
ComplexField read_field(const std::string& path);

}  // namespace dslab

#endif
