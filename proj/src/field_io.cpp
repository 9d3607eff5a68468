#include "dslab/field_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dslab/csvio.hpp"

namespace dslab {

void write_field(const ComplexField& field, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_field: cannot open " + path);
  out << "# " << field.grid.n << ' ' << format_double(field.grid.z_min) << ' '
      << format_double(field.grid.z_max) << ' ' << format_double(field.time_tag) << '\n';
  for (int i = 0; i < field.grid.n; ++i) {
    out << format_double(field.grid.z(i)) << ' ' << format_double(field.values[i].real())
        << ' ' << format_double(field.values[i].imag()) << '\n';
  }
  if (!out) throw std::runtime_error("write_field: write failed for " + path);
}

ComplexField read_field(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_field: cannot open " + path);
  std::string header;
  std::getline(in, header);
  std::istringstream hs(header);
  char hash = 0;
  int n = 0;
  double z_min = 0.0, z_max = 0.0, time = 0.0;
  hs >> hash >> n >> z_min >> z_max >> time;
  if (hash != '#' || hs.fail()) throw std::runtime_error("read_field: bad header in " + path);
  ComplexField field(make_grid(n, z_min, z_max), time);
  for (int i = 0; i < n; ++i) {
    double z = 0.0, re = 0.0, im = 0.0;
    if (!(in >> z >> re >> im)) throw std::runtime_error("read_field: truncated data in " + path);
    field.values[i] = Complex(re, im);
  }
  return field;
}

}  // namespace dslab
