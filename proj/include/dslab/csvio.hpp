#ifndef DSLAB_CSVIO_HPP
#define DSLAB_CSVIO_HPP

#include <fstream>
#include <string>
#include <vector>

namespace dslab {

// Formats a double so that it round-trips bit-exactly ("%.17g", '.' decimal).
std::string format_double(double x);

// Minimal CSV writer: '.' decimals, '\n' line endings, full round-trip
// doubles. Golden-file tests depend on the exact bytes.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& columns);
  ~CsvWriter();

  void row(const std::vector<double>& values);
  void raw_row(const std::string& line);
  bool good() const { return out_.good(); }

 private:
  std::ofstream out_;
  size_t ncols_;
};

}  // namespace dslab

#endif
