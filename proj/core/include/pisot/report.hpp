#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pisot {

using CsvCell = std::variant<double, std::int64_t, std::string>;

// Shortest round-trip decimal; "nan", "inf", "-inf" for non-finite values.
std::string format_double(double x);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void header(const std::vector<std::string>& names);
  void row(const std::vector<CsvCell>& cells);

 private:
  std::ostream& out_;
};

struct SvgPlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<std::pair<double, double>> points;
  int width = 900;
  int height = 420;
};

// Polyline plot with axes and ticks. Byte-identical for identical input.
std::string render_svg(const SvgPlot& plot);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace pisot
