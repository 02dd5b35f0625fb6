#include "pisot/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pisot/errors.hpp"

namespace pisot {
namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fixed(double x, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  std::string s = buf;
  if (s == "-0.00" || s == "-0.0" || s == "-0") s.erase(0, 1);
  return s;
}

// 1, 2, 5 times a power of ten, giving about `target` ticks.
double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double r = raw / mag;
  return (r < 1.5 ? 1.0 : r < 3.5 ? 2.0 : r < 7.5 ? 5.0 : 10.0) * mag;
}

std::string tick_label(double v, double step) {
  if (std::abs(v) < step * 1e-9) v = 0.0;
  const int digits = step >= 1.0 ? 0 : static_cast<int>(std::ceil(-std::log10(step) - 1e-9));
  char buf[64];
  if (std::abs(v) >= 1e6 || (v != 0.0 && std::abs(v) < 1e-4)) {
    std::snprintf(buf, sizeof buf, "%.2g", v);
  } else {
    std::snprintf(buf, sizeof buf, "%.*f", std::min(digits, 12), v);
  }
  return buf;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void CsvWriter::header(const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) out_ << (i ? "," : "") << quote(names[i]);
  out_ << '\n';
}

void CsvWriter::row(const std::vector<CsvCell>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, double>) {
            out_ << format_double(v);
          } else if constexpr (std::is_same_v<T, std::int64_t>) {
            out_ << v;
          } else {
            out_ << quote(v);
          }
        },
        cells[i]);
  }
  out_ << '\n';
}

std::string render_svg(const SvgPlot& plot) {
  const double left = 70, right = 20, top = 40, bottom = 50;
  const double w = plot.width - left - right;
  const double h = plot.height - top - bottom;

  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  bool any = false;
  for (const auto& [x, y] : plot.points) {
    if (!std::isfinite(x) || !std::isfinite(y)) continue;
    if (!any) {
      x0 = x1 = x;
      y0 = y1 = y;
      any = true;
    }
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  if (x1 - x0 <= 0) x1 = x0 + 1;
  if (y1 - y0 <= 0) y1 = y0 + 1;
  auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * w; };
  auto py = [&](double y) { return top + (y1 - y) / (y1 - y0) * h; };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << plot.width << "\" height=\"" << plot.height
    << "\" viewBox=\"0 0 " << plot.width << ' ' << plot.height << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << fixed(left + w / 2) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
    << escape_xml(plot.title) << "</text>\n";
  s << "<g stroke=\"black\" stroke-width=\"1\">\n";
  s << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(top + h) << "\" x2=\"" << fixed(left + w) << "\" y2=\""
    << fixed(top + h) << "\"/>\n";
  s << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(top) << "\" x2=\"" << fixed(left) << "\" y2=\"" << fixed(top + h)
    << "\"/>\n";
  s << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\">\n";
  const double xs = nice_step(x1 - x0, 8);
  for (double t = std::ceil(x0 / xs) * xs; t <= x1 + xs * 1e-9; t += xs) {
    s << "<line x1=\"" << fixed(px(t)) << "\" y1=\"" << fixed(top + h) << "\" x2=\"" << fixed(px(t)) << "\" y2=\""
      << fixed(top + h + 5) << "\" stroke=\"black\"/>";
    s << "<text x=\"" << fixed(px(t)) << "\" y=\"" << fixed(top + h + 18) << "\" text-anchor=\"middle\">"
      << tick_label(t, xs) << "</text>\n";
  }
  const double ys = nice_step(y1 - y0, 5);
  for (double t = std::ceil(y0 / ys) * ys; t <= y1 + ys * 1e-9; t += ys) {
    s << "<line x1=\"" << fixed(left - 5) << "\" y1=\"" << fixed(py(t)) << "\" x2=\"" << fixed(left) << "\" y2=\""
      << fixed(py(t)) << "\" stroke=\"black\"/>";
    s << "<text x=\"" << fixed(left - 8) << "\" y=\"" << fixed(py(t) + 4) << "\" text-anchor=\"end\">"
      << tick_label(t, ys) << "</text>\n";
  }
  s << "<text x=\"" << fixed(left + w / 2) << "\" y=\"" << fixed(plot.height - 10.0) << "\" text-anchor=\"middle\">"
    << escape_xml(plot.x_label) << "</text>\n";
  s << "<text x=\"16\" y=\"" << fixed(top + h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
    << fixed(top + h / 2) << ")\">" << escape_xml(plot.y_label) << "</text>\n";
  s << "</g>\n";
  s << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1\" points=\"";
  bool first = true;
  for (const auto& [x, y] : plot.points) {
    if (!std::isfinite(x) || !std::isfinite(y)) continue;
    s << (first ? "" : " ") << fixed(px(x)) << ',' << fixed(py(y));
    first = false;
  }
  s << "\"/>\n</svg>\n";
  return s.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace pisot
