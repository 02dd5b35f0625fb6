#include "pisot_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <thread>

#include <Eigen/SVD>

#include "pisot/algebraic_core.hpp"
#include "pisot/errors.hpp"
#include "pisot/mask_file.hpp"
#include "pisot/refinement.hpp"
#include "pisot/report.hpp"
#include "pisot/solenoid.hpp"
#include "pisot/zero_density.hpp"

namespace pisot::cli {
namespace {

struct Options {
  std::string command;
  std::string poly = "-1,-1";
  std::string mask;
  std::string lambda = "1";
  std::string range = "0:128";
  std::string eps = "0.1";
  std::string target = "phihat";
  std::string out;
  std::string svg;
  std::string points;
  std::string report;
  double step = 0.01;
  double L = 0.0;
  double delta = 0.0;
  double tol = 1e-12;
  double ymax = 1000.0;
  int jmin = 0;
  int jmax = 40;
  int m = 0;
  int n = 1;
  int samples = 10000;
  int threads = 1;
  long precision_bits = kDefaultPrecisionBits;
  std::int64_t box = 0;
  std::uint64_t seed = 1;
  bool want_svg = false;
  bool poly_given = false;
  bool jmin_given = false;
};

std::string trim(std::string s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

double parse_number(const std::string& s, const std::string& option) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ValidationError(option + ": '" + s + "' is not a number");
  }
}

std::pair<double, double> parse_range(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) throw ValidationError("--range: expected a:b, got '" + s + "'");
  const double a = parse_number(parts[0], "--range");
  const double b = parse_number(parts[1], "--range");
  if (!(a < b)) throw ValidationError("--range: need a < b");
  return {a, b};
}

std::vector<double> parse_eps(const std::string& s) {
  std::vector<double> out;
  for (const auto& p : split(s, ',')) out.push_back(parse_number(p, "--eps"));
  return out;
}

// "1", "1/2,3" ... power basis coordinates, padded with zeros.
FieldElement parse_lambda(const std::string& s, const NumberField& field) {
  std::vector<Rational> coords;
  for (const auto& p : split(s, ',')) {
    Rational q;
    if (p.empty() || q.set_str(p, 10) != 0) throw ValidationError("--lambda: '" + p + "' is not a rational number");
    q.canonicalize();
    coords.push_back(q);
  }
  if (coords.empty() || static_cast<int>(coords.size()) > field.degree()) {
    throw ValidationError("--lambda: need 1.." + std::to_string(field.degree()) + " power-basis coordinates");
  }
  coords.resize(static_cast<std::size_t>(field.degree()), Rational(0));
  return FieldElement(std::move(coords));
}

std::string format_complex(std::complex<double> z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.6f%+.6fi", z.real(), z.imag());
  return buf;
}

std::string lambda_label(const FieldElement& e) {
  std::string s;
  for (int i = 0; i < e.degree(); ++i) s += (i ? "," : "") + e[i].get_str();
  return s;
}

class Output {
 public:
  Output(const Options& o, std::ostream& fallback) {
    if (o.out.empty()) {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(o.out, std::ios::binary);
      if (!*file_) throw IoError("cannot write '" + o.out + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }
  void close() {
    if (file_) {
      file_->close();
      if (!*file_) throw IoError("failed writing CSV output");
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

std::string svg_path(const Options& o) {
  if (!o.svg.empty()) return o.svg;
  if (!o.out.empty()) return std::filesystem::path(o.out).replace_extension(".svg").string();
  return o.command + ".svg";
}

NumberField field_from(const Options& o) { return make_field(parse_poly(o.poly), {o.precision_bits, 1}); }

RefinementMask mask_from(const Options& o, const std::string& fallback) {
  const std::string name = o.mask.empty() ? fallback : o.mask;
  std::optional<NumberField> field;
  if (o.poly_given) field = field_from(o);
  return resolve_mask(name, field, o.precision_bits);
}

int threads_of(const Options& o) {
  if (o.threads > 0) return o.threads;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

int cmd_field_check(const Options& o, std::ostream& out, std::ostream&) {
  const NumberField f = field_from(o);
  char line[160];
  std::snprintf(line, sizeof line, "%s, degree %d, conjugate modulus %.4f", std::string(to_string(f.pv_status())).c_str(), f.degree(),
                f.max_conjugate_modulus());
  std::ostringstream report;
  report << line << '\n';
  report << "polynomial: " << format_poly(f.coeffs()) << '\n';
  report << "dominant root: " << format_double(f.alpha()) << '\n';
  report << "discriminant: " << discriminant(f).get_str() << '\n';
  report << "real conjugates: " << f.real_count() << ", complex pairs: " << f.complex_pair_count() << '\n';
  if (o.out.empty()) {
    out << report.str();
    return kExitOk;
  }
  out << report.str();
  Output csv(o, out);
  CsvWriter w(csv.stream());
  w.header({"k", "re", "im", "abs", "radius", "real"});
  for (int k = 0; k < f.degree(); ++k) {
    const auto z = f.roots()[static_cast<std::size_t>(k)];
    w.row({std::int64_t{k + 1}, z.real(), z.imag(), std::abs(z), f.radii()[static_cast<std::size_t>(k)],
           std::int64_t{f.root_is_real(k) ? 1 : 0}});
  }
  csv.close();
  return kExitOk;
}

int cmd_symbol_scan(const Options& o, std::ostream& out, std::ostream& err) {
  const RefinementMask mask = mask_from(o, "dyadic");
  const auto [a, b] = parse_range(o.range);
  if (!(o.step > 0.0)) throw ValidationError("--step must be positive");
  const auto n = static_cast<std::int64_t>(std::floor((b - a) / o.step + 1e-9)) + 1;
  if (n > 100'000'000) throw SizeError("--range/--step give more than 1e8 samples");
  std::vector<SymbolValue> vals(static_cast<std::size_t>(n));
  std::vector<double> ys(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) ys[static_cast<std::size_t>(i)] = a + static_cast<double>(i) * o.step;
  const int t = threads_of(o);
  std::vector<std::thread> pool;
  for (int w = 0; w < t; ++w) {
    pool.emplace_back([&, w] {
      for (std::int64_t i = w; i < n; i += t) {
        vals[static_cast<std::size_t>(i)] = eval_symbol(mask, ys[static_cast<std::size_t>(i)], o.tol);
      }
    });
  }
  for (auto& th : pool) th.join();

  Output csv(o, out);
  CsvWriter w(csv.stream());
  SvgPlot plot{"|a-hat(y)|, " + mask.name() + " mask", "y", "|a-hat(y)|", {}};
  double lowest = INFINITY;
  if (mask.rank() == 1) {
    w.header({"y", "re", "im", "abs", "truncation_error"});
    for (std::size_t i = 0; i < ys.size(); ++i) {
      const auto z = vals[i].scalar();
      w.row({ys[i], z.real(), z.imag(), std::abs(z), vals[i].truncation_error});
      plot.points.emplace_back(ys[i], std::abs(z));
      lowest = std::min(lowest, std::abs(z));
    }
  } else {
    w.header({"y", "sigma_min", "sigma_max", "truncation_error"});
    for (std::size_t i = 0; i < ys.size(); ++i) {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(vals[i].value);
      const auto& s = svd.singularValues();
      w.row({ys[i], s(s.size() - 1), s(0), vals[i].truncation_error});
      plot.points.emplace_back(ys[i], s(s.size() - 1));
      lowest = std::min(lowest, s(s.size() - 1));
    }
    plot.y_label = "smallest singular value";
  }
  csv.close();
  err << "min " << (mask.rank() == 1 ? "|a-hat|" : "sigma_min") << " = " << format_double(lowest) << '\n';
  if (o.want_svg) write_text_file(svg_path(o), render_svg(plot));
  return kExitOk;
}

int cmd_phihat_orbit(const Options& o, std::ostream& out, std::ostream& err) {
  const RefinementMask mask = mask_from(o, "dyadic");
  const FieldElement lambda = parse_lambda(split(o.lambda, ';').front(), mask.field());
  if (o.jmin > o.jmax) throw ValidationError("--jmin must not exceed --jmax");
  const auto orbit = phihat_orbit(mask, lambda, o.jmin, o.jmax, o.tol);
  Output csv(o, out);
  CsvWriter w(csv.stream());
  if (mask.rank() == 1) {
    w.header({"J", "re", "im", "abs", "truncation_error"});
  } else {
    w.header({"J", "component", "re", "im", "abs", "truncation_error"});
  }
  for (const auto& p : orbit) {
    if (mask.rank() == 1) {
      const auto z = p.value.scalar();
      w.row({std::int64_t{p.J}, z.real(), z.imag(), std::abs(z), p.value.truncation_error});
      continue;
    }
    for (int c = 0; c < mask.rank(); ++c) {
      const std::complex<double> z = p.value.value(c);
      w.row({std::int64_t{p.J}, std::int64_t{c + 1}, z.real(), z.imag(), std::abs(z), p.value.truncation_error});
    }
  }
  csv.close();
  const auto& last = orbit.back();
  err << "phi-hat(lambda alpha^" << last.J << ") = ";
  for (int c = 0; c < mask.rank(); ++c) err << (c ? ", " : "") << format_complex(last.value.value(c));
  err << " (error <= " << format_double(last.value.truncation_error) << ")\n";
  return kExitOk;
}

int cmd_bernoulli(const Options& o, std::ostream& out, std::ostream& err) {
  const NumberField f = field_from(o);
  const int jmin = o.jmin_given ? o.jmin : -40;
  if (jmin > o.jmax) throw ValidationError("--jmin must not exceed --jmax");
  Output csv(o, out);
  CsvWriter w(csv.stream());
  w.header({"J", "re", "im", "abs", "cutoff_error"});
  BernoulliValue last{};
  for (int J = std::max(0, jmin); J <= o.jmax; ++J) {
    last = bernoulli_phihat(f, J, jmin);
    w.row({std::int64_t{J}, last.value.real(), last.value.imag(), std::abs(last.value), last.cutoff_error});
  }
  csv.close();
  err << "phi-hat(alpha^" << o.jmax << ") = " << format_complex(last.value) << ", |.| = " << format_double(std::abs(last.value))
      << '\n';
  return kExitOk;
}

int cmd_lattice_density(const Options& o, std::ostream& out, std::ostream& err) {
  const NumberField f = field_from(o);
  const UNeighborhood u = make_u_neighborhood(f, o.m, parse_eps(o.eps));
  const double L = o.L > 0.0 ? o.L : 1e5;
  std::vector<double> Ls;
  for (double l = L; l >= 10.0 && Ls.size() < 8; l /= 10.0) Ls.push_back(l);
  if (Ls.empty()) Ls.push_back(L);
  std::reverse(Ls.begin(), Ls.end());
  Output csv(o, out);
  CsvWriter w(csv.stream());
  w.header({"L", "count", "density", "gamma", "rel_err", "duplicates"});
  LatticeEnumeration last;
  for (double l : Ls) {
    const LatticeCylinder cyl = make_cylinder(f, l, u);
    last = enumerate_Y(f, cyl, threads_of(o));
    const double density = static_cast<double>(last.ys.size()) / (2.0 * l);
    w.row({l, static_cast<std::int64_t>(last.ys.size()), density, cyl.gamma, std::abs(density - cyl.gamma) / cyl.gamma,
           static_cast<std::int64_t>(last.duplicates)});
  }
  csv.close();
  if (!o.points.empty()) {
    std::ostringstream s;
    CsvWriter pw(s);
    pw.header({"y"});
    for (double y : last.ys) pw.row({y});
    write_text_file(o.points, s.str());
  }
  err << "gamma = " << format_double(gamma_density(f, u)) << '\n';
  return kExitOk;
}

int cmd_zeros_scan(const Options& o, std::ostream& out, std::ostream& err) {
  const RefinementMask mask = mask_from(o, "boxcar");
  const double L = o.L > 0.0 ? o.L : 8.0;
  const double delta = o.delta > 0.0 ? o.delta : (mask.is_finite() ? 1e-8 : 1e-6);
  std::function<double(double)> f;
  if (o.target == "phihat") {
    f = [&](double y) { return eval_phihat(mask, y, o.tol).value.norm(); };
  } else if (o.target == "symbol") {
    f = [&](double y) {
      const auto v = eval_symbol(mask, y, o.tol).value;
      if (v.size() == 1) return std::abs(v(0, 0));
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(v);
      return svd.singularValues()(svd.singularValues().size() - 1);
    };
  } else {
    throw ValidationError("--target must be phihat or symbol");
  }
  const NearZeroSet z = scan_near_zeros(f, L, o.step, delta, threads_of(o));
  Output csv(o, out);
  CsvWriter w(csv.stream());
  w.header({"y", "abs"});
  for (const auto& p : z.points) w.row({p.y, p.value});
  csv.close();
  err << z.points.size() << " near-zeros below " << format_double(delta) << " on [0, " << format_double(L) << "]\n";
  if (L >= 10.0 || z.points.empty()) {
    const DensityEstimate d = density_estimate(z);
    err << "density lower " << format_double(d.lower) << ", upper " << format_double(d.upper) << '\n';
    if (!o.report.empty()) {
      std::ostringstream s;
      CsvWriter rw(s);
      rw.header({"t", "count", "density"});
      for (const auto& r : d.rows) rw.row({r.t, static_cast<std::int64_t>(r.count), r.density});
      write_text_file(o.report, s.str());
    }
  }
  return kExitOk;
}

int cmd_vanishing_probe(const Options& o, std::ostream& out, std::ostream& err) {
  const RefinementMask mask = mask_from(o, "bernoulli");
  std::vector<FieldElement> lambdas;
  for (const auto& s : split(o.lambda, ';')) lambdas.push_back(parse_lambda(s, mask.field()));
  const double delta = o.delta > 0.0 ? o.delta : kProbeDelta;
  const auto series = vanishing_probe(mask, lambdas, o.jmax, delta, o.tol);
  Output csv(o, out);
  CsvWriter w(csv.stream());
  w.header({"lambda", "J", "abs_phihat", "verdict"});
  for (const auto& s : series) {
    const std::string label = lambda_label(s.lambda);
    for (std::size_t J = 0; J < s.abs_values.size(); ++J) {
      w.row({label, static_cast<std::int64_t>(J), s.abs_values[J], to_string(s.verdict)});
    }
    err << "lambda " << label << ": " << to_string(s.verdict) << ", tail mean " << format_double(s.tail_mean)
        << ", slope " << format_double(s.slope) << '\n';
  }
  csv.close();
  return kExitOk;
}

int cmd_norms_count(const Options& o, std::ostream& out, std::ostream& err) {
  const NumberField f = field_from(o);
  const double L = o.L > 0.0 ? o.L : 1e5;
  if (L > 4e9 || L != std::floor(L)) throw ValidationError("--L must be an integer up to 4e9 for norms-count");
  const NormForm form = norm_form(f);
  const NormCount c = count_norm_values(form, f.degree(), static_cast<std::int64_t>(L), o.box, threads_of(o));
  Output csv(o, out);
  CsvWriter w(csv.stream());
  w.header({"L", "count", "ratio"});
  for (const auto& r : c.rows) w.row({r.L, static_cast<std::int64_t>(r.count), r.ratio});
  csv.close();
  err << "denominator " << form.denominator.get_str() << ", box " << c.box << ", fitted exponent "
      << format_double(c.exponent) << '\n';
  return kExitOk;
}

int cmd_equidistribution(const Options& o, std::ostream& out, std::ostream& err) {
  const NumberField f = field_from(o);
  if (o.samples < 8) throw ValidationError("--samples must be at least 8");
  std::mt19937_64 rng(o.seed);
  std::vector<double> ys(static_cast<std::size_t>(o.samples));
  for (auto& y : ys) y = std::ldexp(static_cast<double>(rng() >> 11), -53) * o.ymax;
  Output csv(o, out);
  CsvWriter w(csv.stream());
  w.header({"samples", "discrepancy"});
  double last = 0.0;
  for (int div : {8, 4, 2, 1}) {
    const std::vector<double> part(ys.begin(), ys.begin() + o.samples / div);
    last = equidistribution_check(f, part, o.n);
    w.row({static_cast<std::int64_t>(part.size()), last});
  }
  csv.close();
  err << "discrepancy " << format_double(last) << " over " << o.samples << " samples\n";
  return kExitOk;
}

long default_precision() {
  const char* env = std::getenv("PISOT_PRECISION_BITS");
  if (!env || !*env) return kDefaultPrecisionBits;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 64 || v > 65536) {
    throw ValidationError("PISOT_PRECISION_BITS must be an integer in [64, 65536]");
  }
  return v;
}

}  // namespace

std::vector<std::string> config_arguments(const std::string& path, std::string* command) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config '" + path + "'");
  std::vector<std::string> args;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    if (key == "command") {
      if (command) *command = value;
      continue;
    }
    if (value == "true") {
      args.push_back("--" + key);
    } else if (value != "false") {
      args.push_back("--" + key + "=" + value);
    }
  }
  return args;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o.precision_bits = default_precision();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  CLI::App app{"Numerics for refinable functions with PV dilations", "pisot"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1, 1);
  std::string config_path;
  app.add_option("--config", config_path, "flat key=value file; command line flags win");
  app.add_option("--poly", o.poly, "minimal polynomial c0,c1,...,c_{d-1} (leading 1 implicit)");
  app.add_option("--mask", o.mask, "boxcar, dyadic, bernoulli, golden_vector, or a mask file");
  app.add_option("--lambda", o.lambda, "power-basis coordinates, e.g. 1 or 1/2,1; ';' separates several");
  app.add_option("--range", o.range, "scan interval a:b");
  app.add_option("--step", o.step, "grid step")->check(CLI::PositiveNumber);
  app.add_option("--L", o.L, "interval length or count bound")->check(CLI::PositiveNumber);
  app.add_option("--delta", o.delta, "near-zero threshold")->check(CLI::PositiveNumber);
  app.add_option("--tol", o.tol, "evaluation tolerance")->check(CLI::PositiveNumber);
  app.add_option("--jmin", o.jmin, "first exponent");
  app.add_option("--jmax", o.jmax, "last exponent");
  app.add_option("--m", o.m, "shift index of U(m, eps)");
  app.add_option("--eps", o.eps, "radii eps_2,...,eps_d (one value is repeated)");
  app.add_option("--n", o.n, "torus dimension for equidistribution")->check(CLI::PositiveNumber);
  app.add_option("--samples", o.samples, "sample count")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--ymax", o.ymax, "samples are uniform on [0, ymax]")->check(CLI::PositiveNumber);
  app.add_option("--box", o.box, "coordinate bound for norms-count (0 = automatic)")->check(CLI::NonNegativeNumber);
  app.add_option("--target", o.target, "zeros-scan function: phihat or symbol");
  app.add_option("--precision-bits", o.precision_bits, "MPFR precision (default 128 or PISOT_PRECISION_BITS)")
      ->check(CLI::Range(64L, 65536L));
  app.add_option("--threads", o.threads, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--out", o.out, "CSV output path (default stdout)");
  app.add_option("--svg", o.svg, "also write an SVG plot (optional path)")->expected(0, 1);
  app.add_option("--points", o.points, "lattice-density: write Y(L) to this CSV");
  app.add_option("--report", o.report, "zeros-scan: write the density report to this CSV");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"field-check", "certify a PV number and report its conjugates"},
      {"symbol-scan", "sample the mask symbol a-hat on a grid"},
      {"phihat-orbit", "phi-hat(lambda alpha^J) for J = jmin..jmax"},
      {"bernoulli", "Fourier transform of the Bernoulli convolution at alpha^J"},
      {"lattice-density", "count Y(L) and compare with gamma"},
      {"zeros-scan", "near-zeros of phi-hat or a-hat on [0, L]"},
      {"vanishing-probe", "does |phi-hat(lambda alpha^J)| tend to zero"},
      {"norms-count", "distinct values of the norm form"},
      {"equidistribution", "discrepancy of rho_n(theta(y)) for random y"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  std::vector<std::string> args = raw_args;
  try {
    for (std::size_t i = 0; i < args.size(); ++i) {
      std::string path;
      std::size_t erase = 0;
      if (args[i] == "--config" && i + 1 < args.size()) {
        path = args[i + 1];
        erase = 2;
      } else if (args[i].rfind("--config=", 0) == 0) {
        path = args[i].substr(9);
        erase = 1;
      }
      if (erase == 0) continue;
      std::string command;
      std::vector<std::string> extra = config_arguments(path, &command);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + erase));
      const bool has_command = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
        return std::any_of(commands.begin(), commands.end(), [&](const auto& c) { return c.first == a; });
      });
      if (!command.empty() && !has_command) extra.insert(extra.begin(), command);
      args.insert(args.begin(), extra.begin(), extra.end());
      break;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.category() == ErrorCategory::validation ? kExitValidation : kExitNumeric;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  for (const auto* sub : app.get_subcommands()) o.command = sub->get_name();
  o.poly_given = app.count("--poly") > 0;
  o.jmin_given = app.count("--jmin") > 0;
  o.want_svg = app.count("--svg") > 0;

  try {
    if (o.command == "field-check") return cmd_field_check(o, out, err);
    if (o.command == "symbol-scan") return cmd_symbol_scan(o, out, err);
    if (o.command == "phihat-orbit") return cmd_phihat_orbit(o, out, err);
    if (o.command == "bernoulli") return cmd_bernoulli(o, out, err);
    if (o.command == "lattice-density") return cmd_lattice_density(o, out, err);
    if (o.command == "zeros-scan") return cmd_zeros_scan(o, out, err);
    if (o.command == "vanishing-probe") return cmd_vanishing_probe(o, out, err);
    if (o.command == "norms-count") return cmd_norms_count(o, out, err);
    if (o.command == "equidistribution") return cmd_equidistribution(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.category() == ErrorCategory::validation ? kExitValidation : kExitNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  err << "error: unknown command\n";
  return kExitValidation;
}

}  // namespace pisot::cli
