#include "pisot/solenoid.hpp"

#include <algorithm>
#include <cmath>

#include "pisot/errors.hpp"
#include "pisot/sequences.hpp"

namespace pisot {
namespace {

double frac(double x) {
  const double f = x - std::floor(x);
  return f >= 1.0 ? 0.0 : f;
}

}  // namespace

SolenoidWindow::SolenoidWindow(int j_min, std::vector<double> vals) : j_min_(j_min), vals_(std::move(vals)) {
  if (vals_.empty()) throw EmptyWindowError("solenoid window is empty");
  for (double& v : vals_) {
    if (!std::isfinite(v)) throw ValidationError("solenoid window value is not finite");
    v = frac(v);
  }
}

double SolenoidWindow::operator()(int j) const {
  if (!contains(j)) {
    throw WindowTooSmallError("index " + std::to_string(j) + " outside window [" + std::to_string(j_min()) + ", " +
                              std::to_string(j_max()) + "]");
  }
  return vals_[static_cast<std::size_t>(j - j_min_)];
}

SolenoidWindow theta(const NumberField& field, double y, int j_min, int j_max) {
  if (j_min > j_max) throw EmptyWindowError("theta window needs j_min <= j_max");
  if (!std::isfinite(y)) throw ValidationError("theta argument must be finite");
  if (field.degree() > 1 && !field.root_is_real(0)) throw ValidationError("dominant root is not real");
  const long prec = field.precision_bits();
  const double magnitude = std::abs(y) * std::pow(std::abs(field.alpha()), std::max(j_max, j_min));
  const double budget = std::ldexp(1.0, static_cast<int>(prec) - 64);
  if (magnitude > budget) {
    const int fit = static_cast<int>(std::floor(std::log(budget / std::max(std::abs(y), 1e-300)) /
                                                std::log(std::abs(field.alpha()))));
    throw PrecisionError("|y alpha^j_max| = " + std::to_string(magnitude) + " exceeds the precision budget; use j_max <= " +
                         std::to_string(fit) + " or raise the precision");
  }
  const BigFloat& alpha = field.roots_hp().front().re;
  BigFloat power(1.0, prec);
  const BigFloat inv_alpha = BigFloat(1.0, prec) / alpha;
  for (int j = 0; j < j_min; ++j) power *= alpha;
  for (int j = 0; j > j_min; --j) power *= inv_alpha;
  const BigFloat by(y, prec);
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(j_max - j_min + 1));
  BigFloat x(prec);
  for (int j = j_min; j <= j_max; ++j) {
    x = by * power;
    mpfr_frac(x.raw(), x.raw(), MPFR_RNDN);
    double f = x.to_double();
    if (f < 0.0) f += 1.0;
    vals.push_back(f >= 1.0 ? 0.0 : f);
    power *= alpha;
  }
  return SolenoidWindow(j_min, std::move(vals));
}

SolenoidWindow shift(const SolenoidWindow& g, int k) {
  const int lo = std::max(g.j_min(), g.j_min() - k);
  const int hi = std::min(g.j_max(), g.j_max() - k);
  if (lo > hi) {
    throw EmptyWindowError("shift by " + std::to_string(k) + " leaves nothing of a window of length " +
                           std::to_string(g.values().size()));
  }
  std::vector<double> vals;
  for (int j = lo; j <= hi; ++j) vals.push_back(g(j + k));
  return SolenoidWindow(lo, std::move(vals));
}

SymbolValue eval_A(const RefinementMask& mask, const SolenoidWindow& g, double tol) {
  const std::size_t K = mask.terms_for(tol);
  const int r = mask.rank();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(r, r);
  for (std::size_t k = 0; k < K; ++k) {
    const auto& t = mask.terms()[k];
    double phase = 0.0;
    for (const auto& [j, c] : t.translate.support()) {
      if (!g.contains(j)) {
        throw WindowTooSmallError("A needs g(" + std::to_string(j) + ") but the window is [" +
                                  std::to_string(g.j_min()) + ", " + std::to_string(g.j_max()) + "]");
      }
      phase = frac(phase + frac(static_cast<double>(c) * g(j)));
    }
    acc += t.coeff * unit_phase(phase);
  }
  return {acc / mask.dilation_modulus(), mask.tail_bound(K)};
}

std::vector<double> rho(const SolenoidWindow& g, int n) {
  if (n < 1) throw ValidationError("rho needs n >= 1");
  std::vector<double> out;
  for (int j = 0; j < n; ++j) out.push_back(g(j));
  return out;
}

bool kernel_window_test(const NumberField& field, const SolenoidWindow& g) {
  if (g.j_min() >= 0 || g.j_max() < 0) {
    throw ValidationError("kernel test needs a window containing both negative and nonnegative indices");
  }
  const Integer c0 = abs(Integer(field.coeffs()[0]));
  for (int j = g.j_min(); j <= g.j_max(); ++j) {
    const double v = g(j);
    if (j >= 0) {
      if (dist_to_int(v) > 1e-9) return false;
      continue;
    }
    Integer q = 1;
    for (int i = 0; i < -j; ++i) q *= c0;
    const double scaled = v * q.get_d();
    if (dist_to_int(scaled) > 1e-9 * std::max(1.0, q.get_d())) return false;
    // the nearest fraction n / q must reproduce v
    const Rational r(Integer(static_cast<long>(std::nearbyint(scaled))), q);
    if (std::abs(r.get_d() - v) > 1e-9 && std::abs(r.get_d() - v - 1.0) > 1e-9) return false;
  }
  return true;
}

double equidistribution_check(const NumberField& field, const std::vector<double>& y_samples, int n) {
  if (y_samples.empty()) throw ValidationError("equidistribution needs samples");
  if (n < 1) throw ValidationError("equidistribution needs n >= 1");
  if (field.degree() > 1 && n > field.degree()) {
    throw ValidationError("n = " + std::to_string(n) + " exceeds the field degree " + std::to_string(field.degree()));
  }
  const std::size_t N = y_samples.size();
  std::vector<std::vector<double>> pts;
  pts.reserve(N);
  for (double y : y_samples) pts.push_back(rho(theta(field, y, 0, n - 1), n));

  if (n == 1) {
    std::vector<double> x;
    for (const auto& p : pts) x.push_back(p[0]);
    std::sort(x.begin(), x.end());
    double d = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      d = std::max(d, static_cast<double>(i + 1) / static_cast<double>(N) - x[i]);
      d = std::max(d, x[i] - static_cast<double>(i) / static_cast<double>(N));
    }
    return d;
  }

  // counts on a G^n grid, prefix sums give every anchored box with grid corners
  int G = 2;
  while (std::pow(2.0 * G, n) <= (1 << 20) && G < 256) G *= 2;
  std::size_t cells = 1;
  for (int i = 0; i < n; ++i) cells *= static_cast<std::size_t>(G);
  std::vector<double> count(cells, 0.0);
  for (const auto& p : pts) {
    std::size_t idx = 0;
    for (int i = n - 1; i >= 0; --i) {
      const int c = std::min(G - 1, static_cast<int>(p[static_cast<std::size_t>(i)] * G));
      idx = idx * static_cast<std::size_t>(G) + static_cast<std::size_t>(c);
    }
    count[idx] += 1.0;
  }
  std::size_t stride = 1;
  for (int axis = 0; axis < n; ++axis) {
    for (std::size_t idx = 0; idx < cells; ++idx) {
      if ((idx / stride) % static_cast<std::size_t>(G) != 0) count[idx] += count[idx - stride];
    }
    stride *= static_cast<std::size_t>(G);
  }
  double d = 0.0;
  for (std::size_t idx = 0; idx < cells; ++idx) {
    double vol = 1.0;
    std::size_t rest = idx;
    for (int axis = 0; axis < n; ++axis) {
      vol *= static_cast<double>(rest % static_cast<std::size_t>(G) + 1) / G;
      rest /= static_cast<std::size_t>(G);
    }
    d = std::max(d, std::abs(count[idx] / static_cast<double>(N) - vol));
  }
  return d;
}

}  // namespace pisot
