#include <algorithm>
#include <cmath>
#include <numeric>

#include "parallel.hpp"
#include "pisot/errors.hpp"
#include "pisot/zero_density.hpp"

namespace pisot {
namespace {

constexpr double kInvPhi = 0.6180339887498949;

NearZeroPoint golden_section(const std::function<double(double)>& f, double a, double b) {
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > kZeroResolution) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  const double m = 0.5 * (a + b);
  NearZeroPoint best{m, f(m)};
  if (fc < best.value) best = {c, fc};
  if (fd < best.value) best = {d, fd};
  return best;
}

}  // namespace

NearZeroSet scan_near_zeros(const std::function<double(double)>& f, double L, double grid_step, double delta,
                            int threads) {
  if (!(grid_step > 0.0) || !std::isfinite(grid_step)) throw ValidationError("grid step must be positive");
  if (!(delta > 0.0)) throw ValidationError("delta must be positive");
  if (!(L >= 0.0) || !std::isfinite(L)) throw ValidationError("scan interval [0, L] needs L >= 0");
  const double cells = std::floor(L / grid_step + 1e-9);
  if (cells > 1e9) throw SizeError("grid has more than 1e9 points");
  auto n = static_cast<std::int64_t>(cells) + 1;
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) grid[static_cast<std::size_t>(i)] = static_cast<double>(i) * grid_step;
  if (grid.back() < L) {
    grid.push_back(L);
    ++n;
  }

  std::vector<double> values(grid.size());
  detail::parallel_chunks(n, 4096, threads, [&](std::int64_t, std::int64_t b, std::int64_t e) {
    for (std::int64_t i = b; i < e; ++i) values[static_cast<std::size_t>(i)] = f(grid[static_cast<std::size_t>(i)]);
  });

  std::vector<std::size_t> minima;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const bool left = i == 0 || values[i] <= values[i - 1];
    const bool right = i + 1 == grid.size() || values[i] <= values[i + 1];
    if (left && right && (i == 0 || values[i] < values[i - 1] || i + 1 == grid.size() || values[i] < values[i + 1] ||
                          values[i] == 0.0)) {
      minima.push_back(i);
    }
  }

  std::vector<NearZeroPoint> refined(minima.size());
  detail::parallel_chunks(static_cast<std::int64_t>(minima.size()), 64, threads,
                          [&](std::int64_t, std::int64_t b, std::int64_t e) {
                            for (std::int64_t k = b; k < e; ++k) {
                              const std::size_t i = minima[static_cast<std::size_t>(k)];
                              const double a = grid[i == 0 ? 0 : i - 1];
                              const double c = grid[std::min(i + 1, grid.size() - 1)];
                              NearZeroPoint p = golden_section(f, a, c);
                              if (values[i] < p.value) p = {grid[i], values[i]};
                              refined[static_cast<std::size_t>(k)] = p;
                            }
                          });

  NearZeroSet out{delta, L, {}};
  for (const auto& p : refined) {
    if (!(p.value < delta)) continue;
    if (!out.points.empty() && p.y - out.points.back().y <= 10.0 * kZeroResolution) {
      if (p.value < out.points.back().value) out.points.back() = p;
      continue;
    }
    out.points.push_back(p);
  }
  return out;
}

DensityEstimate density_estimate(const NearZeroSet& z) {
  DensityEstimate out;
  if (z.points.empty()) {
    for (int k = 1; k <= 10; ++k) out.rows.push_back({z.L * k / 10.0, 0, 0.0});
    return out;
  }
  if (z.L < 10.0) throw ValidationError("density estimate needs an interval of length >= 10");
  out.lower = INFINITY;
  for (int k = 1; k <= 10; ++k) {
    const double t = z.L * k / 10.0;
    const auto count = static_cast<std::size_t>(
        std::upper_bound(z.points.begin(), z.points.end(), t, [](double v, const NearZeroPoint& p) { return v < p.y; }) -
        z.points.begin());
    const double density = static_cast<double>(count) / t;
    out.rows.push_back({t, count, density});
    out.lower = std::min(out.lower, density);
    out.upper = std::max(out.upper, density);
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::tends_to_zero: return "tends-to-zero";
    case Verdict::bounded_away: return "bounded-away";
    default: return "inconclusive";
  }
}

Verdict classify_tail(const std::vector<double>& abs_values, double delta, double* slope, double* mean, double* max) {
  const std::size_t n = abs_values.size();
  if (n < 3) throw ValidationError("vanishing probe needs at least 3 values");
  const std::size_t len = std::max<std::size_t>(2, n / 3);
  const std::size_t start = n - len;
  double tail_max = 0.0;
  double tail_sum = 0.0;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = start; i < n; ++i) {
    const double v = abs_values[i];
    tail_max = std::max(tail_max, v);
    tail_sum += v;
    const double x = static_cast<double>(i);
    const double y = std::log(std::max(v, 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(len);
  const double s = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  const double level = tail_sum / k;
  if (slope) *slope = s;
  if (mean) *mean = level;
  if (max) *max = tail_max;
  if (tail_max <= delta) return Verdict::tends_to_zero;
  if (std::abs(s) < 1e-3 && level > 10.0 * delta) return Verdict::bounded_away;
  if (s < -0.05) return Verdict::tends_to_zero;
  return Verdict::inconclusive;
}

std::vector<ProbeSeries> vanishing_probe(const RefinementMask& mask, const std::vector<FieldElement>& lambdas,
                                         int J_max, double delta, double tol) {
  if (J_max < 2) throw ValidationError("vanishing probe needs J_max >= 2");
  const NumberField& field = mask.field();
  std::vector<ProbeSeries> out;
  for (const auto& lambda : lambdas) {
    if (lambda.degree() != field.degree()) throw ValidationError("lambda does not live in the mask field");
    bool laurent = false;
    for (int k = 0; k <= 64 && !laurent; ++k) laurent = multiply(field, lambda, alpha_power(field, k)).is_integral();
    if (!laurent) throw ValidationError("lambda is not in Z[alpha, 1/alpha]");
    ProbeSeries series;
    series.lambda = lambda;
    for (const auto& p : phihat_orbit(mask, lambda, 0, J_max, tol)) {
      series.abs_values.push_back(p.value.value.norm());
      series.errors.push_back(p.value.truncation_error);
    }
    series.verdict = classify_tail(series.abs_values, delta, &series.slope, &series.tail_mean, &series.tail_max);
    out.push_back(std::move(series));
  }
  return out;
}

}  // namespace pisot
