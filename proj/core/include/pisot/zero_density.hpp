#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pisot/field_element.hpp"
#include "pisot/refinement.hpp"

namespace pisot {

struct NearZeroPoint {
  double y = 0.0;
  double value = 0.0;  // |f(y)| after refinement
};

struct NearZeroSet {
  double delta = 0.0;
  double L = 0.0;
  std::vector<NearZeroPoint> points;  // sorted by y
};

inline constexpr double kZeroResolution = 1e-10;

// |f| sampled on 0, h, 2h, ..., L (L included). Every grid local minimum is
// refined by golden-section search to kZeroResolution and kept when the
// refined value is below delta. f must be safe to call concurrently.
NearZeroSet scan_near_zeros(const std::function<double(double)>& f, double L, double grid_step, double delta,
                            int threads = 1);

struct DensityRow {
  double t = 0.0;
  std::size_t count = 0;
  double density = 0.0;
};

struct DensityEstimate {
  double lower = 0.0;
  double upper = 0.0;
  std::vector<DensityRow> rows;  // t = L/10, 2L/10, ..., L
};

DensityEstimate density_estimate(const NearZeroSet& z);

enum class Verdict { tends_to_zero, bounded_away, inconclusive };
std::string to_string(Verdict v);

struct ProbeSeries {
  FieldElement lambda;
  std::vector<double> abs_values;  // |phi-hat(lambda alpha^J)|, J = 0..J_max
  std::vector<double> errors;      // truncation error bounds
  double tail_mean = 0.0;
  double tail_max = 0.0;
  double slope = 0.0;              // least squares slope of log |phi-hat| over the last third
  Verdict verdict = Verdict::inconclusive;
};

inline constexpr double kProbeDelta = 1e-8;

// Tail = last third of 0..J_max. A tail at or below delta tends to zero;
// otherwise |slope| < 1e-3 with tail mean > 10 delta is bounded-away and
// slope < -0.05 tends to zero.
std::vector<ProbeSeries> vanishing_probe(const RefinementMask& mask, const std::vector<FieldElement>& lambdas,
                                         int J_max, double delta = kProbeDelta, double tol = 1e-12);
Verdict classify_tail(const std::vector<double>& abs_values, double delta, double* slope = nullptr,
                      double* mean = nullptr, double* max = nullptr);

// numerator(n) / denominator = N(mu_1) for [mu_1..mu_d] = V^{-1} n.
struct NormForm {
  int degree = 0;
  std::map<std::vector<int>, Integer> numerator;  // exponent vector -> coefficient
  Integer denominator = 1;

  Integer evaluate(const std::vector<std::int64_t>& n) const;
};

// High precision expansion of prod_k (row_k(V^{-1}) . n), rounded after
// scaling by |disc|, then checked exactly on `checks` random vectors.
NormForm norm_form(const NumberField& field, int checks = 1000);
// N(mu_1) exactly from the Lagrange row.
Rational norm_of_first(const NumberField& field, const std::vector<std::int64_t>& n);

struct NormCountRow {
  std::int64_t L = 0;
  std::size_t count = 0;
  double ratio = 0.0;  // count / (L / log L) for d = 2, count / L^{2/d} otherwise
};

struct NormCount {
  std::size_t count = 0;
  double exponent = 0.0;  // least squares slope of log count against log L
  std::int64_t box = 0;
  std::vector<NormCountRow> rows;  // dyadic checkpoints, increasing L
};

inline constexpr double kMaxNormEvaluations = 1e8;

// Distinct |numerator| values in [1, L] over n in [-box, box]^2 with
// n_3 = ... = n_d = 0. box <= 0 picks ceil((L denominator)^{1/d}) + 2.
NormCount count_norm_values(const NumberField& field, std::int64_t L, std::int64_t box = 0, int threads = 1);
NormCount count_norm_values(const NormForm& form, int degree, std::int64_t L, std::int64_t box = 0, int threads = 1);

}  // namespace pisot
