#include "pisot/refinement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "pisot/errors.hpp"
#include "pisot/sequences.hpp"

namespace pisot {
namespace {

constexpr double kMaterializedTail = 1e-18;
constexpr std::size_t kMaxGeneratedTerms = 4096;

double spectral_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 1) return std::abs(m(0, 0));
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

double vector_norm(const Eigen::MatrixXcd& v) { return v.norm(); }

Eigen::MatrixXcd symbol_from_phases(const RefinementMask& mask, std::size_t K,
                                    const std::vector<std::complex<double>>& phases) {
  const double inv = 1.0 / mask.dilation_modulus();
  if (mask.rank() == 1) {
    std::complex<double> acc = 0.0;
    const auto& a = mask.scalar_coeffs();
    for (std::size_t k = 0; k < K; ++k) acc += a[k] * phases[k];
    Eigen::MatrixXcd out(1, 1);
    out(0, 0) = acc * inv;
    return out;
  }
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(mask.rank(), mask.rank());
  for (std::size_t k = 0; k < K; ++k) acc += mask.terms()[k].coeff * phases[k];
  return acc * inv;
}

}  // namespace

std::complex<double> unit_phase(double f) {
  f -= std::floor(f);
  const double q = 4.0 * f;
  if (q == std::floor(q)) {
    switch (static_cast<int>(q) & 3) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, -1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, 1.0};
    }
  }
  const double angle = -2.0 * std::numbers::pi * f;
  return {std::cos(angle), std::sin(angle)};
}

std::size_t RefinementMask::terms_for(double tol) const {
  if (!envelope_) return terms_.size();
  std::size_t K = 1;
  while (K < terms_.size() && tail_bound(K) >= tol / 2) ++K;
  return K;
}

double RefinementMask::tail_bound(std::size_t K) const {
  if (!envelope_) return 0.0;
  const auto& e = *envelope_;
  return e.scale * std::pow(e.ratio, static_cast<double>(K + 1)) / (1.0 - e.ratio) / dilation_modulus();
}

RefinementMask finish_mask(RefinementMask mask, std::optional<Eigen::VectorXcd> phihat0) {
  const int r = mask.rank_;
  const double modulus = mask.dilation_modulus();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(r, r);
  double lipschitz = 0.0;
  double max_translate = 0.0;
  for (const auto& t : mask.terms_) {
    sum += t.coeff;
    lipschitz += t.coeff.norm() * std::abs(t.translate_value);
    max_translate = std::max(max_translate, std::abs(t.translate_value));
  }
  const double tail = mask.tail_bound(mask.terms_.size());
  lipschitz += tail * modulus * max_translate;
  mask.lipschitz_ = 2.0 * std::numbers::pi * lipschitz / modulus;
  mask.symbol_at_zero_ = sum / modulus;

  if (r == 1) {
    for (const auto& t : mask.terms_) mask.scalar_coeffs_.push_back(t.coeff(0, 0));
    const double err = std::abs(sum(0, 0) - modulus);
    if (err > kNormalizationTolerance * std::max(1.0, modulus) + tail * modulus) {
      throw NormalizationError("mask coefficients sum to " + std::to_string(sum(0, 0).real()) +
                               ", expected |alpha| = " + std::to_string(modulus));
    }
    mask.phihat0_ = Eigen::VectorXcd::Ones(1);
    return mask;
  }

  const Eigen::MatrixXcd& a0 = mask.symbol_at_zero_;
  if (phihat0) {
    if (phihat0->size() != r || phihat0->norm() == 0.0) {
      throw EigenError("phihat0 must be a nonzero vector of length " + std::to_string(r));
    }
    const double residual = (a0 * *phihat0 - *phihat0).norm();
    if (residual > kNormalizationTolerance * std::max(1.0, phihat0->norm()) + tail) {
      throw EigenError("phihat0 is not fixed by a-hat(0): residual " + std::to_string(residual));
    }
    mask.phihat0_ = *phihat0;
    return mask;
  }

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a0);
  if (solver.info() != Eigen::Success) throw EigenError("eigen decomposition of a-hat(0) failed");
  int found = -1;
  int count = 0;
  for (int i = 0; i < r; ++i) {
    if (std::abs(solver.eigenvalues()(i) - 1.0) < 1e-9) {
      found = i;
      ++count;
    }
  }
  if (count == 0) throw EigenError("a-hat(0) has no eigenvalue 1");
  if (count > 1) throw EigenError("eigenvalue 1 of a-hat(0) is not simple");
  Eigen::VectorXcd v = solver.eigenvectors().col(found);
  Eigen::Index largest = 0;
  v.cwiseAbs().maxCoeff(&largest);
  v /= v(largest);
  mask.phihat0_ = v;
  return mask;
}

RefinementMask make_mask(NumberField field, std::vector<Eigen::MatrixXcd> coeffs,
                         std::vector<LaurentTranslate> translates, int rank,
                         std::optional<Eigen::VectorXcd> phihat0, std::string name) {
  if (rank < 1) throw ValidationError("mask rank must be positive");
  if (coeffs.empty()) throw ValidationError("mask has no coefficients");
  if (coeffs.size() != translates.size()) {
    throw ValidationError("mask has " + std::to_string(coeffs.size()) + " coefficients but " +
                          std::to_string(translates.size()) + " translates");
  }
  RefinementMask mask;
  mask.dilation_ = field.roots().front().real();
  if (!field.root_is_real(0) || !(std::abs(mask.dilation_) > 1.0)) {
    throw ValidationError("dilation must be a real number outside [-1, 1]");
  }
  mask.name_ = std::move(name);
  mask.rank_ = rank;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].rows() != rank || coeffs[k].cols() != rank) {
      throw ValidationError("mask coefficient " + std::to_string(k + 1) + " is not " + std::to_string(rank) +
                            "x" + std::to_string(rank));
    }
    auto embedded = laurent_embed(field, translates[k]);
    mask.terms_.push_back({std::move(coeffs[k]), std::move(translates[k]), std::move(embedded.element),
                           embedded.value});
  }
  mask.field_ = std::move(field);
  return finish_mask(std::move(mask), std::move(phihat0));
}

RefinementMask make_scalar_mask(NumberField field, const std::vector<std::complex<double>>& coeffs,
                                std::vector<LaurentTranslate> translates, std::string name) {
  std::vector<Eigen::MatrixXcd> m;
  for (const auto& c : coeffs) m.push_back(Eigen::MatrixXcd::Constant(1, 1, c));
  return make_mask(std::move(field), std::move(m), std::move(translates), 1, std::nullopt, std::move(name));
}

RefinementMask make_generated_mask(NumberField field, const MaskGenerator& generator, int rank,
                                   std::optional<Eigen::VectorXcd> phihat0) {
  const auto& env = generator.envelope;
  if (!(env.scale > 0.0) || !(env.ratio > 0.0 && env.ratio < 1.0)) {
    throw ValidationError("decay envelope needs scale > 0 and 0 < ratio < 1");
  }
  RefinementMask mask;
  mask.dilation_ = field.roots().front().real();
  if (!field.root_is_real(0) || !(std::abs(mask.dilation_) > 1.0)) {
    throw ValidationError("dilation must be a real number outside [-1, 1]");
  }
  mask.name_ = generator.name;
  mask.rank_ = rank;
  mask.envelope_ = env;
  for (std::size_t k = 1; k <= kMaxGeneratedTerms; ++k) {
    auto [coeff, translate] = generator.term(static_cast<int>(k));
    if (coeff.rows() != rank || coeff.cols() != rank) throw ValidationError("generated coefficient has wrong shape");
    auto embedded = laurent_embed(field, translate);
    mask.terms_.push_back({std::move(coeff), std::move(translate), std::move(embedded.element), embedded.value});
    if (mask.tail_bound(k) < kMaterializedTail) break;
  }
  mask.field_ = std::move(field);
  return finish_mask(std::move(mask), std::move(phihat0));
}

SymbolValue eval_symbol(const RefinementMask& mask, double y, double tol) {
  const std::size_t K = mask.terms_for(tol);
  std::vector<std::complex<double>> phases(K);
  for (std::size_t k = 0; k < K; ++k) phases[k] = unit_phase(mask.terms()[k].translate_value * y);
  return {symbol_from_phases(mask, K, phases), mask.tail_bound(K)};
}

SymbolValue eval_symbol_on_orbit(const RefinementMask& mask, const FieldElement& lambda, int j, double tol) {
  const std::size_t K = mask.terms_for(tol);
  const NumberField& field = mask.field();
  std::vector<std::complex<double>> phases(K);
  for (std::size_t k = 0; k < K; ++k) {
    const auto& t = mask.terms()[k];
    if (t.translate.is_zero()) {
      phases[k] = 1.0;
      continue;
    }
    const FieldElement mu = multiply(field, t.translate_element, lambda);
    phases[k] = unit_phase(residue_mod(field, mu, j, 1));
  }
  return {symbol_from_phases(mask, K, phases), mask.tail_bound(K)};
}

SymbolValue eval_phihat(const RefinementMask& mask, double y, double tol) {
  if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");
  if (!std::isfinite(y)) throw ValidationError("phi-hat argument must be finite");
  const Eigen::MatrixXcd phi0 = mask.phihat0();
  if (y == 0.0) return {phi0, 0.0};

  const double modulus = mask.dilation_modulus();
  const double scale = mask.lipschitz() * std::abs(y) / (modulus - 1.0) * phi0.norm();
  auto tail_error = [&](long J0) {
    const double s = scale * std::pow(modulus, -static_cast<double>(J0));
    return s * std::exp(s);
  };
  long J0 = 1;
  while (tail_error(J0) >= tol / 2) {
    if (++J0 > kMaxProductFactors) {
      throw NonconvergenceError("phi-hat product did not reach tolerance within 1e6 factors");
    }
  }
  const double symbol_tol = std::max(tol / (4.0 * static_cast<double>(J0)), 1e-17);

  Eigen::MatrixXcd v = phi0;
  double err = tail_error(J0);
  const double alpha = mask.dilation();
  for (long j = -J0; j <= -1; ++j) {
    const SymbolValue f = eval_symbol(mask, y * std::pow(alpha, static_cast<double>(j)), symbol_tol);
    err = spectral_norm(f.value) * err + f.truncation_error * vector_norm(v);
    v = f.value * v;
  }
  return {v, err};
}

std::vector<OrbitPoint> phihat_orbit(const RefinementMask& mask, double lambda, int J_min, int J_max, double tol) {
  if (J_min > J_max) throw ValidationError("empty J range");
  const double alpha = mask.dilation();
  std::vector<OrbitPoint> out;
  SymbolValue v = eval_phihat(mask, lambda * std::pow(alpha, J_min), tol);
  out.push_back({J_min, v});
  for (int J = J_min + 1; J <= J_max; ++J) {
    const SymbolValue f = eval_symbol(mask, lambda * std::pow(alpha, J - 1), tol);
    v.truncation_error = spectral_norm(f.value) * v.truncation_error + f.truncation_error * vector_norm(v.value);
    v.value = f.value * v.value;
    out.push_back({J, v});
  }
  return out;
}

std::vector<OrbitPoint> phihat_orbit(const RefinementMask& mask, const FieldElement& lambda, int J_min,
                                     int J_max, double tol) {
  if (J_min > J_max) throw ValidationError("empty J range");
  const NumberField& field = mask.field();
  if (lambda.degree() != field.degree()) throw ValidationError("lambda degree does not match the mask field");
  std::vector<OrbitPoint> out;
  const double start = conjugate(field, lambda, 0).real() * std::pow(mask.dilation(), J_min);
  SymbolValue v = eval_phihat(mask, start, tol);
  out.push_back({J_min, v});
  for (int J = J_min + 1; J <= J_max; ++J) {
    const SymbolValue f = eval_symbol_on_orbit(mask, lambda, J - 1, tol);
    v.truncation_error = spectral_norm(f.value) * v.truncation_error + f.truncation_error * vector_norm(v.value);
    v.value = f.value * v.value;
    out.push_back({J, v});
  }
  return out;
}

BernoulliValue bernoulli_phihat(const NumberField& field, int J, int j_min) {
  if (!field.is_pv()) throw NotPisotError("Bernoulli product requires a PV dilation");
  const int d = field.degree();
  const FieldElement one = FieldElement::rational(d, 1);
  const FieldElement shift = inverse(field, alpha_power(field, 1) - one);
  const double phase = residue_mod(field, shift, J, 2);
  std::complex<double> value = unit_phase(phase / 2.0);
  for (int j = j_min; j < J; ++j) {
    const double x = residue_mod(field, one, j, 2);
    const std::complex<double> c = unit_phase(x / 2.0);
    value *= c.real();
  }
  const double a2 = field.alpha() * field.alpha();
  const double cutoff = std::numbers::pi * std::numbers::pi * std::pow(a2, j_min) / (2.0 * (a2 - 1.0));
  return {value, cutoff * std::abs(value)};
}

}  // namespace pisot
