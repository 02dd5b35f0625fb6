#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pisot/field_element.hpp"
#include "pisot/number_field.hpp"

namespace pisot {

inline constexpr double kSymbolTolerance = 1e-14;
inline constexpr double kNormalizationTolerance = 1e-12;
inline constexpr long kMaxProductFactors = 1'000'000;

// A scalar (1x1) or r x r matrix symbol value, or an r-vector for phi-hat,
// together with a bound on the error introduced by truncation.
struct SymbolValue {
  Eigen::MatrixXcd value;
  double truncation_error = 0.0;

  std::complex<double> scalar() const { return value(0, 0); }
};

// |a(k)| <= scale * ratio^k for every k >= 1.
struct DecayEnvelope {
  double scale = 0.0;
  double ratio = 0.0;
};

struct MaskTerm {
  Eigen::MatrixXcd coeff;
  LaurentTranslate translate;
  FieldElement translate_element;  // tau(k) in the power basis
  double translate_value = 0.0;    // tau(k) at the dominant root
};

// Closed-form description of an infinite mask: term(k) for k = 1, 2, ...
struct MaskGenerator {
  std::string name;
  std::function<std::pair<Eigen::MatrixXcd, LaurentTranslate>(int k)> term;
  DecayEnvelope envelope;
};

class RefinementMask {
 public:
  const NumberField& field() const { return field_; }
  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  bool is_finite() const { return !envelope_.has_value(); }
  const std::optional<DecayEnvelope>& envelope() const { return envelope_; }
  // Finite masks hold every term; generated masks hold a prefix whose tail
  // is below 1e-18.
  const std::vector<MaskTerm>& terms() const { return terms_; }
  const Eigen::VectorXcd& phihat0() const { return phihat0_; }
  const Eigen::MatrixXcd& symbol_at_zero() const { return symbol_at_zero_; }
  double dilation() const { return dilation_; }
  double dilation_modulus() const { return std::abs(dilation_); }

  // Smallest prefix length K whose dropped tail of a-hat is below tol / 2.
  std::size_t terms_for(double tol) const;
  // |alpha|^{-1} C rho^{K+1} / (1 - rho) for generated masks, 0 otherwise.
  double tail_bound(std::size_t K) const;
  // ||a-hat(h) - a-hat(0)|| <= lipschitz() * |h|.
  double lipschitz() const { return lipschitz_; }

  // Scalar coefficients a(k) when rank() == 1.
  const std::vector<std::complex<double>>& scalar_coeffs() const { return scalar_coeffs_; }

 private:
  friend RefinementMask make_mask(NumberField, std::vector<Eigen::MatrixXcd>, std::vector<LaurentTranslate>,
                                  int, std::optional<Eigen::VectorXcd>, std::string);
  friend RefinementMask make_generated_mask(NumberField, const MaskGenerator&, int,
                                            std::optional<Eigen::VectorXcd>);
  friend RefinementMask finish_mask(RefinementMask, std::optional<Eigen::VectorXcd>);

  NumberField field_;
  std::string name_;
  int rank_ = 1;
  std::vector<MaskTerm> terms_;
  std::vector<std::complex<double>> scalar_coeffs_;
  std::optional<DecayEnvelope> envelope_;
  Eigen::VectorXcd phihat0_;
  Eigen::MatrixXcd symbol_at_zero_;
  double dilation_ = 0.0;
  double lipschitz_ = 0.0;
};

// Validates a finite mask. Scalar masks must satisfy sum a(k) = |alpha| to
// 1e-12 (NormalizationError). For rank > 1 without phihat0, phihat0 is the
// eigenvector of a-hat(0) for the simple eigenvalue 1, scaled so its largest
// entry is 1 (EigenError when 1 is missing or repeated).
RefinementMask make_mask(NumberField field, std::vector<Eigen::MatrixXcd> coeffs,
                         std::vector<LaurentTranslate> translates, int rank,
                         std::optional<Eigen::VectorXcd> phihat0 = std::nullopt, std::string name = "custom");

// Scalar convenience overload.
RefinementMask make_scalar_mask(NumberField field, const std::vector<std::complex<double>>& coeffs,
                                std::vector<LaurentTranslate> translates, std::string name = "custom");

RefinementMask make_generated_mask(NumberField field, const MaskGenerator& generator, int rank,
                                   std::optional<Eigen::VectorXcd> phihat0 = std::nullopt);

// a-hat(y) = |alpha|^{-1} sum_k a(k) exp(-2 pi i tau(k) y), with generated
// masks truncated so that the dropped tail is below tol.
SymbolValue eval_symbol(const RefinementMask& mask, double y, double tol = kSymbolTolerance);

// a-hat at y = lambda alpha^j with each phase tau(k) lambda alpha^j reduced
// modulo 1 exactly through traces (see residue_mod).
SymbolValue eval_symbol_on_orbit(const RefinementMask& mask, const FieldElement& lambda, int j,
                                 double tol = kSymbolTolerance);

// phi-hat(y) = a-hat(y/alpha) a-hat(y/alpha^2) ... phi-hat(0), factors with
// the most negative exponent applied to phi-hat(0) first. The product stops
// at the first J0 where the Lipschitz tail bound drops below tol / 2.
SymbolValue eval_phihat(const RefinementMask& mask, double y, double tol = 1e-12);

struct OrbitPoint {
  int J = 0;
  SymbolValue value;
};

// phi-hat(lambda alpha^J) for J = J_min..J_max, each step obtained from the
// previous one by the two-scale identity phi-hat(y alpha) = a-hat(y) phi-hat(y).
std::vector<OrbitPoint> phihat_orbit(const RefinementMask& mask, double lambda, int J_min, int J_max,
                                     double tol = 1e-12);
// Same, with lambda in Q[alpha] and the symbol phases reduced exactly.
std::vector<OrbitPoint> phihat_orbit(const RefinementMask& mask, const FieldElement& lambda, int J_min,
                                     int J_max, double tol = 1e-12);

struct BernoulliValue {
  std::complex<double> value;
  double cutoff_error = 0.0;  // bound on the dropped factors j < j_min
};

// exp(-pi i alpha^J / (alpha - 1)) prod_{j_min <= j < J} cos(pi alpha^j) for
// a PV dilation, the Fourier transform of the Bernoulli convolution at alpha^J.
BernoulliValue bernoulli_phihat(const NumberField& field, int J, int j_min);

// boxcar, dyadic, bernoulli, golden_vector. `field` selects the dilation
// of the Bernoulli convolution (golden mean when omitted).
RefinementMask builtin_mask(const std::string& name, const std::optional<NumberField>& field = std::nullopt);
std::vector<std::string> builtin_mask_names();

// exp(-2 pi i f) with exact values at multiples of 1/4.
std::complex<double> unit_phase(double f);

}  // namespace pisot
