#include "doctest.h"

#include <cmath>
#include <numbers>

#include "pisot/errors.hpp"
#include "pisot/mask_file.hpp"
#include "pisot/refinement.hpp"

using namespace pisot;
using cd = std::complex<double>;

namespace {
constexpr double pi = std::numbers::pi;
const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

cd boxcar_phihat(double y) { return std::exp(cd(0, -pi * y)) * std::sin(pi * y) / (pi * y); }
// Fourier transform of the indicator of [0, c]
cd indicator_hat(double c, double y) { return std::exp(cd(0, -pi * c * y)) * std::sin(pi * c * y) / (pi * y); }
}  // namespace

TEST_SUITE("refinement") {

TEST_CASE("unit phase is exact at quarter turns") {
  CHECK(unit_phase(0.25) == cd(0, -1));
  CHECK(unit_phase(0.5) == cd(-1, 0));
  CHECK(unit_phase(-0.25) == cd(0, 1));
  CHECK(unit_phase(3.0) == cd(1, 0));
  CHECK(std::abs(unit_phase(0.125) - std::exp(cd(0, -pi / 4))) < 1e-16);
}

TEST_CASE("boxcar symbol") {
  const RefinementMask m = builtin_mask("boxcar");
  CHECK(m.is_finite());
  CHECK(m.symbol_at_zero()(0, 0) == cd(1, 0));
  for (double y : {0.1, 0.37, 1.25, -2.6}) {
    CHECK(std::abs(eval_symbol(m, y).scalar() - std::exp(cd(0, -pi * y)) * std::cos(pi * y)) < 1e-12);
  }
  CHECK(eval_symbol(m, 0.5).scalar() == cd(0, 0));
}

TEST_CASE("boxcar phi-hat is the shifted sinc") {
  const RefinementMask m = builtin_mask("boxcar");
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double y = -8.0 + 16.0 * (i + 0.5) / 1000.0;
    const SymbolValue v = eval_phihat(m, y);
    worst = std::max(worst, std::abs(v.scalar() - boxcar_phihat(y)));
    CHECK(v.truncation_error < 1e-12);
  }
  CHECK(worst < 1e-10);
  CHECK(std::abs(eval_phihat(m, 1.0).scalar()) < 1e-15);
  CHECK(std::abs(eval_phihat(m, 0.5).scalar() - cd(0, -2 / pi)) < 1e-12);
}

TEST_CASE("dyadic mask data") {
  const RefinementMask m = builtin_mask("dyadic");
  CHECK_FALSE(m.is_finite());
  CHECK(m.terms()[1].coeff(0, 0) == cd(0.5, 0));
  CHECK(m.terms()[1].translate_value == 0.5);
  CHECK(m.tail_bound(m.terms().size()) < 1e-18);
  CHECK(std::abs(m.symbol_at_zero()(0, 0) - 1.0) < 1e-15);
}

TEST_CASE("dyadic symbol is almost periodic with bound 2^(1-L)") {
  // the sharp constant: the k = L+1 term alone reaches 2^-L
  const RefinementMask m = builtin_mask("dyadic");
  double worst = 0.0;
  for (int L = 1; L <= 20; ++L) {
    for (double y = 0.0; y <= 16.0; y += 0.05) {
      const double d = std::abs(eval_symbol(m, y + std::ldexp(1.0, L - 1)).scalar() - eval_symbol(m, y).scalar());
      worst = std::max(worst, d / std::ldexp(1.0, -L));
    }
  }
  CHECK(worst <= 2.0 + 1e-9);
  CHECK(worst > 1.0);
}

TEST_CASE("dyadic orbit limit") {
  // independent oracle: direct product to 2^-90 with 80 mask terms
  const RefinementMask m = builtin_mask("dyadic");
  const auto orbit = phihat_orbit(m, FieldElement::rational(1, 1), 0, 40);
  const cd tail = orbit.back().value.scalar();
  CHECK(std::abs(tail - cd(0.025764015798928, 0.069222179448202)) < 1e-9);
  CHECK(orbit.back().value.truncation_error < 1e-10);
  // double lambda path agrees
  const auto plain = phihat_orbit(m, 1.0, 0, 20);
  CHECK(std::abs(plain.back().value.scalar() - orbit[20].value.scalar()) < 1e-10);
}

TEST_CASE("golden vector mask") {
  const RefinementMask m = builtin_mask("golden_vector");
  CHECK(m.rank() == 2);
  CHECK(m.phihat0()(0).real() == doctest::Approx(1.0 / kPhi));
  CHECK(m.phihat0()(1).real() == doctest::Approx(1.0));
  for (double y : {-4.3, -0.7, 0.2, 1.9, 4.99}) {
    const SymbolValue v = eval_phihat(m, y);
    CHECK(std::abs(v.value(0) - indicator_hat(1.0 / kPhi, y)) < 1e-10);
    CHECK(std::abs(v.value(1) - indicator_hat(1.0, y)) < 1e-10);
  }
}

TEST_CASE("Bernoulli convolution") {
  const NumberField f = make_field({-1, -1});
  // oracle: mpmath product at 50 digits, |phi-hat(alpha^J)| -> 0.0066135...
  const BernoulliValue b = bernoulli_phihat(f, 40, -40);
  CHECK(std::abs(b.value) == doctest::Approx(0.0066135).epsilon(1e-4));
  CHECK(b.cutoff_error < 1e-12);
  const RefinementMask mask = builtin_mask("bernoulli");
  const auto orbit = phihat_orbit(mask, FieldElement::rational(2, 1), 0, 30);
  CHECK(std::abs(orbit.back().value.scalar() - bernoulli_phihat(f, 30, -60).value) < 1e-10);
  CHECK_THROWS_AS(builtin_mask("bernoulli", make_field({-2, 0})), NotPisotError);
}

TEST_CASE("mask validation") {
  const NumberField two = make_integer_dilation(2);
  CHECK_THROWS_AS(make_scalar_mask(two, {1.0, 0.5}, {LaurentTranslate{}, LaurentTranslate::monomial(0)}),
                  NormalizationError);
  CHECK_THROWS_AS(make_scalar_mask(two, {1.0, 1.0}, {LaurentTranslate{}}), ValidationError);
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
  // a-hat(0) = identity: eigenvalue 1 is double
  CHECK_THROWS_AS(make_mask(two, {id, id}, {LaurentTranslate{}, LaurentTranslate::monomial(0)}, 2), EigenError);
  Eigen::MatrixXcd half = 0.5 * id;
  CHECK_THROWS_AS(make_mask(two, {half, half}, {LaurentTranslate{}, LaurentTranslate::monomial(0)}, 2), EigenError);
  CHECK_THROWS_AS(builtin_mask("sierpinski"), UnknownExampleError);
  CHECK(builtin_mask("golden-vector").name() == "golden_vector");
}

TEST_CASE("mask files") {
  const RefinementMask m = parse_mask_text(
      "# boxcar again\n"
      "dilation = 2\n"
      "coeffs = 1; 1\n"
      "translates = 0; 0:1\n");
  CHECK(std::abs(eval_phihat(m, 0.5).scalar() - cd(0, -2 / pi)) < 1e-12);
  const RefinementMask g = parse_mask_text(
      "dilation-poly = -1,-1\n"
      "rank = 2\n"
      "coeffs = [0,1|0,1]; [0,0|1,0]\n"
      "translates = 0; 0:1\n");
  CHECK(g.phihat0()(0).real() == doctest::Approx(1.0 / kPhi));
  CHECK(parse_mask_text("coeffs = generator:dyadic\n").name() == "dyadic");
  CHECK(parse_complex("0.5-0.25i") == cd(0.5, -0.25));
  CHECK(parse_complex("-i") == cd(0, -1));
  CHECK(parse_complex("1e-3+2e+1i") == cd(1e-3, 20));
  CHECK_THROWS_AS(parse_mask_text("dilation = 2\ncoeffs = 1;1\n"), ValidationError);
  CHECK_THROWS_AS(parse_mask_text("dilation = 2\nfoo = 1\n"), ValidationError);
  CHECK_THROWS_AS(load_mask_file("/nonexistent/mask.txt"), IoError);
}

}  // TEST_SUITE
