#include "doctest.h"

#include <cmath>

#include "pisot/algebraic_core.hpp"
#include "pisot/errors.hpp"

using namespace pisot;

namespace {
const double kSqrt5 = std::sqrt(5.0);
const double kPhi = (1.0 + kSqrt5) / 2.0;
}  // namespace

TEST_SUITE("algebraic_core") {

TEST_CASE("golden mean roots and certification") {
  const NumberField f = make_field({-1, -1});
  CHECK(f.degree() == 2);
  CHECK(f.is_pv());
  CHECK(f.alpha() == doctest::Approx(kPhi).epsilon(1e-15));
  CHECK(f.roots()[1].real() == doctest::Approx(-1.0 / kPhi).epsilon(1e-15));
  CHECK(f.max_conjugate_modulus() == doctest::Approx(0.6180339887498949));
  CHECK(f.radii()[0] < 1e-9);
  CHECK(f.real_count() == 1);
  CHECK(f.complex_pair_count() == 0);
  CHECK(discriminant(f) == 5);
}

TEST_CASE("PV verdicts") {
  CHECK(make_field({-1, -1, 0}).is_pv());
  CHECK(make_field({-2, 0}).pv_status() == PvStatus::not_pv);
  CHECK(make_field({-8, -2, -1}).pv_status() == PvStatus::not_pv);
  // Salem number: a conjugate on the unit circle cannot be separated from 1
  CHECK(make_field({1, -1, -1, -1}).pv_status() == PvStatus::indeterminate);
  CHECK_THROWS_AS(make_field({-1, 0}), ReducibleError);
  CHECK_THROWS_AS(make_field({1, -2}), DegenerateError);
  CHECK_THROWS_AS(make_field({0, -1}), ReducibleError);
  // (x^2 - x - 1)(x^2 + 1)
  CHECK_THROWS_AS(make_field({-1, -1, 0, -1}), ReducibleError);
}

TEST_CASE("cubic with a complex pair") {
  const NumberField f = make_field({-1, -1, 0});
  CHECK(f.alpha() == doctest::Approx(1.324717957244746));
  CHECK(f.complex_pair_count() == 1);
  CHECK(f.conjugate_of(1) == 2);
  CHECK(f.roots()[1].imag() > 0.0);
  CHECK(discriminant(f) == -23);
  CHECK(std::abs(f.roots()[1]) == doctest::Approx(std::sqrt(1.0 / f.alpha())));
}

TEST_CASE("discriminant of x^3 - x^2 - 2x - 8") { CHECK(discriminant(make_field({-8, -2, -1})) == -2012); }

TEST_CASE("parse and format") {
  CHECK(parse_poly("-1,-1") == std::vector<std::int64_t>{-1, -1});
  CHECK(parse_poly(" -1 , 0 ,-1 ") == std::vector<std::int64_t>{-1, 0, -1});
  CHECK_THROWS_AS(parse_poly("1,,2"), ValidationError);
  CHECK_THROWS_AS(parse_poly("a"), ValidationError);
  CHECK(format_poly(std::vector<std::int64_t>{-1, -1}) == "X^2 - X - 1");
}

TEST_CASE("field arithmetic") {
  const NumberField f = make_field({-1, -1});
  const FieldElement a = alpha_power(f, 1);
  const FieldElement inv = alpha_power(f, -1);
  CHECK(multiply(f, a, inv) == FieldElement::rational(2, 1));
  // alpha^-1 = alpha - 1
  CHECK(inv == FieldElement(std::vector<Rational>{-1, 1}));
  CHECK(alpha_power(f, 5) == FieldElement(std::vector<Rational>{3, 5}));
  CHECK(trace(a, f) == 1);
  CHECK(norm(a, f) == -1);
  const FieldElement x(std::vector<Rational>{Rational(1, 2), 3});
  CHECK(multiply(f, x, inverse(f, x)) == FieldElement::rational(2, 1));
  CHECK(conjugate(f, a, 1).real() == doctest::Approx(-1.0 / kPhi));
}

TEST_CASE("Laurent translates embed at the dominant root") {
  const NumberField f = make_field({-1, -1});
  const auto e = laurent_embed(f, LaurentTranslate::monomial(-1));
  CHECK(e.value == doctest::Approx(1.0 / kPhi));
  const auto s = laurent_embed(f, LaurentTranslate({{-2, 1}, {3, 2}}));
  CHECK(s.value == doctest::Approx(std::pow(kPhi, -2) + 2 * std::pow(kPhi, 3)));
}

TEST_CASE("Vandermonde data") {
  const NumberField f = make_field({-1, -1, 0});
  const FieldMatrices m = field_matrices(f);
  const Eigen::MatrixXcd id = m.V * m.V_inv;
  CHECK((id - Eigen::MatrixXcd::Identity(3, 3)).norm() < 1e-12);
  CHECK(std::norm(m.det_V) == doctest::Approx(23.0));
  CHECK(std::norm(field_matrices(make_field({-1, -1})).det_V) == doctest::Approx(5.0));
}

TEST_CASE("Lucas numbers as traces") {
  const NumberField f = make_field({-1, -1});
  const auto seq = trace_power_sequence(f, FieldElement::rational(2, 1), 30);
  std::vector<long> lucas{2, 1};
  while (lucas.size() < 31) lucas.push_back(lucas[lucas.size() - 1] + lucas[lucas.size() - 2]);
  for (int j = 0; j <= 30; ++j) {
    CHECK(seq[static_cast<std::size_t>(j)] == lucas[static_cast<std::size_t>(j)]);
    CHECK(std::pow(kPhi, j) + std::pow(-1.0 / kPhi, j) == doctest::Approx(static_cast<double>(lucas[static_cast<std::size_t>(j)])));
  }
  CHECK(trace_power(f, FieldElement::rational(2, 1), -3) == -4);
}

TEST_CASE("Pisot set membership") {
  const NumberField f = make_field({-1, -1});
  CHECK(pisot_set_test(f, FieldElement::rational(2, 1)));
  CHECK(pisot_set_test(f, FieldElement(std::vector<Rational>{Rational(-1, 5), Rational(2, 5)})));
  CHECK_FALSE(pisot_set_test(f, FieldElement::rational(2, Rational(1, 2))));
  CHECK_THROWS_AS(pisot_set_test(make_field({-2, 0}), FieldElement::rational(2, 1)), NotPisotError);
}

TEST_CASE("residues stay accurate far beyond 2^53") {
  const NumberField f = make_field({-1, -1});
  // phi^200 = L_200 - psi^200 with psi^200 ~ 1e-42, so the residue is 1 - tiny
  const double r = residue_mod(f, FieldElement::rational(2, 1), 200, 1);
  CHECK(dist_to_int(r) < 1e-15);
  // (1/2) phi^j mod 1 = L_j / 2 mod 1 up to tiny terms; L_j is even iff 3 | j
  CHECK(residue_mod(f, FieldElement::rational(2, Rational(1, 2)), 202, 1) == doctest::Approx(0.5));
  CHECK(dist_to_int(residue_mod(f, FieldElement::rational(2, Rational(1, 2)), 201, 1)) < 1e-15);
}

TEST_CASE("homoclinic decay rate") {
  const NumberField f = make_field({-1, -1});
  const auto p = homoclinic_profile(f, FieldElement::rational(2, 1), -20, 40);
  CHECK(p.bound_holds);
  CHECK(p.fitted_slope == doctest::Approx(std::log(1.0 / kPhi)).epsilon(0.02));
}

TEST_CASE("integer dilation") {
  const NumberField two = make_integer_dilation(2);
  CHECK(two.degree() == 1);
  CHECK(two.alpha() == 2.0);
  CHECK_FALSE(two.is_pv());
  CHECK_THROWS_AS(make_integer_dilation(1), ValidationError);
}

}  // TEST_SUITE
