#include "doctest.h"

#include <cmath>
#include <random>

#include "pisot/errors.hpp"
#include "pisot/solenoid.hpp"

using namespace pisot;

TEST_SUITE("solenoid") {

TEST_CASE("theta of 1 for the golden mean") {
  const NumberField f = make_field({-1, -1});
  const SolenoidWindow g = theta(f, 1.0, 0, 5);
  const double expect[] = {0.0, 0.6180339887, 0.6180339887, 0.2360679775, 0.8541019662, 0.0901699437};
  for (int j = 0; j <= 5; ++j) CHECK(g(j) == doctest::Approx(expect[j]).epsilon(1e-9));
  const SolenoidWindow zero = theta(f, 0.0, -3, 3);
  for (double v : zero.values()) CHECK(v == 0.0);
}

TEST_CASE("shift matches theta of alpha y") {
  const NumberField f = make_field({-1, -1});
  const double y = 0.3712;
  const SolenoidWindow g = theta(f, y, -5, 10);
  const SolenoidWindow h = theta(f, y * f.alpha(), -5, 10);
  const SolenoidWindow s = shift(g, 1);
  CHECK(s.j_min() == -5);
  CHECK(s.j_max() == 9);
  for (int j = s.j_min(); j <= s.j_max(); ++j) CHECK(std::abs(s(j) - h(j)) < 1e-12);
  const SolenoidWindow back = shift(shift(g, 2), -2);
  for (int j = back.j_min(); j <= back.j_max(); ++j) CHECK(back(j) == g(j));
  CHECK_THROWS_AS(shift(g, 16), EmptyWindowError);
  CHECK_THROWS_AS(theta(f, 1e10, 0, 200), PrecisionError);
}

TEST_CASE("solenoidal representation") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pick(-60.0, 60.0);
  for (const auto& name : builtin_mask_names()) {
    const RefinementMask m = builtin_mask(name);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double y = pick(rng);
      worst = std::max(worst, (eval_A(m, theta(m.field(), y, -64, 2)).value - eval_symbol(m, y).value).norm());
    }
    CHECK_MESSAGE(worst < 1e-10, name);
  }
}

TEST_CASE("A on special windows") {
  const RefinementMask box = builtin_mask("boxcar");
  CHECK(std::abs(eval_A(box, SolenoidWindow(0, {0.0})).scalar() - 1.0) < 1e-15);
  CHECK(std::abs(eval_A(box, SolenoidWindow(-2, {0.9, 0.1, 0.5, 0.3})).scalar()) < 1e-15);
  CHECK_THROWS_AS(eval_A(builtin_mask("dyadic"), SolenoidWindow(0, {0.0})), WindowTooSmallError);
}

TEST_CASE("kernel windows") {
  const NumberField golden = make_field({-1, -1});
  CHECK(kernel_window_test(golden, SolenoidWindow(-3, std::vector<double>(6, 0.0))));
  CHECK_FALSE(kernel_window_test(golden, SolenoidWindow(-1, {0.5, 0.0})));
  const NumberField f = make_field({-2, -2});
  CHECK(kernel_window_test(f, SolenoidWindow(-2, {0.0, 0.5, 0.0, 0.0})));
  CHECK(kernel_window_test(f, SolenoidWindow(-2, {0.75, 0.5, 0.0})));
  CHECK_FALSE(kernel_window_test(f, SolenoidWindow(-2, {0.0, 0.25, 0.0})));
  CHECK_FALSE(kernel_window_test(f, SolenoidWindow(-1, {0.0, 0.5})));
}

TEST_CASE("U neighborhoods") {
  const NumberField f = make_field({-1, -1});
  const UNeighborhood u = make_u_neighborhood(f, 0, {0.1});
  CHECK(in_U(f, 0.0, u).member);
  CHECK_FALSE(in_U(f, 0.5, u).member);
  // y = alpha^12 is an exact lattice point: w = (L_12, L_13), s = psi^12
  const UMembership exact = in_U(f, std::pow(f.alpha(), 12), u);
  REQUIRE(exact.member);
  CHECK(exact.w == std::vector<std::int64_t>{322, 521});
  CHECK(exact.s[0].real() == doctest::Approx(std::pow(-1.0 / f.alpha(), 12)));
  // Lucas number L_40 differs from alpha^40 by ~1e-8
  CHECK(in_U(f, 228826127.0, u).member);
  CHECK_THROWS_AS(make_u_neighborhood(f, 0, {0.1, 0.2}), ValidationError);
  CHECK_THROWS_AS(make_u_neighborhood(f, 0, {-0.1}), ValidationError);
  const NumberField cubic = make_field({-1, -1, 0});
  CHECK_THROWS_AS(make_u_neighborhood(cubic, 0, {0.1, 0.2}), ValidationError);
}

TEST_CASE("gamma") {
  const NumberField f = make_field({-1, -1});
  CHECK(gamma_density(f, make_u_neighborhood(f, 0, {0.1})) == doctest::Approx(std::sqrt(5.0) * 0.2));
  CHECK(gamma_density(f, make_u_neighborhood(f, 5, {0.1})) == doctest::Approx(std::sqrt(5.0) * 0.2));
  CHECK(gamma_density(f, make_u_neighborhood(f, 0, {0.2})) == doctest::Approx(2 * std::sqrt(5.0) * 0.2));
  const NumberField cubic = make_field({-1, -1, 0});
  // a = 0, b = 1: sqrt(23) * 2 pi eps^2
  CHECK(gamma_density(cubic, make_u_neighborhood(cubic, 0, {0.3})) ==
        doctest::Approx(std::sqrt(23.0) * 2 * M_PI * 0.09));
}

TEST_CASE("Y(L) against an independent scan") {
  const NumberField f = make_field({-1, -1});
  const UNeighborhood u = make_u_neighborhood(f, 0, {0.1});
  const LatticeEnumeration e = enumerate_Y(f, make_cylinder(f, 50.0, u), 2);
  CHECK(e.duplicates == 0);
  // oracle: y = a + b alpha^-1... written via w: y + s = w0, alpha y + psi s = w1
  std::vector<double> oracle;
  const double psi = -1.0 / f.alpha();
  for (long w0 = -60; w0 <= 60; ++w0) {
    for (long w1 = -100; w1 <= 100; ++w1) {
      const double s = (w1 - f.alpha() * w0) / (psi - f.alpha());
      const double y = w0 - s;
      if (std::abs(s) < 0.1 && std::abs(y) < 50.0) oracle.push_back(y);
    }
  }
  std::sort(oracle.begin(), oracle.end());
  REQUIRE(oracle.size() == e.ys.size());
  for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(e.ys[i] == doctest::Approx(oracle[i]).epsilon(1e-12));
  for (double y : e.ys) CHECK(in_U(f, y, u).member);
  // sigma invariance
  for (double y : e.ys) {
    if (std::abs(f.alpha() * y) < 50.0) CHECK(in_U(f, f.alpha() * y, u).member);
  }
}

TEST_CASE("Y(L) density with a complex pair and m != 0") {
  const NumberField cubic = make_field({-1, -1, 0});
  const UNeighborhood u = make_u_neighborhood(cubic, 2, {0.3});
  const LatticeCylinder cyl = make_cylinder(cubic, 5000.0, u);
  const LatticeEnumeration e = enumerate_Y(cubic, cyl, 4);
  CHECK(e.duplicates == 0);
  CHECK(static_cast<double>(e.ys.size()) / 1e4 == doctest::Approx(cyl.gamma).epsilon(0.03));
  CHECK(enumerate_Y(cubic, cyl, 1).ys == e.ys);
}

TEST_CASE("equidistribution") {
  const NumberField f = make_field({-1, -1});
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> pick(0.0, 1000.0);
  std::vector<double> ys(8000);
  for (auto& y : ys) y = pick(rng);
  const std::vector<double> head(ys.begin(), ys.begin() + 1000);
  CHECK(equidistribution_check(f, ys, 1) < 0.05);
  CHECK(equidistribution_check(f, ys, 2) < equidistribution_check(f, head, 2));
  CHECK(equidistribution_check(make_integer_dilation(2), ys, 2) > 0.1);
  CHECK_THROWS_AS(equidistribution_check(f, ys, 3), ValidationError);
}

}  // TEST_SUITE
