#include "doctest.h"

#include <cmath>
#include <numbers>
#include <algorithm>
#include <random>
#include <set>

#include "pisot/errors.hpp"
#include "pisot/zero_density.hpp"

using namespace pisot;

TEST_SUITE("zero_density") {

TEST_CASE("near-zeros of the boxcar") {
  const RefinementMask box = builtin_mask("boxcar");
  auto phihat = [&](double y) { return std::abs(eval_phihat(box, y).scalar()); };
  const NearZeroSet z = scan_near_zeros(phihat, 8.0, 0.01, 1e-8, 2);
  REQUIRE(z.points.size() == 8);
  for (int k = 0; k < 8; ++k) CHECK(z.points[static_cast<std::size_t>(k)].y == doctest::Approx(k + 1.0).epsilon(1e-9));

  auto symbol = [&](double y) { return std::abs(eval_symbol(box, y).scalar()); };
  const NearZeroSet a = scan_near_zeros(symbol, 4.0, 0.01, 1e-8);
  REQUIRE(a.points.size() == 4);
  for (int k = 0; k < 4; ++k) CHECK(a.points[static_cast<std::size_t>(k)].y == doctest::Approx(k + 0.5).epsilon(1e-9));
}

TEST_CASE("refinement finds zeros between grid points") {
  // zeros at c and c + pi/3, both off the grid
  const double c = 0.123456789;
  auto f = [c](double y) { return std::abs(std::sin(3.0 * (y - c))); };
  const NearZeroSet z = scan_near_zeros(f, 2.0, 0.1, 1e-8);
  REQUIRE(z.points.size() == 2);
  CHECK(z.points[0].y == doctest::Approx(c).epsilon(1e-9));
  CHECK(z.points[1].y == doctest::Approx(c + std::numbers::pi / 3).epsilon(1e-9));
  CHECK(z.points[0].value < 1e-9);
}

TEST_CASE("dyadic symbol has no near-zeros") {
  const RefinementMask dy = builtin_mask("dyadic");
  auto f = [&](double y) { return std::abs(eval_symbol(dy, y).scalar()); };
  CHECK(scan_near_zeros(f, 128.0, 0.01, 1e-3, 4).points.empty());
}

TEST_CASE("monotone in delta and thread independent") {
  const RefinementMask box = builtin_mask("boxcar");
  auto f = [&](double y) { return std::abs(eval_phihat(box, y).scalar()) + 1e-7 * std::abs(std::sin(y)); };
  const NearZeroSet small = scan_near_zeros(f, 20.0, 0.01, 1e-8, 1);
  const NearZeroSet large = scan_near_zeros(f, 20.0, 0.01, 1e-6, 3);
  CHECK(small.points.size() <= large.points.size());
  for (const auto& p : small.points) {
    CHECK(std::any_of(large.points.begin(), large.points.end(), [&](const NearZeroPoint& q) { return q.y == p.y; }));
  }
  const NearZeroSet again = scan_near_zeros(f, 20.0, 0.01, 1e-6, 1);
  REQUIRE(again.points.size() == large.points.size());
  for (std::size_t i = 0; i < again.points.size(); ++i) CHECK(again.points[i].y == large.points[i].y);
}

TEST_CASE("densities") {
  const RefinementMask box = builtin_mask("boxcar");
  auto phihat = [&](double y) { return std::abs(eval_phihat(box, y).scalar()); };
  auto symbol = [&](double y) { return std::abs(eval_symbol(box, y).scalar()); };
  const DensityEstimate dp = density_estimate(scan_near_zeros(phihat, 100.0, 0.01, 1e-8, 4));
  const DensityEstimate da = density_estimate(scan_near_zeros(symbol, 100.0, 0.01, 1e-8, 4));
  CHECK(dp.lower == doctest::Approx(1.0));
  CHECK(dp.upper == doctest::Approx(1.0));
  CHECK(da.upper / dp.upper == doctest::Approx(1.0).epsilon(0.02));  // |alpha| - 1
  CHECK(dp.rows.size() == 10);
  const DensityEstimate empty = density_estimate(NearZeroSet{1e-8, 100.0, {}});
  CHECK(empty.lower == 0.0);
  CHECK(empty.upper == 0.0);
}

TEST_CASE("zero-set recursion for the boxcar") {
  const RefinementMask box = builtin_mask("boxcar");
  auto phihat = [&](double y) { return std::abs(eval_phihat(box, y).scalar()); };
  auto symbol = [&](double y) { return std::abs(eval_symbol(box, y).scalar()); };
  const auto zp = scan_near_zeros(phihat, 32.0, 0.01, 1e-8).points;
  const auto za = scan_near_zeros(symbol, 16.0, 0.01, 1e-8).points;
  for (const auto& p : zp) {
    bool found = false;
    for (const auto& q : za) found = found || std::abs(2.0 * q.y - p.y) < 1e-8;
    for (const auto& q : zp) found = found || std::abs(2.0 * q.y - p.y) < 1e-8;
    CHECK_MESSAGE(found, p.y);
  }
}

TEST_CASE("vanishing probe verdicts") {
  const std::vector<FieldElement> one1{FieldElement::rational(1, 1)};
  const std::vector<FieldElement> one2{FieldElement::rational(2, 1)};
  const auto bern = vanishing_probe(builtin_mask("bernoulli"), one2, 40);
  CHECK(bern[0].verdict == Verdict::bounded_away);
  CHECK(bern[0].tail_mean == doctest::Approx(0.0066135).epsilon(1e-3));
  const auto box = vanishing_probe(builtin_mask("boxcar"), one1, 40);
  CHECK(box[0].verdict == Verdict::tends_to_zero);
  CHECK(box[0].tail_max == 0.0);
  const auto dy = vanishing_probe(builtin_mask("dyadic"), one1, 40);
  CHECK(dy[0].verdict == Verdict::bounded_away);
  CHECK(dy[0].tail_mean == doctest::Approx(0.0738613).epsilon(1e-5));
  // stable under doubling J_max and halving the tolerance
  CHECK(vanishing_probe(builtin_mask("bernoulli"), one2, 80, kProbeDelta, 5e-13)[0].verdict == Verdict::bounded_away);
  CHECK(vanishing_probe(builtin_mask("dyadic"), one1, 80, kProbeDelta, 5e-13)[0].verdict == Verdict::bounded_away);
  CHECK_THROWS_AS(vanishing_probe(builtin_mask("bernoulli"), {FieldElement::rational(2, Rational(1, 3))}, 40),
                  ValidationError);
}

TEST_CASE("tail classification") {
  std::vector<double> decay;
  for (int j = 0; j < 30; ++j) decay.push_back(std::exp(-0.3 * j));
  CHECK(classify_tail(decay, 1e-8) == Verdict::tends_to_zero);
  CHECK(classify_tail(std::vector<double>(30, 0.5), 1e-8) == Verdict::bounded_away);
  std::vector<double> slow;
  for (int j = 0; j < 30; ++j) slow.push_back(std::exp(-0.01 * j));
  CHECK(classify_tail(slow, 1e-8) == Verdict::inconclusive);
}

TEST_CASE("golden norm form") {
  const NumberField f = make_field({-1, -1});
  const NormForm form = norm_form(f);
  CHECK(form.denominator == 5);
  CHECK(form.numerator.size() == 3);
  CHECK(form.numerator.at({2, 0}) == 1);
  CHECK(form.numerator.at({1, 1}) == 1);
  CHECK(form.numerator.at({0, 2}) == -1);
  CHECK(norm_of_first(f, {1, 0}) == Rational(1, 5));
}

TEST_CASE("norm form denominators divide the discriminant") {
  for (auto coeffs : {std::vector<std::int64_t>{-1, -1, 0}, {-1, 0, -1}, {-2, -2}, {-1, -1, -1}}) {
    const NumberField f = make_field(coeffs);
    const NormForm form = norm_form(f, 200);
    const Integer disc = abs(discriminant(f));
    CHECK(disc % form.denominator == 0);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> pick(-9, 9);
    for (int t = 0; t < 50; ++t) {
      std::vector<std::int64_t> n(static_cast<std::size_t>(f.degree()));
      for (auto& x : n) x = pick(rng);
      Rational v(form.evaluate(n), form.denominator);
      v.canonicalize();
      CHECK(v == norm_of_first(f, n));
    }
  }
}

TEST_CASE("norm value counts") {
  const NumberField f = make_field({-1, -1});
  CHECK(count_norm_values(f, 1).count >= 1);
  const NormCount c = count_norm_values(f, 100000, 0, 4);
  for (std::size_t i = 1; i < c.rows.size(); ++i) CHECK(c.rows[i].count >= c.rows[i - 1].count);
  const NormCount bigger_box = count_norm_values(f, 100000, c.box + 20, 2);
  CHECK(bigger_box.count >= c.count);
  CHECK(count_norm_values(f, 100000, 0, 1).count == c.count);
  // brute-force oracle on a small range
  const NormForm form = norm_form(f);
  std::set<long> values;
  for (long a = -40; a <= 40; ++a) {
    for (long b = -40; b <= 40; ++b) {
      const long v = std::labs(a * a + a * b - b * b);
      if (v >= 1 && v <= 1000) values.insert(v);
    }
  }
  CHECK(count_norm_values(form, 2, 1000, 40).count == values.size());
  const NormCount cubic = count_norm_values(make_field({-1, -1, 0}), 100000, 0, 4);
  CHECK(cubic.exponent >= 2.0 / 3.0 - 0.05);
  CHECK_THROWS_AS(count_norm_values(f, 1000, 100000), SizeError);
}

}  // TEST_SUITE
