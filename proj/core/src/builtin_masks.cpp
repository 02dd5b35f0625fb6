#include <algorithm>
#include <cmath>

#include "pisot/errors.hpp"
#include "pisot/refinement.hpp"

namespace pisot {
namespace {

std::string canonical(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) {
    return c == '-' ? '_' : static_cast<char>(std::tolower(c));
  });
  return name;
}

Eigen::MatrixXcd mat2(double a, double b, double c, double d) {
  Eigen::MatrixXcd m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

std::vector<std::string> builtin_mask_names() { return {"boxcar", "dyadic", "bernoulli", "golden_vector"}; }

RefinementMask builtin_mask(const std::string& name, const std::optional<NumberField>& field) {
  const std::string key = canonical(name);
  if (key == "boxcar") {
    return make_scalar_mask(make_integer_dilation(2), {1.0, 1.0}, {LaurentTranslate{}, LaurentTranslate::monomial(0)},
                            "boxcar");
  }
  if (key == "dyadic") {
    MaskGenerator gen;
    gen.name = "dyadic";
    gen.term = [](int k) {
      Eigen::MatrixXcd a(1, 1);
      a(0, 0) = std::ldexp(1.0, 1 - k);
      return std::pair{a, LaurentTranslate::monomial(1 - k)};
    };
    gen.envelope = {2.0, 0.5};
    return make_generated_mask(make_integer_dilation(2), gen, 1);
  }
  if (key == "bernoulli") {
    NumberField f = field ? *field : make_field({-1, -1});
    if (!f.is_pv()) throw NotPisotError("bernoulli mask needs a PV dilation, got " + format_poly(f.coeffs()));
    const double half = std::abs(f.alpha()) / 2.0;
    return make_scalar_mask(std::move(f), {half, half}, {LaurentTranslate{}, LaurentTranslate::monomial(0)},
                            "bernoulli");
  }
  if (key == "golden_vector" || key == "golden") {
    return make_mask(make_field({-1, -1}), {mat2(0, 1, 0, 1), mat2(0, 0, 1, 0)},
                     {LaurentTranslate{}, LaurentTranslate::monomial(0)}, 2, std::nullopt, "golden_vector");
  }
  throw UnknownExampleError("unknown mask '" + name + "'; expected one of boxcar, dyadic, bernoulli, golden_vector");
}

}  // namespace pisot
