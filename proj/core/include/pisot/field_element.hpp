#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "pisot/number_field.hpp"
#include "pisot/polynomial.hpp"

namespace pisot {

// sum_i q_i alpha^i in the power basis 1, alpha, ..., alpha^{d-1}.
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static FieldElement zero(int degree);
  static FieldElement rational(int degree, const Rational& q);
  static FieldElement from_integers(std::span<const std::int64_t> coords);

  int degree() const { return static_cast<int>(coords_.size()); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  // All coordinates integral, i.e. the element lies in Z[alpha].
  bool is_integral() const;
  // L: least common multiple of the coordinate denominators.
  Integer denominator_lcm() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const Rational& q);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const Rational& q) { return a *= q; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Rational> coords_;
};

FieldElement multiply(const NumberField& field, const FieldElement& a, const FieldElement& b);
FieldElement inverse(const NumberField& field, const FieldElement& a);
// alpha^j for any integer j; negative powers use
// alpha^{-1} = -(alpha^{d-1} + c_{d-1} alpha^{d-2} + ... + c_1) / c_0.
FieldElement alpha_power(const NumberField& field, int j);
// Reduction of an arbitrary rational polynomial in alpha to the power basis.
FieldElement reduce(const NumberField& field, const RatPoly& p);

// Matrix of multiplication by `a` on the power basis (column i holds the
// coordinates of a * alpha^i).
std::vector<std::vector<Rational>> multiplication_matrix(const NumberField& field, const FieldElement& a);
Rational determinant(std::vector<std::vector<Rational>> m);

Rational trace(const FieldElement& elem, const NumberField& field);
Rational norm(const FieldElement& elem, const NumberField& field);

// sigma_k(elem): the image under the embedding alpha -> alpha_k.
std::complex<double> conjugate(const NumberField& field, const FieldElement& elem, int k);
BigComplex conjugate_hp(const NumberField& field, const FieldElement& elem, int k);

// tau = sum_j tau(j) alpha^j, an element of Z[alpha, alpha^{-1}].
class LaurentTranslate {
 public:
  LaurentTranslate() = default;
  explicit LaurentTranslate(std::map<int, std::int64_t> support);
  static LaurentTranslate monomial(int exponent, std::int64_t coefficient = 1);

  const std::map<int, std::int64_t>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  int min_exponent() const;
  int max_exponent() const;

  LaurentTranslate& operator+=(const LaurentTranslate& o);
  friend LaurentTranslate operator+(LaurentTranslate a, const LaurentTranslate& b) { return a += b; }
  friend bool operator==(const LaurentTranslate&, const LaurentTranslate&) = default;

 private:
  std::map<int, std::int64_t> support_;
};

struct LaurentEmbedding {
  FieldElement element;
  double value = 0.0;  // real embedding at the dominant root
};

LaurentEmbedding laurent_embed(const NumberField& field, const LaurentTranslate& t);

}  // namespace pisot
