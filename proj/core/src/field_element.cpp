#include "pisot/field_element.hpp"

#include <algorithm>
#include <stdexcept>

#include "pisot/errors.hpp"

namespace pisot {
namespace {

void require_degree(const NumberField& field, const FieldElement& e) {
  if (e.degree() != field.degree()) {
    throw ValidationError("field element has " + std::to_string(e.degree()) +
                          " coordinates; field degree is " + std::to_string(field.degree()));
  }
}

}  // namespace

FieldElement FieldElement::zero(int degree) {
  return FieldElement(std::vector<Rational>(static_cast<std::size_t>(degree)));
}

FieldElement FieldElement::rational(int degree, const Rational& q) {
  FieldElement e = zero(degree);
  e.coords_.front() = q;
  return e;
}

FieldElement FieldElement::from_integers(std::span<const std::int64_t> coords) {
  std::vector<Rational> c;
  c.reserve(coords.size());
  for (std::int64_t v : coords) c.emplace_back(static_cast<long>(v));
  return FieldElement(std::move(c));
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

bool FieldElement::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& q) { return q.get_den() == 1; });
}

Integer FieldElement::denominator_lcm() const {
  Integer l = 1;
  for (const auto& q : coords_) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  return l;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (o.degree() != degree()) throw ValidationError("field element degree mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  if (o.degree() != degree()) throw ValidationError("field element degree mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& q) {
  for (auto& c : coords_) c *= q;
  return *this;
}

FieldElement reduce(const NumberField& field, const RatPoly& p) {
  const int d = field.degree();
  const auto& P = field.minimal_polynomial();
  RatPoly r = p;
  for (std::size_t top = r.size(); top-- > static_cast<std::size_t>(d);) {
    const Rational lead = r[top];
    if (lead == 0) continue;
    for (int i = 0; i <= d; ++i) r[top - static_cast<std::size_t>(d) + static_cast<std::size_t>(i)] -= lead * P[static_cast<std::size_t>(i)];
  }
  r.resize(static_cast<std::size_t>(d));
  return FieldElement(std::move(r));
}

FieldElement multiply(const NumberField& field, const FieldElement& a, const FieldElement& b) {
  require_degree(field, a);
  require_degree(field, b);
  const int d = field.degree();
  RatPoly prod(static_cast<std::size_t>(2 * d - 1));
  for (int i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d; ++j) prod[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return reduce(field, prod);
}

std::vector<std::vector<Rational>> multiplication_matrix(const NumberField& field, const FieldElement& a) {
  require_degree(field, a);
  const int d = field.degree();
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
  FieldElement column = a;
  const FieldElement x = alpha_power(field, 1);
  for (int i = 0; i < d; ++i) {
    for (int r = 0; r < d; ++r) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] = column[r];
    if (i + 1 < d) column = multiply(field, column, x);
  }
  return m;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

FieldElement inverse(const NumberField& field, const FieldElement& a) {
  require_degree(field, a);
  if (a.is_zero()) throw std::domain_error("inverse of zero field element");
  const int d = field.degree();
  // Solve M_a x = e_0 by Gauss-Jordan elimination over Q.
  auto m = multiplication_matrix(field, a);
  std::vector<Rational> rhs(static_cast<std::size_t>(d));
  rhs[0] = 1;
  const auto n = static_cast<std::size_t>(d);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular multiplication matrix");
    std::swap(m[pivot], m[c]);
    std::swap(rhs[pivot], rhs[c]);
    const Rational inv = 1 / m[c][c];
    for (std::size_t k = c; k < n; ++k) m[c][k] *= inv;
    rhs[c] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  return FieldElement(std::move(rhs));
}

FieldElement alpha_power(const NumberField& field, int j) {
  const int d = field.degree();
  FieldElement base = FieldElement::zero(d);
  if (j == 0) return FieldElement::rational(d, 1);
  if (j > 0) {
    base = reduce(field, RatPoly{Rational(0), Rational(1)});
  } else {
    // alpha^{-1} = -(alpha^{d-1} + c_{d-1} alpha^{d-2} + ... + c_1) / c_0
    const auto& P = field.minimal_polynomial();
    std::vector<Rational> c(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = Rational(P[static_cast<std::size_t>(i + 1)]) / Rational(-P[0]);
    base = FieldElement(std::move(c));
  }
  FieldElement result = FieldElement::rational(d, 1);
  unsigned long e = static_cast<unsigned long>(j > 0 ? j : -static_cast<long>(j));
  while (e > 0) {
    if (e & 1UL) result = multiply(field, result, base);
    e >>= 1U;
    if (e > 0) base = multiply(field, base, base);
  }
  return result;
}

Rational trace(const FieldElement& elem, const NumberField& field) {
  const auto m = multiplication_matrix(field, elem);
  Rational t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

Rational norm(const FieldElement& elem, const NumberField& field) {
  return determinant(multiplication_matrix(field, elem));
}

Integer discriminant(const NumberField& field) {
  const int d = field.degree();
  if (d == 1) return 1;
  const RatPoly dp = derivative(to_rational(field.minimal_polynomial()));
  const Rational n = norm(reduce(field, dp), field);
  const long pairs = static_cast<long>(d) * (d - 1) / 2;
  Rational disc = (pairs % 2 == 0) ? n : Rational(-n);
  return disc.get_num();
}

BigComplex conjugate_hp(const NumberField& field, const FieldElement& elem, int k) {
  require_degree(field, elem);
  const BigComplex& z = field.roots_hp()[static_cast<std::size_t>(k)];
  const long prec = z.prec();
  BigComplex acc(prec);
  for (int i = field.degree(); i-- > 0;) {
    acc *= z;
    acc.re += BigFloat(elem[i], prec);
  }
  return acc;
}

std::complex<double> conjugate(const NumberField& field, const FieldElement& elem, int k) {
  return conjugate_hp(field, elem, k).to_complex();
}

LaurentTranslate::LaurentTranslate(std::map<int, std::int64_t> support) : support_(std::move(support)) {
  std::erase_if(support_, [](const auto& kv) { return kv.second == 0; });
}

LaurentTranslate LaurentTranslate::monomial(int exponent, std::int64_t coefficient) {
  return LaurentTranslate({{exponent, coefficient}});
}

int LaurentTranslate::min_exponent() const { return support_.empty() ? 0 : support_.begin()->first; }
int LaurentTranslate::max_exponent() const { return support_.empty() ? 0 : support_.rbegin()->first; }

LaurentTranslate& LaurentTranslate::operator+=(const LaurentTranslate& o) {
  for (const auto& [j, c] : o.support_) support_[j] += c;
  std::erase_if(support_, [](const auto& kv) { return kv.second == 0; });
  return *this;
}

LaurentEmbedding laurent_embed(const NumberField& field, const LaurentTranslate& t) {
  FieldElement sum = FieldElement::zero(field.degree());
  for (const auto& [j, c] : t.support()) {
    sum += alpha_power(field, j) * Rational(static_cast<long>(c));
  }
  const double value = conjugate(field, sum, 0).real();
  return {std::move(sum), value};
}

}  // namespace pisot
