#include "pisot/sequences.hpp"

#include <cmath>
#include <limits>

#include "pisot/errors.hpp"

namespace pisot {
namespace {

// q mod m in [0, m) as a double, exact up to the final rounding.
double rational_mod(const Rational& q, int modulus) {
  const Integer den = q.get_den();
  Integer wrap = den * modulus;
  Integer num = q.get_num();
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), wrap.get_mpz_t());
  return Rational(r, den).get_d();
}

BigComplex power(const BigComplex& z, int j) {
  const long prec = z.prec();
  BigComplex result(BigFloat(1.0, prec), BigFloat(prec));
  BigComplex base = z;
  if (j < 0) {
    base = BigComplex(BigFloat(1.0, prec), BigFloat(prec)) / base;
  }
  unsigned long e = static_cast<unsigned long>(j < 0 ? -static_cast<long>(j) : j);
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace

std::vector<Rational> trace_power_sequence(const NumberField& field, const FieldElement& mu, int j_max) {
  const int d = field.degree();
  if (j_max < d - 1) throw ValidationError("j_max must be at least d - 1");
  std::vector<Rational> s;
  s.reserve(static_cast<std::size_t>(j_max) + 1);
  FieldElement term = mu;
  const FieldElement x = alpha_power(field, 1);
  for (int j = 0; j < d; ++j) {
    s.push_back(trace(term, field));
    if (j + 1 < d) term = multiply(field, term, x);
  }
  const auto c = field.coeffs();
  for (int j = d; j <= j_max; ++j) {
    Rational next = 0;
    for (int i = 0; i < d; ++i) {
      next -= Rational(static_cast<long>(c[static_cast<std::size_t>(i)])) * s[static_cast<std::size_t>(j - d + i)];
    }
    s.push_back(next);
  }
  return s;
}

Rational trace_power(const NumberField& field, const FieldElement& mu, int j) {
  return trace(multiply(field, mu, alpha_power(field, j)), field);
}

bool pisot_set_test(const NumberField& field, const FieldElement& mu) {
  if (!field.is_pv()) throw NotPisotError("Pisot-set test requires a PV dilation");
  if (mu.degree() != field.degree()) throw ValidationError("field element degree mismatch");
  const auto s = trace_power_sequence(field, mu, field.degree() - 1);
  for (const auto& v : s) {
    if (v.get_den() != 1) return false;
  }
  return true;
}

double dist_to_int(double x) { return std::fabs(x - std::nearbyint(x)); }

double residue_mod(const NumberField& field, const FieldElement& mu, int j, int modulus) {
  const int d = field.degree();
  const long prec = field.precision_bits();
  const BigComplex direct = conjugate_hp(field, mu, 0) * power(field.roots_hp()[0], j);
  BigComplex tail(prec);
  for (int k = 1; k < d; ++k) {
    tail += conjugate_hp(field, mu, k) * power(field.roots_hp()[static_cast<std::size_t>(k)], j);
  }
  const double m = static_cast<double>(modulus);
  double value = 0.0;
  if (d == 1 || abs(tail.re) < abs(direct.re)) {
    const double t = rational_mod(trace_power(field, mu, j), modulus);
    value = std::fmod(t - tail.re.to_double(), m);
  } else {
    value = std::fmod(direct.re.to_double(), m);
  }
  if (value < 0) value += m;
  if (value >= m) value -= m;
  return value;
}

HomoclinicProfile homoclinic_profile(const NumberField& field, const FieldElement& lam, int j_lo, int j_hi) {
  if (j_lo > j_hi) throw ValidationError("empty j range");
  if (lam.is_zero()) throw ValidationError("lambda must be nonzero");
  HomoclinicProfile out;
  out.shift = -1;
  for (int m = 0; m <= 64; ++m) {
    if (pisot_set_test(field, multiply(field, lam, alpha_power(field, m)))) {
      out.shift = m;
      break;
    }
  }
  if (out.shift < 0) throw ValidationError("lambda is not in the Pisot set of alpha (no shift up to 64)");

  const int d = field.degree();
  out.expected_slope = std::log(field.max_conjugate_modulus());
  std::vector<std::complex<double>> sigma;
  for (int k = 0; k < d; ++k) sigma.push_back(conjugate(field, lam, k));

  for (int j = j_lo; j <= j_hi; ++j) {
    HomoclinicPoint p;
    p.j = j;
    const double r = residue_mod(field, lam, j, 1);
    p.distance = std::min(r, 1.0 - r);
    for (int k = 1; k < d; ++k) {
      p.bound += std::abs(sigma[static_cast<std::size_t>(k)]) * std::pow(std::abs(field.roots()[static_cast<std::size_t>(k)]), j);
    }
    p.bound_applies = trace_power(field, lam, j).get_den() == 1;
    if (p.bound_applies && p.distance > p.bound * (1 + 1e-9) + 1e-15) out.bound_holds = false;
    out.points.push_back(p);
  }

  // Fit over the upper half of the range, skipping exact zeros.
  const int fit_from = std::max(0, j_lo + (j_hi - j_lo) / 2);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& p : out.points) {
    if (p.j < fit_from || !(p.distance > std::numeric_limits<double>::min())) continue;
    const double y = std::log(p.distance);
    sx += p.j;
    sy += y;
    sxx += static_cast<double>(p.j) * p.j;
    sxy += p.j * y;
    ++n;
  }
  if (n >= 2) {
    out.fitted_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  } else {
    out.fitted_slope = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

}  // namespace pisot
