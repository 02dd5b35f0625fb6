#include "pisot/field_matrices.hpp"

#include <cmath>

#include "pisot/errors.hpp"

namespace pisot {

std::vector<std::vector<BigComplex>> inverse_vandermonde_hp(const NumberField& field) {
  const int d = field.degree();
  const long prec = field.precision_bits();
  const auto& P = field.minimal_polynomial();
  std::vector<std::vector<BigComplex>> out;
  out.reserve(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const BigComplex& z = field.roots_hp()[static_cast<std::size_t>(k)];
    // Synthetic division P(X) / (X - z).
    std::vector<BigComplex> b(static_cast<std::size_t>(d), BigComplex(prec));
    b[static_cast<std::size_t>(d - 1)] = BigComplex(BigFloat(1.0, prec), BigFloat(prec));
    for (int i = d - 1; i >= 1; --i) {
      BigComplex next = z * b[static_cast<std::size_t>(i)];
      next.re += BigFloat(P[static_cast<std::size_t>(i)], prec);
      b[static_cast<std::size_t>(i - 1)] = std::move(next);
    }
    const BigComplex dp = evaluate_derivative(P, z);
    for (auto& c : b) c /= dp;
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<FieldElement> lagrange_row(const NumberField& field) {
  const int d = field.degree();
  const auto& P = field.minimal_polynomial();
  const FieldElement x = alpha_power(field, 1);
  std::vector<FieldElement> b(static_cast<std::size_t>(d), FieldElement::zero(d));
  b[static_cast<std::size_t>(d - 1)] = FieldElement::rational(d, 1);
  for (int i = d - 1; i >= 1; --i) {
    b[static_cast<std::size_t>(i - 1)] = multiply(field, x, b[static_cast<std::size_t>(i)]) +
                                         FieldElement::rational(d, Rational(P[static_cast<std::size_t>(i)]));
  }
  const FieldElement dp_inv = inverse(field, reduce(field, derivative(to_rational(P))));
  for (auto& e : b) e = multiply(field, e, dp_inv);
  return b;
}

FieldMatrices field_matrices(const NumberField& field) {
  const int d = field.degree();
  FieldMatrices m;
  m.V.resize(d, d);
  m.D = Eigen::MatrixXcd::Zero(d, d);
  m.C = IntMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const std::complex<double> a = field.roots()[static_cast<std::size_t>(k)];
    std::complex<double> p = 1.0;
    for (int i = 0; i < d; ++i) {
      m.V(i, k) = p;
      p *= a;
    }
    m.D(k, k) = a;
  }
  for (int i = 0; i + 1 < d; ++i) m.C(i, i + 1) = 1;
  for (int i = 0; i < d; ++i) m.C(d - 1, i) = -field.coeffs()[static_cast<std::size_t>(i)];

  const auto vinv = inverse_vandermonde_hp(field);
  m.V_inv.resize(d, d);
  for (int k = 0; k < d; ++k) {
    for (int i = 0; i < d; ++i) m.V_inv(k, i) = vinv[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)].to_complex();
  }

  std::complex<double> det = 1.0;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) det *= field.roots()[static_cast<std::size_t>(j)] - field.roots()[static_cast<std::size_t>(i)];
  }
  m.det_V = det;

  const Eigen::MatrixXcd residual = m.C.cast<double>().cast<std::complex<double>>() * m.V - m.V * m.D;
  const double err = residual.cwiseAbs().maxCoeff();
  if (!(err <= 1e-8 * std::max(1.0, m.V.cwiseAbs().maxCoeff()))) {
    throw PrecisionError("companion relation CV = VD fails: max residual " + std::to_string(err));
  }
  return m;
}

}  // namespace pisot
