#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "pisot/field_element.hpp"
#include "pisot/number_field.hpp"

namespace pisot {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// V: Vandermonde with V(i, k) = alpha_k^i. V_inv is assembled row by row
// from the Lagrange polynomials Q_k(X) = P(X) / ((X - alpha_k) P'(alpha_k)),
// so V_inv(k, i) is the coefficient of X^i in Q_k. C is the companion
// matrix with last row -c_0 .. -c_{d-1}; D = diag(alpha_1..alpha_d).
struct FieldMatrices {
  Eigen::MatrixXcd V;
  Eigen::MatrixXcd V_inv;
  IntMatrix C;
  Eigen::MatrixXcd D;
  std::complex<double> det_V;
};

// Throws PrecisionError when max|CV - VD| exceeds 1e-8.
FieldMatrices field_matrices(const NumberField& field);

// V_inv at the field's working precision.
std::vector<std::vector<BigComplex>> inverse_vandermonde_hp(const NumberField& field);

// Row 1 of V_inv as exact elements of Q[alpha].
std::vector<FieldElement> lagrange_row(const NumberField& field);

}  // namespace pisot
