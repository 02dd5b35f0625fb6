#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pisot/bigfloat.hpp"

namespace pisot {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense univariate polynomials, coefficients stored lowest degree first.
using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

// X^d + c_{d-1} X^{d-1} + ... + c_0 from the tail coefficients c_0..c_{d-1}.
IntPoly monic_from_tail(std::span<const std::int64_t> tail);

RatPoly to_rational(const IntPoly& p);
void trim(RatPoly& p);
int degree(const RatPoly& p);
RatPoly derivative(const RatPoly& p);
std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den);
// Monic gcd over Q.
RatPoly gcd(RatPoly a, RatPoly b);

// True when the monic integer polynomial `factor` divides `p` in Z[X].
bool divides_exactly(const IntPoly& factor, const IntPoly& p);

BigComplex evaluate(const IntPoly& p, const BigComplex& z);
BigComplex evaluate_derivative(const IntPoly& p, const BigComplex& z);

}  // namespace pisot
