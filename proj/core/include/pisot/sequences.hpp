#pragma once

#include <vector>

#include "pisot/field_element.hpp"
#include "pisot/number_field.hpp"

namespace pisot {

// s(j) = T(mu alpha^j) for j = 0..j_max: the first d values by exact traces,
// the rest from s(j) = -c_{d-1} s(j-1) - ... - c_0 s(j-d).
std::vector<Rational> trace_power_sequence(const NumberField& field, const FieldElement& mu, int j_max);

// T(mu alpha^j) for any integer j.
Rational trace_power(const NumberField& field, const FieldElement& mu, int j);

// T(mu alpha^j) integral for j = 0..d-1. Throws NotPisotError on non-PV fields.
bool pisot_set_test(const NumberField& field, const FieldElement& mu);

// ||x|| = min_k |x - k|.
double dist_to_int(double x);

// sigma_1(mu) alpha^j reduced into [0, modulus). Uses
// mu alpha^j = T(mu alpha^j) - sum_{k>=2} sigma_k(mu) alpha_k^j with the
// trace reduced exactly, whenever the conjugate sum is the smaller of the two
// floating quantities; so the result keeps full double accuracy even when
// |alpha^j| is far beyond 2^53.
double residue_mod(const NumberField& field, const FieldElement& mu, int j, int modulus);

struct HomoclinicPoint {
  int j = 0;
  double distance = 0.0;  // ||lambda alpha^j||
  double bound = 0.0;     // sum_{k>=2} |sigma_k(lambda)| |alpha_k|^j
  bool bound_applies = false;  // T(lambda alpha^j) is an integer
};

struct HomoclinicProfile {
  std::vector<HomoclinicPoint> points;
  int shift = 0;  // m with lambda alpha^m passing the Pisot-set test
  double fitted_slope = 0.0;    // least squares of log||lambda alpha^j|| on the upper half of the range
  double expected_slope = 0.0;  // log max_{k>=2} |alpha_k|
  bool bound_holds = true;
};

// Throws ValidationError when no shift lambda alpha^m (0 <= m <= 64) passes
// the Pisot-set test.
HomoclinicProfile homoclinic_profile(const NumberField& field, const FieldElement& lam, int j_lo, int j_hi);

}  // namespace pisot
