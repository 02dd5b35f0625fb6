#pragma once

#include <vector>

#include "pisot/bigfloat.hpp"
#include "pisot/polynomial.hpp"

namespace pisot {

// A root approximation together with the radius of a disk that provably
// contains exactly one root of the polynomial.
struct RootEstimate {
  BigComplex value;
  BigFloat radius;
  bool real = false;
};

// All complex roots of a squarefree monic integer polynomial by Aberth
// iteration at `prec` bits, followed by a Newton polish. Inclusion radii
// come from the Weierstrass correction bound d*|P(z_i)|/|prod_{j!=i}(z_i-z_j)|
// widened by the evaluation rounding error; disks are checked to be pairwise
// disjoint so each holds exactly one root. Throws PrecisionError when the
// iteration stalls or disks overlap.
std::vector<RootEstimate> certified_roots(const IntPoly& monic, long prec);

}  // namespace pisot
