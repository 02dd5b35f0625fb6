#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pisot/number_field.hpp"
#include "pisot/refinement.hpp"

namespace pisot {

// Finite piece g(j_min..j_max) of a point g of the torus T^Z.
class SolenoidWindow {
 public:
  SolenoidWindow(int j_min, std::vector<double> vals);

  int j_min() const { return j_min_; }
  int j_max() const { return j_min_ + static_cast<int>(vals_.size()) - 1; }
  bool contains(int j) const { return j >= j_min() && j <= j_max(); }
  double operator()(int j) const;
  const std::vector<double>& values() const { return vals_; }

 private:
  int j_min_;
  std::vector<double> vals_;
};

// theta(y)(j) = y alpha^j mod 1, computed at the field's working precision.
// PrecisionError when |y| |alpha|^{j_max} leaves fewer than 64 fractional bits.
SolenoidWindow theta(const NumberField& field, double y, int j_min, int j_max);

// (sigma^k g)(j) = g(j + k) on the indices where both g and the shifted
// copy are defined.
SolenoidWindow shift(const SolenoidWindow& g, int k);

// A(g) = |alpha|^{-1} sum_k a(k) exp(-2 pi i sum_j tau_k(j) g(j)).
// WindowTooSmallError when g misses part of the support of a used tau_k.
SymbolValue eval_A(const RefinementMask& mask, const SolenoidWindow& g, double tol = kSymbolTolerance);

// rho_n(g) = [g(0), ..., g(n-1)].
std::vector<double> rho(const SolenoidWindow& g, int n);

// g(k) = 0 for k >= 0 and c_0^{-k} g(k) = 0 mod 1 for k < 0 on the window.
bool kernel_window_test(const NumberField& field, const SolenoidWindow& g);

struct UNeighborhood {
  int m = 0;
  std::vector<double> eps;  // eps_2..eps_d, one per non-dominant root
};

// Checks positivity and equal radii on complex conjugate pairs.
UNeighborhood make_u_neighborhood(const NumberField& field, int m, std::vector<double> eps);

struct UMembership {
  bool member = false;
  std::vector<std::complex<double>> s;  // witness s_2..s_d
  std::vector<std::int64_t> w;          // integer point V D^{-m} [y, s]
};

// theta(y) in U(m, eps): some s with |s_k| < eps_k makes V D^{-m} [y, s]
// integral. Candidates come from the bounding box of the cylinder and
// survive only after exact back-substitution in Q[alpha].
UMembership in_U(const NumberField& field, double y, const UNeighborhood& u);

struct LatticeCylinder {
  double L = 0.0;
  UNeighborhood u;
  double gamma = 0.0;
};

// |det V| |c_0|^{-m} 2^a (2 pi)^b prod eps, with eps^2 for each complex
// pair: the volume of W(L) per unit length.
double gamma_density(const NumberField& field, const UNeighborhood& u);
LatticeCylinder make_cylinder(const NumberField& field, double L, const UNeighborhood& u);

struct LatticeEnumeration {
  std::vector<double> ys;  // sorted Y(L)
  std::size_t duplicates = 0;
  std::size_t candidates = 0;
};

inline constexpr double kMaxEnumeration = 1e7;

// Y(L) as xi(W(L) cap Z^d). SizeError when 2 L gamma or the scanned box is
// too large.
LatticeEnumeration enumerate_Y(const NumberField& field, const LatticeCylinder& cyl, int threads = 1);

// Star discrepancy of rho_n(theta(y)) over the samples: exact for n = 1,
// a grid estimate otherwise.
double equidistribution_check(const NumberField& field, const std::vector<double>& y_samples, int n);

}  // namespace pisot
