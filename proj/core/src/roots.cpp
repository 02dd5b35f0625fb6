#include "pisot/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pisot/errors.hpp"

namespace pisot {
namespace {

// Sum of |c_k| |z|^k; scales the rounding error of a Horner evaluation.
BigFloat evaluation_scale(const IntPoly& p, const BigFloat& modulus) {
  const long prec = modulus.prec();
  BigFloat acc(prec);
  for (std::size_t i = p.size(); i-- > 0;) {
    acc *= modulus;
    acc += abs(BigFloat(p[i], prec));
  }
  return acc;
}

std::vector<BigComplex> initial_guesses(const IntPoly& p, long prec) {
  const int d = static_cast<int>(p.size()) - 1;
  // Fujiwara-style bound keeps every start outside the cluster of roots.
  double bound = 0.0;
  for (int i = 0; i < d; ++i) {
    const double c = std::fabs(p[static_cast<std::size_t>(i)].get_d());
    if (c > 0) bound = std::max(bound, std::pow(c, 1.0 / (d - i)));
  }
  const double radius = std::max(1.0, bound);
  std::vector<BigComplex> z;
  z.reserve(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / d + 0.4;
    z.emplace_back(std::polar(radius, angle), prec);
  }
  return z;
}

}  // namespace

std::vector<RootEstimate> certified_roots(const IntPoly& monic, long prec) {
  const int d = static_cast<int>(monic.size()) - 1;
  if (d < 1) throw DegenerateError("polynomial has no roots");
  std::vector<BigComplex> z = initial_guesses(monic, prec);

  const BigFloat one(1.0, prec);
  const BigFloat stop = pow2(-(prec - 8), prec);
  bool converged = false;
  for (int iter = 0; iter < 2000 && !converged; ++iter) {
    converged = true;
    for (int i = 0; i < d; ++i) {
      auto& zi = z[static_cast<std::size_t>(i)];
      BigComplex ratio = evaluate(monic, zi) / evaluate_derivative(monic, zi);
      BigComplex repulsion(prec);
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        BigComplex diff = zi - z[static_cast<std::size_t>(j)];
        BigComplex unit(one, BigFloat(prec));
        repulsion += unit / diff;
      }
      BigComplex denom(one, BigFloat(prec));
      denom -= ratio * repulsion;
      BigComplex step = ratio / denom;
      zi -= step;
      BigFloat scale = abs(zi);
      if (scale < one) scale = one;
      if (abs(step) > stop * scale) converged = false;
    }
  }
  if (!converged) throw PrecisionError("Aberth iteration did not converge");

  for (int polish = 0; polish < 2; ++polish) {
    for (auto& zi : z) zi -= evaluate(monic, zi) / evaluate_derivative(monic, zi);
  }

  const BigFloat eps = pow2(-(prec - 4), prec);
  std::vector<RootEstimate> out;
  out.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const auto& zi = z[static_cast<std::size_t>(i)];
    BigFloat residual = abs(evaluate(monic, zi));
    residual += eps * evaluation_scale(monic, abs(zi)) * BigFloat(static_cast<double>(d), prec);
    BigComplex prod(one, BigFloat(prec));
    for (int j = 0; j < d; ++j) {
      if (j != i) prod *= zi - z[static_cast<std::size_t>(j)];
    }
    BigFloat radius = BigFloat(static_cast<double>(d), prec) * residual / abs(prod);
    out.push_back({zi, radius, false});
  }

  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const auto& a = out[static_cast<std::size_t>(i)];
      const auto& b = out[static_cast<std::size_t>(j)];
      if (!(a.radius + b.radius < abs(a.value - b.value))) {
        throw PrecisionError("root inclusion disks overlap; increase precision");
      }
    }
  }

  // A disk that meets the real axis and whose mirror image meets no other
  // disk holds a root equal to its own conjugate.
  for (int i = 0; i < d; ++i) {
    auto& r = out[static_cast<std::size_t>(i)];
    if (abs(r.value.im) > r.radius) continue;
    const BigComplex mirror = conj(r.value);
    bool isolated = true;
    for (int j = 0; j < d && isolated; ++j) {
      if (j == i) continue;
      const auto& o = out[static_cast<std::size_t>(j)];
      if (!(r.radius + o.radius < abs(mirror - o.value))) isolated = false;
    }
    if (isolated) {
      r.real = true;
      r.value.im = BigFloat(prec);
    }
  }
  return out;
}

}  // namespace pisot
