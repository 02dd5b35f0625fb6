#include <algorithm>
#include <cmath>
#include <numbers>

#include "pisot/errors.hpp"
#include "pisot/field_matrices.hpp"
#include "pisot/solenoid.hpp"
#include "parallel.hpp"

namespace pisot {
namespace {

constexpr double kIntegralityTolerance = 1e-6;
constexpr double kMaxBoxCells = 1e8;

// Everything needed to test integer points against the cylinder.
struct CylinderGeometry {
  int d = 0;
  int m = 0;
  Eigen::MatrixXcd P;            // D^m V^{-1}
  std::vector<double> scale;     // alpha^{i-m}, i = 0..d-1
  std::vector<double> radius;    // sum_{k>=2} |alpha_k|^{i-m} eps_k
  std::vector<double> eps;       // eps per root (index 0 unused)
  std::vector<FieldElement> ell;  // exact row 1 of V^{-1}
  FieldElement alpha_m;
};

CylinderGeometry geometry(const NumberField& field, const UNeighborhood& u) {
  if (!field.is_pv()) throw NotPisotError("lattice machinery needs a PV dilation");
  CylinderGeometry g;
  g.d = field.degree();
  g.m = u.m;
  const FieldMatrices fm = field_matrices(field);
  Eigen::MatrixXcd Dm = Eigen::MatrixXcd::Zero(g.d, g.d);
  for (int k = 0; k < g.d; ++k) Dm(k, k) = std::pow(field.roots()[static_cast<std::size_t>(k)], u.m);
  g.P = Dm * fm.V_inv;
  g.eps.assign(1, 0.0);
  g.eps.insert(g.eps.end(), u.eps.begin(), u.eps.end());
  for (int i = 0; i < g.d; ++i) {
    g.scale.push_back(std::pow(field.alpha(), i - u.m));
    double r = 0.0;
    for (int k = 1; k < g.d; ++k) {
      r += std::pow(std::abs(field.roots()[static_cast<std::size_t>(k)]), i - u.m) * g.eps[static_cast<std::size_t>(k)];
    }
    g.radius.push_back(r);
  }
  g.ell = lagrange_row(field);
  g.alpha_m = alpha_power(field, u.m);
  return g;
}

// eta = alpha^m sum_i ell_i w_i, whose conjugates are the coordinates of
// D^m V^{-1} w.
FieldElement xi_element(const NumberField& field, const CylinderGeometry& g, const std::vector<std::int64_t>& w) {
  FieldElement acc = FieldElement::zero(g.d);
  for (int i = 0; i < g.d; ++i) {
    if (w[static_cast<std::size_t>(i)] != 0) {
      acc += g.ell[static_cast<std::size_t>(i)] * Rational(static_cast<long>(w[static_cast<std::size_t>(i)]));
    }
  }
  return multiply(field, acc, g.alpha_m);
}

struct PointCheck {
  bool inside = false;
  bool borderline = false;
  Eigen::VectorXcd u;
};

PointCheck check_point(const CylinderGeometry& g, const std::vector<std::int64_t>& w, double y_lo, double y_hi,
                       double margin) {
  Eigen::VectorXcd wv(g.d);
  for (int i = 0; i < g.d; ++i) wv(i) = static_cast<double>(w[static_cast<std::size_t>(i)]);
  PointCheck pc;
  pc.u = g.P * wv;
  bool inside = true;
  const double y = pc.u(0).real();
  const double ytol = margin * std::max(1.0, std::abs(y));
  if (y <= y_lo - ytol || y >= y_hi + ytol) return pc;
  if (y <= y_lo + ytol || y >= y_hi - ytol) pc.borderline = true;
  for (int k = 1; k < g.d; ++k) {
    const double r = std::abs(pc.u(k));
    const double e = g.eps[static_cast<std::size_t>(k)];
    if (r >= e + margin) {
      inside = false;
      break;
    }
    if (r >= e - margin) pc.borderline = true;
  }
  pc.inside = inside;
  return pc;
}

// hp confirmation of |sigma_1(eta) - y| and |sigma_k(eta)| < eps_k.
bool confirm_hp(const NumberField& field, const CylinderGeometry& g, const FieldElement& eta, double y_lo, double y_hi) {
  const BigComplex u1 = conjugate_hp(field, eta, 0);
  const long prec = field.precision_bits();
  if (!(u1.re > BigFloat(y_lo, prec) && u1.re < BigFloat(y_hi, prec))) return false;
  for (int k = 1; k < g.d; ++k) {
    const BigComplex uk = conjugate_hp(field, eta, k);
    if (!(abs(uk) < BigFloat(g.eps[static_cast<std::size_t>(k)], prec))) return false;
  }
  return true;
}

// Calls visit(w) for every integer w with w_0 fixed and w_i in the box slice
// implied by y in [y_lo, y_hi].
template <class Visit>
void scan_slice(const CylinderGeometry& g, std::int64_t w0, double y_lo, double y_hi, Visit&& visit) {
  std::vector<std::int64_t> lo(static_cast<std::size_t>(g.d)), hi(static_cast<std::size_t>(g.d));
  lo[0] = hi[0] = w0;
  for (int i = 1; i < g.d; ++i) {
    const double a = g.scale[static_cast<std::size_t>(i)] * y_lo;
    const double b = g.scale[static_cast<std::size_t>(i)] * y_hi;
    const double r = g.radius[static_cast<std::size_t>(i)] + 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
    lo[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(std::ceil(std::min(a, b) - r));
    hi[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(std::floor(std::max(a, b) + r));
    if (lo[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)]) return;
  }
  std::vector<std::int64_t> w = lo;
  while (true) {
    visit(w);
    int i = g.d - 1;
    while (i >= 1 && w[static_cast<std::size_t>(i)] == hi[static_cast<std::size_t>(i)]) {
      w[static_cast<std::size_t>(i)] = lo[static_cast<std::size_t>(i)];
      --i;
    }
    if (i < 1) return;
    ++w[static_cast<std::size_t>(i)];
  }
}

// y range compatible with a given w_0.
std::pair<double, double> y_range(const CylinderGeometry& g, std::int64_t w0, double L) {
  const double s = g.scale[0];
  const double a = (static_cast<double>(w0) - g.radius[0]) / s;
  const double b = (static_cast<double>(w0) + g.radius[0]) / s;
  return {std::max(-L, std::min(a, b)), std::min(L, std::max(a, b))};
}

double box_forecast(const CylinderGeometry& g, double y_lo, double y_hi) {
  double cells = 1.0;
  for (int i = 0; i < g.d; ++i) {
    const double a = g.scale[static_cast<std::size_t>(i)] * y_lo;
    const double b = g.scale[static_cast<std::size_t>(i)] * y_hi;
    cells *= std::abs(b - a) + 2.0 * g.radius[static_cast<std::size_t>(i)] + 1.0;
  }
  return cells;
}

}  // namespace

UNeighborhood make_u_neighborhood(const NumberField& field, int m, std::vector<double> eps) {
  const int d = field.degree();
  if (static_cast<int>(eps.size()) == 1 && d > 2) eps.assign(static_cast<std::size_t>(d - 1), eps[0]);
  if (static_cast<int>(eps.size()) != d - 1) {
    throw ValidationError("U(m, eps) needs " + std::to_string(d - 1) + " radii, got " + std::to_string(eps.size()));
  }
  for (double e : eps) {
    if (!(e > 0.0) || !std::isfinite(e)) throw ValidationError("eps entries must be positive");
  }
  for (int k = 1; k < d; ++k) {
    const int c = field.conjugate_of(k);
    if (c != k && eps[static_cast<std::size_t>(k - 1)] != eps[static_cast<std::size_t>(c - 1)]) {
      throw ValidationError("eps must agree on the complex conjugate roots " + std::to_string(k + 1) + " and " +
                            std::to_string(c + 1));
    }
  }
  return {m, std::move(eps)};
}

double gamma_density(const NumberField& field, const UNeighborhood& u) {
  if (!field.is_pv()) throw NotPisotError("gamma needs a PV dilation");
  const FieldMatrices fm = field_matrices(field);
  const double c0 = std::abs(static_cast<double>(field.coeffs()[0]));
  double gamma = std::abs(fm.det_V) * std::pow(c0, -u.m);
  for (int k = 1; k < field.degree(); ++k) {
    const double e = u.eps[static_cast<std::size_t>(k - 1)];
    if (field.root_is_real(k)) {
      gamma *= 2.0 * e;
    } else if (field.roots()[static_cast<std::size_t>(k)].imag() > 0.0) {
      gamma *= 2.0 * std::numbers::pi * e * e;
    }
  }
  return gamma;
}

LatticeCylinder make_cylinder(const NumberField& field, double L, const UNeighborhood& u) {
  if (!(L > 0.0) || !std::isfinite(L)) throw ValidationError("L must be positive");
  return {L, u, gamma_density(field, u)};
}

UMembership in_U(const NumberField& field, double y, const UNeighborhood& u) {
  const CylinderGeometry g = geometry(field, u);
  UMembership out;
  if (y == 0.0) {
    out.member = true;
    out.s.assign(static_cast<std::size_t>(g.d - 1), 0.0);
    out.w.assign(static_cast<std::size_t>(g.d), 0);
    return out;
  }
  const double tol = kIntegralityTolerance;
  const double y_lo = y - tol;
  const double y_hi = y + tol;
  if (box_forecast(g, y_lo, y_hi) > kMaxBoxCells) throw SizeError("candidate box for in_U is too large");
  const double r0 = g.radius[0] + tol * std::abs(g.scale[0]);
  const double a = g.scale[0] * y;
  const auto w0_lo = static_cast<std::int64_t>(std::ceil(a - r0));
  const auto w0_hi = static_cast<std::int64_t>(std::floor(a + r0));
  for (std::int64_t w0 = w0_lo; w0 <= w0_hi && !out.member; ++w0) {
    scan_slice(g, w0, y_lo, y_hi, [&](const std::vector<std::int64_t>& w) {
      if (out.member) return;
      const PointCheck pc = check_point(g, w, y_lo, y_hi, 1e-9);
      if (!pc.inside) return;
      const FieldElement eta = xi_element(field, g, w);
      if (!confirm_hp(field, g, eta, y_lo, y_hi)) return;
      out.member = true;
      out.w = w;
      for (int k = 1; k < g.d; ++k) out.s.push_back(conjugate_hp(field, eta, k).to_complex());
    });
  }
  return out;
}

LatticeEnumeration enumerate_Y(const NumberField& field, const LatticeCylinder& cyl, int threads) {
  const CylinderGeometry g = geometry(field, cyl.u);
  const double L = cyl.L;
  if (2.0 * L * cyl.gamma >= kMaxEnumeration) {
    throw SizeError("expected " + std::to_string(2.0 * L * cyl.gamma) + " points in Y(L), limit is 1e7");
  }
  const double reach = std::abs(g.scale[0]) * L + g.radius[0];
  const double slice = 2.0 * g.radius[0] / std::abs(g.scale[0]);
  if ((2.0 * reach + 1.0) * box_forecast(g, 0.0, slice) / (2.0 * g.radius[0] + 1.0) > kMaxBoxCells * 10.0) {
    throw SizeError("bounding box of W(L) is too large to scan");
  }

  const auto w0_lo = static_cast<std::int64_t>(std::ceil(-reach));
  const auto w0_hi = static_cast<std::int64_t>(std::floor(reach));
  const std::int64_t span = w0_hi - w0_lo + 1;
  const std::int64_t chunk = std::max<std::int64_t>(1, span / 256);
  const std::int64_t nchunks = detail::chunk_count(span, chunk);

  std::vector<std::vector<double>> found(static_cast<std::size_t>(nchunks));
  std::vector<std::size_t> visited(static_cast<std::size_t>(nchunks), 0);
  detail::parallel_chunks(span, chunk, threads, [&](std::int64_t c, std::int64_t begin, std::int64_t end) {
    auto& bucket = found[static_cast<std::size_t>(c)];
    std::size_t& seen = visited[static_cast<std::size_t>(c)];
    for (std::int64_t w0 = w0_lo + begin; w0 < w0_lo + end; ++w0) {
      const auto [y_lo, y_hi] = y_range(g, w0, L);
      if (y_lo >= y_hi) continue;
      scan_slice(g, w0, y_lo, y_hi, [&](const std::vector<std::int64_t>& w) {
        ++seen;
        const PointCheck pc = check_point(g, w, -L, L, 1e-9);
        if (!pc.inside) return;
        if (pc.borderline && !confirm_hp(field, g, xi_element(field, g, w), -L, L)) return;
        bucket.push_back(pc.u(0).real());
      });
    }
  });

  LatticeEnumeration out;
  for (std::size_t c = 0; c < found.size(); ++c) {
    out.ys.insert(out.ys.end(), found[c].begin(), found[c].end());
    out.candidates += visited[c];
  }
  std::sort(out.ys.begin(), out.ys.end());
  for (std::size_t i = 1; i < out.ys.size(); ++i) {
    if (out.ys[i] == out.ys[i - 1]) ++out.duplicates;
  }
  return out;
}

}  // namespace pisot
