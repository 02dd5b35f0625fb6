#include "pisot/number_field.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>

#include "pisot/errors.hpp"
#include "pisot/roots.hpp"

namespace pisot {
namespace {

// Conjugate partner of each root: the disk holding conj(z_i).
std::vector<int> conjugate_partners(const std::vector<RootEstimate>& roots) {
  const int d = static_cast<int>(roots.size());
  std::vector<int> partner(static_cast<std::size_t>(d), -1);
  for (int i = 0; i < d; ++i) {
    const auto& r = roots[static_cast<std::size_t>(i)];
    if (r.real) {
      partner[static_cast<std::size_t>(i)] = i;
      continue;
    }
    const BigComplex mirror = conj(r.value);
    for (int j = 0; j < d; ++j) {
      if (j == i) continue;
      const auto& o = roots[static_cast<std::size_t>(j)];
      if (abs(mirror - o.value) < r.radius + o.radius) {
        partner[static_cast<std::size_t>(i)] = j;
        break;
      }
    }
    if (partner[static_cast<std::size_t>(i)] < 0) {
      throw PrecisionError("could not pair a complex root with its conjugate");
    }
  }
  return partner;
}

// Searches conjugation-closed root subsets of size <= d/2 for a factor
// whose coefficients round to integers, and confirms candidates by exact
// division. Returns the factor when one exists.
std::optional<IntPoly> find_integer_factor(const IntPoly& poly,
                                           const std::vector<RootEstimate>& roots,
                                           const std::vector<int>& partner, long prec) {
  const int d = static_cast<int>(roots.size());
  const BigFloat tol(1e-6, prec);
  const std::uint32_t limit = std::uint32_t{1} << d;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    const int k = std::popcount(mask);
    if (k > d / 2) continue;
    bool closed = true;
    for (int i = 0; i < d && closed; ++i) {
      if ((mask >> i) & 1U) closed = ((mask >> partner[static_cast<std::size_t>(i)]) & 1U) != 0;
    }
    if (!closed) continue;

    std::vector<BigComplex> coeffs;
    coeffs.emplace_back(BigFloat(1.0, prec), BigFloat(prec));
    for (int i = 0; i < d; ++i) {
      if (!((mask >> i) & 1U)) continue;
      const BigComplex& z = roots[static_cast<std::size_t>(i)].value;
      std::vector<BigComplex> next(coeffs.size() + 1, BigComplex(prec));
      for (std::size_t c = 0; c < coeffs.size(); ++c) {
        next[c + 1] += coeffs[c];
        next[c] -= coeffs[c] * z;
      }
      coeffs = std::move(next);
    }
    IntPoly candidate;
    bool integral = true;
    for (const auto& c : coeffs) {
      if (abs(c.im) > tol) {
        integral = false;
        break;
      }
      Integer rounded = c.re.round_to_integer();
      if (abs(c.re - BigFloat(rounded, prec)) > tol) {
        integral = false;
        break;
      }
      candidate.push_back(rounded);
    }
    if (integral && divides_exactly(candidate, poly)) return candidate;
  }
  return std::nullopt;
}

std::vector<RootEstimate> roots_with_radius_below(const IntPoly& poly, long& prec) {
  for (int attempt = 0; attempt < 4; ++attempt, prec *= 2) {
    try {
      auto roots = certified_roots(poly, prec);
      const bool tight = std::all_of(roots.begin(), roots.end(), [](const RootEstimate& r) {
        return r.radius.to_double() < kMaxRootRadius;
      });
      if (tight) return roots;
    } catch (const PrecisionError&) {
      // retry at doubled precision
    }
  }
  throw PrecisionError("root radii could not be certified below 1e-9");
}

}  // namespace

std::string_view to_string(PvStatus status) {
  switch (status) {
    case PvStatus::pv: return "PV";
    case PvStatus::not_pv: return "not-PV";
    case PvStatus::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

double NumberField::max_conjugate_modulus() const {
  double m = 0.0;
  for (std::size_t k = 1; k < roots_.size(); ++k) m = std::max(m, std::abs(roots_[k]));
  return m;
}

NumberField NumberField::with_ring_index(std::int64_t b) const {
  if (b < 1) throw ValidationError("ring index B(alpha) must be a positive integer");
  NumberField out = *this;
  out.ring_index_ = b;
  return out;
}

NumberField make_field(std::initializer_list<std::int64_t> coeffs, const FieldOptions& options) {
  const std::vector<std::int64_t> v(coeffs);
  return make_field(std::span<const std::int64_t>(v), options);
}

NumberField make_field(std::span<const std::int64_t> coeffs, const FieldOptions& options) {
  if (coeffs.empty()) throw ValidationError("polynomial coefficient list is empty");
  const int d = static_cast<int>(coeffs.size());
  if (d < 2) throw ValidationError("field degree must be at least 2");
  if (d > kMaxFieldDegree) {
    throw ValidationError("field degree " + std::to_string(d) + " exceeds supported maximum " +
                          std::to_string(kMaxFieldDegree));
  }
  if (coeffs.front() == 0) throw ReducibleError("c_0 = 0: X divides the polynomial");
  if (options.ring_index < 1) throw ValidationError("ring index B(alpha) must be a positive integer");
  if (options.precision_bits < 53) throw ValidationError("precision must be at least 53 bits");

  IntPoly poly = monic_from_tail(coeffs);
  const RatPoly rp = to_rational(poly);
  if (degree(gcd(rp, derivative(rp))) > 0) {
    throw DegenerateError("minimal polynomial " + format_poly(coeffs) + " is not squarefree");
  }

  long prec = options.precision_bits;
  std::vector<RootEstimate> roots = roots_with_radius_below(poly, prec);
  const std::vector<int> partner = conjugate_partners(roots);
  if (auto factor = find_integer_factor(poly, roots, partner, prec)) {
    throw ReducibleError("polynomial " + format_poly(coeffs) + " has an integer factor of degree " +
                         std::to_string(factor->size() - 1));
  }

  // Dominant root: maximal modulus, ties broken toward real then positive.
  std::vector<BigFloat> modulus;
  for (const auto& r : roots) modulus.push_back(abs(r.value));
  const BigFloat slack = pow2(-(prec - 10), prec);
  auto tie = [&](int a, int b) {
    return abs(modulus[static_cast<std::size_t>(a)] - modulus[static_cast<std::size_t>(b)]) <=
           roots[static_cast<std::size_t>(a)].radius + roots[static_cast<std::size_t>(b)].radius + slack;
  };
  int dominant = 0;
  for (int i = 1; i < d; ++i) {
    const auto& cand = roots[static_cast<std::size_t>(i)];
    const auto& best = roots[static_cast<std::size_t>(dominant)];
    if (tie(i, dominant)) {
      const bool cand_better = (cand.real && !best.real) ||
                               (cand.real && best.real && cand.value.re.sign() > 0 && best.value.re.sign() < 0);
      if (cand_better) dominant = i;
    } else if (modulus[static_cast<std::size_t>(i)] > modulus[static_cast<std::size_t>(dominant)]) {
      dominant = i;
    }
  }

  std::vector<int> order{dominant};
  if (!roots[static_cast<std::size_t>(dominant)].real) order.push_back(partner[static_cast<std::size_t>(dominant)]);
  std::vector<int> reals, uppers;
  for (int i = 0; i < d; ++i) {
    if (std::find(order.begin(), order.end(), i) != order.end()) continue;
    if (roots[static_cast<std::size_t>(i)].real) {
      reals.push_back(i);
    } else if (roots[static_cast<std::size_t>(i)].value.im.sign() > 0) {
      uppers.push_back(i);
    }
  }
  auto by_modulus = [&](int a, int b) {
    const auto& ma = modulus[static_cast<std::size_t>(a)];
    const auto& mb = modulus[static_cast<std::size_t>(b)];
    if (ma > mb) return true;
    if (mb > ma) return false;
    return roots[static_cast<std::size_t>(a)].value.re > roots[static_cast<std::size_t>(b)].value.re;
  };
  std::sort(reals.begin(), reals.end(), by_modulus);
  std::sort(uppers.begin(), uppers.end(), by_modulus);
  for (int i : reals) order.push_back(i);
  for (int i : uppers) {
    order.push_back(i);
    order.push_back(partner[static_cast<std::size_t>(i)]);
  }

  NumberField field;
  field.coeffs_.assign(coeffs.begin(), coeffs.end());
  field.poly_ = std::move(poly);
  field.ring_index_ = options.ring_index;
  field.precision_bits_ = prec;
  std::vector<int> position(static_cast<std::size_t>(d));
  for (int p = 0; p < d; ++p) position[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
  for (int p = 0; p < d; ++p) {
    const auto& r = roots[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])];
    const std::complex<double> rounded = r.value.to_complex();
    const BigComplex rounding_error = r.value - BigComplex(rounded, prec);
    field.roots_hp_.push_back(r.value);
    field.roots_.push_back(rounded);
    field.radii_.push_back((r.radius + abs(rounding_error)).to_double());
    field.real_.push_back(r.real);
    field.conj_.push_back(position[static_cast<std::size_t>(partner[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])])]);
  }
  for (int k = 1; k < d; ++k) {
    if (field.real_[static_cast<std::size_t>(k)]) {
      ++field.real_count_;
    } else if (field.conj_[static_cast<std::size_t>(k)] > k && field.conj_[static_cast<std::size_t>(k)] != 0) {
      ++field.pair_count_;
    }
  }

  // PV certification on the high-precision moduli and radii.
  const auto& dom = roots[static_cast<std::size_t>(dominant)];
  const BigFloat one(1.0, prec);
  const BigFloat upper = one - BigFloat(kPvMargin, prec);
  bool certified = dom.real && modulus[static_cast<std::size_t>(dominant)] - dom.radius > one;
  bool refuted = !dom.real || modulus[static_cast<std::size_t>(dominant)] + dom.radius < one;
  for (int p = 1; p < d; ++p) {
    const int i = order[static_cast<std::size_t>(p)];
    const auto& m = modulus[static_cast<std::size_t>(i)];
    const auto& rad = roots[static_cast<std::size_t>(i)].radius;
    if (!(m + rad < upper)) certified = false;
    if (m - rad > one) refuted = true;
  }
  field.pv_status_ = refuted ? PvStatus::not_pv : certified ? PvStatus::pv : PvStatus::indeterminate;
  return field;
}

NumberField make_integer_dilation(std::int64_t n, const FieldOptions& options) {
  if (n > -2 && n < 2) throw ValidationError("integer dilation must satisfy |n| >= 2");
  NumberField field;
  field.coeffs_ = {-n};
  field.poly_ = {Integer(static_cast<long>(-n)), Integer(1)};
  field.roots_hp_.emplace_back(BigFloat(Integer(static_cast<long>(n)), options.precision_bits),
                               BigFloat(options.precision_bits));
  field.roots_.emplace_back(static_cast<double>(n), 0.0);
  field.radii_.push_back(0.0);
  field.real_.push_back(true);
  field.conj_.push_back(0);
  field.pv_status_ = PvStatus::not_pv;
  field.ring_index_ = options.ring_index;
  field.precision_bits_ = options.precision_bits;
  return field;
}

PvStatus is_pisot(const NumberField& field) { return field.pv_status(); }

std::vector<std::int64_t> parse_poly(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw ValidationError("invalid polynomial coefficient '" + std::string(token) + "' in \"" +
                            std::string(text) + "\"");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

std::string format_poly(std::span<const std::int64_t> coeffs) {
  std::ostringstream os;
  const int d = static_cast<int>(coeffs.size());
  os << "X^" << d;
  for (int i = d - 1; i >= 0; --i) {
    const std::int64_t c = coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    os << (c < 0 ? " - " : " + ");
    const std::int64_t a = c < 0 ? -c : c;
    if (i == 0) {
      os << a;
    } else {
      if (a != 1) os << a;
      os << "X";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace pisot
