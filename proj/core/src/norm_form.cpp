#include <atomic>
#include <algorithm>
#include <cmath>
#include <random>

#include "parallel.hpp"
#include "pisot/errors.hpp"
#include "pisot/field_matrices.hpp"
#include "pisot/zero_density.hpp"

namespace pisot {
namespace {

using HpPoly = std::map<std::vector<int>, BigComplex>;
__extension__ typedef __int128 Int128;

HpPoly multiply_linear(const HpPoly& p, const std::vector<BigComplex>& row, long prec) {
  HpPoly out;
  for (const auto& [mono, c] : p) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::vector<int> m = mono;
      ++m[i];
      auto it = out.find(m);
      if (it == out.end()) it = out.emplace(m, BigComplex(prec)).first;
      it->second += c * row[i];
    }
  }
  return out;
}

}  // namespace

Integer NormForm::evaluate(const std::vector<std::int64_t>& n) const {
  if (static_cast<int>(n.size()) != degree) throw ValidationError("norm form needs " + std::to_string(degree) + " values");
  Integer acc = 0;
  for (const auto& [mono, c] : numerator) {
    Integer term = c;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      for (int e = 0; e < mono[i]; ++e) term *= Integer(static_cast<long>(n[i]));
    }
    acc += term;
  }
  return acc;
}

Rational norm_of_first(const NumberField& field, const std::vector<std::int64_t>& n) {
  const auto ell = lagrange_row(field);
  if (n.size() != ell.size()) throw ValidationError("norm needs " + std::to_string(ell.size()) + " values");
  FieldElement mu = FieldElement::zero(field.degree());
  for (std::size_t i = 0; i < n.size(); ++i) mu += ell[i] * Rational(static_cast<long>(n[i]));
  return norm(mu, field);
}

NormForm norm_form(const NumberField& field, int checks) {
  const int d = field.degree();
  const long prec = field.precision_bits();
  const auto vinv = inverse_vandermonde_hp(field);
  HpPoly poly;
  poly.emplace(std::vector<int>(static_cast<std::size_t>(d), 0), BigComplex(std::complex<double>(1.0, 0.0), prec));
  for (int k = 0; k < d; ++k) poly = multiply_linear(poly, vinv[static_cast<std::size_t>(k)], prec);

  const Integer disc = abs(discriminant(field));
  const BigFloat scale(disc, prec);
  NormForm form;
  form.degree = d;
  Integer g = disc;
  for (auto& [mono, c] : poly) {
    const BigFloat re = c.re * scale;
    const BigFloat im = c.im * scale;
    const Integer rounded = re.round_to_integer();
    const double residual = std::max(std::abs((re - BigFloat(rounded, prec)).to_double()), std::abs(im.to_double()));
    if (residual > 1e-6) {
      throw PrecisionError("norm form coefficient is " + std::to_string(residual) +
                           " away from an integer multiple of 1/|disc|; raise the precision");
    }
    if (rounded != 0) {
      form.numerator[mono] = rounded;
      g = gcd(g, abs(rounded));
    }
  }
  for (auto& [mono, c] : form.numerator) c /= g;
  form.denominator = disc / g;

  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::int64_t> pick(-50, 50);
  const auto ell = lagrange_row(field);
  for (int t = 0; t < checks; ++t) {
    std::vector<std::int64_t> n(static_cast<std::size_t>(d));
    for (auto& x : n) x = pick(rng);
    if (t == 0) {
      std::fill(n.begin(), n.end(), 0);
      n[0] = 1;
    }
    FieldElement mu = FieldElement::zero(d);
    for (int i = 0; i < d; ++i) mu += ell[static_cast<std::size_t>(i)] * Rational(static_cast<long>(n[static_cast<std::size_t>(i)]));
    const Rational exact = norm(mu, field);
    Rational value(form.evaluate(n), form.denominator);
    value.canonicalize();
    if (value != exact) {
      throw PrecisionError("norm form disagrees with the exact norm; raise the precision");
    }
  }
  return form;
}

NormCount count_norm_values(const NumberField& field, std::int64_t L, std::int64_t box, int threads) {
  return count_norm_values(norm_form(field), field.degree(), L, box, threads);
}

NormCount count_norm_values(const NormForm& form, int degree, std::int64_t L, std::int64_t box, int threads) {
  if (L < 1) throw ValidationError("L must be at least 1");
  if (L > 4'000'000'000LL) throw SizeError("L above 4e9 needs more than 500 MB of bitset");
  if (box <= 0) {
    box = static_cast<std::int64_t>(std::ceil(std::pow(static_cast<double>(L) * form.denominator.get_d(), 1.0 / degree))) + 2;
  }
  const double evaluations = static_cast<double>(box + 1) * static_cast<double>(2 * box + 1);
  if (evaluations > kMaxNormEvaluations) {
    throw SizeError("norm count needs " + std::to_string(evaluations) + " form evaluations, limit is 1e8");
  }

  // binary restriction: coefficient b[j] of n1^{d-j} n2^j
  std::vector<std::int64_t> b(static_cast<std::size_t>(degree + 1), 0);
  double bound = 0.0;
  for (const auto& [mono, c] : form.numerator) {
    bool binary = true;
    for (std::size_t i = 2; i < mono.size(); ++i) binary = binary && mono[i] == 0;
    if (!binary) continue;
    const int j = mono.size() > 1 ? mono[1] : 0;
    if (!c.fits_slong_p()) throw SizeError("norm form coefficient does not fit in 64 bits");
    b[static_cast<std::size_t>(j)] = c.get_si();
    bound += std::abs(c.get_d());
  }
  if (bound * std::pow(static_cast<double>(box), degree) > std::ldexp(1.0, 120)) {
    throw SizeError("form values overflow 128-bit evaluation for this box");
  }

  const std::size_t words = static_cast<std::size_t>(L / 64 + 1);
  std::vector<std::atomic<std::uint64_t>> bits(words);
  detail::parallel_chunks(box + 1, 16, threads, [&](std::int64_t, std::int64_t begin, std::int64_t end) {
    for (std::int64_t n1 = begin; n1 < end; ++n1) {
      for (std::int64_t n2 = -box; n2 <= box; ++n2) {
        Int128 v = 0;
        Int128 p1 = 1;
        // Horner in n2 with powers of n1 folded in from the top
        for (int j = degree; j >= 0; --j) {
          v = v * n2 + static_cast<Int128>(b[static_cast<std::size_t>(j)]) * p1;
          p1 *= n1;
        }
        if (v < 0) v = -v;
        if (v >= 1 && v <= L) {
          const auto x = static_cast<std::uint64_t>(v);
          bits[x / 64].fetch_or(std::uint64_t{1} << (x % 64), std::memory_order_relaxed);
        }
      }
    }
  });

  NormCount out;
  out.box = box;
  std::vector<std::int64_t> checkpoints;
  const double floor_L = std::max(16.0, std::sqrt(static_cast<double>(L)));
  for (std::int64_t l = L; l >= 1 && (static_cast<double>(l) >= floor_L || checkpoints.empty()); l /= 2) {
    checkpoints.push_back(l);
  }
  std::reverse(checkpoints.begin(), checkpoints.end());
  std::size_t running = 0;
  std::int64_t counted = 0;
  for (std::int64_t l : checkpoints) {
    for (std::int64_t x = counted + 1; x <= l; ++x) {
      if ((bits[static_cast<std::size_t>(x / 64)].load() >> (x % 64)) & 1U) ++running;
    }
    counted = l;
    const double dl = static_cast<double>(l);
    const double scale = degree == 2 ? (l > 1 ? dl / std::log(dl) : 1.0) : std::pow(dl, 2.0 / degree);
    out.rows.push_back({l, running, static_cast<double>(running) / scale});
  }
  out.count = running;
  if (out.rows.size() >= 2) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    double k = 0.0;
    for (const auto& r : out.rows) {
      if (r.count == 0) continue;
      const double x = std::log(static_cast<double>(r.L));
      const double y = std::log(static_cast<double>(r.count));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      k += 1.0;
    }
    if (k >= 2.0) out.exponent = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  }
  return out;
}

}  // namespace pisot
