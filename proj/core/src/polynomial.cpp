#include "pisot/polynomial.hpp"

#include <stdexcept>

namespace pisot {

IntPoly monic_from_tail(std::span<const std::int64_t> tail) {
  IntPoly p;
  p.reserve(tail.size() + 1);
  for (std::int64_t c : tail) p.emplace_back(static_cast<long>(c));
  p.emplace_back(1);
  return p;
}

RatPoly to_rational(const IntPoly& p) {
  RatPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(c);
  return out;
}

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const RatPoly& p) {
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
  trim(out);
  return out;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den) {
  RatPoly d = den;
  trim(d);
  if (d.empty()) throw std::domain_error("polynomial division by zero");
  RatPoly r = num;
  trim(r);
  const int dd = degree(d);
  RatPoly q(r.size() >= d.size() ? r.size() - d.size() + 1 : 0);
  while (degree(r) >= dd) {
    const int shift = degree(r) - dd;
    Rational factor = r.back() / d.back();
    q[static_cast<std::size_t>(shift)] = factor;
    for (int i = 0; i <= dd; ++i) {
      r[static_cast<std::size_t>(i + shift)] -= factor * d[static_cast<std::size_t>(i)];
    }
    trim(r);
  }
  trim(q);
  return {q, r};
}

RatPoly gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

bool divides_exactly(const IntPoly& factor, const IntPoly& p) {
  if (factor.empty() || factor.back() != 1) return false;
  IntPoly r = p;
  const std::size_t df = factor.size() - 1;
  if (r.size() < factor.size()) return false;
  for (std::size_t top = r.size() - 1; top >= df; --top) {
    Integer lead = r[top];
    if (lead != 0) {
      for (std::size_t i = 0; i <= df; ++i) r[top - df + i] -= lead * factor[i];
    }
    if (top == df) break;
  }
  for (std::size_t i = 0; i < df; ++i) {
    if (r[i] != 0) return false;
  }
  return true;
}

BigComplex evaluate(const IntPoly& p, const BigComplex& z) {
  const long prec = z.prec();
  BigComplex acc(prec);
  for (std::size_t i = p.size(); i-- > 0;) {
    acc *= z;
    acc.re += BigFloat(p[i], prec);
  }
  return acc;
}

BigComplex evaluate_derivative(const IntPoly& p, const BigComplex& z) {
  const long prec = z.prec();
  BigComplex acc(prec);
  for (std::size_t i = p.size(); i-- > 1;) {
    acc *= z;
    acc.re += BigFloat(Integer(p[i] * static_cast<long>(i)), prec);
  }
  return acc;
}

}  // namespace pisot
