#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pisot/bigfloat.hpp"
#include "pisot/polynomial.hpp"

namespace pisot {

enum class PvStatus { pv, not_pv, indeterminate };

std::string_view to_string(PvStatus status);

// Distance below 1 that every non-dominant conjugate must clear, radius
// included, before a field is certified PV.
inline constexpr double kPvMargin = 1e-9;
inline constexpr double kMaxRootRadius = 1e-9;
inline constexpr int kMaxFieldDegree = 12;

struct FieldOptions {
  long precision_bits = kDefaultPrecisionBits;
  // B(alpha): O_alpha is contained in (1/B) Z[alpha]. Default 1 restricts
  // ring tests to Z[alpha].
  std::int64_t ring_index = 1;
};

// Q[alpha] for an algebraic integer alpha given by its monic minimal
// polynomial X^d + c_{d-1} X^{d-1} + ... + c_0. Roots are ordered with the
// dominant (maximal modulus, real when possible) root first, then the real
// conjugates by decreasing modulus, then complex pairs (positive imaginary
// part first) by decreasing modulus.
class NumberField {
 public:
  int degree() const { return static_cast<int>(coeffs_.size()); }
  // c_0..c_{d-1}.
  std::span<const std::int64_t> coeffs() const { return coeffs_; }
  const IntPoly& minimal_polynomial() const { return poly_; }

  std::span<const std::complex<double>> roots() const { return roots_; }
  std::span<const double> radii() const { return radii_; }
  const std::vector<BigComplex>& roots_hp() const { return roots_hp_; }
  bool root_is_real(int k) const { return real_[static_cast<std::size_t>(k)]; }
  // Index of the complex conjugate of root k (k itself for real roots).
  int conjugate_of(int k) const { return conj_[static_cast<std::size_t>(k)]; }

  // Dominant root as a real number; only meaningful when it is real.
  double alpha() const { return roots_.front().real(); }
  PvStatus pv_status() const { return pv_status_; }
  bool is_pv() const { return pv_status_ == PvStatus::pv; }
  // Real conjugates / complex conjugate pairs among alpha_2..alpha_d.
  int real_count() const { return real_count_; }
  int complex_pair_count() const { return pair_count_; }
  // Largest modulus among alpha_2..alpha_d.
  double max_conjugate_modulus() const;

  std::int64_t ring_index() const { return ring_index_; }
  long precision_bits() const { return precision_bits_; }
  NumberField with_ring_index(std::int64_t b) const;

 private:
  friend NumberField make_field(std::span<const std::int64_t>, const FieldOptions&);
  friend NumberField make_integer_dilation(std::int64_t, const FieldOptions&);

  std::vector<std::int64_t> coeffs_;
  IntPoly poly_;
  std::vector<BigComplex> roots_hp_;
  std::vector<std::complex<double>> roots_;
  std::vector<double> radii_;
  std::vector<bool> real_;
  std::vector<int> conj_;
  PvStatus pv_status_ = PvStatus::indeterminate;
  int real_count_ = 0;
  int pair_count_ = 0;
  std::int64_t ring_index_ = 1;
  long precision_bits_ = kDefaultPrecisionBits;
};

// Certified construction. Throws ValidationError for malformed input,
// DegenerateError when P is not squarefree, ReducibleError when P factors
// over Z, PrecisionError when the root radii cannot be pushed below 1e-9.
NumberField make_field(std::span<const std::int64_t> coeffs, const FieldOptions& options = {});
NumberField make_field(std::initializer_list<std::int64_t> coeffs, const FieldOptions& options = {});

// Degree-one "field" Q for an integer dilation n with |n| >= 2 (minimal
// polynomial X - n). Used by integer-dilation refinement masks.
NumberField make_integer_dilation(std::int64_t n, const FieldOptions& options = {});

PvStatus is_pisot(const NumberField& field);

// "c0,c1,...,c_{d-1}" with the leading 1 implicit.
std::vector<std::int64_t> parse_poly(std::string_view text);
std::string format_poly(std::span<const std::int64_t> coeffs);

// Exact discriminant of the minimal polynomial.
Integer discriminant(const NumberField& field);

}  // namespace pisot
