#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pisot/refinement.hpp"

namespace pisot {

// Line-oriented key = value mask description, '#' starts a comment.
//
//   dilation-poly = -1,-1        c0,...,c_{d-1} of the minimal polynomial
//   dilation = 2                 integer dilation (instead of dilation-poly)
//   rank = 2
//   coeffs = [0,1|0,1]; [0,0|1,0]
//   translates = 0; 0:1          each term: 0, or exponent:coef pairs joined by ','
//   phihat0 = 0.618,1            optional
//
// Scalar masks write coeffs as "1; 1" (complex entries as 0.5-0.25i).
// "coeffs = generator:dyadic" selects the built-in generated mask.
RefinementMask parse_mask_text(std::string_view text, long precision_bits = kDefaultPrecisionBits);
RefinementMask load_mask_file(const std::string& path, long precision_bits = kDefaultPrecisionBits);

// Built-in name, or a path to a mask file when no built-in matches.
RefinementMask resolve_mask(const std::string& spec, const std::optional<NumberField>& field = std::nullopt,
                            long precision_bits = kDefaultPrecisionBits);

std::complex<double> parse_complex(std::string_view text);

}  // namespace pisot
