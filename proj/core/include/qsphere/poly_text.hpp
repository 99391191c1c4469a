#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsphere/multipoly.hpp"

namespace qsphere {

/// x, y for arity 2; x, y, z for arity 3; x0..x3 for arity 4.
std::vector<std::string> default_variable_names(int arity);

/// Human-readable form, highest total degree first, e.g. "2*x*y - 4*z^2".
/// The output parses back with parse_polynomial.
std::string to_string(const MultiPoly& f);
std::string to_string(const MultiPoly& f, const std::vector<std::string>& names);

/// Parses sums of products of rationals, variables, parentheses and
/// non-negative integer powers ("x^2 + y^2 - z^2", "-2x^3 - x^2 z + 1/2").
/// Juxtaposition multiplies; division is allowed by constants only.
MultiPoly parse_polynomial(std::string_view text, int arity);
MultiPoly parse_polynomial(std::string_view text, const std::vector<std::string>& names);

}  // namespace qsphere
