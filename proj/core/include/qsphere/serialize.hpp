#pragma once

#include <string>
#include <string_view>

#include "qsphere/analysis.hpp"
#include "qsphere/constructors.hpp"

namespace qsphere {

/// {"arity": k, "terms": [{"exp": [...], "num": "...", "den": "..."}]}, terms
/// in ascending exponent order so equal polynomials serialize identically.
std::string poly_to_json(const MultiPoly& f, int indent = -1);
/// Throws ParseError on malformed input.
MultiPoly poly_from_json(std::string_view text);

/// {"n": order, "q": claimed q or null, "provenance": "...", "p": "a/b" or
/// null, "polynomial": <poly JSON>}.
std::string surface_to_json(const Surface& s, int indent = -1);
Surface surface_from_json(std::string_view text);

/// Report serializations. Floating values are rounded to 12 decimals.
std::string to_json(const MultiplicityReport& report, int indent = -1);
std::string to_json(const LineIntersection& report, int indent = -1);
std::string to_json(const LineFan& fan, int indent = -1);
std::string to_json(const CircleSection& section, int indent = -1);
std::string to_json(const AuditReport& report, int indent = -1);
std::string to_json(const FactorScan& scan, int indent = -1);
std::string to_json(const CSOrderReport& report, int indent = -1);

}  // namespace qsphere
