#pragma once

#include "hodge/report.hpp"

#include <json.hpp>

#include <string>

namespace hodge {

enum class OutputFormat { Plain, Latex, Json };

/// Accepts "plain", "latex", "json"; throws PreconditionError otherwise.
OutputFormat parse_format(const std::string& name);

/// Human-readable form, terms in (e_u, e_v) lexicographic order:
/// "1 + u v + 2 u^2 v^2".
std::string to_plain(const BiPoly& p);
std::string to_plain(const UniPoly& p);

/// LaTeX form without whitespace; exponents braced when not 1, unit
/// coefficients omitted: gauss(1,2) renders as "1+uv".
std::string to_latex(const BiPoly& p);
std::string to_latex(const UniPoly& p);

/// Canonical JSON: {"terms":[{"eu":int,"ev":int,"c":"decimal"}]} sorted by
/// (eu, ev) lexicographic. Golden files are bit-exact against this layout.
nlohmann::ordered_json to_json(const BiPoly& p);
BiPoly bipoly_from_json(const nlohmann::json& j);

/// {"coeffs":[{"e":int,"c":"decimal"}]} sorted by exponent.
nlohmann::ordered_json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const CheckReport& r);
CheckReport report_from_json(const nlohmann::json& j);

} // namespace hodge
