#pragma once

// Text front end shared by the CLI and the tests.  Literal formats:
//   values      "1", "0", "e^-4", "1/2", "(e^-4, 1)"
//   series      "1 + (1/2)t^2 + 8t^5", "{0, 2, 5}" (boolean supports),
//               trailing "+ O(t^17)" pins the truncation degree to 16
//   equations   "(e^-4,1)*x1 + (1,8)*x1' + (e^-1,8)*x1''", "x1^(3)", "x1'^2"
//   classical   "x1'' - x1", "(1 + t)*x1'", rational coefficients with signs
//   forests     "c * x1 * d(x1 * d(x2))"; x1^(j) sugars to j nested d(...)
// Errors carry the offending position (ParseError).

#include "tropdiff/diffpoly.hpp"
#include "tropdiff/forest.hpp"
#include "tropdiff/seminorm.hpp"

#include <optional>
#include <string>

namespace tropdiff {

SemiringValue parse_value(const std::string& text, Semiring tag);

// default_trunc applies when the literal carries no O(t^k) marker;
// std::nullopt makes the series exact.
TruncSeries parse_series(const std::string& text, Semiring tag,
                         std::optional<unsigned> default_trunc = std::nullopt);

RatSeries parse_rat_series(const std::string& text,
                           std::optional<unsigned> default_trunc = std::nullopt);

DiffPoly parse_diff_poly(const std::string& text, Semiring coeff_tag);

RatDiffPoly parse_rat_diff_poly(const std::string& text);

ForestExpr parse_forest(const std::string& text, Semiring coeff_tag);

}  // namespace tropdiff
