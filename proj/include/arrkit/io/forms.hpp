#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrkit/arrangement/arrangement.hpp"

namespace arrkit {

// Plain-text linear forms. Segments are separated by ';', '.' or newlines.
// A segment is one form ("2*x1 + x2 - x3") or a product of factors
// ("x_2(x_1+x_3-x_5)(2x_1+x_2+x_3)"), each factor giving one hyperplane.
//
// Variables: x1, x_1, x_{1}, and z (the coordinate after the last x, or the
// last coordinate when dim is given). Coefficients: integers, p/q, and in a
// cyclotomic field zeta, \zeta or ζ with optional ^n, plus parenthesized
// sums of those. LaTeX spacing (\, \; &, \\) is ignored.
struct ParsedForms {
  Arrangement arrangement;
  std::size_t duplicates = 0;
  std::vector<std::string> warnings;
};

// Throws ParseError with the byte offset of the problem.
ParsedForms parse_linear_forms(std::string_view text, std::optional<std::size_t> dim = std::nullopt,
                               const Field& field = Field::rational());

// Inverse of the parser for one hyperplane, e.g. "x1 - 1/2*x3".
std::string format_linear_form(const Vec& normal);

}  // namespace arrkit
