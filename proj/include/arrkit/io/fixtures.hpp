#pragma once

#include <string_view>

namespace arrkit {

// Defining polynomial of the 21-hyperplane rank-5 arrangement D with
// exponents (1,5,5,5,5), in the form accepted by parse_linear_forms. The
// same text is kept in data/fixtures/arrangement_d.txt.
std::string_view arrangement_d_polynomial();

}  // namespace arrkit
