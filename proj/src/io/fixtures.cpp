#include "arrkit/io/fixtures.hpp"

namespace arrkit {

std::string_view arrangement_d_polynomial() {
  return R"(x_2(x_1+x_3-x_5)(2x_1+x_2+x_3)(2x_1+x_2+2x_3+x_4-x_5)\\
x_5(x_1+x_3)(x_2+x_5)(2x_1+x_2+2x_3+x_4)(2x_1+x_3-x_5)\\
(2x_1+2x_2+2x_3+x_4)(x_2+x_3+x_4)(x_1+x_2+x_3+x_4)\\
(x_3+x_4)(x_1+x_2+x_3)x_1(x_1+x_3+x_4)(2x_1+x_2+x_3-x_5)\\
(x_2+x_3+x_4+x_5)(x_1-x_5)(x_1-x_4-x_5)x_4.)";
}

}  // namespace arrkit
