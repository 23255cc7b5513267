#pragma once

#include "arrkit/exactmath/int_poly.hpp"

namespace arrkit {

int euler_totient(int n);

// Phi_r computed by the quotient (z^r - 1) / prod_{d | r, d < r} Phi_d(z).
IntPoly cyclotomic_polynomial(int r);

// Shared, immutable data for arithmetic in Q(zeta_r) = Q[z]/(Phi_r).
struct CyclotomicContext {
  int order = 1;
  int degree = 1;  // deg Phi_r
  IntPoly phi;
};

// Contexts are created once per order and live for the whole process.
const CyclotomicContext& cyclotomic_context(int r);

}  // namespace arrkit
