#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arrkit/arrangement/lattice.hpp"

namespace arrkit {

// rk X + rk Y = rk(X ∧ Y) + rk(X ∨ Y) for every flat Y.
bool is_modular(const Lattice& L, Lattice::Id x);

struct SupersolvableCertificate {
  std::vector<Lattice::Id> chain;  // V = X_0 < X_1 < ... < X_r
  std::vector<std::int64_t> exponents;
};

// Depth-first search for a maximal chain of modular flats.
std::optional<SupersolvableCertificate> supersolvable_certificate(const Lattice& L);

// Flag X_1 > ... > X_{r-2} (r the rank of the arrangement) along which the
// restriction characteristic polynomials divide one another. An empty flag
// is returned when r <= 2. Covers are tried by decreasing |A_X|; dead ends
// are remembered so a "none" verdict is an exhaustive one.
std::optional<std::vector<Lattice::Id>> divisional_flag_search(const Lattice& L);

}  // namespace arrkit
