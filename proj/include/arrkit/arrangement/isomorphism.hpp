#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "arrkit/arrangement/lattice.hpp"

namespace arrkit {

// A bijection phi of hyperplanes (phi[i] is the image of hyperplane i of A)
// sending every flat of A onto a flat of B of the same rank, i.e. an
// isomorphism of intersection lattices. Both lattices must be complete.
std::optional<std::vector<std::size_t>> lattice_isomorphism(const Lattice& a, const Lattice& b);

bool lattice_isomorphic(const Arrangement& a, const Arrangement& b, const LatticeOptions& opts = {});

}  // namespace arrkit
