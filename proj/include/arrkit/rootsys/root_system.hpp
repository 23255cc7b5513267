#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arrkit/arrangement/arrangement.hpp"

namespace arrkit {

struct RootSystemType {
  char family = 'A';
  int rank = 1;

  // "A3", "B4", "E6", ... D3 is read as A3.
  static RootSystemType parse(const std::string& s);
  std::string name() const;
  bool operator==(const RootSystemType&) const = default;
};

struct Root {
  Vec coords;                      // standard model, rational
  std::vector<int> simple_coeffs;  // over the simple roots
  int height = 0;
};

// Positive system in a standard coordinate model. Roots are ordered by
// height, then by simple coefficients in decreasing lexicographic order, so
// the simple roots come first as alpha_1, ..., alpha_n.
//
// Models: A_n in n+1 coordinates; B, C, D, F4 in rank-many coordinates;
// E6 and E7 inside the 8-coordinate E8 model; G2 in simple-root coordinates
// (the hyperplanes only depend on linear relations among the roots).
class RootSystem {
 public:
  explicit RootSystem(const RootSystemType& t);

  const RootSystemType& type() const { return type_; }
  std::size_t rank() const { return static_cast<std::size_t>(type_.rank); }
  std::size_t ambient_dim() const { return dim_; }
  const std::vector<Root>& positive_roots() const { return roots_; }
  const Root& root(std::size_t i) const { return roots_[i]; }
  std::size_t size() const { return roots_.size(); }
  // Index of the root with these simple coefficients, or npos.
  std::size_t index_of(const std::vector<int>& simple_coeffs) const;

  // gamma - beta has nonnegative simple coefficients.
  bool leq(std::size_t beta, std::size_t gamma) const;
  // Lower covers: roots beta - alpha_i that exist.
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_[i]; }

  std::size_t highest_root() const { return roots_.size() - 1; }
  int coxeter_number() const { return roots_.back().height + 1; }
  int max_height() const { return roots_.back().height; }

  // Cartan integers <alpha_i, alpha_j^vee>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  RootSystemType type_;
  std::size_t dim_ = 0;
  std::vector<Vec> simple_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
  std::vector<std::vector<std::size_t>> lower_;
};

// A lower order ideal of the root poset, as sorted root indices.
struct Ideal {
  std::vector<std::size_t> roots;
  // Maximal elements (the antichain generating it).
  std::vector<std::size_t> generators;
  int max_height = 0;
};

// Downward closure of the given roots.
Ideal ideal_from_generators(const RootSystem& rs, const std::vector<std::size_t>& gens);
Ideal full_ideal(const RootSystem& rs);
bool is_ideal(const RootSystem& rs, const std::vector<std::size_t>& roots);

// All ideals, smallest first in a fixed search order. Throws CapExceeded
// when more than max_ideals would be produced.
std::vector<Ideal> enumerate_ideals(const RootSystem& rs, std::size_t max_ideals = 1'000'000);

// {ker beta : beta in I}; hyperplane i is the i-th root of the ideal.
Arrangement ideal_arrangement(const RootSystem& rs, const Ideal& ideal);
Arrangement weyl_arrangement(const RootSystem& rs);

// Blocks of hyperplane indices of ideal_arrangement grouped by height 1..m_I.
std::vector<std::vector<std::size_t>> root_height_partition(const RootSystem& rs, const Ideal& ideal);

}  // namespace arrkit
