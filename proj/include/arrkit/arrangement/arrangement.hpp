#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "arrkit/exactmath/matrix.hpp"

namespace arrkit {

// Exponents of a free arrangement, one per coordinate.
using Exponents = std::vector<std::int64_t>;

// Incidence set over the hyperplanes of one arrangement, by index.
using HyperplaneSet = boost::dynamic_bitset<std::uint64_t>;

// A central arrangement: canonical normals (first nonzero coordinate 1), no
// repeats, in insertion order.
class Arrangement {
 public:
  Arrangement() = default;
  Arrangement(std::size_t dim, Field field) : dim_(dim), field_(field) {}

  // Canonicalizes and drops repeated hyperplanes. The number of dropped
  // forms is written to *duplicates when given.
  static Arrangement from_forms(std::size_t dim, const Field& field, const std::vector<Vec>& forms,
                                std::size_t* duplicates = nullptr);

  std::size_t dim() const { return dim_; }
  const Field& field() const { return field_; }
  std::size_t size() const { return normals_.size(); }
  bool empty() const { return normals_.empty(); }
  const Vec& normal(std::size_t i) const { return normals_[i]; }
  const std::vector<Vec>& normals() const { return normals_; }

  // Adds one hyperplane; returns its index, or the existing index if present.
  std::size_t add(const Vec& form);
  // Index of the hyperplane with this (not necessarily canonical) normal.
  std::optional<std::size_t> index_of(const Vec& form) const;

  // Codimension of the center.
  std::size_t rank() const;
  HyperplaneSet all() const { return HyperplaneSet(size()).set(); }
  HyperplaneSet none() const { return HyperplaneSet(size()); }

  Arrangement subarrangement(const HyperplaneSet& keep) const;

  // Equal as sets of hyperplanes in the same space.
  bool same_hyperplanes(const Arrangement& o) const;

  std::string form_to_string(std::size_t i) const;

 private:
  std::size_t dim_ = 0;
  Field field_;
  std::vector<Vec> normals_;
};

// An element of L(A): the canonical echelon basis of the forms vanishing on
// it and the hyperplanes containing it.
struct Flat {
  EchelonBasis forms;
  HyperplaneSet contains;

  std::size_t rank() const { return forms.rank(); }
  std::size_t dim() const { return forms.cols() - forms.rank(); }
};

// The flat cut out by the given forms. Throws NotInLattice unless the forms
// span exactly the normals of the hyperplanes they contain.
Flat make_flat(const Arrangement& a, const std::vector<Vec>& forms);
// Intersection of the listed hyperplanes.
Flat make_flat(const Arrangement& a, const HyperplaneSet& hyperplanes);
Flat ambient_flat(const Arrangement& a);

Arrangement localization(const Arrangement& a, const Flat& x);
// Free columns of x.forms become the coordinates of X, in ascending order;
// pulled-back forms are canonicalized and deduplicated.
Arrangement restriction(const Arrangement& a, const Flat& x);
Arrangement deletion(const Arrangement& a, const Vec& form);

// Splits the coordinates into the finest blocks such that every normal is
// supported in one block. Returns the coordinate blocks; each factor holds
// the hyperplanes supported there, in those coordinates.
struct Decomposition {
  std::vector<std::vector<std::size_t>> coordinate_blocks;
  std::vector<Arrangement> factors;
};
Decomposition decompose(const Arrangement& a);

}  // namespace arrkit
