#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "arrkit/arrangement/arrangement.hpp"
#include "arrkit/exactmath/int_poly.hpp"

namespace arrkit {

struct LatticeOptions {
  std::size_t max_flats = 2'000'000;
  std::optional<std::size_t> max_rank;
  unsigned threads = 1;
};

// L(A) ordered by reverse inclusion, V at rank 0. Flats are identified by
// their incidence sets and numbered level by level; inside a level they are
// sorted by canonical echelon key, so numbering does not depend on the input
// order of hyperplanes beyond the incidence labels themselves.
class Lattice {
 public:
  using Id = std::size_t;

  static Lattice build(const Arrangement& a, const LatticeOptions& opts = {});

  const Arrangement& arrangement() const { return *arr_; }
  std::size_t size() const { return contains_.size(); }
  // Highest rank built; equals a.rank() unless max_rank cut it short.
  std::size_t top_rank() const { return levels_.size() - 1; }
  bool complete() const { return complete_; }

  const std::vector<Id>& level(std::size_t rank) const { return levels_[rank]; }
  std::size_t rank(Id x) const { return rank_[x]; }
  std::size_t dim(Id x) const { return arr_->dim() - rank_[x]; }
  const HyperplaneSet& contains(Id x) const { return contains_[x]; }
  const std::vector<Id>& up_covers(Id x) const { return up_[x]; }
  const std::vector<Id>& down_covers(Id x) const { return down_[x]; }
  Id bottom() const { return 0; }

  std::optional<Id> find(const HyperplaneSet& s) const;
  std::optional<Id> find(const Flat& f) const { return find(f.contains); }
  Flat flat(Id x) const;
  // Echelon rows of the flat's form space, recomputed on demand.
  EchelonBasis forms(Id x) const;

  // mu(V, X).
  long mobius(Id x) const { return mobius_[x]; }
  IntPoly characteristic_polynomial() const;
  // chi of the restriction to X, read off the interval [X, top].
  IntPoly restriction_polynomial(Id x) const;
  // mu(X, Y) for every Y >= X.
  std::unordered_map<Id, long> interval_mobius(Id x) const;

  // Greatest lower bound: the flat spanned by X and Y as subspaces.
  Id meet(Id x, Id y) const;
  // Rank of the least upper bound X ∩ Y, found by walking up-covers.
  std::size_t join_rank(Id x, Id y) const;
  Id join(Id x, Id y) const;
  // The up-cover of x containing hyperplane h (h not in x).
  Id cover_with(Id x, std::size_t h) const;

 private:
  std::shared_ptr<const Arrangement> arr_;
  bool complete_ = false;
  std::vector<std::vector<Id>> levels_;
  std::vector<HyperplaneSet> contains_;
  std::vector<std::size_t> rank_;
  std::vector<std::vector<Id>> up_;
  std::vector<std::vector<Id>> down_;
  std::vector<long> mobius_;
  std::unordered_map<HyperplaneSet, Id> index_;

  void compute_mobius();
};

IntPoly characteristic_polynomial(const Arrangement& a, const LatticeOptions& opts = {});

}  // namespace arrkit
