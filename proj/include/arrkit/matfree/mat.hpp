#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrkit/arrangement/arrangement.hpp"
#include "arrkit/arrangement/lattice.hpp"

namespace arrkit {

// Outcome of checking that base ∪ added is an MAT-step.
struct MatStepRecord {
  std::size_t k = 0;           // 1-based step index
  std::size_t added = 0;       // q
  std::size_t rank = 0;        // rank of the added normals
  std::int64_t top_exponent = 0;
  std::size_t multiplicity = 0;  // of the top exponent in the base
  bool rank_ok = false;
  bool noncover_ok = false;
  bool count_ok = false;
  bool multiplicity_ok = false;
  // |base| - |(base ∪ {H})^H| for each added H, in block order.
  std::vector<std::int64_t> counts;
  Exponents exponents_after;

  // 0 when the step is valid, else the first failing condition (1, 2, 3;
  // 4 for q exceeding the multiplicity of the top exponent).
  int violated = 0;
  std::string detail;

  bool ok() const { return violated == 0; }
};

MatStepRecord verify_mat_step(const Arrangement& base, const Exponents& base_exponents, const std::vector<Vec>& added);

struct MatCertificate {
  Arrangement arrangement;  // base hyperplanes first, then the blocks
  std::size_t base_size = 0;
  Exponents base_exponents;
  std::string base_provenance;
  // Hyperplane indices into `arrangement`, block by block.
  std::vector<std::vector<std::size_t>> partition;
  std::vector<MatStepRecord> steps;
  Exponents exponents;

  // Every block was checked and passed.
  bool valid() const;
  // First failing step, if any.
  const MatStepRecord* violation() const;
};

// e_i = |{k : |pi_k| >= ell - i + 1}|, sorted ascending.
Exponents dual_partition_exponents(const std::vector<std::size_t>& block_sizes, std::size_t ell);

// Folds MAT-steps over the blocks starting from the empty arrangement.
// Throws InvalidInput if the blocks do not partition the hyperplanes.
MatCertificate certify_partition(const Arrangement& a, const std::vector<std::vector<std::size_t>>& blocks);

// Same, starting from a free base with trusted exponents.
MatCertificate certify_from_free_base(const Arrangement& base, const Exponents& base_exponents,
                                      const std::string& provenance, const std::vector<std::vector<Vec>>& blocks);

struct Witness {
  std::size_t block = 0;  // 1-based k
  std::size_t q = 0;
  std::vector<std::size_t> hyperplanes;  // C, indices into the arrangement
  Flat flat;
  Exponents exponents;  // (e_1, ..., e_{ell-q})
};

// One witness per (k, q) with p_{k+1} <= q <= p_k, keyed in that order. The
// first q-subset of the block (lexicographically) whose restriction has
// chi = prod (t - e_i), i <= ell - q, is taken. Throws Inconsistency if some
// block has none.
std::vector<Witness> accuracy_witnesses(const MatCertificate& cert, const LatticeOptions& opts = {});

struct PartitionSearchOptions {
  std::size_t max_hyperplanes = 40;
  std::size_t max_nodes = 20'000'000;
  LatticeOptions lattice;
};

struct PartitionSearchResult {
  std::optional<std::vector<std::vector<std::size_t>>> partition;
  // True when "no partition" is a proof (exhaustive search or chi obstruction).
  bool conclusive = false;
  std::string reason;
  std::size_t nodes = 0;
};

// With a hint, only the hinted partition is tried. Without one, the block
// sizes are forced by chi (the conjugate of the exponent partition) and
// blocks are chosen by backtracking; dead states are memoized by the set of
// hyperplanes used so far.
PartitionSearchResult search_mat_partition(const Arrangement& a,
                                           const std::optional<std::vector<std::vector<std::size_t>>>& hint,
                                           const PartitionSearchOptions& opts = {});

}  // namespace arrkit
