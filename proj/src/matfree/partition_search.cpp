#include <algorithm>
#include <unordered_set>

#include "arrkit/error.hpp"
#include "arrkit/matfree/mat.hpp"

namespace arrkit {

namespace {

struct Search {
  const Arrangement& a;
  std::vector<std::size_t> sizes;
  std::size_t max_nodes;
  std::size_t nodes = 0;
  std::unordered_set<HyperplaneSet> dead;
  std::vector<std::vector<std::size_t>> blocks;

  std::int64_t drop(const HyperplaneSet& base, std::size_t h) const {
    EchelonBasis line(a.field(), a.dim());
    line.insert(a.normal(h));
    std::unordered_set<Vec, VecHash> traces;
    for (auto i = base.find_first(); i != HyperplaneSet::npos; i = base.find_next(i))
      traces.insert(*normalize_leading_one(line.reduce(a.normal(i))));
    return static_cast<std::int64_t>(base.count()) - static_cast<std::int64_t>(traces.size());
  }

  void tick() {
    if (++nodes > max_nodes) throw CapExceeded("MAT partition search exceeded " + std::to_string(max_nodes) + " nodes", nodes, -1);
  }

  // Picks block k (0-based) from candidates, then recurses.
  bool choose(std::size_t k, const HyperplaneSet& used, const std::vector<std::size_t>& cand, std::size_t start,
              std::vector<std::size_t>& chosen, const EchelonBasis& span) {
    tick();
    if (chosen.size() == sizes[k]) {
      HyperplaneSet next = used;
      for (auto h : chosen) next.set(h);
      blocks.push_back(chosen);
      if (step(k + 1, next)) return true;
      blocks.pop_back();
      return false;
    }
    if (cand.size() - start < sizes[k] - chosen.size()) return false;
    for (std::size_t i = start; i < cand.size(); ++i) {
      EchelonBasis s = span;
      if (!s.insert(a.normal(cand[i]))) continue;  // condition (1)
      bool covered = false;
      for (auto b = used.find_first(); b != HyperplaneSet::npos && !covered; b = used.find_next(b))
        covered = s.contains(a.normal(b));  // condition (2), monotone in the block
      if (covered) continue;
      chosen.push_back(cand[i]);
      if (choose(k, used, cand, i + 1, chosen, s)) return true;
      chosen.pop_back();
    }
    return false;
  }

  bool step(std::size_t k, const HyperplaneSet& used) {
    if (k == sizes.size()) return used.count() == a.size();
    if (dead.count(used)) return false;
    // The base after k steps has top exponent k.
    const auto e = static_cast<std::int64_t>(k);
    std::vector<std::size_t> cand;
    for (std::size_t h = 0; h < a.size(); ++h) {
      if (!used.test(h) && drop(used, h) == e) cand.push_back(h);
    }
    std::vector<std::size_t> chosen;
    if (cand.size() >= sizes[k] && choose(k, used, cand, 0, chosen, EchelonBasis(a.field(), a.dim()))) return true;
    dead.insert(used);
    return false;
  }
};

}  // namespace

PartitionSearchResult search_mat_partition(const Arrangement& a,
                                           const std::optional<std::vector<std::vector<std::size_t>>>& hint,
                                           const PartitionSearchOptions& opts) {
  PartitionSearchResult res;
  if (hint) {
    const auto cert = certify_partition(a, *hint);
    if (cert.valid()) {
      res.partition = *hint;
      res.conclusive = true;
      res.reason = "hinted partition certified";
    } else {
      res.reason = "hinted partition fails at step " + std::to_string(cert.violation()->k) + ": " + cert.violation()->detail;
    }
    return res;
  }
  if (a.size() > opts.max_hyperplanes)
    throw CapExceeded("exhaustive MAT search limited to " + std::to_string(opts.max_hyperplanes) + " hyperplanes", a.size(), -1);

  res.conclusive = true;
  if (a.empty()) {
    res.partition = std::vector<std::vector<std::size_t>>{};
    res.reason = "empty arrangement";
    return res;
  }
  const auto roots = characteristic_polynomial(a, opts.lattice).nonnegative_integer_roots();
  if (!roots) {
    res.reason = "characteristic polynomial does not split over the nonnegative integers, so the arrangement is not free";
    return res;
  }
  // Block sizes are the conjugate of the exponent partition.
  std::vector<std::size_t> sizes;
  for (std::int64_t k = 1; k <= roots->back(); ++k)
    sizes.push_back(static_cast<std::size_t>(std::count_if(roots->begin(), roots->end(), [k](std::int64_t e) { return e >= k; })));
  if (sizes.size() >= 2 && sizes[0] == sizes[1]) {
    res.reason = "no exponent equals 1, so the first block cannot be strictly largest";
    return res;
  }
  Search s{a, sizes, opts.max_nodes, 0, {}, {}};
  const bool found = s.step(0, a.none());
  res.nodes = s.nodes;
  if (found) {
    res.partition = s.blocks;
    res.reason = "exhaustive search found a partition";
  } else {
    res.reason = "exhaustive search over block sizes forced by the exponents found no partition";
  }
  return res;
}

}  // namespace arrkit
