#include "arrkit/arrangement/isomorphism.hpp"

#include <map>

#include "arrkit/error.hpp"

namespace arrkit {

namespace {

// Per hyperplane: how many flats of each (rank, |A_X|) contain it.
using Signature = std::map<std::pair<std::size_t, std::size_t>, std::size_t>;

std::vector<Signature> signatures(const Lattice& L) {
  std::vector<Signature> sig(L.arrangement().size());
  for (Lattice::Id x = 1; x < L.size(); ++x) {
    const auto& c = L.contains(x);
    const auto key = std::make_pair(L.rank(x), c.count());
    for (auto h = c.find_first(); h != HyperplaneSet::npos; h = c.find_next(h)) ++sig[h][key];
  }
  return sig;
}

// line[i][j]: rank-2 flat through hyperplanes i and j.
std::vector<std::vector<Lattice::Id>> lines(const Lattice& L) {
  const std::size_t n = L.arrangement().size();
  std::vector<std::vector<Lattice::Id>> out(n, std::vector<Lattice::Id>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    HyperplaneSet s = L.arrangement().none();
    s.set(i);
    const auto atom = L.find(s);
    if (!atom) throw Inconsistency("hyperplane is not an atom");
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) out[i][j] = L.cover_with(*atom, j);
    }
  }
  return out;
}

struct Matcher {
  const Lattice& A;
  const Lattice& B;
  std::vector<Signature> sa, sb;
  std::vector<std::vector<Lattice::Id>> la, lb;
  std::vector<std::size_t> phi;
  std::vector<bool> used;

  bool consistent(std::size_t i, std::size_t bi) const {
    for (std::size_t j = 0; j < i; ++j) {
      const auto bj = phi[j];
      if (A.contains(la[i][j]).count() != B.contains(lb[bi][bj]).count()) return false;
      for (std::size_t k = j + 1; k < i; ++k) {
        const bool in_a = A.contains(la[j][k]).test(i);
        const bool in_b = B.contains(lb[bj][phi[k]]).test(bi);
        if (in_a != in_b) return false;
      }
    }
    return true;
  }

  bool full_check() const {
    const std::size_t n = phi.size();
    for (Lattice::Id x = 0; x < A.size(); ++x) {
      HyperplaneSet img(n);
      const auto& c = A.contains(x);
      for (auto h = c.find_first(); h != HyperplaneSet::npos; h = c.find_next(h)) img.set(phi[h]);
      const auto y = B.find(img);
      if (!y || B.rank(*y) != A.rank(x)) return false;
    }
    return true;
  }

  bool assign(std::size_t i) {
    if (i == phi.size()) return full_check();
    for (std::size_t bi = 0; bi < phi.size(); ++bi) {
      if (used[bi] || sa[i] != sb[bi] || !consistent(i, bi)) continue;
      phi[i] = bi;
      used[bi] = true;
      if (assign(i + 1)) return true;
      used[bi] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> lattice_isomorphism(const Lattice& a, const Lattice& b) {
  if (!a.complete() || !b.complete()) throw InvalidInput("isomorphism test needs full lattices");
  const std::size_t n = a.arrangement().size();
  if (n != b.arrangement().size() || a.size() != b.size() || a.top_rank() != b.top_rank()) return std::nullopt;
  for (std::size_t r = 0; r <= a.top_rank(); ++r) {
    if (a.level(r).size() != b.level(r).size()) return std::nullopt;
  }
  if (n == 0) return std::vector<std::size_t>{};
  Matcher m{a, b, signatures(a), signatures(b), lines(a), lines(b), std::vector<std::size_t>(n), std::vector<bool>(n, false)};
  if (!m.assign(0)) return std::nullopt;
  return m.phi;
}

bool lattice_isomorphic(const Arrangement& a, const Arrangement& b, const LatticeOptions& opts) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  return lattice_isomorphism(Lattice::build(a, opts), Lattice::build(b, opts)).has_value();
}

}  // namespace arrkit
