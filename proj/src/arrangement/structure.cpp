#include "arrkit/arrangement/structure.hpp"

#include <algorithm>
#include <unordered_set>

#include "arrkit/error.hpp"

namespace arrkit {

bool is_modular(const Lattice& L, Lattice::Id x) {
  if (!L.complete()) throw InvalidInput("modularity needs the full lattice");
  const std::size_t rx = L.rank(x);
  for (Lattice::Id y = 0; y < L.size(); ++y) {
    const std::size_t ry = L.rank(y);
    const std::size_t rmeet = L.rank(L.meet(x, y));
    if (rx + ry != rmeet + L.join_rank(x, y)) return false;
  }
  return true;
}

namespace {

struct ModularCache {
  const Lattice& L;
  std::vector<std::int8_t> state;  // -1 unknown, 0 no, 1 yes
  explicit ModularCache(const Lattice& l) : L(l), state(l.size(), -1) {}
  bool operator()(Lattice::Id x) {
    if (state[x] < 0) state[x] = is_modular(L, x) ? 1 : 0;
    return state[x] == 1;
  }
};

bool extend_chain(const Lattice& L, ModularCache& modular, std::vector<Lattice::Id>& chain,
                  std::unordered_set<Lattice::Id>& dead) {
  const Lattice::Id cur = chain.back();
  if (L.rank(cur) == L.top_rank()) return true;
  for (Lattice::Id c : L.up_covers(cur)) {
    if (dead.count(c)) continue;
    // Rank <= 1 flats and the top are always modular.
    const bool ok = L.rank(c) <= 1 || L.rank(c) == L.top_rank() || modular(c);
    if (!ok) {
      dead.insert(c);
      continue;
    }
    chain.push_back(c);
    if (extend_chain(L, modular, chain, dead)) return true;
    chain.pop_back();
    dead.insert(c);
  }
  return false;
}

}  // namespace

std::optional<SupersolvableCertificate> supersolvable_certificate(const Lattice& L) {
  if (!L.complete()) throw InvalidInput("supersolvability needs the full lattice");
  ModularCache modular(L);
  std::vector<Lattice::Id> chain{L.bottom()};
  std::unordered_set<Lattice::Id> dead;
  if (!extend_chain(L, modular, chain, dead)) return std::nullopt;
  SupersolvableCertificate cert;
  cert.chain = chain;
  const std::size_t ell = L.arrangement().dim();
  cert.exponents.assign(ell - L.top_rank(), 0);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    cert.exponents.push_back(static_cast<std::int64_t>(L.contains(chain[i]).count() - L.contains(chain[i - 1]).count()));
  }
  std::sort(cert.exponents.begin(), cert.exponents.end());
  return cert;
}

namespace {

struct FlagSearch {
  const Lattice& L;
  std::size_t depth;  // ranks 1..depth
  std::unordered_map<Lattice::Id, IntPoly> chi;
  std::unordered_set<Lattice::Id> dead;
  std::vector<Lattice::Id> flag;

  const IntPoly& poly(Lattice::Id x) {
    auto it = chi.find(x);
    if (it == chi.end()) it = chi.emplace(x, L.restriction_polynomial(x)).first;
    return it->second;
  }

  bool run(Lattice::Id cur) {
    if (L.rank(cur) == depth) return true;
    std::vector<Lattice::Id> covers = L.up_covers(cur);
    std::stable_sort(covers.begin(), covers.end(),
                     [&](Lattice::Id a, Lattice::Id b) { return L.contains(a).count() > L.contains(b).count(); });
    for (Lattice::Id c : covers) {
      if (dead.count(c)) continue;
      if (poly(cur).divisible_by(poly(c))) {
        flag.push_back(c);
        if (run(c)) return true;
        flag.pop_back();
      }
      // Whether c extends does not depend on how we reached it.
      dead.insert(c);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Lattice::Id>> divisional_flag_search(const Lattice& L) {
  if (!L.complete()) throw InvalidInput("divisional flag search needs the full lattice");
  const std::size_t r = L.top_rank();
  if (r <= 2 || L.arrangement().empty()) return std::vector<Lattice::Id>{};
  FlagSearch s{L, r - 2, {}, {}, {}};
  if (!s.run(L.bottom())) return std::nullopt;
  return s.flag;
}

}  // namespace arrkit
