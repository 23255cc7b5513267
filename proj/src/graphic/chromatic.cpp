#include <bit>
#include <string>
#include <unordered_map>

#include "arrkit/error.hpp"
#include "arrkit/graphic/graph.hpp"

namespace arrkit {

namespace {

using Adj = std::vector<std::uint64_t>;

struct Chromatic {
  std::unordered_map<std::string, IntPoly> memo;

  static IntPoly linear(std::int64_t k) { return IntPoly({-k, 1}); }

  // Drops vertex v and renumbers the rest.
  static Adj remove(const Adj& g, std::size_t v) {
    Adj out;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i == v) continue;
      const std::uint64_t m = g[i];
      const std::uint64_t low = m & ((1ULL << v) - 1);
      const std::uint64_t high = v + 1 < 64 ? (m >> (v + 1)) << v : 0;
      out.push_back(low | high);
    }
    return out;
  }

  IntPoly solve(Adj g) {
    IntPoly factor = IntPoly::monomial(0);
    for (std::size_t v = g.size(); v-- > 0;) {
      if (g[v] == 0) {
        g = remove(g, v);
        factor = factor * IntPoly::monomial(1);
      }
    }
    if (g.empty()) return factor;

    std::string key(reinterpret_cast<const char*>(g.data()), g.size() * sizeof(std::uint64_t));
    if (auto it = memo.find(key); it != memo.end()) return factor * it->second;

    IntPoly result;
    bool done = false;
    // A vertex whose neighborhood is a clique can always be coloured last.
    for (std::size_t v = 0; v < g.size() && !done; ++v) {
      bool clique = true;
      for (std::uint64_t m = g[v]; m && clique; m &= m - 1) {
        const auto w = static_cast<std::size_t>(std::countr_zero(m));
        clique = ((g[v] & ~(1ULL << w)) & ~g[w]) == 0;
      }
      if (clique) {
        result = linear(std::popcount(g[v])) * solve(remove(g, v));
        done = true;
      }
    }
    if (!done) {
      std::size_t u = 0;
      for (std::size_t v = 1; v < g.size(); ++v)
        if (std::popcount(g[v]) > std::popcount(g[u])) u = v;
      const auto w = static_cast<std::size_t>(std::countr_zero(g[u]));
      Adj del = g;
      del[u] &= ~(1ULL << w);
      del[w] &= ~(1ULL << u);
      // Contract: merge u into w.
      Adj con = del;
      con[w] |= con[u];
      for (std::size_t x = 0; x < con.size(); ++x) {
        if (con[x] >> u & 1ULL) con[x] = (con[x] & ~(1ULL << u)) | (x == w ? 0 : (1ULL << w));
      }
      con = remove(con, u);
      result = solve(del) - solve(con);
    }
    memo.emplace(std::move(key), result);
    return factor * result;
  }
};

}  // namespace

IntPoly chromatic_polynomial(const Graph& g, std::size_t max_edges) {
  if (g.edge_count() > max_edges)
    throw CapExceeded("chromatic polynomial limited to " + std::to_string(max_edges) + " edges", g.edge_count(), -1);
  if (g.vertex_count() > 64) throw InvalidInput("chromatic polynomial supports at most 64 vertices");
  Adj adj(static_cast<std::size_t>(g.vertex_count()), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u - 1)] |= 1ULL << (v - 1);
    adj[static_cast<std::size_t>(v - 1)] |= 1ULL << (u - 1);
  }
  return Chromatic{}.solve(std::move(adj));
}

}  // namespace arrkit
