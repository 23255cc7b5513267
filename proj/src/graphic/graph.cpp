#include "arrkit/graphic/graph.hpp"

#include <algorithm>
#include <cstdio>

#include "arrkit/error.hpp"

namespace arrkit {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0) throw InvalidInput("negative vertex count");
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n) throw InvalidInput("edge endpoint out of range 1.." + std::to_string(n));
    if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) throw InvalidInput("repeated edge");
}

bool Graph::has_edge(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{std::min(u, v), std::max(u, v)});
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::with_vertex(const std::vector<int>& nbrs) const {
  auto e = edges_;
  for (int u : nbrs) e.emplace_back(u, n_ + 1);
  return Graph(n_ + 1, e);
}

Arrangement graphic_arrangement(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Arrangement a(n, Field::rational());
  for (auto [u, v] : g.edges()) {
    Vec f(n, Scalar(0L));
    f[static_cast<std::size_t>(u - 1)] = Scalar(1L);
    f[static_cast<std::size_t>(v - 1)] = Scalar(-1L);
    a.add(f);
  }
  return a;
}

bool is_elimination_order(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    if (v < 1 || v > n || pos[static_cast<std::size_t>(v)] != -1) return false;
    pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  for (int v = 1; v <= n; ++v) {
    std::vector<int> later;
    for (int w : g.neighbors(v)) {
      if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) later.push_back(w);
    }
    for (std::size_t i = 0; i < later.size(); ++i)
      for (std::size_t j = i + 1; j < later.size(); ++j)
        if (!g.has_edge(later[i], later[j])) return false;
  }
  return true;
}

std::optional<std::vector<int>> perfect_elimination_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> label(static_cast<std::size_t>(n) + 1);
  std::vector<bool> done(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> visit;
  for (int step = n; step >= 1; --step) {
    int best = -1;
    for (int v = 1; v <= n; ++v) {
      if (done[static_cast<std::size_t>(v)]) continue;
      if (best == -1 || label[static_cast<std::size_t>(v)] > label[static_cast<std::size_t>(best)]) best = v;
    }
    done[static_cast<std::size_t>(best)] = true;
    visit.push_back(best);
    for (int w : g.neighbors(best)) {
      if (!done[static_cast<std::size_t>(w)]) label[static_cast<std::size_t>(w)].push_back(step);
    }
  }
  std::reverse(visit.begin(), visit.end());
  if (!is_elimination_order(g, visit)) return std::nullopt;
  return visit;
}

Exponents exponents_from_elimination(const Graph& g, const std::vector<int>& order) {
  if (!is_elimination_order(g, order)) throw InvalidInput("not a perfect elimination order");
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()) + 1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  Exponents e;
  for (int v : order) {
    std::int64_t c = 0;
    for (int w : g.neighbors(v)) c += pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)];
    e.push_back(c);
  }
  std::sort(e.begin(), e.end());
  return e;
}

Graph contract(const Graph& g, Graph::Edge e) {
  auto [u, v] = e;
  if (u > v) std::swap(u, v);
  if (!g.has_edge(u, v)) throw InvalidInput("edge " + std::to_string(u) + "-" + std::to_string(v) + " not in graph");
  auto relabel = [u = u, v = v](int w) {
    if (w == u) w = v;
    return w > u ? w - 1 : w;
  };
  std::vector<Graph::Edge> out;
  for (auto [a, b] : g.edges()) {
    const int x = relabel(a), y = relabel(b);
    if (x == y) continue;
    out.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Graph(g.vertex_count() - 1, out);
}

Graph paper_fixture(PaperGraph which) {
  // Hexagon 1..6, triangle 1-3-5, hub 10 joined to 1, 3, 5, and the apexes
  // 7, 8, 9 over the edges 1-10, 3-10, 5-10.
  const Graph g(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 10}, {3, 10}, {5, 10},
                     {1, 3}, {3, 5}, {1, 5}, {3, 8}, {8, 10}, {5, 9}, {9, 10}, {1, 7}, {7, 10}});
  if (which == PaperGraph::G) return g;
  return g.with_vertex({1, 2, 3, 10});
}

PaperGraph parse_paper_graph(const std::string& name) {
  if (name == "G") return PaperGraph::G;
  if (name == "G_prime" || name == "Gprime" || name == "G'") return PaperGraph::GPrime;
  throw InvalidInput("unknown graph fixture '" + name + "' (expected G or G_prime)");
}

const char* to_string(PaperGraph which) { return which == PaperGraph::G ? "G" : "G_prime"; }

std::string graph_checksum(const Graph& g) {
  std::string s = std::to_string(g.vertex_count());
  for (auto [u, v] : g.edges()) s += ";" + std::to_string(u) + "-" + std::to_string(v);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace arrkit
