#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrkit/arrangement/arrangement.hpp"
#include "arrkit/exactmath/int_poly.hpp"

namespace arrkit {

// Simple graph on vertices 1..n. Edges are stored as (u, v) with u < v, sorted.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;
  // Throws InvalidInput on loops, repeated edges or out-of-range vertices.
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  std::vector<int> neighbors(int v) const;

  // Adds a vertex n+1 joined to the listed vertices.
  Graph with_vertex(const std::vector<int>& neighbors) const;

  bool operator==(const Graph& o) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// {ker(x_i - x_j) : ij an edge} in n coordinates, one hyperplane per edge in
// edge order.
Arrangement graphic_arrangement(const Graph& g);

// Reverse lexicographic BFS order, if it is a perfect elimination order.
std::optional<std::vector<int>> perfect_elimination_order(const Graph& g);
// Each vertex's neighbors later in the order form a clique.
bool is_elimination_order(const Graph& g, const std::vector<int>& order);
// Sorted later-neighbor counts. Throws InvalidInput if order is not a
// perfect elimination order.
Exponents exponents_from_elimination(const Graph& g, const std::vector<int>& order);

// Identifies the endpoints of e. The smaller endpoint u is merged into the
// larger and vertices above u shift down by one, which matches the coordinate
// labelling of restriction(A(g), ker(x_u - x_v)).
Graph contract(const Graph& g, Graph::Edge e);

// Deletion-contraction with simplicial-vertex and isolated-vertex shortcuts,
// memoized on relabelled edge lists. Throws CapExceeded past max_edges.
IntPoly chromatic_polynomial(const Graph& g, std::size_t max_edges = 64);

enum class PaperGraph { G, GPrime };

// The 10-vertex chordal graph with 18 edges and its one-vertex extension
// (vertex 11 joined to 1, 2, 3, 10).
Graph paper_fixture(PaperGraph which);
PaperGraph parse_paper_graph(const std::string& name);
const char* to_string(PaperGraph which);

// FNV-1a over "n;u-v;u-v;...", as 16 hex digits.
std::string graph_checksum(const Graph& g);

}  // namespace arrkit
