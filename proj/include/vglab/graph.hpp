#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vglab {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
// Adjacency is kept both as sorted neighbor lists and as bit rows, so edge
// tests are O(1) regardless of size.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws std::invalid_argument on self-loops, duplicates or out-of-range ends.
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  bool has_edge(int u, int v) const {
    return (rows_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  // Neighborhood as a 64-bit mask; only valid when n <= 64.
  uint64_t neighbor_mask(int v) const;

  // Subgraph induced on `verts`, relabeled 0..k-1 in the given order.
  Graph induced(const std::vector<int>& verts) const;
  // Same vertex set, only the listed edges kept (edges must exist).
  Graph edge_subgraph(const std::vector<Edge>& keep) const;
  Graph relabeled(const std::vector<int>& perm) const;  // vertex v -> perm[v]
  Graph with_edge(int u, int v) const;

  std::vector<std::vector<int>> components() const;
  bool is_connected() const;
  bool is_tree() const;
  bool is_forest() const;
  // No articulation point and at least 3 vertices (or K2).
  bool is_two_connected() const;

  // External neighborhood N(U).
  std::vector<int> external_neighborhood(const std::vector<int>& U) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  void build();

  int n_ = 0;
  int words_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<uint64_t> rows_;
};

Graph disjoint_union(const std::vector<Graph>& graphs);

// Edge-list text format: "n m" then m lines "u v"; '#' lines are comments.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);
std::string to_dot(const Graph& g, const std::string& name = "G");

// Canonical adjacency string: lexicographically smallest upper-triangle bit
// string over all vertex orderings. Exhaustive with degree refinement, so it
// is meant for n <= 10.
std::string canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace vglab
