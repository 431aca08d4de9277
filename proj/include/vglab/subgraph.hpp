#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vglab/graph.hpp"

namespace vglab {

// embedding[h] = vertex of G that vertex h of H is mapped to.
using Embedding = std::vector<int>;

inline constexpr int kMaxPatternVertices = 12;

// All embeddings of H into G (up to `limit`, 0 = unlimited), sorted
// lexicographically. Throws std::length_error when v(H) > 12.
std::vector<Embedding> enumerate_copies(const Graph& G, const Graph& H, size_t limit = 0);

// Visits embeddings in search order until the callback returns false.
void for_each_embedding(const Graph& G, const Graph& H,
                        const std::function<bool(const Embedding&)>& visit);

bool contains_copy(const Graph& G, const Graph& H);
long long count_embeddings(const Graph& G, const Graph& H);
// Distinct copies: embeddings modulo Aut(H).
long long count_copies(const Graph& G, const Graph& H);
long long automorphism_count(const Graph& H);

// A copy identified by its image; both lists sorted.
struct Copy {
  std::vector<int> vertices;
  std::vector<Edge> edges;
  bool operator==(const Copy& o) const { return edges == o.edges && vertices == o.vertices; }
  bool operator<(const Copy& o) const {
    return vertices != o.vertices ? vertices < o.vertices : edges < o.edges;
  }
};

// Distinct copies of H in G, sorted.
std::vector<Copy> list_copies(const Graph& G, const Graph& H);
// Distinct vertex sets of copies, sorted.
std::vector<std::vector<int>> copy_vertex_sets(const Graph& G, const Graph& H);

struct Packing {
  std::vector<std::vector<int>> copies;  // vertex sets, pairwise disjoint
  bool exact = true;                     // false when the greedy fallback ran
};
inline constexpr size_t kExactPackingLimit = 5000;
Packing max_disjoint_copies(const Graph& G, const Graph& H, int N);
// Vertex sets of k pairwise disjoint copies of H, or empty if G has no such
// family. Exact, and stops at the first witness, so dense graphs are cheap.
std::vector<std::vector<int>> find_disjoint_copies(const Graph& G, const Graph& H, int k);
bool has_disjoint_copies(const Graph& G, const Graph& H, int k);

struct DangerousEdge {
  bool found = false;
  Edge witness{-1, -1};
};
DangerousEdge has_dangerous_edge(const Graph& G, const Graph& H);

enum class ComponentKind { TTT, DD, DDt, K3Cycle, FeasibleA, FeasibleB, FeasibleC, Tree, Other };

struct ComponentTag {
  ComponentKind kind = ComponentKind::Other;
  int t = 0;  // for DD_t and K3-cycles
  // Maps catalog labels onto the component's vertices (empty for Tree/Other).
  std::vector<int> labeling;
};

std::string to_string(const ComponentTag& tag);
ComponentTag recognize_component(const Graph& component);

// An isomorphism a -> b as a vertex map, if one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

// Whether G[S] contains a copy of H.
bool induced_contains(const Graph& G, const std::vector<int>& S, const Graph& H);

}  // namespace vglab
