#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vglab/graph.hpp"

namespace vglab {

enum class StepKind { BadVertex, BadEdge, BadSet, SmallComponent };
std::string to_string(StepKind k);

struct DeletionStep {
  StepKind kind;
  std::vector<int> vertices;  // deleted vertices (empty for a bad edge)
  Edge edge{-1, -1};          // only for a bad edge
  bool operator==(const DeletionStep& o) const {
    return kind == o.kind && vertices == o.vertices && edge == o.edge;
  }
};

struct DeletionTrace {
  std::vector<DeletionStep> steps;
  std::vector<std::vector<int>> U;  // bad sets, in deletion order
  std::vector<std::vector<int>> W;  // small components, in deletion order
  std::vector<int> deleted_bad_vertices;
  std::vector<Edge> deleted_bad_edges;
  std::vector<int> core_vertices;  // sorted, original labels
  Graph core;                      // original vertex labels; non-core vertices are isolated
};

enum class OrderPolicy { Deterministic, SeededRandom };

// Mutable view of a graph during deletion: original labels, alive flags and
// a cached list of the H-copies of the original graph.
class DeletionState {
 public:
  DeletionState(const Graph& G, const Graph& H, int b);

  std::optional<DeletionStep> first_step() const;
  std::vector<DeletionStep> all_steps() const;
  void apply(const DeletionStep& step);
  Graph current_graph() const;  // original labels
  std::vector<int> alive_vertices() const;

 private:
  void refresh();
  std::vector<std::vector<int>> alive_components() const;
  bool bad_set(const std::vector<int>& U) const;
  template <typename Visit>
  void scan_bad_sets(Visit&& visit) const;

  const Graph& G_;
  int b_;
  int small_limit_;
  int words_ = 0;
  std::vector<char> vertex_alive_;
  std::vector<char> edge_alive_;  // indexed like G.edges()
  std::vector<std::vector<int>> copy_vertices_;
  std::vector<std::vector<int>> copy_edges_;  // indices into G.edges()
  std::vector<char> copy_alive_;
  std::vector<std::vector<uint64_t>> incidence_;  // vertex -> alive copies bitset
  std::vector<int> edge_copy_count_;
};

// Validates H (connected, v(H) >= 2) and b (1..4).
void check_deletion_args(const Graph& H, int b);

std::optional<DeletionStep> find_deletion_step(const Graph& G, const Graph& H, int b);
DeletionTrace compute_core(const Graph& G, const Graph& H, int b,
                           OrderPolicy policy = OrderPolicy::Deterministic, uint64_t seed = 0);
bool is_stable(const Graph& G, const Graph& H, int b);

// Core as a standalone graph on its own vertices (relabeled 0..k-1 in
// increasing original order).
Graph compact_core(const DeletionTrace& trace);

}  // namespace vglab
