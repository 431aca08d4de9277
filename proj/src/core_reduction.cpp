#include "vglab/core_reduction.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "vglab/rng.hpp"
#include "vglab/subgraph.hpp"

namespace vglab {

std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::BadVertex: return "bad_vertex";
    case StepKind::BadEdge: return "bad_edge";
    case StepKind::BadSet: return "bad_set";
    case StepKind::SmallComponent: return "small_component";
  }
  return "?";
}

void check_deletion_args(const Graph& H, int b) {
  if (H.n() < 2 || !H.is_connected())
    throw std::invalid_argument("deletion algorithm requires a connected H with at least 2 vertices");
  if (b < 1 || b > 4) throw std::invalid_argument("deletion algorithm requires 1 <= b <= 4");
}

DeletionState::DeletionState(const Graph& G, const Graph& H, int b)
    : G_(G), b_(b), small_limit_((b + 1) * (H.n() - 1)) {
  check_deletion_args(H, b);
  vertex_alive_.assign(G.n(), 1);
  edge_alive_.assign(G.m(), 1);
  std::map<Edge, int> edge_index;
  for (int i = 0; i < G.m(); ++i) edge_index[G.edges()[i]] = i;
  for (const auto& c : list_copies(G, H)) {
    copy_vertices_.push_back(c.vertices);
    std::vector<int> idx;
    for (const auto& e : c.edges) idx.push_back(edge_index.at(e));
    copy_edges_.push_back(std::move(idx));
  }
  copy_alive_.assign(copy_vertices_.size(), 1);
  words_ = static_cast<int>((copy_vertices_.size() + 63) / 64);
  refresh();
}

void DeletionState::refresh() {
  incidence_.assign(G_.n(), std::vector<uint64_t>(words_, 0));
  edge_copy_count_.assign(G_.m(), 0);
  for (size_t c = 0; c < copy_vertices_.size(); ++c) {
    if (!copy_alive_[c]) continue;
    for (int v : copy_vertices_[c]) incidence_[v][c >> 6] |= uint64_t{1} << (c & 63);
    for (int e : copy_edges_[c]) ++edge_copy_count_[e];
  }
}

std::vector<int> DeletionState::alive_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < G_.n(); ++v)
    if (vertex_alive_[v]) out.push_back(v);
  return out;
}

Graph DeletionState::current_graph() const {
  std::vector<Edge> es;
  for (int i = 0; i < G_.m(); ++i)
    if (edge_alive_[i]) es.push_back(G_.edges()[i]);
  return Graph(G_.n(), es);
}

std::vector<std::vector<int>> DeletionState::alive_components() const {
  std::vector<std::vector<int>> adj(G_.n());
  for (int i = 0; i < G_.m(); ++i)
    if (edge_alive_[i]) {
      auto [u, v] = G_.edges()[i];
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  std::vector<char> seen(G_.n(), 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < G_.n(); ++s) {
    if (!vertex_alive_[s] || seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (size_t i = 0; i < comp.size(); ++i)
      for (int w : adj[comp[i]])
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool DeletionState::bad_set(const std::vector<int>& U) const {
  // A copy meets U in exactly one vertex iff its bit is in at-least-one but
  // not in at-least-two.
  for (int w = 0; w < words_; ++w) {
    uint64_t one = 0, two = 0;
    for (int v : U) {
      uint64_t x = incidence_[v][w];
      two |= one & x;
      one |= x;
    }
    if (one & ~two) return false;
  }
  return true;
}

template <typename Visit>
void DeletionState::scan_bad_sets(Visit&& visit) const {
  auto alive = alive_vertices();
  const int k = static_cast<int>(alive.size());
  std::vector<int> idx, U;
  // Sizes 2..b+1, each in lexicographic order.
  for (int size = 2; size <= b_ + 1 && size <= k; ++size) {
    idx.resize(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      U.clear();
      for (int i : idx) U.push_back(alive[i]);
      if (bad_set(U) && !visit(U)) return;
      int i = size - 1;
      while (i >= 0 && idx[i] == k - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

std::optional<DeletionStep> DeletionState::first_step() const {
  for (int v = 0; v < G_.n(); ++v) {
    if (!vertex_alive_[v]) continue;
    bool in_copy = false;
    for (uint64_t x : incidence_[v]) in_copy |= x != 0;
    if (!in_copy) return DeletionStep{StepKind::BadVertex, {v}, {-1, -1}};
  }
  for (int i = 0; i < G_.m(); ++i)
    if (edge_alive_[i] && edge_copy_count_[i] == 0)
      return DeletionStep{StepKind::BadEdge, {}, G_.edges()[i]};
  std::optional<DeletionStep> found;
  scan_bad_sets([&](const std::vector<int>& U) {
    found = DeletionStep{StepKind::BadSet, U, {-1, -1}};
    return false;
  });
  if (found) return found;
  for (const auto& comp : alive_components())
    if (static_cast<int>(comp.size()) <= small_limit_)
      return DeletionStep{StepKind::SmallComponent, comp, {-1, -1}};
  return std::nullopt;
}

std::vector<DeletionStep> DeletionState::all_steps() const {
  std::vector<DeletionStep> out;
  for (int v = 0; v < G_.n(); ++v) {
    if (!vertex_alive_[v]) continue;
    bool in_copy = false;
    for (uint64_t x : incidence_[v]) in_copy |= x != 0;
    if (!in_copy) out.push_back({StepKind::BadVertex, {v}, {-1, -1}});
  }
  for (int i = 0; i < G_.m(); ++i)
    if (edge_alive_[i] && edge_copy_count_[i] == 0)
      out.push_back({StepKind::BadEdge, {}, G_.edges()[i]});
  scan_bad_sets([&](const std::vector<int>& U) {
    out.push_back({StepKind::BadSet, U, {-1, -1}});
    return true;
  });
  for (const auto& comp : alive_components())
    if (static_cast<int>(comp.size()) <= small_limit_)
      out.push_back({StepKind::SmallComponent, comp, {-1, -1}});
  return out;
}

void DeletionState::apply(const DeletionStep& step) {
  if (step.kind == StepKind::BadEdge) {
    for (int i = 0; i < G_.m(); ++i)
      if (G_.edges()[i] == step.edge) edge_alive_[i] = 0;
  } else {
    std::vector<char> gone(G_.n(), 0);
    for (int v : step.vertices) {
      vertex_alive_[v] = 0;
      gone[v] = 1;
    }
    for (int i = 0; i < G_.m(); ++i) {
      auto [u, v] = G_.edges()[i];
      if (gone[u] || gone[v]) edge_alive_[i] = 0;
    }
  }
  for (size_t c = 0; c < copy_vertices_.size(); ++c) {
    if (!copy_alive_[c]) continue;
    for (int e : copy_edges_[c])
      if (!edge_alive_[e]) {
        copy_alive_[c] = 0;
        break;
      }
  }
  refresh();
}

std::optional<DeletionStep> find_deletion_step(const Graph& G, const Graph& H, int b) {
  DeletionState st(G, H, b);
  return st.first_step();
}

DeletionTrace compute_core(const Graph& G, const Graph& H, int b, OrderPolicy policy,
                           uint64_t seed) {
  DeletionState st(G, H, b);
  DeletionTrace tr;
  Rng rng(seed);
  while (true) {
    std::optional<DeletionStep> step;
    if (policy == OrderPolicy::Deterministic) {
      step = st.first_step();
    } else {
      auto steps = st.all_steps();
      if (!steps.empty()) step = steps[rng.below(steps.size())];
    }
    if (!step) break;
    st.apply(*step);
    switch (step->kind) {
      case StepKind::BadVertex: tr.deleted_bad_vertices.push_back(step->vertices[0]); break;
      case StepKind::BadEdge: tr.deleted_bad_edges.push_back(step->edge); break;
      case StepKind::BadSet: tr.U.push_back(step->vertices); break;
      case StepKind::SmallComponent: tr.W.push_back(step->vertices); break;
    }
    tr.steps.push_back(std::move(*step));
  }
  tr.core_vertices = st.alive_vertices();
  tr.core = st.current_graph();
  return tr;
}

bool is_stable(const Graph& G, const Graph& H, int b) { return !find_deletion_step(G, H, b); }

Graph compact_core(const DeletionTrace& trace) { return trace.core.induced(trace.core_vertices); }

}  // namespace vglab
