#include "vglab/subgraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "vglab/catalog.hpp"

namespace vglab {

namespace {

struct SearchPlan {
  std::vector<int> order;                // H vertices in placement order
  std::vector<int> parent;               // placed H-neighbor used for candidates, or -1
  std::vector<std::vector<int>> checks;  // earlier H-neighbors of order[i]
};

SearchPlan plan_search(const Graph& H) {
  const int k = H.n();
  SearchPlan p;
  std::vector<char> placed(k, 0);
  std::vector<int> pos(k, -1);
  for (int done = 0; done < k;) {
    // Start a new component at its highest-degree vertex.
    int root = -1;
    for (int v = 0; v < k; ++v)
      if (!placed[v] && (root < 0 || H.degree(v) > H.degree(root))) root = v;
    size_t head = p.order.size();
    p.order.push_back(root);
    placed[root] = 1;
    // Grow by always taking the vertex with the most placed neighbors.
    while (true) {
      int best = -1, best_links = 0;
      for (int v = 0; v < k; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int w : H.neighbors(v)) links += placed[w];
        if (links > best_links || (links == best_links && links > 0 && H.degree(v) > H.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      if (best < 0 || best_links == 0) break;
      p.order.push_back(best);
      placed[best] = 1;
    }
    done += static_cast<int>(p.order.size() - head);
  }
  for (int i = 0; i < k; ++i) pos[p.order[i]] = i;
  p.parent.assign(k, -1);
  p.checks.assign(k, {});
  for (int i = 0; i < k; ++i) {
    int v = p.order[i];
    for (int w : H.neighbors(v))
      if (pos[w] < i) {
        p.checks[i].push_back(w);
        if (p.parent[i] < 0) p.parent[i] = w;
      }
  }
  return p;
}

void check_pattern(const Graph& H) {
  if (H.n() > kMaxPatternVertices)
    throw std::length_error("pattern graph has " + std::to_string(H.n()) + " vertices, limit is " +
                            std::to_string(kMaxPatternVertices));
}

}  // namespace

void for_each_embedding(const Graph& G, const Graph& H,
                        const std::function<bool(const Embedding&)>& visit) {
  check_pattern(H);
  const int k = H.n();
  if (k == 0) {
    visit({});
    return;
  }
  if (k > G.n()) return;
  SearchPlan plan = plan_search(H);
  Embedding map(k, -1);
  std::vector<char> used(G.n(), 0);
  bool stop = false;
  std::vector<int> all_vertices(G.n());
  for (int v = 0; v < G.n(); ++v) all_vertices[v] = v;

  std::function<void(int)> rec = [&](int i) {
    if (stop) return;
    if (i == k) {
      if (!visit(map)) stop = true;
      return;
    }
    int h = plan.order[i];
    const std::vector<int>& cands =
        plan.parent[i] >= 0 ? G.neighbors(map[plan.parent[i]]) : all_vertices;
    for (int c : cands) {
      if (used[c] || G.degree(c) < H.degree(h)) continue;
      bool ok = true;
      for (int w : plan.checks[i])
        if (!G.has_edge(map[w], c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map[h] = c;
      used[c] = 1;
      rec(i + 1);
      used[c] = 0;
      map[h] = -1;
      if (stop) return;
    }
  };
  rec(0);
}

std::vector<Embedding> enumerate_copies(const Graph& G, const Graph& H, size_t limit) {
  std::vector<Embedding> out;
  for_each_embedding(G, H, [&](const Embedding& e) {
    out.push_back(e);
    return limit == 0 || out.size() < limit;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_copy(const Graph& G, const Graph& H) {
  bool found = false;
  for_each_embedding(G, H, [&](const Embedding&) {
    found = true;
    return false;
  });
  return found;
}

long long count_embeddings(const Graph& G, const Graph& H) {
  long long c = 0;
  for_each_embedding(G, H, [&](const Embedding&) {
    ++c;
    return true;
  });
  return c;
}

long long automorphism_count(const Graph& H) {
  if (H.n() > 10) throw std::length_error("automorphism_count: graph too large (n > 10)");
  return count_embeddings(H, H);
}

long long count_copies(const Graph& G, const Graph& H) {
  return count_embeddings(G, H) / automorphism_count(H);
}

std::vector<Copy> list_copies(const Graph& G, const Graph& H) {
  std::set<Copy> seen;
  for_each_embedding(G, H, [&](const Embedding& e) {
    Copy c;
    c.vertices = e;
    std::sort(c.vertices.begin(), c.vertices.end());
    for (auto [a, b] : H.edges()) c.edges.emplace_back(std::min(e[a], e[b]), std::max(e[a], e[b]));
    std::sort(c.edges.begin(), c.edges.end());
    seen.insert(std::move(c));
    return true;
  });
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> copy_vertex_sets(const Graph& G, const Graph& H) {
  std::set<std::vector<int>> seen;
  for_each_embedding(G, H, [&](const Embedding& e) {
    auto vs = e;
    std::sort(vs.begin(), vs.end());
    seen.insert(std::move(vs));
    return true;
  });
  return {seen.begin(), seen.end()};
}

Packing max_disjoint_copies(const Graph& G, const Graph& H, int N) {
  Packing out;
  if (N <= 0) return out;
  auto sets = copy_vertex_sets(G, H);
  if (sets.size() > kExactPackingLimit) {
    out.exact = false;
    std::vector<char> used(G.n(), 0);
    for (const auto& s : sets) {
      if (static_cast<int>(out.copies.size()) >= N) break;
      if (std::any_of(s.begin(), s.end(), [&](int v) { return used[v]; })) continue;
      for (int v : s) used[v] = 1;
      out.copies.push_back(s);
    }
    return out;
  }
  // Branch and bound: copies are processed in order; each is either taken
  // (if disjoint from the current packing) or skipped.
  std::vector<char> used(G.n(), 0);
  std::vector<int> chosen, best;
  const int k = H.n();
  std::function<void(size_t)> rec = [&](size_t i) {
    if (static_cast<int>(best.size()) >= N) return;
    if (chosen.size() > best.size()) best = chosen;
    if (i == sets.size()) return;
    int free_vertices = 0;
    for (int v = 0; v < G.n(); ++v) free_vertices += !used[v];
    int bound = static_cast<int>(chosen.size()) + (k > 0 ? free_vertices / k : 0);
    if (bound <= static_cast<int>(best.size())) return;
    const auto& s = sets[i];
    if (std::none_of(s.begin(), s.end(), [&](int v) { return used[v]; })) {
      for (int v : s) used[v] = 1;
      chosen.push_back(static_cast<int>(i));
      rec(i + 1);
      chosen.pop_back();
      for (int v : s) used[v] = 0;
    }
    rec(i + 1);
  };
  rec(0);
  for (int idx : best) out.copies.push_back(sets[idx]);
  return out;
}

std::vector<std::vector<int>> find_disjoint_copies(const Graph& G, const Graph& H, int k) {
  if (k <= 0 || G.n() < k * H.n()) return {};
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> found;
  for_each_embedding(G, H, [&](const Embedding& e) {
    std::vector<int> s = e;
    std::sort(s.begin(), s.end());
    if (!seen.insert(s).second) return true;
    if (k == 1) {
      found.push_back(s);
      return false;
    }
    std::vector<int> rest;
    for (int v = 0, j = 0; v < G.n(); ++v) {
      if (j < static_cast<int>(s.size()) && s[j] == v) {
        ++j;
        continue;
      }
      rest.push_back(v);
    }
    auto more = find_disjoint_copies(G.induced(rest), H, k - 1);
    if (more.empty()) return true;
    found.push_back(s);
    for (auto& c : more) {
      for (int& v : c) v = rest[v];
      std::sort(c.begin(), c.end());
      found.push_back(std::move(c));
    }
    return false;
  });
  return found;
}

bool has_disjoint_copies(const Graph& G, const Graph& H, int k) {
  return k <= 0 || !find_disjoint_copies(G, H, k).empty();
}

DangerousEdge has_dangerous_edge(const Graph& G, const Graph& H) {
  std::map<Edge, int> count;
  for (const auto& c : list_copies(G, H))
    for (const auto& e : c.edges) ++count[e];
  for (const auto& [e, k] : count)
    if (k >= 2) return {true, e};
  return {};
}

std::string to_string(const ComponentTag& tag) {
  switch (tag.kind) {
    case ComponentKind::TTT: return "TTT";
    case ComponentKind::DD: return "DD";
    case ComponentKind::DDt: return "DD_" + std::to_string(tag.t);
    case ComponentKind::K3Cycle: return "K3Cycle(" + std::to_string(tag.t) + ")";
    case ComponentKind::FeasibleA: return "FeasibleA";
    case ComponentKind::FeasibleB: return "FeasibleB";
    case ComponentKind::FeasibleC: return "FeasibleC";
    case ComponentKind::Tree: return "Tree";
    case ComponentKind::Other: return "Other";
  }
  return "Other";
}

namespace {

// Isomorphism for structured components too large for the generic search:
// tries every start vertex of matching degree and extends along neighbor
// lists. Returns a map a -> b.
std::optional<std::vector<int>> match_large(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return std::nullopt;
  const int n = a.n();
  std::vector<int> order, parent(n, -1);
  std::vector<char> placed(n, 0);
  for (int s = 0; s < n; ++s) {
    if (placed[s]) continue;
    size_t head = order.size();
    order.push_back(s);
    placed[s] = 1;
    for (size_t i = head; i < order.size(); ++i)
      for (int w : a.neighbors(order[i]))
        if (!placed[w]) {
          placed[w] = 1;
          parent[w] = order[i];
          order.push_back(w);
        }
  }
  std::vector<int> map(n, -1), used(n, 0), pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) return true;
    int v = order[i];
    const auto& cands = parent[v] >= 0 ? b.neighbors(map[parent[v]]) : all;
    for (int c : cands) {
      if (used[c] || b.degree(c) != a.degree(v)) continue;
      bool ok = true;
      for (int w : a.neighbors(v))
        if (pos[w] < i && !b.has_edge(map[w], c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map[v] = c;
      used[c] = 1;
      if (rec(i + 1)) return true;
      used[c] = 0;
    }
    map[v] = -1;
    return false;
  };
  if (rec(0)) return map;
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return std::nullopt;
  if (a.n() > kMaxPatternVertices) return match_large(a, b);
  // An edge-preserving injection between graphs with equal edge counts is an
  // isomorphism.
  std::optional<std::vector<int>> out;
  for_each_embedding(b, a, [&](const Embedding& e) {
    out = e;
    return false;
  });
  return out;
}

ComponentTag recognize_component(const Graph& comp) {
  ComponentTag tag;
  const int n = comp.n(), m = comp.m();
  auto attempt = [&](const CatalogId& id, ComponentKind kind, int t) {
    Graph g = make_catalog_graph(id);
    if (g.n() != n || g.m() != m) return false;
    auto map = find_isomorphism(g, comp);
    if (!map) return false;
    tag.kind = kind;
    tag.t = t;
    tag.labeling = *map;
    return true;
  };
  if (attempt({Family::DD, {}}, ComponentKind::DD, 2)) return tag;
  if (attempt({Family::TTT, {}}, ComponentKind::TTT, 0)) return tag;
  if (attempt({Family::FeasibleA, {}}, ComponentKind::FeasibleA, 0)) return tag;
  if (attempt({Family::FeasibleB, {}}, ComponentKind::FeasibleB, 0)) return tag;
  if (attempt({Family::FeasibleC, {}}, ComponentKind::FeasibleC, 0)) return tag;
  if (n >= 9 && (n - 3) % 2 == 0) {
    int t = (n - 3) / 2;
    if (attempt({Family::DDt, {t}}, ComponentKind::DDt, t)) return tag;
  }
  if (n >= 6 && n % 2 == 0) {
    int t = n / 2;
    if (attempt({Family::K3Cycle, {t}}, ComponentKind::K3Cycle, t)) return tag;
  }
  if (comp.is_tree()) tag.kind = ComponentKind::Tree;
  return tag;
}

bool induced_contains(const Graph& G, const std::vector<int>& S, const Graph& H) {
  if (static_cast<int>(S.size()) < H.n()) return false;
  for (int v : S)
    if (v < 0 || v >= G.n()) throw std::invalid_argument("induced_contains: vertex out of range");
  return contains_copy(G.induced(S), H);
}

}  // namespace vglab
