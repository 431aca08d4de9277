#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "vglab/catalog.hpp"
#include "vglab/rng.hpp"
#include "vglab/subgraph.hpp"

using namespace vglab;

namespace {

Graph cat(Family f, std::vector<int> params = {}) { return make_catalog_graph({f, std::move(params)}); }

Graph random_graph(int n, double p, Rng& rng) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform() < p) e.emplace_back(u, v);
  return Graph(n, e);
}

// Every injection of V(H) into V(G) that maps edges to edges.
std::vector<Embedding> naive_embeddings(const Graph& G, const Graph& H) {
  std::vector<Embedding> out;
  Embedding cur(H.n());
  std::vector<char> used(G.n(), 0);
  std::function<void(int)> rec = [&](int h) {
    if (h == H.n()) {
      for (auto [a, b] : H.edges())
        if (!G.has_edge(cur[a], cur[b])) return;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v < G.n(); ++v)
      if (!used[v]) {
        used[v] = 1;
        cur[h] = v;
        rec(h + 1);
        used[v] = 0;
      }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("embedding and copy counts") {
  Graph k3 = cat(Family::Complete, {3});
  CHECK(count_embeddings(cat(Family::Complete, {4}), k3) == 24);
  CHECK(count_copies(cat(Family::Complete, {4}), k3) == 4);
  CHECK(count_copies(cat(Family::Complete, {5}), k3) == 10);
  CHECK(count_copies(cat(Family::DD), cat(Family::DD)) == 1);
  CHECK_FALSE(contains_copy(cat(Family::Path, {3}), k3));
  CHECK(enumerate_copies(cat(Family::Path, {3}), k3).empty());
  CHECK_THROWS_AS(enumerate_copies(cat(Family::Complete, {14}), cat(Family::Complete, {13})), std::length_error);
}

TEST_CASE("automorphism counts") {
  CHECK(automorphism_count(cat(Family::Complete, {3})) == 6);
  CHECK(automorphism_count(cat(Family::DD)) == 8);
  CHECK(automorphism_count(cat(Family::TTT)) == 2);
  CHECK(automorphism_count(cat(Family::Cycle, {5})) == 10);
}

TEST_CASE("triangles of DD all contain the center") {
  auto sets = copy_vertex_sets(cat(Family::DD), cat(Family::Complete, {3}));
  CHECK(sets.size() == 4);
  for (const auto& s : sets) CHECK(std::find(s.begin(), s.end(), 0) != s.end());
}

TEST_CASE("copies times automorphisms equals embeddings") {
  std::vector<Graph> hosts = {cat(Family::DD), cat(Family::TTT), cat(Family::K3Cycle, {4}),
                              cat(Family::TripleDiamond), cat(Family::DDt, {3}), cat(Family::FeasibleA),
                              cat(Family::Complete, {5})};
  std::vector<Graph> patterns = {cat(Family::Complete, {3}), cat(Family::Cycle, {4}), cat(Family::Diamond),
                                 cat(Family::Path, {3}), cat(Family::Star, {2}), cat(Family::DD)};
  for (const Graph& G : hosts)
    for (const Graph& H : patterns)
      CHECK(count_copies(G, H) * automorphism_count(H) == count_embeddings(G, H));
}

TEST_CASE("enumeration agrees with the all-injections oracle") {
  Rng rng(99);
  std::vector<Graph> patterns = {cat(Family::Complete, {3}), cat(Family::Cycle, {4}), cat(Family::Path, {3}),
                                 cat(Family::Diamond), cat(Family::Star, {3})};
  for (int rep = 0; rep < 200; ++rep) {
    int n = 1 + static_cast<int>(rng.below(7));
    Graph G = random_graph(n, 0.5, rng);
    const Graph& H = patterns[rep % patterns.size()];
    CHECK(enumerate_copies(G, H) == naive_embeddings(G, H));
  }
}

TEST_CASE("for_each_embedding stops when asked") {
  int seen = 0;
  for_each_embedding(cat(Family::Complete, {5}), cat(Family::Complete, {3}), [&](const Embedding&) {
    return ++seen < 3;
  });
  CHECK(seen == 3);
}

TEST_CASE("disjoint packings") {
  Graph dd = cat(Family::DD);
  CHECK(max_disjoint_copies(disjoint_union({dd, dd}), dd, 2).copies.size() == 2);
  CHECK(max_disjoint_copies(dd, dd, 2).copies.size() == 1);
  CHECK(max_disjoint_copies(h_chain(cat(Family::Complete, {3}), 2), cat(Family::Complete, {3}), 2).copies.size() == 1);
  auto pk = max_disjoint_copies(cat(Family::K3Cycle, {6}), cat(Family::Complete, {3}), 10);
  CHECK(pk.exact);
  CHECK(pk.copies.size() == 3);
}

TEST_CASE("dangerous edges") {
  Graph k3 = cat(Family::Complete, {3});
  auto d = has_dangerous_edge(cat(Family::Diamond), k3);
  CHECK(d.found);
  CHECK(d.witness == Edge{0, 1});
  CHECK_FALSE(has_dangerous_edge(cat(Family::K3Cycle, {4}), k3).found);
  auto t = has_dangerous_edge(cat(Family::TTT), k3);
  CHECK(t.found);
}

TEST_CASE("recognizer examples") {
  CHECK(recognize_component(cat(Family::DD)).kind == ComponentKind::DD);
  auto cyc = recognize_component(h_cycle(cat(Family::Complete, {3}), 5));
  CHECK(cyc.kind == ComponentKind::K3Cycle);
  CHECK(cyc.t == 5);
  CHECK(recognize_component(cat(Family::FeasibleB)).kind == ComponentKind::FeasibleB);
  CHECK(recognize_component(cat(Family::Path, {4})).kind == ComponentKind::Tree);
  CHECK(recognize_component(cat(Family::Complete, {4})).kind == ComponentKind::Other);
}

TEST_CASE("recognizer is the identity on relabeled catalog members") {
  struct Case {
    CatalogId id;
    ComponentKind kind;
    int t;
  };
  std::vector<Case> cases = {{{Family::TTT, {}}, ComponentKind::TTT, 0},
                             {{Family::DD, {}}, ComponentKind::DD, 2},  // DD is DD_2
                             {{Family::DDt, {3}}, ComponentKind::DDt, 3},
                             {{Family::DDt, {4}}, ComponentKind::DDt, 4},
                             {{Family::K3Cycle, {4}}, ComponentKind::K3Cycle, 4},
                             {{Family::K3Cycle, {6}}, ComponentKind::K3Cycle, 6},
                             {{Family::FeasibleA, {}}, ComponentKind::FeasibleA, 0},
                             {{Family::FeasibleB, {}}, ComponentKind::FeasibleB, 0},
                             {{Family::FeasibleC, {}}, ComponentKind::FeasibleC, 0}};
  Rng rng(3);
  for (const auto& c : cases) {
    Graph g = make_catalog_graph(c.id);
    for (int rep = 0; rep < 50; ++rep) {
      std::vector<int> perm(g.n());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      Graph h = g.relabeled(perm);
      ComponentTag tag = recognize_component(h);
      REQUIRE(tag.kind == c.kind);
      CHECK(tag.t == c.t);
      // The labeling carries the catalog graph onto h.
      REQUIRE(tag.labeling.size() == static_cast<size_t>(g.n()));
      for (auto [a, b] : g.edges()) CHECK(h.has_edge(tag.labeling[a], tag.labeling[b]));
    }
  }
}

TEST_CASE("isomorphism search") {
  Graph g = cat(Family::TTT);
  std::vector<int> perm = {4, 2, 0, 3, 1};
  Graph h = g.relabeled(perm);
  auto iso = find_isomorphism(g, h);
  REQUIRE(iso);
  for (auto [a, b] : g.edges()) CHECK(h.has_edge((*iso)[a], (*iso)[b]));
  CHECK_FALSE(find_isomorphism(cat(Family::Path, {4}), cat(Family::Star, {3})));
}

TEST_CASE("induced containment") {
  Graph dd = cat(Family::DD);
  Graph k3 = cat(Family::Complete, {3});
  CHECK(induced_contains(dd, {0, 1, 2}, k3));
  CHECK_FALSE(induced_contains(dd, {1, 2, 3}, k3));
  CHECK_FALSE(induced_contains(dd, {}, k3));
}

TEST_CASE("list_copies deduplicates symmetric images") {
  auto copies = list_copies(cat(Family::Complete, {4}), cat(Family::Cycle, {4}));
  CHECK(copies.size() == 3);
  std::set<std::vector<Edge>> distinct;
  for (const auto& c : copies) distinct.insert(c.edges);
  CHECK(distinct.size() == 3);
}

TEST_CASE("disjoint copy search agrees with the exact packing") {
  Graph k3 = cat(Family::Complete, {3});
  Rng rng(31);
  for (int rep = 0; rep < 60; ++rep) {
    Graph G = random_graph(6 + static_cast<int>(rng.below(7)), 0.35, rng);
    Packing pk = max_disjoint_copies(G, k3, 4);
    REQUIRE(pk.exact);
    for (int k = 1; k <= 3; ++k) {
      auto found = find_disjoint_copies(G, k3, k);
      CHECK(has_disjoint_copies(G, k3, k) == (static_cast<int>(pk.copies.size()) >= k));
      if (found.empty()) continue;
      CHECK(found.size() == static_cast<size_t>(k));
      std::vector<int> all;
      for (const auto& c : found) {
        CHECK(induced_contains(G, c, k3));
        all.insert(all.end(), c.begin(), c.end());
      }
      std::sort(all.begin(), all.end());
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    }
  }
  Graph dd = cat(Family::DD);
  CHECK(has_disjoint_copies(disjoint_union({dd, dd}), dd, 2));
  CHECK_FALSE(has_disjoint_copies(dd, dd, 2));
  CHECK(has_disjoint_copies(dd, dd, 0));
}
