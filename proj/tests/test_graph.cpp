#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "vglab/catalog.hpp"
#include "vglab/graph.hpp"
#include "vglab/rng.hpp"
#include "vglab/subgraph.hpp"

using namespace vglab;

namespace {

Graph random_graph(int n, double p, Rng& rng) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform() < p) e.emplace_back(u, v);
  return Graph(n, e);
}

std::vector<int> random_perm(int n, Rng& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("graph construction validates edges") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  Graph g(4, {{2, 3}, {0, 1}, {1, 2}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.degree(1) == 2);
  CHECK(g.max_degree() == 2);
  CHECK(g.has_edge(3, 2));
  CHECK_FALSE(g.has_edge(0, 3));
}

TEST_CASE("degree equals number of incident edges") {
  Rng rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    Graph g = random_graph(30, 0.2, rng);
    for (int v = 0; v < g.n(); ++v) {
      int inc = 0;
      for (auto [a, b] : g.edges()) inc += (a == v) + (b == v);
      CHECK(g.degree(v) == inc);
    }
  }
}

TEST_CASE("parse_graph examples") {
  Graph k3 = parse_graph("3 3\n0 1\n0 2\n1 2");
  CHECK(k3 == make_catalog_graph({Family::Complete, {3}}));
  Graph two = parse_graph("2 0");
  CHECK(two.n() == 2);
  CHECK(two.m() == 0);
  CHECK_THROWS(parse_graph("3 1\n0 3"));
  CHECK(parse_graph("# comment\n3 1\n# another\n1 2\n").m() == 1);
}

TEST_CASE("parse and serialize round trip") {
  Rng rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    int n = 1 + static_cast<int>(rng.below(50));
    Graph g = random_graph(n, rng.uniform() * 0.3, rng);
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
}

TEST_CASE("dot output lists every edge") {
  Graph g = make_catalog_graph({Family::Path, {3}});
  std::string dot = to_dot(g, "P3");
  CHECK(dot.find("graph P3") != std::string::npos);
  CHECK(dot.find("0 -- 1") != std::string::npos);
  CHECK(dot.find("1 -- 2") != std::string::npos);
}

TEST_CASE("disjoint union") {
  Graph dd = make_catalog_graph({Family::DD, {}});
  Graph u = disjoint_union({dd, dd});
  CHECK(u.n() == 14);
  CHECK(u.m() == 20);
  CHECK(disjoint_union({}).n() == 0);
  Graph kp = disjoint_union({make_catalog_graph({Family::Complete, {3}}), make_catalog_graph({Family::Path, {3}})});
  CHECK(kp.components().size() == 2);
}

TEST_CASE("structural predicates") {
  CHECK(make_catalog_graph({Family::DaryTree, {2, 3}}).is_tree());
  CHECK_FALSE(make_catalog_graph({Family::Cycle, {4}}).is_tree());
  CHECK(disjoint_union({make_catalog_graph({Family::Star, {2}}), make_catalog_graph({Family::Path, {2}})}).is_forest());
  CHECK(make_catalog_graph({Family::Cycle, {5}}).is_two_connected());
  CHECK_FALSE(make_catalog_graph({Family::DD, {}}).is_two_connected());
  Graph g = make_catalog_graph({Family::Path, {5}});
  CHECK(g.external_neighborhood({1, 2}) == std::vector<int>{0, 3});
  Graph ind = g.induced({4, 3, 2});
  CHECK(ind.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("catalog vertex and edge counts follow closed formulas") {
  for (int k = 2; k <= 7; ++k) {
    Graph g = make_catalog_graph({Family::Complete, {k}});
    CHECK(g.n() == k);
    CHECK(g.m() == k * (k - 1) / 2);
  }
  for (int k = 3; k <= 8; ++k) {
    Graph g = make_catalog_graph({Family::Cycle, {k}});
    CHECK(g.n() == k);
    CHECK(g.m() == k);
  }
  for (int l = 1; l <= 6; ++l) {
    Graph g = make_catalog_graph({Family::Path, {l}});
    CHECK(g.n() == l);
    CHECK(g.m() == l - 1);
  }
  for (int d = 1; d <= 6; ++d) {
    Graph g = make_catalog_graph({Family::Star, {d}});
    CHECK(g.n() == d + 1);
    CHECK(g.m() == d);
  }
  for (int d = 2; d <= 3; ++d)
    for (int h = 1; h <= 4; ++h) {
      Graph g = make_catalog_graph({Family::DaryTree, {d, h}});
      int v = 0, pw = 1;
      for (int i = 0; i < h; ++i, pw *= d) v += pw;
      CHECK(g.n() == v);
      CHECK(g.m() == v - 1);
    }
  for (int t = 2; t <= 5; ++t) {
    Graph g = make_catalog_graph({Family::DDt, {t}});
    CHECK(g.n() == 2 * t + 3);
    CHECK(g.m() == 3 * t + 4);
  }
  for (int t = 3; t <= 7; ++t) {
    Graph g = make_catalog_graph({Family::K3Cycle, {t}});
    CHECK(g.n() == 2 * t);
    CHECK(g.m() == 3 * t);
  }
  CHECK(make_catalog_graph({Family::DD, {}}).n() == 7);
  CHECK(make_catalog_graph({Family::DD, {}}).m() == 10);
  CHECK(make_catalog_graph({Family::TTT, {}}).n() == 5);
  CHECK(make_catalog_graph({Family::TTT, {}}).m() == 7);
  CHECK(make_catalog_graph({Family::Diamond, {}}).m() == 5);
  CHECK(make_catalog_graph({Family::TripleDiamond, {}}).n() == 10);
  CHECK(make_catalog_graph({Family::TripleDiamond, {}}).m() == 15);
  Graph tree = make_catalog_graph({Family::DaryTree, {2, 3}});
  CHECK(tree.n() == 7);
  CHECK(tree.m() == 6);
}

TEST_CASE("catalog labelings") {
  Graph dd = make_catalog_graph({Family::DD, {}});
  // Missing edges z1z2 and z3z4; the center x sees everything.
  CHECK_FALSE(dd.has_edge(2, 3));
  CHECK_FALSE(dd.has_edge(5, 6));
  CHECK(dd.degree(0) == 6);
  CHECK(isomorphic(make_catalog_graph({Family::DDt, {2}}), dd));
  Graph diamond = make_catalog_graph({Family::Diamond, {}});
  CHECK_FALSE(diamond.has_edge(2, 3));
}

TEST_CASE("catalog parameter validation and names") {
  CHECK_THROWS_AS(make_catalog_graph({Family::DDt, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_catalog_graph({Family::K3Cycle, {2}}), std::invalid_argument);
  CHECK(parse_catalog_id("dd").family == Family::DD);
  CHECK(parse_catalog_id("K3CYCLE_5").params == std::vector<int>{5});
  CHECK(parse_catalog_id("TREE_2_3").params == std::vector<int>{2, 3});
  CHECK_THROWS_AS(parse_catalog_id("nonsense"), std::invalid_argument);
  for (const char* name : {"K4", "C5", "P4", "S3", "DD", "TTT", "DD_3", "K3CYCLE_4", "DIAMOND"})
    CHECK(parse_catalog_id(catalog_name(parse_catalog_id(name))).params == parse_catalog_id(name).params);
}

TEST_CASE("h_chain and h_cycle") {
  Graph k3 = make_catalog_graph({Family::Complete, {3}});
  CHECK(h_chain(k3, 1) == k3);
  Graph bowtie = h_chain(k3, 2);
  CHECK(bowtie.n() == 5);
  CHECK(bowtie.m() == 6);
  Graph c4 = make_catalog_graph({Family::Cycle, {4}});
  Graph c4c = h_chain(c4, 2, {{0, 2}});
  CHECK(c4c.n() == 7);
  CHECK(c4c.m() == 8);
  CHECK(h_cycle(k3, 4).n() == 8);
  CHECK(h_cycle(k3, 4).m() == 12);
  CHECK(h_cycle(k3, 3).n() == 6);
  CHECK(h_cycle(k3, 3).m() == 9);
  CHECK_THROWS(h_cycle(k3, 2));
  CHECK(isomorphic(h_cycle(k3, 5), make_catalog_graph({Family::K3Cycle, {5}})));
  // A clique chain of length t holds exactly t copies.
  for (int k = 3; k <= 5; ++k)
    for (int t = 1; t <= 4; ++t) {
      Graph kk = make_catalog_graph({Family::Complete, {k}});
      CHECK(count_copies(h_chain(kk, t), kk) == t);
    }
}

TEST_CASE("relabeling preserves the canonical form") {
  Rng rng(17);
  for (int rep = 0; rep < 60; ++rep) {
    int n = 1 + static_cast<int>(rng.below(10));
    Graph g = random_graph(n, 0.4, rng);
    Graph h = g.relabeled(random_perm(n, rng));
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(isomorphic(g, h));
  }
  CHECK_FALSE(isomorphic(make_catalog_graph({Family::Path, {4}}), make_catalog_graph({Family::Star, {3}})));
}
