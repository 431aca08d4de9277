#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "vglab/catalog.hpp"
#include "vglab/core_reduction.hpp"
#include "vglab/density.hpp"
#include "vglab/random_models.hpp"
#include "vglab/rng.hpp"
#include "vglab/subgraph.hpp"

using namespace vglab;

namespace {

Graph cat(Family f, std::vector<int> params = {}) { return make_catalog_graph({f, std::move(params)}); }

const Graph& K3() {
  static const Graph g = cat(Family::Complete, {3});
  return g;
}

std::vector<Edge> core_edges(const DeletionTrace& t) { return t.core.edges(); }

}  // namespace

TEST_CASE("argument validation") {
  CHECK_THROWS(check_deletion_args(Graph(2), 1));
  CHECK_THROWS(check_deletion_args(cat(Family::Complete, {1}), 1));
  CHECK_THROWS(check_deletion_args(K3(), 0));
  CHECK_THROWS(check_deletion_args(K3(), 5));
  CHECK_NOTHROW(check_deletion_args(K3(), 4));
}

TEST_CASE("single deletion steps") {
  auto s = find_deletion_step(cat(Family::Path, {5}), K3(), 1);
  REQUIRE(s);
  CHECK(s->kind == StepKind::BadVertex);
  auto k4 = find_deletion_step(cat(Family::Complete, {4}), K3(), 1);
  REQUIRE(k4);
  CHECK(k4->kind == StepKind::SmallComponent);
  CHECK_FALSE(find_deletion_step(cat(Family::K3Cycle, {5}), K3(), 1));
}

TEST_CASE("compute_core examples") {
  Graph dd_ttt = disjoint_union({cat(Family::DD), cat(Family::TTT)});
  auto t = compute_core(dd_ttt, K3(), 1);
  CHECK(t.steps.empty());
  CHECK(t.core_vertices.size() == 12);
  CHECK(is_stable(dd_ttt, K3(), 1));

  Graph tail(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  auto e = compute_core(tail, K3(), 1);
  CHECK(e.core_vertices.empty());
  CHECK(e.core.m() == 0);
  CHECK_FALSE(e.steps.empty());

  auto empty = compute_core(Graph(0), K3(), 1);
  CHECK(empty.steps.empty());
  CHECK(empty.core_vertices.empty());
}

TEST_CASE("stability examples") {
  CHECK(is_stable(cat(Family::TTT), K3(), 1));
  CHECK_FALSE(is_stable(cat(Family::TTT), K3(), 2));
  CHECK_FALSE(is_stable(cat(Family::K3Cycle, {4}), K3(), 2));
}

TEST_CASE("core is idempotent and stable") {
  Rng rng(21);
  for (int rep = 0; rep < 30; ++rep) {
    int n = 10 + static_cast<int>(rng.below(25));
    Graph g = sample_gnp(n, 0.15 + 0.1 * rng.uniform(), rng());
    for (int b : {1, 2}) {
      auto t = compute_core(g, K3(), b);
      Graph c = compact_core(t);
      CHECK(is_stable(c, K3(), b));
      auto again = compute_core(t.core, K3(), b);
      CHECK(again.core_vertices == t.core_vertices);
      CHECK(core_edges(again) == core_edges(t));
    }
  }
}

TEST_CASE("deletion orders are confluent") {
  Rng rng(8);
  const Graph c4 = cat(Family::Cycle, {4});
  for (int rep = 0; rep < 12; ++rep) {
    int n = 12 + static_cast<int>(rng.below(29));
    double p = std::vector<double>{0.05, 0.1, 0.2}[rep % 3];
    Graph g = sample_gnp(n, p, rng());
    for (const Graph* H : {&K3(), &c4}) {
      auto ref = compute_core(g, *H, 1);
      for (uint64_t seed = 1; seed <= 20; ++seed) {
        auto t = compute_core(g, *H, 1, OrderPolicy::SeededRandom, seed);
        CHECK(t.core_vertices == ref.core_vertices);
        CHECK(core_edges(t) == core_edges(ref));
      }
    }
  }
}

TEST_CASE("copies outside the core meet a bad set twice or a small component fully") {
  Rng rng(13);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 8 + static_cast<int>(rng.below(8));
    Graph g = sample_gnp(n, 0.3 + 0.2 * rng.uniform(), rng());
    auto t = compute_core(g, K3(), 1);
    auto in_core = [&](const std::vector<int>& vs) {
      for (int v : vs)
        if (!std::binary_search(t.core_vertices.begin(), t.core_vertices.end(), v)) return false;
      return true;
    };
    for (const Copy& c : list_copies(t.core, K3())) {
      CHECK(in_core(c.vertices));
      for (auto [a, b] : c.edges) CHECK(g.has_edge(a, b));
    }
    std::set<std::vector<Edge>> core_copies;
    for (const Copy& c : list_copies(t.core, K3())) core_copies.insert(c.edges);
    for (const Copy& c : list_copies(g, K3())) {
      if (core_copies.count(c.edges)) continue;
      bool witnessed = false;
      for (const auto& U : t.U) {
        int hit = 0;
        for (int v : c.vertices) hit += std::count(U.begin(), U.end(), v) > 0;
        witnessed |= hit >= 2;
      }
      for (const auto& W : t.W) {
        int hit = 0;
        for (int v : c.vertices) hit += std::count(W.begin(), W.end(), v) > 0;
        witnessed |= hit >= 3;
      }
      CHECK(witnessed);
    }
  }
}

TEST_CASE("sparse core components of density at most 10/7 are TTT or DD") {
  int checked = 0;
  for (int n : {20, 30, 40}) {
    double p = 0.9 * std::pow(n, -2.0 / 3.0);
    for (int rep = 0; rep < 334; ++rep) {
      Graph g = sample_gnp(n, p, stream_seed(n, rep));
      auto t = compute_core(g, K3(), 1);
      Graph c = compact_core(t);
      for (const auto& comp : c.components()) {
        if (comp.size() >= 25) continue;
        Graph part = c.induced(comp);
        if (max_density(part).value > Rational(10, 7)) continue;
        ++checked;
        ComponentKind k = recognize_component(part).kind;
        CHECK((k == ComponentKind::TTT || k == ComponentKind::DD));
      }
    }
  }
  MESSAGE("sparse core components checked: " << checked);
}
