#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "vglab/catalog.hpp"
#include "vglab/experiments.hpp"
#include "vglab/random_models.hpp"
#include "vglab/rng.hpp"
#include "vglab/subgraph.hpp"

using namespace vglab;

namespace {

Graph cat(Family f, std::vector<int> params = {}) { return make_catalog_graph({f, std::move(params)}); }

long long linear_scan(const ProcessRun& run, const GraphPredicate& pred) {
  for (long long i = 0; i <= edge_slots(run.n); ++i)
    if (pred(prefix_graph(run, i))) return i;
  return kNeverHit;
}

}  // namespace

TEST_CASE("edge slots") {
  CHECK(edge_slots(5) == 10);
  CHECK(edge_slots(1) == 0);
  long long s = 0;
  for (int u = 0; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v, ++s) {
      CHECK(slot_of_edge(7, u, v) == s);
      CHECK(edge_of_slot(7, s) == Edge{u, v});
    }
  CHECK(p_from_exponent(100, 2.0, Rational(1, 2)) == doctest::Approx(0.2));
}

TEST_CASE("G(n,p) extremes and argument checks") {
  CHECK(sample_gnp(10, 0.0, 1).m() == 0);
  CHECK(sample_gnp(10, 1.0, 1) == cat(Family::Complete, {10}));
  CHECK(sample_gnp(0, 0.5, 1).n() == 0);
  CHECK_THROWS_AS(sample_gnp(5, -0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_gnp(5, 1.5, 1), std::invalid_argument);
}

TEST_CASE("G(1000, 0.01) edge counts concentrate") {
  const double mean = 499500 * 0.01, sd = std::sqrt(499500 * 0.01 * 0.99);
  int inside = 0;
  for (uint64_t i = 0; i < 100; ++i) inside += std::abs(sample_gnp(1000, 0.01, stream_seed(1, i)).m() - mean) <= 4 * sd;
  CHECK(inside >= 99);
}

TEST_CASE("process prefixes") {
  ProcessRun run = sample_process(9, 4);
  CHECK(run.order.size() == 36);
  std::set<long long> slots(run.order.begin(), run.order.end());
  CHECK(slots.size() == 36);
  CHECK(*slots.begin() == 0);
  CHECK(*slots.rbegin() == 35);
  CHECK(prefix_graph(run, 0).m() == 0);
  CHECK(prefix_graph(run, 36) == cat(Family::Complete, {9}));
  Graph prev = prefix_graph(run, 0);
  for (long long i = 1; i <= 36; ++i) {
    Graph g = prefix_graph(run, i);
    CHECK(g.m() == i);
    for (auto [a, b] : prev.edges()) CHECK(g.has_edge(a, b));
    prev = g;
  }
  CHECK_THROWS_AS(prefix_graph(run, -1), std::out_of_range);
  CHECK_THROWS_AS(prefix_graph(run, 37), std::out_of_range);
}

TEST_CASE("first edge of the process is uniform") {
  std::vector<int> first(6, 0);
  const int runs = 24000;
  for (int i = 0; i < runs; ++i) ++first[sample_process(4, stream_seed(2, i)).order[0]];
  for (int c : first) CHECK(std::abs(c / double(runs) - 1.0 / 6.0) <= 0.01);
  // Every edge of K_6 (15 slots) as well.
  std::vector<int> first15(15, 0);
  for (int i = 0; i < runs; ++i) ++first15[sample_process(6, stream_seed(3, i)).order[0]];
  for (int c : first15) CHECK(std::abs(c / double(runs) - 1.0 / 15.0) <= 0.01);
}

TEST_CASE("hitting time examples") {
  ProcessRun run = sample_process(12, 9);
  auto any_edge = [](const Graph& g) { return g.m() >= 1; };
  CHECK(hitting_time(run, any_edge, true).tau == 1);
  CHECK(hitting_time(run, any_edge, false).tau == 1);
  auto never = [](const Graph&) { return false; };
  CHECK_FALSE(hitting_time(run, never, true).hit());
  CHECK(hitting_time(run, never, false).tau == kNeverHit);
  const Graph dd = cat(Family::DD);
  auto has_dd = [&](const Graph& g) { return contains_copy(g, dd); };
  auto r = hitting_time(run, has_dd, true, "DD");
  CHECK(r.property == "DD");
  REQUIRE(r.hit());
  CHECK(has_dd(prefix_graph(run, r.tau)));
  CHECK_FALSE(has_dd(prefix_graph(run, r.tau - 1)));
  CHECK(r.tau == linear_scan(run, has_dd));
}

TEST_CASE("binary search agrees with the linear scan") {
  const Graph k3 = cat(Family::Complete, {3}), dd = cat(Family::DD);
  auto has_k3 = [&](const Graph& g) { return contains_copy(g, k3); };
  auto has_dd = [&](const Graph& g) { return contains_copy(g, dd); };
  // Maker-first wins once a DD appears, so the pipeline is only consulted
  // on DD-free prefixes, whose cores stay within the solver limits.
  auto maker_first = [&](const Graph& g) {
    if (has_dd(g)) return true;
    return decide_winner_fast({GameKind::MB, 1, 1, k3, 0}, g).winner == 0;
  };
  for (uint64_t i = 0; i < 100; ++i) {
    ProcessRun run = sample_process(20, stream_seed(5, i));
    CAPTURE(i);
    CHECK(hitting_time(run, has_k3, true).tau == linear_scan(run, has_k3));
    long long dd_tau = hitting_time(run, has_dd, true).tau;
    CHECK(dd_tau == linear_scan(run, has_dd));
    long long m1 = hitting_time(run, maker_first, true).tau;
    CHECK(m1 == hitting_time(run, maker_first, false).tau);
    CHECK(m1 <= dd_tau);
  }
}

TEST_CASE("seeds reproduce runs exactly") {
  CHECK(sample_process(15, 77).order == sample_process(15, 77).order);
  CHECK(sample_process(15, 77).order != sample_process(15, 78).order);
  CHECK(sample_gnp(50, 0.2, 5) == sample_gnp(50, 0.2, 5));
  CHECK_FALSE(sample_gnp(50, 0.2, 5) == sample_gnp(50, 0.2, 6));
  Rng a(3, 4), b(3, 4);
  for (int i = 0; i < 10; ++i) CHECK(a() == b());
}

TEST_CASE("process prefixes and G(n,p) agree on triangle probability") {
  // At i equal to the expected edge count of G(n, p) the two models give
  // the same triangle probability up to sampling noise.
  const int n = 30, samples = 500;
  const double p = 0.05;
  const long long i = static_cast<long long>(std::ceil(edge_slots(n) * p));
  const Graph k3 = cat(Family::Complete, {3});
  int in_process = 0, in_gnp = 0;
  for (int s = 0; s < samples; ++s) {
    in_process += contains_copy(prefix_graph(sample_process(n, stream_seed(11, s)), i), k3);
    in_gnp += contains_copy(sample_gnp(n, p, stream_seed(12, s)), k3);
  }
  MESSAGE("triangle frequency: process " << in_process / double(samples) << ", G(n,p) " << in_gnp / double(samples));
  CHECK(std::abs(in_process - in_gnp) / double(samples) <= 0.1);
}

TEST_CASE("run serialization") {
  ProcessRun run = sample_process(8, 123);
  ProcessRun back = parse_run(serialize_run(run));
  CHECK(back.n == run.n);
  CHECK(back.seed == run.seed);
  CHECK(back.order == run.order);
  CHECK_THROWS(parse_run("4 1\n0 1 2"));
  CHECK_THROWS(parse_run("3 1\n0 0 1"));
  CHECK_THROWS(parse_run(""));
}
