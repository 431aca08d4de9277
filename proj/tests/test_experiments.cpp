#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "vglab/catalog.hpp"
#include "vglab/experiments.hpp"
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

}  // namespace

TEST_CASE("decision pipeline examples") {
  GameSpec mb{GameKind::MB, 1, 1, K3(), 0};
  auto empty = decide_winner_fast(mb, cat(Family::Path, {8}));
  CHECK(empty.method == DecisionMethod::EmptyCore);
  CHECK(empty.winner_role == Role::Breaker);

  Graph dd_tail = cat(Family::DD);
  auto e = dd_tail.edges();
  e.push_back({6, 7});
  e.push_back({7, 8});
  dd_tail = Graph(9, e);
  auto dd = decide_winner_fast(mb, dd_tail);
  CHECK(dd.method == DecisionMethod::ComponentSolve);
  CHECK(dd.winner_role == Role::Maker);
  CHECK(dd.core_vertices.size() == 7);
  CHECK(dd.deletion_steps > 0);

  Graph tk = disjoint_union({cat(Family::TTT), cat(Family::K3Cycle, {4})});
  auto pairing = decide_winner_fast(mb, tk);
  CHECK(pairing.method == DecisionMethod::Pairing);
  CHECK(pairing.winner_role == Role::Breaker);
  REQUIRE(pairing.components.size() == 2);
  Pairing joint;
  for (const auto& c : pairing.components) {
    CHECK(c.by_pairing);
    joint.members.insert(joint.members.end(), c.pairing.members.begin(), c.pairing.members.end());
  }
  CHECK(is_blocking_pairing(tk, K3(), joint, 1));

  GameSpec cw{GameKind::CW, 1, 1, K3(), 0};
  CHECK(decide_winner_fast(cw, cat(Family::DDt, {3})).winner_role == Role::Waiter);
  CHECK(decide_winner_fast(cw, cat(Family::TripleDiamond)).winner_role == Role::Client);

  for (const Graph& g : {dd_tail, tk, cat(Family::TripleDiamond)})
    for (const GameSpec& spec : {mb, cw}) {
      auto cert = decide_winner_fast(spec, g);
      CHECK(replay_certificate(spec, g, cert) == cert.winner);
    }
  CHECK_THROWS(decide_winner_fast({GameKind::AEStrict, 1, 1, K3(), 0}, cat(Family::DD)));
}

TEST_CASE("decision pipeline agrees with the full solve") {
  Rng rng(404);
  int mismatches = 0;
  for (int i = 0; i < 150; ++i) {
    const int n = 6 + static_cast<int>(rng.below(7));
    const double p = 0.2 + 0.4 * rng.uniform();
    Graph g = sample_gnp(n, p, rng());
    GameSpec spec{i % 2 ? GameKind::CW : GameKind::MB, 1, 1 + static_cast<int>(rng.below(2)), K3(),
                  static_cast<int>(rng.below(2))};
    if (spec.kind == GameKind::CW) spec.first = 0;
    CAPTURE(serialize_graph(g));
    auto cert = decide_winner_fast(spec, g);
    int full = solve(spec, g).winner;
    mismatches += cert.winner != full;
    CHECK(cert.winner == full);
    CHECK(replay_certificate(spec, g, cert) == full);
  }
  CHECK(mismatches == 0);
}

TEST_CASE("threshold scan win rates grow with c") {
  GameSpec spec{GameKind::MB, 1, 1, K3(), 0};
  // Past c = 1.5 the cores at n = 20 outgrow the solver limits.
  std::vector<double> cs = {0.3, 0.6, 1.0, 1.5};
  auto rows = threshold_scan(spec, Rational(7, 10), {20}, cs, 100, 9);
  REQUIRE(rows.size() == cs.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].win_rate >= 0.0);
    CHECK(rows[i].win_rate <= 1.0);
    CHECK(rows[i].p == doctest::Approx(cs[i] * std::pow(20.0, -0.7)));
    CHECK(rows[i].exponent == Rational(7, 10));
  }
  for (size_t i = 0; i + 1 < rows.size(); ++i) {
    auto var = [](const ThresholdScanRow& r) {
      return r.win_rate * (1 - r.win_rate) / std::max(1, r.samples - r.failures);
    };
    const double se = std::sqrt(var(rows[i]) + var(rows[i + 1]));
    CHECK(rows[i + 1].win_rate >= rows[i].win_rate - 3 * se);
  }
  CHECK(rows.front().win_rate < rows.back().win_rate);
  CHECK(threshold_scan(spec, Rational(7, 10), {20}, {}, 10, 1).empty());
  // Identical seeds give identical rows.
  auto again = threshold_scan(spec, Rational(7, 10), {20}, cs, 100, 9);
  for (size_t i = 0; i < rows.size(); ++i) CHECK(again[i].builder_wins == rows[i].builder_wins);
  std::string csv = threshold_csv(rows);
  CHECK(csv.rfind("n,c,p_exponent,c_value,samples,win_rate,mean_ms\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("hitting study keeps the deterministic directions") {
  for (int n : {16, 22}) {
    HittingStudy s = hitting_time_study(n, 20, 3);
    CAPTURE(n);
    CHECK(s.runs.size() == 20);
    CHECK(s.violations1 == 0);
    CHECK(s.violations2 == 0);
    CHECK(s.ae_violations == 0);
    CHECK(s.ae_dd_avoider_last);
    CHECK(s.ae_2dd_enforcer_last);
    for (const auto& r : s.runs) {
      CHECK(r.tau_dd <= r.tau_2dd);
      if (r.tau_m1 >= 0) CHECK(r.tau_m1 <= r.tau_dd);
      if (r.tau_m2 >= 0) CHECK(r.tau_m2 <= r.tau_2dd);
      if (r.tau_m1 >= 0 && r.tau_m2 >= 0) CHECK(r.tau_m1 <= r.tau_m2);
    }
  }
  CHECK_THROWS_AS(hitting_time_study(10, 1, 0), std::length_error);
  CHECK_THROWS_AS(hitting_time_study(41, 1, 0), std::length_error);
}

TEST_CASE("strict triangle game on DDs plus isolated vertices follows last-mover parity") {
  for (int n = 7; n <= 12; ++n)
    for (int first : {0, 1}) {
      CAPTURE(n);
      CAPTURE(first);
      bool avoider_last = last_mover(GameKind::AEStrict, 1, 1, first, n) == 0;
      if (avoider_last) CHECK(ae_dd_pool_winner(n, 1, first) == 1);
    }
  for (int n = 14; n <= 17; ++n)
    for (int first : {0, 1})
      if (last_mover(GameKind::AEStrict, 1, 1, first, n) == 1) CHECK(ae_dd_pool_winner(n, 2, first) == 1);
  CHECK_THROWS(ae_dd_pool_winner(6, 1, 0));
}

TEST_CASE("Poisson check") {
  auto zero = poisson_limit_check(cat(Family::DD), 0.0, 200, 20, 1);
  CHECK(zero.estimate == 1.0);
  CHECK(zero.expected == 1.0);
  auto dd = poisson_limit_check(cat(Family::DD), 1.0, 200, 20, 1);
  CHECK(dd.lambda == doctest::Approx(1.0 / 8));
  CHECK(dd.exponent == Rational(7, 10));
  auto k3 = poisson_limit_check(K3(), 1.0, 300, 200, 2);
  CHECK(k3.lambda == doctest::Approx(1.0 / 6));
  CHECK(k3.exponent == Rational(1));
  CHECK(std::abs(k3.estimate - std::exp(-k3.lambda_n)) <= 4 * k3.std_error + 0.01);
  Graph k3_pendant(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  CHECK_THROWS_AS(poisson_limit_check(k3_pendant, 1.0, 100, 10, 1), std::invalid_argument);
}

TEST_CASE("minimal trees for stars") {
  auto s2 = minimal_tree_search(cat(Family::Star, {2}), 1, GameKind::MB);
  CHECK(s2.size == 5);
  REQUIRE(s2.hosts.size() == 1);
  CHECK(isomorphic(s2.hosts[0], cat(Family::Star, {4})));
  // Every smaller tree was tried and lost.
  CHECK(s2.trees_checked[3] == 1);
  CHECK(s2.trees_checked[4] == 2);
  auto s3 = minimal_tree_search(cat(Family::Star, {3}), 1, GameKind::MB);
  CHECK(s3.size == 7);
  REQUIRE(s3.hosts.size() == 1);
  CHECK(isomorphic(s3.hosts[0], cat(Family::Star, {6})));
  // Relabeling the target tree changes nothing.
  Graph p3 = cat(Family::Path, {3}).relabeled({1, 0, 2});
  auto relabeled = minimal_tree_search(p3, 1, GameKind::MB);
  CHECK(relabeled.size == s2.size);
  REQUIRE(relabeled.hosts.size() == 1);
  CHECK(isomorphic(relabeled.hosts[0], s2.hosts[0]));
  auto client = minimal_tree_search(cat(Family::Star, {2}), 1, GameKind::CW);
  CHECK(client.size >= 3);
  CHECK_THROWS(minimal_tree_search(cat(Family::Path, {5}), 1, GameKind::MB));
  CHECK_THROWS(minimal_tree_search(K3(), 1, GameKind::MB));
  CHECK_THROWS_AS(minimal_tree_search(cat(Family::Star, {3}), 1, GameKind::MB, 6), std::runtime_error);
}
