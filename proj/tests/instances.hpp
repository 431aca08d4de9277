#pragma once

// Every winning strategy together with the board it is claimed to win on.
// Shared by the strategy tests and the acceptance run.

#include <memory>
#include <string>
#include <vector>

#include "vglab/box_games.hpp"
#include "vglab/catalog.hpp"
#include "vglab/core_reduction.hpp"
#include "vglab/engine.hpp"
#include "vglab/strategies.hpp"
#include "vglab/tree_strategies.hpp"

namespace vglab::testing {

struct StrategyInstance {
  std::string name;
  Game game;
  std::shared_ptr<Strategy> strategy;
  int side = 0;
  CheckOptions opts{};
  bool heavy = false;  // takes about a minute; left to the acceptance run
};

inline Graph cat(Family f, std::vector<int> params = {}) { return make_catalog_graph({f, std::move(params)}); }

// TTT with a pendant triangle at vertex 0, a pendant path at vertex 4 and a
// separate K4; its (K3,1)-core is the TTT.
inline Graph ttt_with_debris() {
  auto e = cat(Family::TTT).edges();
  for (Edge x : std::vector<Edge>{{0, 5}, {0, 6}, {5, 6}, {4, 7}, {7, 8}, {9, 10}, {9, 11}, {9, 12}, {10, 11},
                                  {10, 12}, {11, 12}})
    e.push_back(x);
  return Graph(13, e);
}

inline std::vector<StrategyInstance> winning_instances() {
  std::vector<StrategyInstance> out;
  const Graph k3 = cat(Family::Complete, {3});
  const Graph c4 = cat(Family::Cycle, {4});
  auto add = [&](std::string name, Game g, std::unique_ptr<Strategy> s, int side, CheckOptions o = {}) {
    out.push_back({std::move(name), std::move(g), std::shared_ptr<Strategy>(std::move(s)), side, o, false});
  };

  // Pairing strategies.
  Graph ttt = cat(Family::TTT);
  Pairing ttt_pairs{natural_pairs({Family::TTT, {}})};
  for (int first : {0, 1})
    add("Breaker pairing on TTT, first=" + std::to_string(first), make_game({GameKind::MB, 1, 1, k3, first}, ttt),
        spoiler_pairing_strategy(ttt_pairs, GameKind::MB), 1);
  for (int t = 4; t <= 6; ++t) {
    Graph g = cat(Family::K3Cycle, {t});
    Pairing p{natural_pairs({Family::K3Cycle, {t}})};
    add("Breaker pairing on K3Cycle_" + std::to_string(t), make_game({GameKind::MB, 1, 1, k3, 0}, g),
        spoiler_pairing_strategy(p, GameKind::MB), 1);
    add("Waiter pairing on K3Cycle_" + std::to_string(t), make_game({GameKind::CW, 1, 1, k3, 0}, g),
        spoiler_pairing_strategy(p, GameKind::CW), 1);
  }
  for (Family f : {Family::FeasibleA, Family::FeasibleB, Family::FeasibleC})
    for (int first : {0, 1})
      add("Breaker C4 pairing on " + catalog_name({f, {}}) + ", first=" + std::to_string(first),
          make_game({GameKind::MB, 1, 1, c4, first}, cat(f)),
          spoiler_pairing_strategy({natural_pairs({f, {}})}, GameKind::MB), 1);

  // Core extension around a TTT core.
  {
    Graph g = ttt_with_debris();
    uint64_t core = vertices_mask(compute_core(g, k3, 1).core_vertices);
    for (int first : {0, 1})
      add("Breaker core extension, first=" + std::to_string(first), make_game({GameKind::MB, 1, 1, k3, first}, g),
          spoiler_core_extension(g, k3, 1, GameKind::MB, spoiler_pairing_strategy(ttt_pairs, GameKind::MB, core)), 1);
    add("Waiter core extension", make_game({GameKind::CW, 1, 1, k3, 0}, g),
        spoiler_core_extension(g, k3, 1, GameKind::CW, spoiler_pairing_strategy(ttt_pairs, GameKind::CW, core)), 1);
  }

  for (int t = 2; t <= 4; ++t) {
    Graph g = cat(Family::DDt, {t});
    add("Waiter on DD_" + std::to_string(t), make_game({GameKind::CW, 1, 1, k3, 0}, g), waiter_ddt_strategy(g, t), 1);
  }

  Graph dd = cat(Family::DD);
  Graph dd2 = disjoint_union({dd, dd});
  add("Maker first on DD", make_game({GameKind::MB, 1, 1, k3, 0}, dd), maker_dd_strategy(dd, PlayOrder::First), 0);
  add("Maker second on DD+DD", make_game({GameKind::MB, 1, 1, k3, 1}, dd2),
      maker_dd_strategy(dd2, PlayOrder::Second), 0);

  // Enforcer: on one DD Avoider moves last when Avoider starts; on two DDs
  // Avoider moves first and Enforcer last.
  add("Enforcer on DD, Avoider last", make_game({GameKind::AEStrict, 1, 1, k3, 0}, dd),
      enforcer_dd_strategy(dd, true), 1);
  add("Enforcer on DD+DD, Avoider first", make_game({GameKind::AEStrict, 1, 1, k3, 0}, dd2),
      enforcer_dd_strategy(dd2, false), 1);

  {
    Graph g = cat(Family::TripleDiamond);
    add("Client on triple diamond", make_game({GameKind::CW, 1, 1, k3, 0}, g), client_triple_diamond_strategy(g), 0);
  }

  // Pair avoider on bare hypergraphs.
  for (int first : {0, 1})
    add("Pair avoider, pool only, first=" + std::to_string(first),
        make_hypergraph_game(GameKind::AEStrict, 1, 1, first, 5, {0b00011, 0b01100}),
        avoider_pair_strategy({{0, 1}, {2, 3}}, {4}, std::nullopt), 0);
  add("Pair avoider with singleton",
      make_hypergraph_game(GameKind::AEStrict, 1, 1, 0, 6, {0b000011, 0b001100, 0b100000}),
      avoider_pair_strategy({{0, 1}, {2, 3}}, {4}, 5), 0);
  add("Pair avoider with singleton, second",
      make_hypergraph_game(GameKind::AEStrict, 1, 1, 1, 7, {0b0000011, 0b0001100, 0b1000000}),
      avoider_pair_strategy({{0, 1}, {2, 3}}, {4, 5}, 6), 0);

  // Box strategies.
  for (int first : {0, 1}) {
    Graph g = disjoint_union(std::vector<Graph>(5, k3));
    add("Monotone Enforcer on 5 triangles, first=" + std::to_string(first),
        make_game({GameKind::AEMonotone, 1, 1, k3, first}, g), enforcer_monotone_strategy(g, k3, 1, 1), 1);
    // Avoider may claim any nonempty subset each turn, so this tree is large.
    out.back().heavy = first == 0;
  }
  {
    Graph g = disjoint_union(std::vector<Graph>(8, k3));
    add("Waiter box on 8 triangles", make_game({GameKind::WC, 1, 1, k3, 0}, g), waiter_box_strategy(g, k3, 1, 1), 1,
        {24, 0});
  }

  // Trees and forests.
  for (auto [tree, d] : std::vector<std::pair<Graph, int>>{{cat(Family::Star, {2}), 2}, {cat(Family::Path, {4}), 2}}) {
    auto [host, s] = maker_tree_strategy(tree, 1, d);
    add("Maker tree " + std::to_string(tree.n()) + " vertices on " + std::to_string(d) + "-ary host",
        make_game({GameKind::MB, 1, 1, tree, 0}, host.host), std::move(s), 0);
  }
  {
    Graph k2 = cat(Family::Complete, {2}), p3 = cat(Family::Path, {3});
    Graph s2 = cat(Family::Star, {2}), s4 = cat(Family::Star, {4});
    ForestStrategyPlan a{{k2, k2}, {p3, p3}, {3, 1}, 1};
    add("Forest Maker K2+K2 on P3 hosts", make_game({GameKind::MB, 1, 1, disjoint_union({k2, k2}), 0}, plan_board(a)),
        builder_forest_sequential_strategy(a, Role::Maker), 0);
    ForestStrategyPlan b{{s2, s2}, {s4, s4}, {3, 2}, 1};
    add("Forest Maker S2+S2 on S4 hosts, first", make_game({GameKind::MB, 1, 1, disjoint_union({s2, s2}), 0}, plan_board(b)),
        builder_forest_sequential_strategy(b, Role::Maker), 0, {25, 0});
    ForestStrategyPlan c{{s2, s2}, {s4, s4}, {3, 3}, 1};
    add("Forest Maker S2+S2 on S4 hosts, second",
        make_game({GameKind::MB, 1, 1, disjoint_union({s2, s2}), 1}, plan_board(c)),
        builder_forest_sequential_strategy(c, Role::Maker), 0, {30, 0});
    Graph k1(1);
    ForestStrategyPlan d{{k2, k1}, {p3, k1}, {1, 10}, 1};
    add("Forest Client K2+K1", make_game({GameKind::CW, 1, 1, disjoint_union({k2, k1}), 0}, plan_board(d)),
        builder_forest_sequential_strategy(d, Role::Client), 0);
  }
  return out;
}

}  // namespace vglab::testing
