#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vglab/engine.hpp"
#include "vglab/graph.hpp"

namespace vglab {

// All trees on n vertices up to isomorphism (n <= 12), generated from
// canonical level sequences and deduplicated by canonical form.
std::vector<Graph> free_trees(int n);

// d = 2 b Delta(H)^v(H), the host degree that makes the root-down strategy
// work against any Breaker.
long long maker_tree_degree(const Graph& H, int b);

struct TreeHost {
  Graph host;  // d-ary tree with `levels` levels, children of v are d*v+1 .. d*v+d
  int d = 0;
  int levels = 0;
};

// Maker in the MB (1:b) vertex H-game for a tree H, playing on the d-ary tree
// with v(H) levels: claim the root, then repeatedly the lowest free child of
// the first (level order) node of Maker's tree with fewer than Delta(H)
// claimed children. Maker's tree then grows into a full Delta-ary tree with
// v(H) levels, which contains H. Throws if H is not a tree.
class MakerTreeStrategy : public Strategy {
 public:
  MakerTreeStrategy(int d, int levels, int delta);
  std::string name() const override { return "maker_tree"; }
  Move next_move(const StrategyView& view, Rng& rng) override;
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<MakerTreeStrategy>(*this); }
  std::optional<uint64_t> memo_key(const StrategyView&) const override { return 0; }

 private:
  int d_, levels_, delta_, n_;
};

// Host and strategy; `d` defaults to maker_tree_degree(H, b).
std::pair<TreeHost, std::unique_ptr<Strategy>> maker_tree_strategy(const Graph& H, int b,
                                                                   std::optional<int> d = std::nullopt);

enum class TreeAdversary {
  Random,    // b uniformly random free vertices
  Frontier,  // free children of the nodes Maker is about to expand
};

// Plays the root-down strategy (Maker first) on an implicit d-ary host with
// v(H) levels, so hosts far beyond 64 vertices work. True iff Maker ends
// with a full Delta(H)-ary tree of v(H) levels at the root. Throws
// std::length_error past 5e7 host vertices.
bool simulate_maker_tree(const Graph& H, int b, long long d, TreeAdversary adversary, uint64_t seed);

// Smallest d in [d_min, d_max] on whose d-ary host the tree strategy passes
// an exhaustive check as first player; nullopt if none does.
std::optional<int> reduced_tree_degree(const Graph& H, int b, int d_min, int d_max,
                                       const CheckOptions& opts = {});

// k separate tree games played on disjoint host copies. Tree i is played on
// copies of hosts[i]; the board is the disjoint union, in order, of counts[i]
// copies of hosts[i]. Trees with equal (labeled) hosts share all their copies.
struct ForestStrategyPlan {
  std::vector<Graph> trees;
  std::vector<Graph> hosts;
  std::vector<int> counts;
  int b = 1;
};

Graph plan_board(const ForestStrategyPlan& plan);
// n_i = ((b v)^2 + 1)^(i-1), v the largest host size.
std::vector<long long> client_forest_counts(int b, int v, int k);
// The component trees of a forest H, largest first.
std::vector<Graph> forest_components(const Graph& H);

// Maker: plays the tree games one at a time, each on a host copy that is
// still entirely free when it starts, moving by exact solution of the (1:b)
// tree game on that host. Client: answers an offer inside the lowest (i, j)
// surviving host it meets with the exact Client move there and drops every
// other surviving host the offer touches. Throws std::runtime_error when the
// hosts run out.
std::unique_ptr<Strategy> builder_forest_sequential_strategy(const ForestStrategyPlan& plan, Role side);

}  // namespace vglab
