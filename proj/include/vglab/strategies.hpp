#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vglab/core_reduction.hpp"
#include "vglab/engine.hpp"
#include "vglab/graph.hpp"

namespace vglab {

// Pairwise-disjoint vertex sets of size 2..b+1.
struct Pairing {
  std::vector<std::vector<int>> members;
};

// Throws std::invalid_argument on overlapping members, bad sizes or
// vertices outside 0..n-1.
void validate_pairing(const Pairing& p, int b, int n);

// True iff every H-copy in G fully contains some member.
bool is_blocking_pairing(const Graph& G, const Graph& H, const Pairing& p, int b);

// Spoiler side of a pairing. As Breaker (MB side 1): whenever Maker owns a
// vertex of a member with free vertices left, claim them; spend the rest of
// the bias on the lowest free vertices of the domain, then anywhere. As
// Waiter (CW side 1): offer the free part of the first untouched member,
// then leftover domain vertices, then anything.
class PairingStrategy : public Strategy {
 public:
  PairingStrategy(Pairing p, GameKind kind, uint64_t domain = ~uint64_t{0});
  std::string name() const override;
  Move next_move(const StrategyView& view, Rng& rng) override;
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<PairingStrategy>(*this); }
  std::optional<uint64_t> memo_key(const StrategyView&) const override { return 0; }

 private:
  Move breaker_move(const Game& g, const GameState& s) const;
  Move waiter_move(const Game& g, const GameState& s) const;

  std::vector<uint64_t> members_;
  GameKind kind_;
  uint64_t domain_;
};

std::unique_ptr<Strategy> spoiler_pairing_strategy(const Pairing& p, GameKind kind,
                                                   uint64_t domain = ~uint64_t{0});

// Waiter in the CW (1:1) triangle game on DD_t: offers {x, y}, then plays
// the pairing lambda_x or lambda_y depending on which one Client took.
// Requires G to be isomorphic to DD_t.
std::unique_ptr<Strategy> waiter_ddt_strategy(const Graph& G, int t);

enum class PlayOrder { First, Second };

// Maker in the MB (1:1) triangle game. First: claims the center of a DD,
// then a y-vertex whose two triangles are still open, then completes a
// triangle. Second: pairs the two centers of two disjoint DDs and the
// natural pairs of both, always answering inside the pair Breaker entered.
std::unique_ptr<Strategy> maker_dd_strategy(const Graph& G, PlayOrder order);

// Extends a spoiler strategy on the (H,b)-core to all of G. Breaker: a Maker
// move into the core is answered by `inner`, into a bad set U_i by claiming
// the rest of U_i, into a small component W_j by b free vertices of W_j.
// Waiter: `inner` until the core is used up, then every U_i whole, then each
// W_j in chunks of b+1, then the rest.
std::unique_ptr<Strategy> spoiler_core_extension(const Graph& G, const Graph& H, int b,
                                                 GameKind kind, std::unique_ptr<Strategy> inner);

// Strict (1:1) avoider of a family of disjoint pairs. Claims pool vertices
// and vertices whose partner the opponent holds while possible, then plays
// inside untouched pairs one vertex at a time; the singleton is claimed only
// when nothing else is free. Plays for whichever side is to move, so it can
// also serve Enforcer when the pairs and singleton are Avoider's reserve.
class PairAvoiderStrategy : public Strategy {
 public:
  PairAvoiderStrategy(std::vector<std::pair<int, int>> pairs, std::vector<int> pool,
                      std::optional<int> singleton);
  std::string name() const override { return "pair_avoider"; }
  Move next_move(const StrategyView& view, Rng& rng) override;
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<PairAvoiderStrategy>(*this); }
  std::optional<uint64_t> memo_key(const StrategyView&) const override { return 0; }

 private:
  std::vector<std::pair<int, int>> pairs_;
  uint64_t pool_ = 0;
  std::optional<int> singleton_;
};

std::unique_ptr<Strategy> avoider_pair_strategy(std::vector<std::pair<int, int>> pairs,
                                                std::vector<int> pool,
                                                std::optional<int> singleton);

// Enforcer in the strict (1:1) triangle game. When Avoider moves last, plays
// the pair avoider over the natural pairs of one DD with its center as the
// singleton; otherwise over the natural pairs of two disjoint DDs plus the
// pair of their centers. Either way Avoider ends up with a center and one
// vertex of every natural pair of its DD, hence a triangle.
std::unique_ptr<Strategy> enforcer_dd_strategy(const Graph& G, bool avoider_moves_last);

// Client in the CW (1:1) triangle game on a graph containing a triple
// diamond.
std::unique_ptr<Strategy> client_triple_diamond_strategy(const Graph& G);

// Phase budgets of the five-phase Maker strategy on G(n, p).
struct FivePhaseBudgets {
  int phase2 = 0;  // ceil(50 / (n^2 p^3))
  int phase3 = 0;  // ceil(5 / (n p^2))
  int phase4 = 0;  // ceil(1 / (2p))
  int phase5 = 0;  // n / 20
};
FivePhaseBudgets five_phase_budgets(int n, double p);

struct FivePhaseRun {
  bool triangle = false;     // phase 1 completed a triangle
  bool success = false;      // triangle and G[M5] contains H'
  int starved_phase = 0;     // first phase that ran out of free neighbors, 0 if none
  std::vector<int> phase_sizes;  // |M1| .. |M5|
};

// Plays the (1:1) Maker-first five-phase strategy against a uniformly random
// Breaker on an arbitrary-size board. Throws if G has no DD.
FivePhaseRun run_five_phase(const Graph& G, const Graph& H_prime, double p, uint64_t seed);

// Sampled expansion check: the fraction of `samples` random sets U with
// |U| <= 1/(2p) for which |N(U)| >= |U| n p / 4.
double expansion_fraction(const Graph& G, double p, int samples, uint64_t seed);

// Locates a copy of `pattern` in G; returns pattern label -> G vertex.
std::optional<std::vector<int>> find_embedding(const Graph& G, const Graph& pattern);

}  // namespace vglab
