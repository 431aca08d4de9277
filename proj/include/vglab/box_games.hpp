#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vglab/engine.hpp"
#include "vglab/graph.hpp"

namespace vglab {

enum class BoxKind { WCBox, AEBoxStrict, AEBoxMonotone };
std::string to_string(BoxKind k);
BoxKind parse_box_kind(const std::string& s);  // wc, ae_strict, ae_monotone

// n boxes of k elements; box i holds elements i*k .. i*k+k-1. Side 0 is
// BoxClient / BoxAvoider, side 1 is BoxWaiter / BoxEnforcer. `first` only
// matters for the AE kinds (BoxWaiter always starts).
struct BoxGameSpec {
  int n = 1;
  int k = 1;
  int a = 1;
  int b = 1;
  BoxKind kind = BoxKind::WCBox;
  int first = 0;
};

Game box_game(const BoxGameSpec& spec);

// Canonical form under permutations of the boxes and of the elements inside
// each box; `boxes` lists the element labels of each box (equal sizes).
Canonicalizer box_canonicalizer(std::vector<std::vector<int>> boxes);
Canonicalizer box_canonicalizer(int n, int k);

// Largest n*k accepted by box_solve.
inline constexpr int kBoxSolveLimit = 18;
// Monotone box games enumerate every subset of the free elements as a move,
// so they stop earlier.
inline constexpr int kBoxMonotoneLimit = 15;

// Exact winner (side) of the box game. Throws std::length_error past
// `limit` elements, or past kBoxMonotoneLimit for AEBoxMonotone.
// States are reduced by box symmetry, so strict and WC games stay cheap
// well beyond the default limit.
int box_solve(const BoxGameSpec& spec, int limit = kBoxSolveLimit);
Role box_winner_role(const BoxGameSpec& spec, int side);

// Whether gcd(a+b, l) <= a for every 2 <= l <= k. When it holds BoxEnforcer
// wins the strict game for all large n, otherwise BoxAvoider wins for every n.
bool aebox_gcd_condition(int a, int b, int k);
// Predicted winner of AEBox_strict(n x k, (a:b)) for large n: BoxAvoider
// whenever the gcd condition fails, BoxEnforcer otherwise. Below the
// threshold N the Enforcer case says nothing.
Role aebox_predicted_winner(int a, int b, int k);

// Number of boxes the recursive BoxWaiter needs: (a+b)^k.
long long boxwaiter_boxes_needed(int a, int b, int k);

// The recursive BoxWaiter: in the first (a+b)^(k-1) rounds offer one element
// from each of a+b fresh boxes, then recurse on the boxes Client entered with
// one element fewer to go. Uses the first (a+b)^k of `boxes`; once Client has
// filled a box (or the plan is exhausted) it offers the lowest free elements.
class BoxWaiterStrategy : public Strategy {
 public:
  BoxWaiterStrategy(std::vector<std::vector<int>> boxes, int a, int b, int k);
  std::string name() const override { return "boxwaiter"; }
  Move next_move(const StrategyView& view, Rng& rng) override;
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<BoxWaiterStrategy>(*this); }
  std::optional<uint64_t> memo_key(const StrategyView&) const override;

 private:
  void advance(const GameState& s);

  std::vector<uint64_t> boxes_;
  int a_, b_, k_;
  int level_;                 // elements still missing from each active box
  std::vector<int> active_;   // box indices at this level
  std::vector<int> touched_;  // boxes offered at this level, in order
  std::vector<int> offered_;  // element offered from each touched box
};

std::unique_ptr<Strategy> boxwaiter_strategy(const BoxGameSpec& spec);

// Waiter in the (a:b) WC H-game: the recursive BoxWaiter on (a+b)^v(H)
// vertex-disjoint H-copies, then arbitrary offers.
std::unique_ptr<Strategy> waiter_box_strategy(const Graph& G, const Graph& H, int a, int b);

// Enforcer in the monotone (a:b) AE H-game: claims every vertex outside a
// maximum family of disjoint H-copies at once, and plays an exactly solved
// BoxEnforcer on the copies. Throws if the box game on those copies is not
// an Enforcer win for both movers.
std::unique_ptr<Strategy> enforcer_monotone_strategy(const Graph& G, const Graph& H, int a, int b);

// Smallest n in [1, n_max] from which BoxEnforcer wins AEBox(n x k) for every
// larger n up to n_max, for the given first mover; nullopt if none.
std::optional<int> minimal_enforcer_boxes(BoxKind kind, int a, int b, int k, int first, int n_max);

}  // namespace vglab
