#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "vglab/graph.hpp"
#include "vglab/rng.hpp"

namespace vglab {

enum class GameKind { MB, AEStrict, AEMonotone, WC, CW };

// Side 0 is the player whose claimed set is tested against the targets
// (Maker, Avoider, Client in WC and CW); side 1 is the other player (Breaker,
// Enforcer, Waiter).
enum class Role { Maker, Breaker, Avoider, Enforcer, Waiter, Client };

std::string to_string(GameKind k);
std::string to_string(Role r);
GameKind parse_game_kind(const std::string& s);  // mb, ae_strict, ae_monotone, wc, cw
Role role_of(GameKind kind, int side);
int side_of(GameKind kind, Role role);  // throws if the role does not play `kind`
// The side that wants side 0 to complete a target.
int completion_side(GameKind kind);

struct GameSpec {
  GameKind kind = GameKind::MB;
  int a = 1;  // bias of Maker / Avoider / Client
  int b = 1;  // bias of Breaker / Enforcer / Waiter
  Graph H;
  int first = 0;  // side that moves first in MB and AE; Waiter always starts WC and CW
};

// A game on an abstract board {0..n-1} with target vertex sets (bit masks).
struct Game {
  GameKind kind = GameKind::MB;
  int a = 1;
  int b = 1;
  int first = 0;
  int n = 0;
  std::vector<uint64_t> targets;

  uint64_t full() const { return n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1; }
};

// Targets are the vertex sets of H-copies in G. Requires v(G) <= 64.
Game make_game(const GameSpec& spec, const Graph& G);
// A game whose targets are given directly; supersets are dropped.
Game make_hypergraph_game(GameKind kind, int a, int b, int first, int n,
                          std::vector<uint64_t> targets);

using Move = uint64_t;  // claimed set, offered set, or picked subset of the offer

struct GameState {
  uint64_t own[2] = {0, 0};
  uint64_t offer = 0;  // pending Waiter offer, Client to pick
  int to_move = 0;
  bool operator==(const GameState& o) const {
    return own[0] == o.own[0] && own[1] == o.own[1] && offer == o.offer && to_move == o.to_move;
  }
  template <typename H>
  friend H AbslHashValue(H h, const GameState& s) {
    return H::combine(std::move(h), s.own[0], s.own[1], s.offer, s.to_move);
  }
};

GameState initial_state(const Game& g);
uint64_t free_mask(const Game& g, const GameState& s);

// All legal moves in increasing lexicographic order of their vertex lists.
std::vector<Move> legal_moves(const Game& g, const GameState& s);
bool is_legal(const Game& g, const GameState& s, Move m);
GameState apply_move(const Game& g, const GameState& s, Move m);

// Whether side 0 has completed a target (true), can no longer complete one
// (false), or the game is still open (nullopt).
std::optional<bool> completion_status(const Game& g, const GameState& s);
// Winning side once the game is decided, otherwise nullopt.
std::optional<int> terminal_winner(const Game& g, const GameState& s);
int winner_from_completion(GameKind kind, bool completed);

// Side that makes the last move when every move claims exactly min(bias,
// free) vertices (MB and AE_strict).
int last_mover(const Game& g);
int last_mover(GameKind kind, int a, int b, int first, int n);

struct SolveLimits {
  int mb_ae_strict = 18;
  int ae_monotone = 12;
  int wc_cw = 14;
};

// Maps a state to an equivalent representative (same value). Must respect
// every symmetry it uses: only board automorphisms preserving the targets.
using Canonicalizer = std::function<void(GameState&)>;

struct SolveOptions {
  SolveLimits limits;
  Canonicalizer canon;
  uint64_t max_nodes = 0;  // 0 = unlimited; exceeding throws std::runtime_error
};

struct Outcome {
  int winner = 0;  // side
  std::vector<Move> pv;
  uint64_t nodes = 0;
  Role winner_role(GameKind kind) const { return role_of(kind, winner); }
};

// Memoized exact search. Node values are "side 0 completes a target".
class Solver {
 public:
  explicit Solver(Game g, SolveOptions opts = {});

  bool completes(const GameState& s);
  int winner(const GameState& s) { return winner_from_completion(game_.kind, completes(s)); }
  // First move in legal_moves order that attains the node value.
  Move best_move(const GameState& s);
  std::vector<Move> principal_variation(GameState s);
  uint64_t nodes() const { return nodes_; }
  const Game& game() const { return game_; }

 private:
  bool search(GameState s);
  template <typename F>
  void for_each_search_move(const GameState& s, F&& f);

  Game game_;
  SolveOptions opts_;
  uint64_t nodes_ = 0;
  absl::flat_hash_map<GameState, bool> memo_;
};

void check_solve_limits(const Game& g, const SolveLimits& limits);

Outcome solve(const Game& g, const SolveOptions& opts = {});
Outcome solve(const GameSpec& spec, const Graph& G, const SolveOptions& opts = {});

struct ComponentResult {
  std::vector<int> vertices;
  int winner_first = -1;   // winner with side 0 moving first (MB) or the CW winner
  int winner_second = -1;  // winner with side 1 moving first (MB only)
};

struct ComponentsOutcome {
  Outcome outcome;
  std::vector<ComponentResult> components;
  bool full_solve_fallback = false;
};

// Combines per-component exact results. Supports MB and CW with a = 1.
ComponentsOutcome solve_components(const GameSpec& spec, const Graph& G,
                                   const SolveOptions& opts = {});

struct MoveRecord {
  int side;
  Move move;
};

struct StrategyView {
  const Game& game;
  const GameState& state;
  const std::vector<MoveRecord>& history;
};

// A playing agent. Agents may keep internal state between calls; clone()
// copies that state so a search can branch on the opponent's moves.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  virtual Move next_move(const StrategyView& view, Rng& rng) = 0;
  virtual std::unique_ptr<Strategy> clone() const = 0;
  // Summary of whatever besides the game state the next moves depend on
  // (internal state, the opponent's last move). Enables memoization in
  // exhaustive checks; nullopt disables it.
  virtual std::optional<uint64_t> memo_key(const StrategyView&) const { return std::nullopt; }
};

// Picks uniformly among legal moves.
class RandomStrategy : public Strategy {
 public:
  std::string name() const override { return "random"; }
  Move next_move(const StrategyView& view, Rng& rng) override;
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<RandomStrategy>(); }
};

// Plays the solver's best move; the memo is shared between clones.
class OptimalStrategy : public Strategy {
 public:
  OptimalStrategy(const Game& g, SolveOptions opts = {});
  std::string name() const override { return "optimal"; }
  Move next_move(const StrategyView& view, Rng& rng) override;
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<OptimalStrategy>(*this); }
  std::optional<uint64_t> memo_key(const StrategyView&) const override { return 0; }

 private:
  std::shared_ptr<Solver> solver_;
};

struct MatchResult {
  std::vector<MoveRecord> transcript;
  int winner = 0;
  std::optional<std::string> error;  // illegal move or strategy failure; offender loses
};

MatchResult play_match(const Game& g, Strategy& side0, Strategy& side1, uint64_t seed,
                       std::optional<GameState> start = std::nullopt);

struct CheckResult {
  bool wins = true;
  uint64_t leaves = 0;
  uint64_t nodes = 0;
  std::vector<MoveRecord> counterexample;  // a losing line when !wins
  std::string reason;
};

struct CheckOptions {
  int max_board = 24;
  uint64_t max_nodes = 0;  // 0 = unlimited
};

// Walks every opponent move; the strategy fixes all of `side`'s moves.
CheckResult exhaustive_strategy_check(const Game& g, const Strategy& strategy, int side,
                                      const CheckOptions& opts = {},
                                      std::optional<GameState> start = std::nullopt);

// Bit helpers.
std::vector<int> mask_vertices(uint64_t m);
uint64_t vertices_mask(const std::vector<int>& vs);

}  // namespace vglab
