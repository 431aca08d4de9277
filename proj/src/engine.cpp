#include "vglab/engine.hpp"

#include <absl/container/flat_hash_set.h>

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "vglab/subgraph.hpp"

namespace vglab {

std::string to_string(GameKind k) {
  switch (k) {
    case GameKind::MB: return "mb";
    case GameKind::AEStrict: return "ae_strict";
    case GameKind::AEMonotone: return "ae_monotone";
    case GameKind::WC: return "wc";
    case GameKind::CW: return "cw";
  }
  return "?";
}

std::string to_string(Role r) {
  switch (r) {
    case Role::Maker: return "maker";
    case Role::Breaker: return "breaker";
    case Role::Avoider: return "avoider";
    case Role::Enforcer: return "enforcer";
    case Role::Waiter: return "waiter";
    case Role::Client: return "client";
  }
  return "?";
}

GameKind parse_game_kind(const std::string& s) {
  if (s == "mb") return GameKind::MB;
  if (s == "ae_strict" || s == "ae") return GameKind::AEStrict;
  if (s == "ae_monotone") return GameKind::AEMonotone;
  if (s == "wc") return GameKind::WC;
  if (s == "cw") return GameKind::CW;
  throw std::invalid_argument("unknown game kind '" + s +
                              "' (expected mb, ae_strict, ae_monotone, wc or cw)");
}

Role role_of(GameKind kind, int side) {
  switch (kind) {
    case GameKind::MB: return side == 0 ? Role::Maker : Role::Breaker;
    case GameKind::AEStrict:
    case GameKind::AEMonotone: return side == 0 ? Role::Avoider : Role::Enforcer;
    case GameKind::WC:
    case GameKind::CW: return side == 0 ? Role::Client : Role::Waiter;
  }
  return Role::Maker;
}

int side_of(GameKind kind, Role role) {
  for (int side : {0, 1})
    if (role_of(kind, side) == role) return side;
  throw std::invalid_argument("role " + to_string(role) + " does not take part in " + to_string(kind));
}

int completion_side(GameKind kind) {
  return kind == GameKind::MB || kind == GameKind::CW ? 0 : 1;
}

int winner_from_completion(GameKind kind, bool completed) {
  int s = completion_side(kind);
  return completed ? s : 1 - s;
}

std::vector<int> mask_vertices(uint64_t m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

uint64_t vertices_mask(const std::vector<int>& vs) {
  uint64_t m = 0;
  for (int v : vs) m |= uint64_t{1} << v;
  return m;
}

Game make_hypergraph_game(GameKind kind, int a, int b, int first, int n,
                          std::vector<uint64_t> targets) {
  if (a < 1 || b < 1) throw std::invalid_argument("biases must be positive");
  if (n < 0 || n > 64) throw std::length_error("board has " + std::to_string(n) + " vertices, limit is 64");
  if (first != 0 && first != 1) throw std::invalid_argument("first mover must be side 0 or 1");
  std::sort(targets.begin(), targets.end(),
            [](uint64_t x, uint64_t y) { return std::popcount(x) != std::popcount(y) ? std::popcount(x) < std::popcount(y) : x < y; });
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  std::vector<uint64_t> minimal;
  for (uint64_t t : targets) {
    bool super = false;
    for (uint64_t m : minimal)
      if ((m & t) == m) {
        super = true;
        break;
      }
    if (!super) minimal.push_back(t);
  }
  Game g;
  g.kind = kind;
  g.a = a;
  g.b = b;
  g.first = first;
  g.n = n;
  g.targets = std::move(minimal);
  return g;
}

Game make_game(const GameSpec& spec, const Graph& G) {
  if (spec.H.n() < 1) throw std::invalid_argument("target graph H is empty");
  if (G.n() > 64) throw std::length_error("board has " + std::to_string(G.n()) + " vertices, limit is 64");
  std::vector<uint64_t> targets;
  for (const auto& s : copy_vertex_sets(G, spec.H)) targets.push_back(vertices_mask(s));
  return make_hypergraph_game(spec.kind, spec.a, spec.b, spec.first, G.n(), std::move(targets));
}

GameState initial_state(const Game& g) {
  GameState s;
  s.to_move = (g.kind == GameKind::WC || g.kind == GameKind::CW) ? 1 : g.first;
  return s;
}

uint64_t free_mask(const Game& g, const GameState& s) { return g.full() & ~(s.own[0] | s.own[1]); }

std::optional<bool> completion_status(const Game& g, const GameState& s) {
  bool alive = false;
  for (uint64_t t : g.targets) {
    if ((t & s.own[0]) == t) return true;
    if (!(t & s.own[1])) alive = true;
  }
  if (!alive || free_mask(g, s) == 0) return false;
  return std::nullopt;
}

std::optional<int> terminal_winner(const Game& g, const GameState& s) {
  auto c = completion_status(g, s);
  if (!c) return std::nullopt;
  return winner_from_completion(g.kind, *c);
}

namespace {

bool is_waiter_game(GameKind k) { return k == GameKind::WC || k == GameKind::CW; }

int bias_of(const Game& g, int side) { return side == 0 ? g.a : g.b; }

// Visits k-subsets of `items` (as masks) in lexicographic order of positions.
template <typename F>
bool for_each_combination(const std::vector<int>& items, int k, F&& f) {
  const int n = static_cast<int>(items.size());
  if (k < 0 || k > n) return true;
  if (k == 0) return f(uint64_t{0});
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    uint64_t m = 0;
    for (int i : idx) m |= uint64_t{1} << items[i];
    if (!f(m)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Sizes of the sets the player to move may choose, over a ground set of
// `avail` elements. Returns [lo, hi].
std::pair<int, int> move_sizes(const Game& g, const GameState& s, int avail) {
  const int side = s.to_move;
  switch (g.kind) {
    case GameKind::MB:
    case GameKind::AEStrict: {
      int k = std::min(bias_of(g, side), avail);
      return {k, k};
    }
    case GameKind::AEMonotone: {
      int k = bias_of(g, side);
      if (avail <= k) return {avail, avail};
      return {k, avail};
    }
    case GameKind::WC:
      if (side == 1) {
        int t = avail >= g.a + g.b ? g.a + g.b : avail;
        return {t, t};
      } else {
        int k = std::max(0, avail - g.b);
        return {k, k};
      }
    case GameKind::CW:
      if (side == 1) {
        if (avail < g.a) return {avail, avail};
        return {g.a, std::min(g.a + g.b, avail)};
      } else {
        int k = std::min(g.a, avail);
        return {k, k};
      }
  }
  return {0, 0};
}

uint64_t ground_set(const Game& g, const GameState& s) {
  if (is_waiter_game(g.kind) && s.to_move == 0) return s.offer;
  return free_mask(g, s);
}

}  // namespace

std::vector<Move> legal_moves(const Game& g, const GameState& s) {
  if (completion_status(g, s)) throw std::invalid_argument("legal_moves: the game is over");
  uint64_t ground = ground_set(g, s);
  auto items = mask_vertices(ground);
  auto [lo, hi] = move_sizes(g, s, static_cast<int>(items.size()));
  std::vector<Move> out;
  for (int k = lo; k <= hi; ++k)
    for_each_combination(items, k, [&](uint64_t m) {
      out.push_back(m);
      return true;
    });
  if (lo != hi) {
    // Lexicographic order of the sorted vertex lists.
    std::sort(out.begin(), out.end(), [](uint64_t x, uint64_t y) {
      auto vx = mask_vertices(x), vy = mask_vertices(y);
      return vx < vy;
    });
  }
  return out;
}

bool is_legal(const Game& g, const GameState& s, Move m) {
  if (completion_status(g, s)) return false;
  uint64_t ground = ground_set(g, s);
  if (m & ~ground) return false;
  auto [lo, hi] = move_sizes(g, s, std::popcount(ground));
  int k = std::popcount(m);
  return k >= lo && k <= hi;
}

GameState apply_move(const Game& g, const GameState& s, Move m) {
  GameState c = s;
  if (is_waiter_game(g.kind)) {
    if (s.to_move == 1) {
      c.offer = m;
      c.to_move = 0;
    } else {
      c.own[0] |= m;
      c.own[1] |= s.offer & ~m;
      c.offer = 0;
      c.to_move = 1;
    }
  } else {
    c.own[s.to_move] |= m;
    c.to_move ^= 1;
  }
  return c;
}

int last_mover(GameKind kind, int a, int b, int first, int n) {
  if (is_waiter_game(kind)) throw std::invalid_argument("last_mover: only defined for MB and AE games");
  int side = first, last = -1;
  for (int free = n; free > 0; side ^= 1) {
    free -= std::min(side == 0 ? a : b, free);
    last = side;
  }
  return last;
}

int last_mover(const Game& g) { return last_mover(g.kind, g.a, g.b, g.first, g.n); }

void check_solve_limits(const Game& g, const SolveLimits& limits) {
  int limit = 64;
  switch (g.kind) {
    case GameKind::MB:
    case GameKind::AEStrict: limit = limits.mb_ae_strict; break;
    case GameKind::AEMonotone: limit = limits.ae_monotone; break;
    case GameKind::WC:
    case GameKind::CW: limit = limits.wc_cw; break;
  }
  if (g.n > limit)
    throw std::length_error(to_string(g.kind) + " board has " + std::to_string(g.n) +
                            " vertices, solver limit is " + std::to_string(limit));
}

Solver::Solver(Game g, SolveOptions opts) : game_(std::move(g)), opts_(std::move(opts)) {}

template <typename F>
void Solver::for_each_search_move(const GameState& s, F&& f) {
  uint64_t ground = ground_set(game_, s);
  if (game_.kind == GameKind::MB) {
    // Owning an extra vertex never hurts either side in a Maker-Breaker game,
    // so vertices outside every live target are dead weight and can be
    // ignored.
    uint64_t relevant = 0;
    for (uint64_t t : game_.targets)
      if (!(t & s.own[1])) relevant |= t;
    ground &= relevant;
  }
  int score[64] = {};
  for (uint64_t t : game_.targets) {
    if (t & s.own[1]) continue;
    for (uint64_t r = t & ground; r; r &= r - 1) ++score[std::countr_zero(r)];
  }
  auto items = mask_vertices(ground);
  const bool desc = game_.kind == GameKind::MB || game_.kind == GameKind::CW;
  std::stable_sort(items.begin(), items.end(), [&](int x, int y) {
    return desc ? score[x] > score[y] : score[x] < score[y];
  });
  auto [lo, hi] = move_sizes(game_, s, static_cast<int>(items.size()));
  for (int k = lo; k <= hi; ++k)
    if (!for_each_combination(items, k, f)) return;
}

bool Solver::search(GameState s) {
  ++nodes_;
  if (opts_.max_nodes && nodes_ > opts_.max_nodes)
    throw std::runtime_error("solver node budget of " + std::to_string(opts_.max_nodes) + " exceeded");
  if (auto c = completion_status(game_, s)) return *c;
  if (s.offer == 0) {
    // A vertex outside every live target and not held by side 1 only matters
    // through how many such vertices are still free: keep the lowest ones
    // free and hand the rest to side 1. Side 1's own vertices stay put, since
    // they are what kills the dead targets.
    uint64_t live = 0;
    for (uint64_t t : game_.targets)
      if (!(t & s.own[1])) live |= t;
    const uint64_t spare = game_.full() & ~live & ~s.own[1];
    int free_spare = std::popcount(spare & ~s.own[0]);
    uint64_t taken = spare;
    for (int i = 0; i < free_spare; ++i) taken &= taken - 1;
    s.own[0] &= live;
    s.own[1] |= taken;
  }
  if (opts_.canon) opts_.canon(s);
  if (auto it = memo_.find(s); it != memo_.end()) return it->second;
  const bool maximizing = s.to_move == completion_side(game_.kind);
  bool result = !maximizing;
  for_each_search_move(s, [&](uint64_t m) {
    if (search(apply_move(game_, s, m)) == maximizing) {
      result = maximizing;
      return false;
    }
    return true;
  });
  memo_.emplace(s, result);
  return result;
}

bool Solver::completes(const GameState& s) { return search(s); }

Move Solver::best_move(const GameState& s) {
  const bool v = completes(s);
  for (Move m : legal_moves(game_, s))
    if (completes(apply_move(game_, s, m)) == v) return m;
  throw std::logic_error("best_move: no move attains the node value");
}

std::vector<Move> Solver::principal_variation(GameState s) {
  std::vector<Move> pv;
  while (!completion_status(game_, s)) {
    Move m = best_move(s);
    pv.push_back(m);
    s = apply_move(game_, s, m);
  }
  return pv;
}

Outcome solve(const Game& g, const SolveOptions& opts) {
  check_solve_limits(g, opts.limits);
  Solver solver(g, opts);
  GameState s = initial_state(g);
  Outcome out;
  out.winner = solver.winner(s);
  out.pv = solver.principal_variation(s);
  out.nodes = solver.nodes();
  return out;
}

Outcome solve(const GameSpec& spec, const Graph& G, const SolveOptions& opts) {
  return solve(make_game(spec, G), opts);
}

ComponentsOutcome solve_components(const GameSpec& spec, const Graph& G, const SolveOptions& opts) {
  if (spec.kind != GameKind::MB && spec.kind != GameKind::CW)
    throw std::invalid_argument("solve_components supports only mb and cw games");
  if (spec.a != 1) throw std::invalid_argument("solve_components requires a = 1");
  if (!spec.H.is_connected()) throw std::invalid_argument("solve_components requires a connected H");
  ComponentsOutcome res;
  const int spoiler = 1;
  auto solve_part = [&](const Graph& part, int first) {
    GameSpec s = spec;
    s.first = first;
    Game g = make_game(s, part);
    if (g.targets.empty()) return spoiler;
    Outcome o = solve(g, opts);
    res.outcome.nodes += o.nodes;
    return o.winner;
  };
  for (auto& comp : G.components()) {
    ComponentResult cr;
    cr.vertices = comp;
    Graph part = G.induced(comp);
    if (part.n() < spec.H.n()) {
      cr.winner_first = spoiler;
      if (spec.kind == GameKind::MB) cr.winner_second = spoiler;
    } else if (spec.kind == GameKind::CW) {
      cr.winner_first = solve_part(part, 1);
    } else {
      cr.winner_first = solve_part(part, 0);
      if (spec.first == 1 && cr.winner_first == 0) cr.winner_second = solve_part(part, 1);
      else if (cr.winner_first == spoiler) cr.winner_second = spoiler;
    }
    res.components.push_back(std::move(cr));
  }
  auto count_first = std::count_if(res.components.begin(), res.components.end(),
                                   [](const ComponentResult& c) { return c.winner_first == 0; });
  if (spec.kind == GameKind::CW || spec.first == 0) {
    res.outcome.winner = count_first > 0 ? 0 : spoiler;
    return res;
  }
  bool second = std::any_of(res.components.begin(), res.components.end(),
                            [](const ComponentResult& c) { return c.winner_second == 0; });
  if (second || count_first >= spec.b + 1) {
    res.outcome.winner = 0;
  } else if (spec.b == 1 || count_first == 0) {
    // Breaker spends his first move in the lone Maker-first component (if
    // any) and then answers locally.
    res.outcome.winner = spoiler;
  } else {
    res.full_solve_fallback = true;
    Outcome o = solve(spec, G, opts);
    res.outcome.winner = o.winner;
    res.outcome.nodes += o.nodes;
  }
  return res;
}

Move RandomStrategy::next_move(const StrategyView& view, Rng& rng) {
  auto moves = legal_moves(view.game, view.state);
  return moves[rng.below(moves.size())];
}

OptimalStrategy::OptimalStrategy(const Game& g, SolveOptions opts)
    : solver_(std::make_shared<Solver>(g, std::move(opts))) {}

Move OptimalStrategy::next_move(const StrategyView& view, Rng&) { return solver_->best_move(view.state); }

MatchResult play_match(const Game& g, Strategy& side0, Strategy& side1, uint64_t seed,
                       std::optional<GameState> start) {
  MatchResult res;
  Rng rng(seed);
  GameState s = start ? *start : initial_state(g);
  while (true) {
    if (auto w = terminal_winner(g, s)) {
      res.winner = *w;
      return res;
    }
    const int mover = s.to_move;
    Strategy& strat = mover == 0 ? side0 : side1;
    Move m = 0;
    try {
      m = strat.next_move(StrategyView{g, s, res.transcript}, rng);
    } catch (const std::exception& e) {
      res.error = strat.name() + " failed: " + e.what();
      res.winner = 1 - mover;
      return res;
    }
    if (!is_legal(g, s, m)) {
      res.transcript.push_back({mover, m});
      res.error = strat.name() + " made an illegal move";
      res.winner = 1 - mover;
      return res;
    }
    res.transcript.push_back({mover, m});
    s = apply_move(g, s, m);
  }
}

namespace {

struct CheckKey {
  GameState state;
  uint64_t strategy;
  bool operator==(const CheckKey& o) const { return state == o.state && strategy == o.strategy; }
  template <typename H>
  friend H AbslHashValue(H h, const CheckKey& k) {
    return H::combine(std::move(h), k.state, k.strategy);
  }
};

struct Checker {
  const Game& g;
  int side;
  const CheckOptions& opts;
  CheckResult res;
  std::vector<MoveRecord> history;
  absl::flat_hash_set<CheckKey> won;
  Rng rng{0};

  bool fail(const std::string& why) {
    res.wins = false;
    res.counterexample = history;
    res.reason = why;
    return false;
  }

  bool walk(const GameState& s, std::unique_ptr<Strategy> strat) {
    ++res.nodes;
    if (opts.max_nodes && res.nodes > opts.max_nodes)
      throw std::runtime_error("strategy check node budget exceeded");
    if (auto c = completion_status(g, s)) {
      ++res.leaves;
      if (winner_from_completion(g.kind, *c) != side) return fail("lost the game");
      return true;
    }
    std::optional<CheckKey> key;
    if (auto k = strat->memo_key(StrategyView{g, s, history})) {
      key = CheckKey{s, *k};
      if (won.contains(*key)) return true;
    }
    bool ok = true;
    if (s.to_move == side) {
      Move m;
      try {
        m = strat->next_move(StrategyView{g, s, history}, rng);
      } catch (const std::exception& e) {
        return fail(std::string("strategy failed: ") + e.what());
      }
      if (!is_legal(g, s, m)) {
        history.push_back({side, m});
        return fail("illegal move");
      }
      history.push_back({side, m});
      ok = walk(apply_move(g, s, m), std::move(strat));
      if (!ok) return false;
      history.pop_back();
    } else {
      auto moves = legal_moves(g, s);
      for (size_t i = 0; i < moves.size(); ++i) {
        auto branch = i + 1 < moves.size() ? strat->clone() : std::move(strat);
        history.push_back({1 - side, moves[i]});
        if (!walk(apply_move(g, s, moves[i]), std::move(branch))) return false;
        history.pop_back();
      }
    }
    if (key) won.insert(*key);
    return ok;
  }
};

}  // namespace

CheckResult exhaustive_strategy_check(const Game& g, const Strategy& strategy, int side,
                                      const CheckOptions& opts, std::optional<GameState> start) {
  if (g.n > opts.max_board)
    throw std::length_error("strategy check board has " + std::to_string(g.n) +
                            " vertices, limit is " + std::to_string(opts.max_board));
  Checker c{g, side, opts, {}, {}, {}, Rng(0)};
  c.walk(start ? *start : initial_state(g), strategy.clone());
  return c.res;
}

}  // namespace vglab
