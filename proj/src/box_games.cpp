#include "vglab/box_games.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "vglab/subgraph.hpp"

namespace vglab {

std::string to_string(BoxKind k) {
  switch (k) {
    case BoxKind::WCBox: return "wc";
    case BoxKind::AEBoxStrict: return "ae_strict";
    case BoxKind::AEBoxMonotone: return "ae_monotone";
  }
  return "?";
}

BoxKind parse_box_kind(const std::string& s) {
  if (s == "wc" || s == "wcbox") return BoxKind::WCBox;
  if (s == "ae_strict" || s == "ae" || s == "aebox_strict") return BoxKind::AEBoxStrict;
  if (s == "ae_monotone" || s == "aebox_monotone") return BoxKind::AEBoxMonotone;
  throw std::invalid_argument("unknown box game kind '" + s + "' (wc, ae_strict, ae_monotone)");
}

namespace {

GameKind engine_kind(BoxKind k) {
  switch (k) {
    case BoxKind::WCBox: return GameKind::WC;
    case BoxKind::AEBoxStrict: return GameKind::AEStrict;
    case BoxKind::AEBoxMonotone: return GameKind::AEMonotone;
  }
  return GameKind::WC;
}

void check_spec(const BoxGameSpec& s) {
  if (s.n < 1 || s.k < 1 || s.a < 1 || s.b < 1)
    throw std::invalid_argument("box game needs n, k, a, b >= 1");
  if (s.first != 0 && s.first != 1) throw std::invalid_argument("box game mover must be 0 or 1");
  if (static_cast<long long>(s.n) * s.k > 64)
    throw std::length_error("box game has more than 64 elements");
}

std::vector<std::vector<int>> uniform_boxes(int n, int k) {
  std::vector<std::vector<int>> boxes(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) boxes[i].push_back(i * k + j);
  return boxes;
}

uint64_t bit(int v) { return uint64_t{1} << v; }

}  // namespace

Game box_game(const BoxGameSpec& spec) {
  check_spec(spec);
  std::vector<uint64_t> targets;
  for (const auto& box : uniform_boxes(spec.n, spec.k)) targets.push_back(vertices_mask(box));
  return make_hypergraph_game(engine_kind(spec.kind), spec.a, spec.b, spec.first, spec.n * spec.k,
                              std::move(targets));
}

Canonicalizer box_canonicalizer(std::vector<std::vector<int>> boxes) {
  return [boxes = std::move(boxes)](GameState& s) {
    // Per-element code: 0 free, 1 offered, 2 side 0, 3 side 1.
    auto code = [&](int v) {
      if (s.own[0] & bit(v)) return 2;
      if (s.own[1] & bit(v)) return 3;
      if (s.offer & bit(v)) return 1;
      return 0;
    };
    std::vector<std::vector<int>> contents;
    contents.reserve(boxes.size());
    for (const auto& box : boxes) {
      std::vector<int> c;
      c.reserve(box.size());
      for (int v : box) c.push_back(code(v));
      std::sort(c.begin(), c.end());
      contents.push_back(std::move(c));
    }
    std::sort(contents.begin(), contents.end());
    for (size_t i = 0; i < boxes.size(); ++i)
      for (size_t j = 0; j < boxes[i].size(); ++j) {
        const uint64_t m = bit(boxes[i][j]);
        s.own[0] &= ~m;
        s.own[1] &= ~m;
        s.offer &= ~m;
        switch (contents[i][j]) {
          case 1: s.offer |= m; break;
          case 2: s.own[0] |= m; break;
          case 3: s.own[1] |= m; break;
          default: break;
        }
      }
  };
}

Canonicalizer box_canonicalizer(int n, int k) { return box_canonicalizer(uniform_boxes(n, k)); }

int box_solve(const BoxGameSpec& spec, int limit) {
  check_spec(spec);
  if (spec.n * spec.k > limit)
    throw std::length_error("box game has " + std::to_string(spec.n * spec.k) +
                            " elements, limit is " + std::to_string(limit));
  SolveOptions opts;
  opts.limits.mb_ae_strict = limit;
  opts.limits.wc_cw = limit;
  opts.limits.ae_monotone = std::min(limit, kBoxMonotoneLimit);
  opts.canon = box_canonicalizer(spec.n, spec.k);
  Game g = box_game(spec);
  check_solve_limits(g, opts.limits);
  Solver solver(g, opts);
  return solver.winner(initial_state(g));
}

Role box_winner_role(const BoxGameSpec& spec, int side) { return role_of(engine_kind(spec.kind), side); }

bool aebox_gcd_condition(int a, int b, int k) {
  if (a < 1 || b < 1 || k < 1) throw std::invalid_argument("box parameters must be positive");
  for (int l = 2; l <= k; ++l)
    if (std::gcd(a + b, l) > a) return false;
  return true;
}

Role aebox_predicted_winner(int a, int b, int k) {
  return aebox_gcd_condition(a, b, k) ? Role::Enforcer : Role::Avoider;
}

long long boxwaiter_boxes_needed(int a, int b, int k) {
  long long n = 1;
  for (int i = 0; i < k; ++i) {
    n *= a + b;
    if (n > (1LL << 40)) throw std::overflow_error("boxwaiter box count overflows");
  }
  return n;
}

BoxWaiterStrategy::BoxWaiterStrategy(std::vector<std::vector<int>> boxes, int a, int b, int k)
    : a_(a), b_(b), k_(k), level_(k) {
  if (a < 1 || b < 1 || k < 1) throw std::invalid_argument("boxwaiter: a, b, k must be positive");
  const long long need = boxwaiter_boxes_needed(a, b, k);
  if (static_cast<long long>(boxes.size()) < need)
    throw std::invalid_argument("boxwaiter: needs " + std::to_string(need) + " boxes, got " +
                                std::to_string(boxes.size()));
  for (long long i = 0; i < need; ++i) {
    if (static_cast<int>(boxes[i].size()) != k) throw std::invalid_argument("boxwaiter: boxes must have k elements");
    boxes_.push_back(vertices_mask(boxes[i]));
    active_.push_back(static_cast<int>(i));
  }
}

void BoxWaiterStrategy::advance(const GameState& s) {
  // A level ends after (a+b)^(level-1) rounds; the boxes Client entered in
  // it form the next level.
  const long long rounds = boxwaiter_boxes_needed(a_, b_, level_ - 1);
  if (level_ <= 1 || static_cast<long long>(touched_.size()) < rounds * (a_ + b_)) return;
  std::vector<int> next;
  for (size_t i = 0; i < touched_.size(); ++i)
    if (s.own[0] & bit(offered_[i])) next.push_back(touched_[i]);
  active_ = std::move(next);
  touched_.clear();
  offered_.clear();
  --level_;
}

Move BoxWaiterStrategy::next_move(const StrategyView& view, Rng&) {
  const Game& g = view.game;
  const auto& s = view.state;
  if (s.to_move != 1) throw std::logic_error("boxwaiter plays side 1");
  const uint64_t free = free_mask(g, s);
  const int want = std::min(a_ + b_, std::popcount(free));
  advance(s);
  Move move = 0;
  std::vector<int> boxes, elems;
  if (want == a_ + b_)
    for (int box : active_) {
      if (static_cast<int>(boxes.size()) == want) break;
      if (std::find(touched_.begin(), touched_.end(), box) != touched_.end()) continue;
      const uint64_t left = boxes_[box] & free;
      if (!left || (boxes_[box] & s.own[1])) continue;
      boxes.push_back(box);
      elems.push_back(std::countr_zero(left));
    }
  if (static_cast<int>(boxes.size()) == want && want > 0) {
    for (size_t i = 0; i < boxes.size(); ++i) {
      touched_.push_back(boxes[i]);
      offered_.push_back(elems[i]);
      move |= bit(elems[i]);
    }
    return move;
  }
  // Plan finished or not applicable: lowest free elements.
  for (uint64_t m = free; m && std::popcount(move) < want; m &= m - 1) move |= m & -m;
  return move;
}

std::optional<uint64_t> BoxWaiterStrategy::memo_key(const StrategyView&) const {
  uint64_t h = splitmix64(static_cast<uint64_t>(level_));
  for (int v : active_) h = splitmix64(h ^ static_cast<uint64_t>(v + 1));
  h = splitmix64(h ^ 0xabcdefULL);
  for (size_t i = 0; i < touched_.size(); ++i)
    h = splitmix64(h ^ (static_cast<uint64_t>(touched_[i]) << 8) ^ static_cast<uint64_t>(offered_[i]));
  return h;
}

std::unique_ptr<Strategy> boxwaiter_strategy(const BoxGameSpec& spec) {
  check_spec(spec);
  if (spec.kind != BoxKind::WCBox) throw std::invalid_argument("boxwaiter plays the WC box game");
  return std::make_unique<BoxWaiterStrategy>(uniform_boxes(spec.n, spec.k), spec.a, spec.b, spec.k);
}

std::unique_ptr<Strategy> waiter_box_strategy(const Graph& G, const Graph& H, int a, int b) {
  if (G.n() > 64) throw std::length_error("waiter_box_strategy: board larger than 64 vertices");
  const long long need = boxwaiter_boxes_needed(a, b, H.n());
  auto packing = max_disjoint_copies(G, H, static_cast<int>(need));
  if (static_cast<long long>(packing.copies.size()) < need)
    throw std::invalid_argument("waiter_box_strategy: needs " + std::to_string(need) +
                                " disjoint copies, found " + std::to_string(packing.copies.size()));
  return std::make_unique<BoxWaiterStrategy>(packing.copies, a, b, H.n());
}

namespace {

class MonotoneBoxEnforcer : public Strategy {
 public:
  MonotoneBoxEnforcer(uint64_t outside, std::vector<int> box_elems, std::shared_ptr<Solver> solver)
      : outside_(outside), elems_(std::move(box_elems)), solver_(std::move(solver)) {}
  std::string name() const override { return "enforcer_monotone"; }

  Move next_move(const StrategyView& view, Rng&) override {
    const Game& g = view.game;
    const auto& s = view.state;
    if (s.to_move != 1) throw std::logic_error("enforcer plays side 1");
    const uint64_t free = free_mask(g, s);
    Move move = free & outside_;
    // Restrict the state to the boxes (element i of the box game is elems_[i]).
    GameState r;
    r.to_move = 1;
    for (size_t i = 0; i < elems_.size(); ++i) {
      if (s.own[0] & bit(elems_[i])) r.own[0] |= bit(static_cast<int>(i));
      if (s.own[1] & bit(elems_[i])) r.own[1] |= bit(static_cast<int>(i));
    }
    const Game& box = solver_->game();
    if (!completion_status(box, r)) {
      Move bm = solver_->best_move(r);
      for (int i : mask_vertices(bm)) move |= bit(elems_[i]);
    }
    // Monotone rules: at least b vertices, or everything when fewer are free.
    const int need = std::min(g.b, std::popcount(free));
    for (uint64_t m = free & ~move; std::popcount(move) < need && m; m &= m - 1) move |= m & -m;
    return move;
  }

  std::unique_ptr<Strategy> clone() const override { return std::make_unique<MonotoneBoxEnforcer>(*this); }
  std::optional<uint64_t> memo_key(const StrategyView&) const override { return 0; }

 private:
  uint64_t outside_;
  std::vector<int> elems_;
  std::shared_ptr<Solver> solver_;
};

}  // namespace

std::unique_ptr<Strategy> enforcer_monotone_strategy(const Graph& G, const Graph& H, int a, int b) {
  if (G.n() > 64) throw std::length_error("enforcer_monotone_strategy: board larger than 64 vertices");
  auto packing = max_disjoint_copies(G, H, G.n());
  if (packing.copies.size() < 2)
    throw std::invalid_argument("enforcer_monotone_strategy: needs at least two disjoint copies");
  std::vector<int> elems;
  uint64_t inside = 0;
  for (const auto& c : packing.copies)
    for (int v : c) {
      elems.push_back(v);
      inside |= bit(v);
    }
  const int n = static_cast<int>(packing.copies.size()), k = H.n();
  BoxGameSpec spec{n, k, a, b, BoxKind::AEBoxMonotone, 0};
  Game box = box_game(spec);
  SolveOptions opts;
  opts.limits.ae_monotone = kBoxMonotoneLimit;
  opts.canon = box_canonicalizer(n, k);
  check_solve_limits(box, opts.limits);
  auto solver = std::make_shared<Solver>(box, opts);
  for (int first : {0, 1}) {
    GameState s = initial_state(box);
    s.to_move = first;
    if (solver->winner(s) != 1)
      throw std::invalid_argument("enforcer_monotone_strategy: BoxEnforcer does not win on " +
                                  std::to_string(n) + " copies");
  }
  const uint64_t full = G.n() == 64 ? ~uint64_t{0} : (uint64_t{1} << G.n()) - 1;
  return std::make_unique<MonotoneBoxEnforcer>(full & ~inside, elems, solver);
}

std::optional<int> minimal_enforcer_boxes(BoxKind kind, int a, int b, int k, int first, int n_max) {
  if (kind == BoxKind::WCBox) throw std::invalid_argument("minimal_enforcer_boxes: AE kinds only");
  std::optional<int> N;
  for (int n = 1; n <= n_max; ++n) {
    const int w = box_solve({n, k, a, b, kind, first});
    if (w == 1) {
      if (!N) N = n;
    } else {
      N.reset();
    }
  }
  return N;
}

}  // namespace vglab
