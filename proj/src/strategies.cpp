#include "vglab/strategies.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "vglab/catalog.hpp"
#include "vglab/subgraph.hpp"

namespace vglab {

namespace {

uint64_t bit(int v) { return uint64_t{1} << v; }

int lowest(uint64_t m) { return std::countr_zero(m); }

// Adds up to `k` lowest vertices of `from` to `move`; returns how many were added.
int take_lowest(uint64_t from, int k, Move& move) {
  int added = 0;
  for (uint64_t m = from & ~move; m && added < k; m &= m - 1, ++added) move |= m & -m;
  return added;
}

int bias(const Game& g, int side) { return side == 0 ? g.a : g.b; }

// Offer size bounds for the CW Waiter with `avail` free vertices.
std::pair<int, int> cw_offer_sizes(const Game& g, int avail) {
  if (avail < g.a) return {avail, avail};
  return {g.a, std::min(g.a + g.b, avail)};
}

std::optional<int> last_move_vertex(const std::vector<MoveRecord>& history, int side) {
  for (auto it = history.rbegin(); it != history.rend(); ++it)
    if (it->side == side) return it->move ? std::optional<int>(lowest(it->move)) : std::nullopt;
  return std::nullopt;
}

uint64_t hash_combine(uint64_t a, uint64_t b) { return splitmix64(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6))); }

void require_board(const Game& g, int n, const char* who) {
  if (g.n != n) throw std::invalid_argument(std::string(who) + ": game board does not match the graph");
}

}  // namespace

void validate_pairing(const Pairing& p, int b, int n) {
  uint64_t seen = 0;
  for (const auto& m : p.members) {
    if (m.size() < 2 || static_cast<int>(m.size()) > b + 1)
      throw std::invalid_argument("pairing member size must be 2.." + std::to_string(b + 1));
    for (int v : m) {
      if (v < 0 || v >= n || v >= 64) throw std::invalid_argument("pairing vertex out of range");
      if (seen & bit(v)) throw std::invalid_argument("pairing members overlap");
      seen |= bit(v);
    }
  }
}

bool is_blocking_pairing(const Graph& G, const Graph& H, const Pairing& p, int b) {
  validate_pairing(p, b, G.n());
  std::vector<uint64_t> members;
  for (const auto& m : p.members) members.push_back(vertices_mask(m));
  for (const auto& c : copy_vertex_sets(G, H)) {
    uint64_t cm = vertices_mask(c);
    bool blocked = std::any_of(members.begin(), members.end(),
                               [&](uint64_t m) { return (m & cm) == m; });
    if (!blocked) return false;
  }
  return true;
}

PairingStrategy::PairingStrategy(Pairing p, GameKind kind, uint64_t domain)
    : kind_(kind), domain_(domain) {
  if (kind != GameKind::MB && kind != GameKind::CW)
    throw std::invalid_argument("pairing strategy plays Breaker in MB or Waiter in CW");
  for (const auto& m : p.members) members_.push_back(vertices_mask(m));
  for (size_t i = 0; i < members_.size(); ++i)
    for (size_t j = i + 1; j < members_.size(); ++j)
      if (members_[i] & members_[j]) throw std::invalid_argument("pairing members overlap");
}

std::string PairingStrategy::name() const {
  return kind_ == GameKind::MB ? "pairing_breaker" : "pairing_waiter";
}

Move PairingStrategy::breaker_move(const Game& g, const GameState& s) const {
  const uint64_t free = free_mask(g, s);
  const int k = std::min(bias(g, 1), std::popcount(free));
  Move move = 0;
  int left = k;
  for (uint64_t m : members_)
    if ((m & s.own[0]) && (m & free)) left -= take_lowest(m & free, left, move);
  left -= take_lowest(free & domain_, left, move);
  take_lowest(free, left, move);
  return move;
}

Move PairingStrategy::waiter_move(const Game& g, const GameState& s) const {
  const uint64_t free = free_mask(g, s);
  auto [lo, hi] = cw_offer_sizes(g, std::popcount(free));
  Move move = 0;
  for (uint64_t m : members_)
    if ((m & free) == m && std::popcount(m) <= hi) {
      move = m;
      break;
    }
  if (!move)
    for (uint64_t m : members_)
      if ((m & free) && std::popcount(m & free) <= hi) {
        move = m & free;
        break;
      }
  if (!move) {
    uint64_t paired = 0;
    for (uint64_t m : members_) paired |= m;
    take_lowest(free & domain_ & ~paired, hi, move);
  }
  int have = std::popcount(move);
  if (have < lo) {
    uint64_t paired = 0;
    for (uint64_t m : members_) paired |= m;
    have += take_lowest(free & ~paired, lo - have, move);
    take_lowest(free, lo - have, move);
  }
  return move;
}

Move PairingStrategy::next_move(const StrategyView& view, Rng&) {
  if (view.state.to_move != 1) throw std::logic_error("pairing strategy plays side 1");
  return kind_ == GameKind::MB ? breaker_move(view.game, view.state) : waiter_move(view.game, view.state);
}

std::unique_ptr<Strategy> spoiler_pairing_strategy(const Pairing& p, GameKind kind, uint64_t domain) {
  return std::make_unique<PairingStrategy>(p, kind, domain);
}

namespace {

std::vector<std::vector<int>> relabel_sets(const std::vector<std::vector<int>>& sets,
                                           const std::vector<int>& map) {
  auto out = sets;
  for (auto& s : out)
    for (int& v : s) v = map[v];
  return out;
}

class WaiterDDtStrategy : public Strategy {
 public:
  WaiterDDtStrategy(int n, int x, int y, PairingStrategy lx, PairingStrategy ly)
      : n_(n), x_(x), y_(y), lx_(std::move(lx)), ly_(std::move(ly)) {}
  std::string name() const override { return "waiter_ddt"; }
  Move next_move(const StrategyView& view, Rng& rng) override {
    require_board(view.game, n_, "waiter_ddt");
    const auto& s = view.state;
    const uint64_t free = free_mask(view.game, s);
    if ((free & bit(x_)) && (free & bit(y_))) return bit(x_) | bit(y_);
    if (s.own[0] & bit(x_)) return lx_.next_move(view, rng);
    return ly_.next_move(view, rng);
  }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<WaiterDDtStrategy>(*this); }
  std::optional<uint64_t> memo_key(const StrategyView&) const override { return 0; }

 private:
  int n_, x_, y_;
  PairingStrategy lx_, ly_;
};

}  // namespace

std::unique_ptr<Strategy> waiter_ddt_strategy(const Graph& G, int t) {
  Graph ddt = make_catalog_graph({Family::DDt, {t}});
  auto map = find_isomorphism(ddt, G);
  if (!map) throw std::invalid_argument("waiter_ddt: board is not DD_" + std::to_string(t));
  const int x = (*map)[2 * t + 1], y = (*map)[2 * t + 2];
  PairingStrategy lx({relabel_sets(ddt_lambda_x(t), *map)}, GameKind::CW);
  PairingStrategy ly({relabel_sets(ddt_lambda_y(t), *map)}, GameKind::CW);
  return std::make_unique<WaiterDDtStrategy>(G.n(), x, y, std::move(lx), std::move(ly));
}

std::optional<std::vector<int>> find_embedding(const Graph& G, const Graph& pattern) {
  std::optional<std::vector<int>> out;
  for_each_embedding(G, pattern, [&](const Embedding& e) {
    out = e;
    return false;
  });
  return out;
}

namespace {

// DD labels: x=0 y1=1 z1=2 z2=3 y2=4 z3=5 z4=6.
constexpr int kDDTriangles[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 4, 5}, {0, 4, 6}};

class MakerDDFirst : public Strategy {
 public:
  MakerDDFirst(int n, std::vector<int> L) : n_(n), L_(std::move(L)) {}
  std::string name() const override { return "maker_dd_first"; }
  Move next_move(const StrategyView& view, Rng&) override {
    require_board(view.game, n_, "maker_dd_first");
    const auto& s = view.state;
    const uint64_t free = free_mask(view.game, s), mine = s.own[0];
    auto is_free = [&](int label) { return (free >> L_[label]) & 1; };
    auto is_mine = [&](int label) { return (mine >> L_[label]) & 1; };
    if (is_free(0)) return bit(L_[0]);
    if (is_mine(0)) {
      for (const auto& t : kDDTriangles)
        if (is_mine(t[1]) && is_free(t[2])) return bit(L_[t[2]]);
      int best = -1, best_score = -1;
      for (int y : {1, 4}) {
        if (!is_free(y)) continue;
        int score = 0;
        for (const auto& t : kDDTriangles) score += t[1] == y && is_free(t[2]);
        if (score > best_score) best = y, best_score = score;
      }
      if (best >= 0) return bit(L_[best]);
    }
    return free & -free;
  }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<MakerDDFirst>(*this); }
  std::optional<uint64_t> memo_key(const StrategyView&) const override { return 0; }

 private:
  int n_;
  std::vector<int> L_;
};

// Answers inside the pair Breaker entered; otherwise opens an untouched pair.
class PairAnswerMaker : public Strategy {
 public:
  PairAnswerMaker(int n, std::vector<std::pair<int, int>> pairs) : n_(n), pairs_(std::move(pairs)) {}
  std::string name() const override { return "maker_dd_second"; }
  Move next_move(const StrategyView& view, Rng&) override {
    require_board(view.game, n_, "maker_dd_second");
    const auto& s = view.state;
    const uint64_t free = free_mask(view.game, s);
    for (auto [u, v] : pairs_) {
      if ((s.own[1] & bit(u)) && (free & bit(v)) && !(s.own[0] & bit(v))) return bit(v);
      if ((s.own[1] & bit(v)) && (free & bit(u)) && !(s.own[0] & bit(u))) return bit(u);
    }
    for (auto [u, v] : pairs_)
      if ((free & bit(u)) && (free & bit(v))) return bit(u);
    return free & -free;
  }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<PairAnswerMaker>(*this); }
  std::optional<uint64_t> memo_key(const StrategyView&) const override { return 0; }

 private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;
};

// Two vertex-disjoint DD embeddings, if G has them.
std::optional<std::pair<Embedding, Embedding>> two_disjoint_dds(const Graph& G) {
  const Graph dd = make_catalog_graph({Family::DD, {}});
  std::vector<Embedding> embs;
  std::vector<uint64_t> masks;
  std::optional<std::pair<Embedding, Embedding>> out;
  for_each_embedding(G, dd, [&](const Embedding& e) {
    uint64_t m = vertices_mask(e);
    for (size_t i = 0; i < embs.size(); ++i)
      if (!(masks[i] & m)) {
        out = std::make_pair(embs[i], e);
        return false;
      }
    if (std::find(masks.begin(), masks.end(), m) == masks.end()) {
      embs.push_back(e);
      masks.push_back(m);
    }
    return true;
  });
  return out;
}

std::vector<std::pair<int, int>> dd_pairs(const Embedding& L) {
  return {{L[1], L[4]}, {L[2], L[3]}, {L[5], L[6]}};
}

}  // namespace

std::unique_ptr<Strategy> maker_dd_strategy(const Graph& G, PlayOrder order) {
  if (G.n() > 64) throw std::length_error("maker_dd_strategy: board larger than 64 vertices");
  if (order == PlayOrder::First) {
    auto L = find_embedding(G, make_catalog_graph({Family::DD, {}}));
    if (!L) throw std::invalid_argument("maker_dd_strategy: board contains no DD");
    return std::make_unique<MakerDDFirst>(G.n(), *L);
  }
  auto two = two_disjoint_dds(G);
  if (!two) throw std::invalid_argument("maker_dd_strategy: second player needs two disjoint DDs");
  auto pairs = dd_pairs(two->first);
  auto more = dd_pairs(two->second);
  pairs.insert(pairs.end(), more.begin(), more.end());
  pairs.insert(pairs.begin(), {two->first[0], two->second[0]});
  return std::make_unique<PairAnswerMaker>(G.n(), std::move(pairs));
}

namespace {

class CoreExtension : public Strategy {
 public:
  CoreExtension(int n, GameKind kind, std::unique_ptr<Strategy> inner, uint64_t core,
                std::vector<uint64_t> U, std::vector<uint64_t> W)
      : n_(n), kind_(kind), inner_(std::move(inner)), core_(core), U_(std::move(U)), W_(std::move(W)) {}
  CoreExtension(const CoreExtension& o)
      : n_(o.n_), kind_(o.kind_), inner_(o.inner_->clone()), core_(o.core_), U_(o.U_), W_(o.W_) {}

  std::string name() const override { return "core_extension(" + inner_->name() + ")"; }

  Move next_move(const StrategyView& view, Rng& rng) override {
    require_board(view.game, n_, "core_extension");
    return kind_ == GameKind::MB ? breaker(view, rng) : waiter(view, rng);
  }

  std::unique_ptr<Strategy> clone() const override { return std::make_unique<CoreExtension>(*this); }

  std::optional<uint64_t> memo_key(const StrategyView& view) const override {
    auto k = inner_->memo_key(view);
    if (!k) return std::nullopt;
    if (kind_ != GameKind::MB) return k;
    auto v = last_move_vertex(view.history, 0);
    return hash_combine(*k, v ? static_cast<uint64_t>(*v) + 1 : 0);
  }

 private:
  Move breaker(const StrategyView& view, Rng& rng) {
    const Game& g = view.game;
    const uint64_t free = free_mask(g, view.state);
    auto v = last_move_vertex(view.history, 0);
    if (!v || (core_ & bit(*v))) {
      Move m = inner_->next_move(view, rng);
      if (!is_legal(g, view.state, m)) throw std::runtime_error("inner strategy made an illegal move");
      return m;
    }
    int left = std::min(g.b, std::popcount(free));
    Move move = 0;
    for (uint64_t u : U_)
      if (u & bit(*v)) left -= take_lowest(u & free, left, move);
    for (uint64_t w : W_)
      if (w & bit(*v)) left -= take_lowest(w & free, left, move);
    take_lowest(free, left, move);
    return move;
  }

  Move waiter(const StrategyView& view, Rng& rng) {
    const Game& g = view.game;
    const uint64_t free = free_mask(g, view.state);
    auto [lo, hi] = cw_offer_sizes(g, std::popcount(free));
    if (free & core_) {
      Move m = inner_->next_move(view, rng);
      if (!is_legal(g, view.state, m)) throw std::runtime_error("inner strategy made an illegal move");
      return m;
    }
    Move move = 0;
    for (uint64_t u : U_)
      if ((u & free) && std::popcount(u & free) <= hi) {
        move = u & free;
        break;
      }
    if (!move)
      for (uint64_t w : W_)
        if (w & free) {
          take_lowest(w & free, std::min(g.b + 1, hi), move);
          break;
        }
    if (!move) take_lowest(free, hi, move);
    if (std::popcount(move) < lo) take_lowest(free, lo - std::popcount(move), move);
    return move;
  }

  int n_;
  GameKind kind_;
  std::unique_ptr<Strategy> inner_;
  uint64_t core_;
  std::vector<uint64_t> U_, W_;
};

}  // namespace

std::unique_ptr<Strategy> spoiler_core_extension(const Graph& G, const Graph& H, int b,
                                                 GameKind kind, std::unique_ptr<Strategy> inner) {
  if (kind != GameKind::MB && kind != GameKind::CW)
    throw std::invalid_argument("core extension plays Breaker in MB or Waiter in CW");
  if (G.n() > 64) throw std::length_error("core extension: board larger than 64 vertices");
  if (!inner) throw std::invalid_argument("core extension needs an inner strategy");
  auto trace = compute_core(G, H, b);
  std::vector<uint64_t> U, W;
  for (const auto& u : trace.U) U.push_back(vertices_mask(u));
  for (const auto& w : trace.W) W.push_back(vertices_mask(w));
  return std::make_unique<CoreExtension>(G.n(), kind, std::move(inner),
                                         vertices_mask(trace.core_vertices), std::move(U), std::move(W));
}

PairAvoiderStrategy::PairAvoiderStrategy(std::vector<std::pair<int, int>> pairs, std::vector<int> pool,
                                         std::optional<int> singleton)
    : pairs_(std::move(pairs)), pool_(vertices_mask(pool)), singleton_(singleton) {
  uint64_t seen = pool_;
  auto add = [&](int v) {
    if (v < 0 || v >= 64) throw std::invalid_argument("pair avoider: vertex out of range");
    if (seen & bit(v)) throw std::invalid_argument("pair avoider: pairs, pool and singleton overlap");
    seen |= bit(v);
  };
  for (auto [u, v] : pairs_) add(u), add(v);
  if (singleton_) add(*singleton_);
}

Move PairAvoiderStrategy::next_move(const StrategyView& view, Rng&) {
  const Game& g = view.game;
  const auto& s = view.state;
  const int me = s.to_move;
  uint64_t free = free_mask(g, s);
  uint64_t mine = s.own[me];
  const uint64_t theirs = s.own[1 - me];
  uint64_t paired = 0;
  for (auto [u, v] : pairs_) paired |= bit(u) | bit(v);
  const uint64_t single = singleton_ ? bit(*singleton_) : 0;
  int k = std::min(bias(g, me), std::popcount(free));
  Move move = 0;
  auto pick = [&](int v) {
    move |= bit(v);
    mine |= bit(v);
    free &= ~bit(v);
  };
  while (k-- > 0) {
    // Pool vertices, including anything outside the pairs and the singleton.
    if (uint64_t c = free & ~paired & ~single) {
      pick(lowest(c));
      continue;
    }
    int choice = -1;
    for (auto [u, v] : pairs_) {
      if ((free & bit(u)) && (theirs & bit(v))) { choice = u; break; }
      if ((free & bit(v)) && (theirs & bit(u))) { choice = v; break; }
    }
    if (choice < 0)
      for (auto [u, v] : pairs_)
        if ((free & bit(u)) && (free & bit(v))) { choice = u; break; }
    if (choice < 0)
      if (uint64_t c = free & ~single) choice = lowest(c);
    if (choice < 0) choice = lowest(free);
    pick(choice);
  }
  return move;
}

std::unique_ptr<Strategy> avoider_pair_strategy(std::vector<std::pair<int, int>> pairs,
                                                std::vector<int> pool, std::optional<int> singleton) {
  return std::make_unique<PairAvoiderStrategy>(std::move(pairs), std::move(pool), singleton);
}

std::unique_ptr<Strategy> enforcer_dd_strategy(const Graph& G, bool avoider_moves_last) {
  if (G.n() > 64) throw std::length_error("enforcer_dd_strategy: board larger than 64 vertices");
  if (avoider_moves_last) {
    auto L = find_embedding(G, make_catalog_graph({Family::DD, {}}));
    if (!L) throw std::invalid_argument("enforcer_dd_strategy: board contains no DD");
    return avoider_pair_strategy(dd_pairs(*L), {}, (*L)[0]);
  }
  auto two = two_disjoint_dds(G);
  if (!two) throw std::invalid_argument("enforcer_dd_strategy: needs two disjoint DDs when Enforcer moves last");
  auto pairs = dd_pairs(two->first);
  auto more = dd_pairs(two->second);
  pairs.insert(pairs.end(), more.begin(), more.end());
  pairs.push_back({two->first[0], two->second[0]});
  return avoider_pair_strategy(std::move(pairs), {}, std::nullopt);
}

namespace {

// Triple diamond labels: x1=0 x2=1 y1=2 y2=3 z1=4 z2=5 z3=6 z4=7 w1=8 w2=9.
constexpr int kTDTriangles[6][3] = {{0, 2, 4}, {0, 2, 5}, {0, 1, 8}, {0, 1, 9}, {1, 3, 6}, {1, 3, 7}};
// Diamonds with a chosen center x, the other center y and the rim z, w.
constexpr int kTDDiamonds[6][4] = {{0, 2, 4, 5}, {2, 0, 4, 5}, {0, 1, 8, 9},
                                   {1, 0, 8, 9}, {1, 3, 6, 7}, {3, 1, 6, 7}};
// Preference when nothing better applies: centers, then y, w, z vertices.
constexpr int kTDClassOrder[10] = {0, 1, 2, 3, 8, 9, 4, 5, 6, 7};

// Client maintains a certificate of a win. A threat is a triangle with two
// of its vertices claimed by Client and the third not yet offered: Waiter
// has to offer that vertex at some point and Client takes it. A pair {x, u}
// is forced when Client holds the third vertex of a triangle on it and both
// are unoffered; a vertex in two forced pairs with different partners can
// never be offered safely. A winning diamond has y, z, w unoffered and x
// either claimed by Client or in a forced pair {x, u} with u outside
// {y, z, w}. Client picks the offered vertex that keeps the strongest
// certificate; the first offer meeting the structure always admits a pick
// that creates one.
class ClientTripleDiamond : public Strategy {
 public:
  ClientTripleDiamond(int n, std::vector<int> L) : n_(n), L_(std::move(L)) {}
  std::string name() const override { return "client_triple_diamond"; }

  Move next_move(const StrategyView& view, Rng&) override {
    require_board(view.game, n_, "client_triple_diamond");
    const auto& s = view.state;
    if (s.to_move != 0 || !s.offer) throw std::logic_error("client strategy called without an offer");
    const int k = std::min(view.game.a, std::popcount(s.offer));
    if (k != 1) throw std::invalid_argument("client_triple_diamond plays the (1:b) game");
    const uint64_t structure = vertices_mask(L_);
    int best = -1, best_score = -1;
    for (int i = 0; i < 10; ++i) {
      int v = L_[kTDClassOrder[i]];
      if (!(s.offer & bit(v))) continue;
      int score = evaluate(s.own[0] | bit(v), free_mask(view.game, s) & ~s.offer);
      if (score > best_score) best = v, best_score = score;
    }
    if (best >= 0 && (best_score > 0 || !(s.offer & ~structure))) return bit(best);
    // No vertex of the structure helps: give Waiter the outside vertex.
    if (uint64_t outside = s.offer & ~structure) return outside & -outside;
    return bit(best);
  }

  std::unique_ptr<Strategy> clone() const override { return std::make_unique<ClientTripleDiamond>(*this); }
  std::optional<uint64_t> memo_key(const StrategyView&) const override { return 0; }

 private:
  // 3: triangle complete, 2: threat, 1: winning diamond, 0: nothing.
  int evaluate(uint64_t mine, uint64_t unoffered) const {
    auto in = [&](uint64_t m, int label) { return (m >> L_[label]) & 1; };
    int score = 0;
    for (const auto& t : kTDTriangles) {
      int owned = in(mine, t[0]) + in(mine, t[1]) + in(mine, t[2]);
      if (owned == 3) return 3;
      if (owned == 2)
        for (int c : t)
          if (in(unoffered, c)) score = 2;
    }
    if (score) return score;
    // Forced pairs {x, u}: Client holds the third vertex of a triangle on
    // them and both are unoffered.
    std::vector<std::pair<int, int>> forced;
    for (const auto& t : kTDTriangles)
      for (int i = 0; i < 3; ++i) {
        int c = t[i], x = t[(i + 1) % 3], u = t[(i + 2) % 3];
        if (in(mine, c) && in(unoffered, x) && in(unoffered, u)) {
          forced.push_back({x, u});
          forced.push_back({u, x});
        }
      }
    // A vertex in two forced pairs cannot be offered safely at all.
    for (size_t i = 0; i < forced.size(); ++i)
      for (size_t j = i + 1; j < forced.size(); ++j)
        if (forced[i].first == forced[j].first && forced[i].second != forced[j].second) return 1;
    for (const auto& d : kTDDiamonds) {
      const int x = d[0];
      if (!in(unoffered, d[1]) || !in(unoffered, d[2]) || !in(unoffered, d[3])) continue;
      if (in(mine, x)) return 1;
      for (auto [fx, u] : forced)
        if (fx == x && u != d[1] && u != d[2] && u != d[3]) return 1;
    }
    return 0;
  }

  int n_;
  std::vector<int> L_;
};

}  // namespace

std::unique_ptr<Strategy> client_triple_diamond_strategy(const Graph& G) {
  if (G.n() > 64) throw std::length_error("client_triple_diamond: board larger than 64 vertices");
  auto L = find_embedding(G, make_catalog_graph({Family::TripleDiamond, {}}));
  if (!L) throw std::invalid_argument("client_triple_diamond: board contains no triple diamond");
  return std::make_unique<ClientTripleDiamond>(G.n(), *L);
}

FivePhaseBudgets five_phase_budgets(int n, double p) {
  if (n < 1 || !(p > 0.0) || p > 1.0) throw std::invalid_argument("five_phase_budgets: need n >= 1 and 0 < p <= 1");
  const double dn = n;
  FivePhaseBudgets b;
  b.phase2 = static_cast<int>(std::ceil(50.0 / (dn * dn * p * p * p)));
  b.phase3 = static_cast<int>(std::ceil(5.0 / (dn * p * p)));
  b.phase4 = static_cast<int>(std::ceil(1.0 / (2.0 * p)));
  b.phase5 = n / 20;
  return b;
}

FivePhaseRun run_five_phase(const Graph& G, const Graph& H_prime, double p, uint64_t seed) {
  auto L = find_embedding(G, make_catalog_graph({Family::DD, {}}));
  if (!L) throw std::invalid_argument("five-phase strategy: board contains no DD");
  const auto budgets = five_phase_budgets(G.n(), p);
  Rng rng(seed);
  std::vector<int> owner(G.n(), -1);
  std::vector<int> free_list(G.n());
  for (int v = 0; v < G.n(); ++v) free_list[v] = v;
  std::vector<int> pos = free_list;
  auto claim = [&](int v, int side) {
    owner[v] = side;
    int i = pos[v], last = free_list.back();
    free_list[i] = last;
    pos[last] = i;
    free_list.pop_back();
  };
  auto breaker_turn = [&] {
    if (!free_list.empty()) claim(free_list[rng.below(free_list.size())], 1);
  };

  FivePhaseRun run;
  // Phase 1: the first-player DD strategy.
  std::vector<int> M1;
  auto mine = [&](int label) { return owner[(*L)[label]] == 0; };
  auto open = [&](int label) { return owner[(*L)[label]] == -1; };
  for (int move = 0; move < 3 && !free_list.empty(); ++move) {
    int v = -1;
    if (open(0)) v = (*L)[0];
    for (const auto& t : kDDTriangles)
      if (v < 0 && mine(0) && mine(t[1]) && open(t[2])) v = (*L)[t[2]];
    if (v < 0) {
      int best_score = -1;
      for (int y : {1, 4}) {
        if (!open(y)) continue;
        int score = 0;
        for (const auto& t : kDDTriangles) score += t[1] == y && open(t[2]);
        if (score > best_score) v = (*L)[y], best_score = score;
      }
    }
    if (v < 0) v = free_list.front();
    claim(v, 0);
    M1.push_back(v);
    breaker_turn();
  }
  for (const auto& t : kDDTriangles)
    run.triangle |= mine(t[0]) && mine(t[1]) && mine(t[2]);
  run.phase_sizes.push_back(static_cast<int>(M1.size()));

  const int v1 = (*L)[0];
  std::vector<int> prev{v1};
  const int budget[4] = {budgets.phase2, budgets.phase3, budgets.phase4, budgets.phase5};
  for (int phase = 0; phase < 4; ++phase) {
    std::vector<int> cur;
    std::vector<char> in_prev(G.n(), 0);
    for (int u : prev) in_prev[u] = 1;
    for (int step = 0; step < budget[phase]; ++step) {
      // Lowest free vertex of N(prev), scanning neighborhoods in order.
      int pick = -1;
      for (int u : prev) {
        for (int w : G.neighbors(u))
          if (owner[w] == -1 && !in_prev[w] && (pick < 0 || w < pick)) pick = w;
      }
      if (pick < 0) {
        if (!run.starved_phase) run.starved_phase = phase + 2;
        break;
      }
      claim(pick, 0);
      cur.push_back(pick);
      breaker_turn();
    }
    run.phase_sizes.push_back(static_cast<int>(cur.size()));
    prev = std::move(cur);
  }
  run.success = run.triangle && induced_contains(G, prev, H_prime);
  return run;
}

double expansion_fraction(const Graph& G, double p, int samples, uint64_t seed) {
  if (!(p > 0.0) || samples <= 0) throw std::invalid_argument("expansion_fraction: need p > 0 and samples > 0");
  const int cap = std::max(1, std::min(G.n(), static_cast<int>(1.0 / (2.0 * p))));
  Rng rng(seed);
  std::vector<int> verts(G.n());
  for (int v = 0; v < G.n(); ++v) verts[v] = v;
  int good = 0;
  for (int i = 0; i < samples; ++i) {
    const int size = 1 + static_cast<int>(rng.below(cap));
    std::shuffle(verts.begin(), verts.end(), rng);
    std::vector<int> U(verts.begin(), verts.begin() + size);
    const double need = size * G.n() * p / 4.0;
    good += static_cast<double>(G.external_neighborhood(U).size()) >= need;
  }
  return static_cast<double>(good) / samples;
}

}  // namespace vglab
