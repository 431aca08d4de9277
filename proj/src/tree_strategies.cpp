#include "vglab/tree_strategies.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <stdexcept>

#include "vglab/catalog.hpp"

namespace vglab {

namespace {

uint64_t bit(int v) { return uint64_t{1} << v; }

uint64_t low_mask(int n) { return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1; }

uint64_t hash_combine(uint64_t a, uint64_t b) {
  return splitmix64(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6)));
}

void require_tree(const Graph& H, const char* what) {
  if (!H.is_tree()) throw std::invalid_argument(std::string(what) + ": H must be a tree");
}

Graph level_sequence_tree(const std::vector<int>& L) {
  std::vector<Edge> edges;
  std::vector<int> last_at_level(L.size() + 2, -1);
  for (int i = 0; i < static_cast<int>(L.size()); ++i) {
    if (i > 0) edges.emplace_back(last_at_level[L[i] - 1], i);
    last_at_level[L[i]] = i;
  }
  return Graph(static_cast<int>(L.size()), edges);
}

}  // namespace

std::vector<Graph> free_trees(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("free_trees: n must be in 1..12");
  std::vector<int> L(n);
  for (int i = 0; i < n; ++i) L[i] = i + 1;
  std::set<std::string> seen;
  std::vector<Graph> out;
  while (true) {
    Graph t = level_sequence_tree(L);
    if (seen.insert(canonical_form(t)).second) out.push_back(std::move(t));
    int p = n - 1;
    while (p >= 0 && L[p] <= 2) --p;
    if (p < 0) break;
    int q = p - 1;
    while (L[q] != L[p] - 1) --q;
    for (int i = p; i < n; ++i) L[i] = L[i - (p - q)];
  }
  return out;
}

long long maker_tree_degree(const Graph& H, int b) {
  require_tree(H, "maker_tree_degree");
  if (b < 1) throw std::invalid_argument("maker_tree_degree: b must be positive");
  long long d = 2LL * b;
  for (int i = 0; i < H.n(); ++i) {
    if (d > (1LL << 40)) throw std::overflow_error("maker_tree_degree: degree overflows");
    d *= H.max_degree();
  }
  return std::max(d, 1LL);
}

MakerTreeStrategy::MakerTreeStrategy(int d, int levels, int delta)
    : d_(d), levels_(levels), delta_(delta), n_(0) {
  long long n = 0, width = 1;
  for (int l = 0; l < levels; ++l, width *= d) n += width;
  if (n > 64) throw std::length_error("maker_tree: host has more than 64 vertices");
  n_ = static_cast<int>(n);
}

Move MakerTreeStrategy::next_move(const StrategyView& view, Rng&) {
  const GameState& s = view.state;
  const uint64_t mine = s.own[s.to_move];
  const uint64_t free = free_mask(view.game, s);
  if (free & 1) return 1;
  if (mine & 1) {
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      int owned = 0, first_free = -1;
      for (int c = d_ * v + 1; c <= d_ * v + d_ && c < n_; ++c) {
        if (mine & bit(c)) {
          ++owned;
          queue.push_back(c);
        } else if (first_free < 0 && (free & bit(c))) {
          first_free = c;
        }
      }
      if (owned < delta_ && first_free >= 0) return bit(first_free);
    }
  }
  return free & -free;
}

std::pair<TreeHost, std::unique_ptr<Strategy>> maker_tree_strategy(const Graph& H, int b,
                                                                   std::optional<int> d) {
  require_tree(H, "maker_tree_strategy");
  int degree = d ? *d : static_cast<int>(std::min<long long>(maker_tree_degree(H, b), 1 << 20));
  if (degree < 1) throw std::invalid_argument("maker_tree_strategy: d must be positive");
  TreeHost host{make_catalog_graph({Family::DaryTree, {degree, H.n()}}), degree, H.n()};
  auto strategy = std::make_unique<MakerTreeStrategy>(degree, H.n(), H.max_degree());
  return {std::move(host), std::move(strategy)};
}

bool simulate_maker_tree(const Graph& H, int b, long long d, TreeAdversary adversary,
                         uint64_t seed) {
  require_tree(H, "simulate_maker_tree");
  if (b < 1 || d < 1) throw std::invalid_argument("simulate_maker_tree: b and d must be positive");
  const int levels = H.n(), delta = H.max_degree();
  long long n = 0, width = 1;
  for (int l = 0; l < levels; ++l) {
    n += width;
    if (n > 50'000'000) throw std::length_error("simulate_maker_tree: host too large");
    if (l + 1 < levels) width *= d;
  }
  const long long first_leaf = n - width;
  enum : char { Free, MakerOwned, BreakerOwned };
  std::vector<char> owner(n, Free);
  long long free_count = n;
  Rng rng(seed);

  // Maker's pending expansions in the order the strategy serves them.
  std::deque<long long> frontier;
  auto claim = [&](long long v, char who) {
    owner[v] = who;
    --free_count;
  };
  auto lowest_free_child = [&](long long v) -> long long {
    for (long long c = d * v + 1; c <= d * v + d; ++c)
      if (owner[c] == Free) return c;
    return -1;
  };
  std::vector<int> owned_children(first_leaf > 0 ? first_leaf : 1, 0);

  claim(0, MakerOwned);
  if (first_leaf > 0 && delta > 0) frontier.push_back(0);
  while (!frontier.empty()) {
    for (int i = 0; i < b && free_count > 0; ++i) {
      long long target = -1;
      if (adversary == TreeAdversary::Frontier) {
        for (long long v : frontier) {
          long long c = lowest_free_child(v);
          if (c >= 0) {
            // Spread over the free children instead of always the lowest.
            long long span = d * v + d - c + 1;
            for (long long tries = 0; tries < 4; ++tries) {
              long long r = c + static_cast<long long>(rng.below(span));
              if (owner[r] == Free) { target = r; break; }
            }
            if (target < 0) target = c;
            break;
          }
        }
      }
      while (target < 0) {
        long long r = static_cast<long long>(rng.below(n));
        if (owner[r] == Free) target = r;
      }
      claim(target, BreakerOwned);
    }
    long long v = frontier.front();
    long long c = lowest_free_child(v);
    if (c < 0) return false;
    claim(c, MakerOwned);
    if (c < first_leaf) frontier.push_back(c);
    if (++owned_children[v] == delta) frontier.pop_front();
  }
  return true;
}

std::optional<int> reduced_tree_degree(const Graph& H, int b, int d_min, int d_max,
                                       const CheckOptions& opts) {
  require_tree(H, "reduced_tree_degree");
  for (int d = std::max(1, d_min); d <= d_max; ++d) {
    long long n = 0, width = 1;
    for (int l = 0; l < H.n(); ++l, width *= d) n += width;
    if (n > opts.max_board) break;
    auto [host, strategy] = maker_tree_strategy(H, b, d);
    Game g = make_game({GameKind::MB, 1, b, H, 0}, host.host);
    if (exhaustive_strategy_check(g, *strategy, 0, opts).wins) return d;
  }
  return std::nullopt;
}

Graph plan_board(const ForestStrategyPlan& plan) {
  if (plan.trees.size() != plan.hosts.size() || plan.trees.size() != plan.counts.size())
    throw std::invalid_argument("forest plan: trees, hosts and counts differ in length");
  std::vector<Graph> parts;
  for (size_t i = 0; i < plan.hosts.size(); ++i) {
    if (plan.counts[i] < 1) throw std::invalid_argument("forest plan: counts must be positive");
    if (!plan.hosts[i].is_tree() || !plan.trees[i].is_tree())
      throw std::invalid_argument("forest plan: trees and hosts must be trees");
    for (int j = 0; j < plan.counts[i]; ++j) parts.push_back(plan.hosts[i]);
  }
  return disjoint_union(parts);
}

std::vector<long long> client_forest_counts(int b, int v, int k) {
  const long long base = static_cast<long long>(b) * v * b * v + 1;
  std::vector<long long> counts;
  long long c = 1;
  for (int i = 0; i < k; ++i) {
    counts.push_back(c);
    if (i + 1 < k && c > (1LL << 62) / base) throw std::overflow_error("client_forest_counts overflow");
    c *= base;
  }
  return counts;
}

std::vector<Graph> forest_components(const Graph& H) {
  if (!H.is_forest()) throw std::invalid_argument("forest_components: H must be a forest");
  std::vector<Graph> out;
  for (const auto& comp : H.components()) out.push_back(H.induced(comp));
  std::stable_sort(out.begin(), out.end(), [](const Graph& x, const Graph& y) { return x.n() > y.n(); });
  return out;
}

namespace {

struct Block {
  int tree;
  int pool;  // index of the first tree whose host equals this block's host
  int offset;
  int size;
  uint64_t mask;
};

// Shared per-plan data: host blocks in (i, j) order and one solver per tree.
struct ForestData {
  std::vector<Block> blocks;
  std::vector<std::shared_ptr<Solver>> solvers;
};

std::shared_ptr<const ForestData> forest_data(const ForestStrategyPlan& plan, GameKind kind) {
  Graph board = plan_board(plan);
  if (board.n() > 64) throw std::length_error("forest plan board has more than 64 vertices");
  auto data = std::make_shared<ForestData>();
  int offset = 0;
  for (size_t i = 0; i < plan.hosts.size(); ++i) {
    const int size = plan.hosts[i].n();
    data->solvers.push_back(std::make_shared<Solver>(
        make_game({kind, 1, plan.b, plan.trees[i], 0}, plan.hosts[i])));
    int pool = static_cast<int>(i);
    for (size_t e = 0; e < i; ++e)
      if (plan.hosts[e] == plan.hosts[i]) {
        pool = static_cast<int>(e);
        break;
      }
    for (int j = 0; j < plan.counts[i]; ++j, offset += size)
      data->blocks.push_back({static_cast<int>(i), pool, offset, size, low_mask(size) << offset});
  }
  return data;
}

GameState restrict_to(const GameState& s, const Block& blk, int side) {
  GameState r;
  r.own[0] = (s.own[0] & blk.mask) >> blk.offset;
  r.own[1] = (s.own[1] & blk.mask) >> blk.offset;
  r.offer = (s.offer & blk.mask) >> blk.offset;
  r.to_move = side;
  return r;
}

class ForestMaker : public Strategy {
 public:
  explicit ForestMaker(std::shared_ptr<const ForestData> data) : data_(std::move(data)) {}
  std::string name() const override { return "forest_maker"; }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<ForestMaker>(*this); }
  std::optional<uint64_t> memo_key(const StrategyView&) const override {
    return hash_combine(static_cast<uint64_t>(game_), static_cast<uint64_t>(block_ + 1));
  }

  Move next_move(const StrategyView& view, Rng&) override {
    const GameState& s = view.state;
    const int side = s.to_move;
    const uint64_t free = free_mask(view.game, s);
    const int games = static_cast<int>(data_->solvers.size());
    while (game_ < games) {
      if (block_ < 0) {
        for (int i = 0; i < static_cast<int>(data_->blocks.size()); ++i) {
          const Block& blk = data_->blocks[i];
          if (blk.pool == data_->blocks[first_block(game_)].pool && (free & blk.mask) == blk.mask) {
            block_ = i;
            break;
          }
        }
        if (block_ < 0)
          throw std::runtime_error("forest maker: no free host left for tree " + std::to_string(game_));
      }
      const Block& blk = data_->blocks[block_];
      Solver& solver = *data_->solvers[game_];
      GameState r = restrict_to(s, blk, side);
      auto status = completion_status(solver.game(), r);
      if (!status) return solver.best_move(r) << blk.offset;
      // Won here: move to the next tree. Lost here: start over on a fresh host.
      if (*status) ++game_;
      block_ = -1;
    }
    return free & -free;
  }

 private:
  int first_block(int tree) const {
    for (int i = 0;; ++i)
      if (data_->blocks[i].tree == tree) return i;
  }

  std::shared_ptr<const ForestData> data_;
  int game_ = 0;
  int block_ = -1;
};

class ForestClient : public Strategy {
 public:
  explicit ForestClient(std::shared_ptr<const ForestData> data) : data_(std::move(data)) {}
  std::string name() const override { return "forest_client"; }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<ForestClient>(*this); }
  std::optional<uint64_t> memo_key(const StrategyView&) const override { return deleted_; }

  Move next_move(const StrategyView& view, Rng&) override {
    const GameState& s = view.state;
    const uint64_t offer = s.offer;
    int chosen = -1;
    for (int i = 0; i < static_cast<int>(data_->blocks.size()); ++i) {
      if (deleted_ & bit(i) || !(offer & data_->blocks[i].mask)) continue;
      if (chosen < 0) chosen = i;
      else deleted_ |= bit(i);
    }
    if (chosen < 0) return offer & -offer;
    const Block& blk = data_->blocks[chosen];
    Solver& solver = *data_->solvers[blk.tree];
    GameState r = restrict_to(s, blk, s.to_move);
    if (completion_status(solver.game(), r)) {
      uint64_t inside = offer & blk.mask;
      return inside & -inside;
    }
    return solver.best_move(r) << blk.offset;
  }

 private:
  std::shared_ptr<const ForestData> data_;
  uint64_t deleted_ = 0;
};

}  // namespace

std::unique_ptr<Strategy> builder_forest_sequential_strategy(const ForestStrategyPlan& plan, Role side) {
  if (side != Role::Maker && side != Role::Client)
    throw std::invalid_argument("forest strategy plays Maker or Client");
  if (side == Role::Maker) return std::make_unique<ForestMaker>(forest_data(plan, GameKind::MB));
  auto data = forest_data(plan, GameKind::CW);
  if (data->blocks.size() > 64) throw std::length_error("forest client supports at most 64 hosts");
  return std::make_unique<ForestClient>(std::move(data));
}

}  // namespace vglab
