#include "vglab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "vglab/catalog.hpp"
#include "vglab/core_reduction.hpp"
#include "vglab/random_models.hpp"
#include "vglab/subgraph.hpp"
#include "vglab/tree_strategies.hpp"

namespace vglab {

std::string to_string(DecisionMethod m) {
  switch (m) {
    case DecisionMethod::EmptyCore: return "empty-core";
    case DecisionMethod::Pairing: return "pairing";
    case DecisionMethod::ComponentSolve: return "component-solve";
    case DecisionMethod::FullSolve: return "full-solve";
  }
  return "?";
}

namespace {

constexpr int kSpoiler = 1;

// Runs body(i) for i in [0, count) on up to `jobs` threads. Results must be
// written by index so the outcome does not depend on scheduling.
void parallel_for(int count, int jobs, const std::function<void(int)>& body) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

bool core_applicable(const GameSpec& spec) {
  return spec.H.is_connected() && spec.H.n() >= 2 && spec.b >= 1 && spec.b <= 4;
}

std::optional<CatalogId> pairing_family(const ComponentTag& tag) {
  switch (tag.kind) {
    case ComponentKind::TTT: return CatalogId{Family::TTT, {}};
    case ComponentKind::K3Cycle: return CatalogId{Family::K3Cycle, {tag.t}};
    case ComponentKind::FeasibleA: return CatalogId{Family::FeasibleA, {}};
    case ComponentKind::FeasibleB: return CatalogId{Family::FeasibleB, {}};
    case ComponentKind::FeasibleC: return CatalogId{Family::FeasibleC, {}};
    default: return std::nullopt;
  }
}

int solve_winner(const GameSpec& spec, const Graph& part, int first, const SolveLimits& limits,
                 uint64_t& nodes) {
  GameSpec s = spec;
  s.first = first;
  Game g = make_game(s, part);
  if (g.targets.empty()) return kSpoiler;
  Outcome o = solve(g, SolveOptions{limits, {}, 0});
  nodes += o.nodes;
  return o.winner;
}

// Exact outcome of one component, both movers where the combination needs it.
void solve_component(const GameSpec& spec, const Graph& part, const SolveLimits& limits,
                     ComponentEvidence& ev, uint64_t& nodes) {
  if (spec.kind == GameKind::CW) {
    ev.winner_first = solve_winner(spec, part, 1, limits, nodes);
    return;
  }
  ev.winner_first = solve_winner(spec, part, 0, limits, nodes);
  if (spec.first == 1)
    ev.winner_second = ev.winner_first == 0 ? solve_winner(spec, part, 1, limits, nodes) : kSpoiler;
}

// Combined winner of independent components; nullopt when it is not
// determined by the per-component outcomes.
std::optional<int> combine(const GameSpec& spec, const std::vector<ComponentEvidence>& comps) {
  long long count_first = std::count_if(comps.begin(), comps.end(),
                                        [](const ComponentEvidence& c) { return c.winner_first == 0; });
  if (spec.kind == GameKind::CW || spec.first == 0) return count_first > 0 ? 0 : kSpoiler;
  bool second = std::any_of(comps.begin(), comps.end(),
                            [](const ComponentEvidence& c) { return c.winner_second == 0; });
  if (second || count_first >= spec.b + 1) return 0;
  // Breaker answers inside the unique Maker-first component, if any.
  if (spec.b == 1 || count_first == 0) return kSpoiler;
  return std::nullopt;
}

void set_winner(const GameSpec& spec, DecisionCertificate& cert, int winner) {
  cert.winner = winner;
  cert.winner_role = role_of(spec.kind, winner);
}

void full_solve(const GameSpec& spec, const Graph& G, const SolveLimits& limits,
                DecisionCertificate& cert) {
  cert.method = DecisionMethod::FullSolve;
  cert.components.clear();
  uint64_t nodes = 0;
  set_winner(spec, cert, solve_winner(spec, G, spec.first, limits, nodes));
  cert.nodes += nodes;
}

}  // namespace

DecisionCertificate decide_winner_fast(const GameSpec& spec, const Graph& G, const SolveLimits& limits) {
  if (spec.kind != GameKind::MB && spec.kind != GameKind::CW)
    throw std::invalid_argument("decide_winner_fast supports mb and cw games");
  if (spec.a != 1) throw std::invalid_argument("decide_winner_fast requires a = 1");
  DecisionCertificate cert;
  if (!core_applicable(spec)) {
    full_solve(spec, G, limits, cert);
    return cert;
  }
  DeletionTrace trace = compute_core(G, spec.H, spec.b);
  cert.deletion_steps = static_cast<int>(trace.steps.size());
  cert.core_vertices = trace.core_vertices;
  if (trace.core_vertices.empty()) {
    cert.method = DecisionMethod::EmptyCore;
    set_winner(spec, cert, kSpoiler);
    return cert;
  }
  const Graph core = compact_core(trace);
  const auto& labels = trace.core_vertices;
  bool any_solved = false;
  try {
    for (const auto& comp : core.components()) {
      ComponentEvidence ev;
      for (int v : comp) ev.vertices.push_back(labels[v]);
      Graph part = core.induced(comp);
      if (part.n() < spec.H.n()) {
        ev.tag = "small";
        ev.winner_first = kSpoiler;
        if (spec.kind == GameKind::MB && spec.first == 1) ev.winner_second = kSpoiler;
        cert.components.push_back(std::move(ev));
        continue;
      }
      ComponentTag tag = recognize_component(part);
      ev.tag = to_string(tag);
      if (auto id = pairing_family(tag)) {
        Pairing local;
        for (const auto& member : natural_pairs(*id)) {
          std::vector<int> m;
          for (int x : member) m.push_back(tag.labeling[x]);
          local.members.push_back(m);
        }
        if (is_blocking_pairing(part, spec.H, local, spec.b)) {
          ev.by_pairing = true;
          for (const auto& member : local.members) {
            std::vector<int> m;
            for (int x : member) m.push_back(ev.vertices[x]);
            std::sort(m.begin(), m.end());
            ev.pairing.members.push_back(m);
          }
          ev.winner_first = kSpoiler;
          if (spec.kind == GameKind::MB && spec.first == 1) ev.winner_second = kSpoiler;
          cert.components.push_back(std::move(ev));
          continue;
        }
      }
      solve_component(spec, part, limits, ev, cert.nodes);
      any_solved = true;
      cert.components.push_back(std::move(ev));
    }
  } catch (const std::length_error&) {
    full_solve(spec, G, limits, cert);
    return cert;
  }
  auto winner = combine(spec, cert.components);
  if (!winner) {
    // Several Maker-first components against a multi-vertex Breaker move:
    // decide the whole core instead.
    cert.method = DecisionMethod::FullSolve;
    uint64_t nodes = 0;
    set_winner(spec, cert, solve_winner(spec, core, spec.first, limits, nodes));
    cert.nodes += nodes;
    return cert;
  }
  set_winner(spec, cert, *winner);
  cert.method = (*winner == kSpoiler && !any_solved) ? DecisionMethod::Pairing : DecisionMethod::ComponentSolve;
  return cert;
}

int replay_certificate(const GameSpec& spec, const Graph& G, const DecisionCertificate& cert,
                       const SolveLimits& limits) {
  auto fail = [](const std::string& what) { throw std::logic_error("certificate replay: " + what); };
  uint64_t nodes = 0;
  if (cert.method == DecisionMethod::FullSolve && cert.components.empty() && cert.core_vertices.empty())
    return solve_winner(spec, G, spec.first, limits, nodes);
  DeletionTrace trace = compute_core(G, spec.H, spec.b);
  if (trace.core_vertices != cert.core_vertices) fail("core differs");
  if (cert.method == DecisionMethod::EmptyCore) {
    if (!trace.core_vertices.empty()) fail("core is not empty");
    return kSpoiler;
  }
  if (cert.method == DecisionMethod::FullSolve) {
    if (cert.components.empty()) return solve_winner(spec, G, spec.first, limits, nodes);
    return solve_winner(spec, compact_core(trace), spec.first, limits, nodes);
  }
  for (const auto& ev : cert.components) {
    Graph part = G.induced(ev.vertices);
    if (ev.by_pairing) {
      Pairing local;
      for (const auto& member : ev.pairing.members) {
        std::vector<int> m;
        for (int v : member) {
          auto it = std::find(ev.vertices.begin(), ev.vertices.end(), v);
          if (it == ev.vertices.end()) fail("pairing leaves its component");
          m.push_back(static_cast<int>(it - ev.vertices.begin()));
        }
        local.members.push_back(m);
      }
      validate_pairing(local, spec.b, part.n());
      if (!is_blocking_pairing(part, spec.H, local, spec.b)) fail("pairing is not blocking");
      continue;
    }
    if (part.n() < spec.H.n()) continue;
    ComponentEvidence check;
    solve_component(spec, part, limits, check, nodes);
    if (check.winner_first != ev.winner_first || check.winner_second != ev.winner_second)
      fail("component outcome differs");
  }
  auto winner = combine(spec, cert.components);
  if (!winner) fail("components do not determine the winner");
  return *winner;
}

// ---------------------------------------------------------------------------
// Hitting times

namespace {

// Smallest i in [lo, hi] with pred(i), given pred(hi) and monotonicity.
long long first_true(long long lo, long long hi, const std::function<bool(long long)>& pred) {
  while (lo < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (pred(mid)) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

// Whether Maker wins the (1:1) triangle game on G. Past the solver limits a
// win can still be certified by an exact solve on the vertex set of a DD
// (Maker first) or of two disjoint DDs (Maker second): Maker may confine
// every move to that set, and Breaker's moves outside it only waste turns.
// nullopt when neither settles the question.
std::optional<bool> maker_wins(const Graph& G, int first) {
  const Graph k3 = make_catalog_graph({Family::Complete, {3}});
  GameSpec spec{GameKind::MB, 1, 1, k3, first};
  try {
    return decide_winner_fast(spec, G).winner == 0;
  } catch (const std::length_error&) {
  }
  auto sets = find_disjoint_copies(G, make_catalog_graph({Family::DD, {}}), first == 0 ? 1 : 2);
  if (sets.empty()) return std::nullopt;
  std::vector<int> S;
  for (const auto& c : sets) S.insert(S.end(), c.begin(), c.end());
  std::sort(S.begin(), S.end());
  if (solve(spec, G.induced(S)).winner == 0) return true;
  return std::nullopt;
}

// Hitting time of Maker's win for the given mover. `bound` is the hitting
// time of the structure that should force the win; the search runs below it
// when the win is there (the expected case). Returns -1 when some probe
// cannot be decided.
long long maker_hitting_time(const ProcessRun& run, int first, long long bound, bool& violation) {
  bool unknown = false;
  auto pred = [&](long long i) {
    auto w = maker_wins(prefix_graph(run, i), first);
    if (!w) unknown = true;
    return w.value_or(false);
  };
  const long long m = static_cast<long long>(run.order.size());
  long long tau;
  if (bound == kNeverHit) {
    tau = pred(m) ? first_true(0, m, pred) : kNeverHit;
  } else {
    auto at_bound = maker_wins(prefix_graph(run, bound), first);
    if (!at_bound) return -1;
    if (*at_bound) {
      tau = first_true(0, bound, pred);
    } else {
      violation = true;
      tau = pred(m) ? first_true(bound + 1, m, pred) : kNeverHit;
    }
  }
  return unknown ? -1 : tau;
}

}  // namespace

int ae_dd_pool_winner(int n, int copies, int first) {
  if (copies < 1 || 7 * copies > n || n > 64) throw std::invalid_argument("ae_dd_pool_winner: bad sizes");
  const Graph dd = make_catalog_graph({Family::DD, {}});
  const Graph k3 = make_catalog_graph({Family::Complete, {3}});
  std::vector<uint64_t> targets;
  for (int c = 0; c < copies; ++c)
    for (const auto& s : copy_vertex_sets(dd, k3)) {
      uint64_t t = 0;
      for (int v : s) t |= uint64_t{1} << (7 * c + v);
      targets.push_back(t);
    }
  Game g = make_hypergraph_game(GameKind::AEStrict, 1, 1, first, n, targets);
  // Vertices outside the DDs are interchangeable.
  const uint64_t pool = g.full() & ~((uint64_t{1} << (7 * copies)) - 1);
  Canonicalizer canon = [pool, low = 7 * copies](GameState& s) {
    int c0 = std::popcount(s.own[0] & pool), c1 = std::popcount(s.own[1] & pool);
    uint64_t p0 = c0 ? ((uint64_t{1} << c0) - 1) << low : 0;
    uint64_t p1 = c1 ? ((uint64_t{1} << c1) - 1) << (low + c0) : 0;
    s.own[0] = (s.own[0] & ~pool) | p0;
    s.own[1] = (s.own[1] & ~pool) | p1;
  };
  SolveLimits limits;
  limits.mb_ae_strict = 64;
  return solve(g, SolveOptions{limits, canon, 0}).winner;
}

HittingStudy hitting_time_study(int n, int samples, uint64_t master_seed, int jobs) {
  if (n < 14 || n > 40) throw std::length_error("hitting_time_study: n must be in 14..40");
  HittingStudy study;
  study.n = n;
  study.master_seed = master_seed;
  study.runs.resize(samples);
  const Graph dd = make_catalog_graph({Family::DD, {}});
  std::vector<char> failed(samples, 0);
  parallel_for(samples, jobs, [&](int i) {
    HittingRun& r = study.runs[i];
    r.run_id = i;
    r.seed = stream_seed(master_seed, i);
    ProcessRun run = sample_process(n, r.seed);
    auto has_dd = [&](const Graph& G) { return contains_copy(G, dd); };
    auto has_2dd = [&](const Graph& G) { return has_disjoint_copies(G, dd, 2); };
    r.tau_dd = hitting_time(run, has_dd, true, "DD").tau;
    r.tau_2dd = hitting_time(run, has_2dd, true, "2DD").tau;
    try {
      r.tau_m1 = maker_hitting_time(run, 0, r.tau_dd, r.violation1);
      r.tau_m2 = maker_hitting_time(run, 1, r.tau_2dd, r.violation2);
    } catch (const std::exception&) {
      // Leaves the unsettled times at -1.
    }
    failed[i] = (r.tau_m1 < 0) | (r.tau_m2 < 0) << 1;
  });
  int agree1 = 0, agree2 = 0;
  for (int i = 0; i < samples; ++i) {
    const auto& r = study.runs[i];
    study.undecided1 += failed[i] & 1;
    study.undecided2 += failed[i] >> 1 & 1;
    study.violations1 += r.violation1;
    study.violations2 += r.violation2;
    agree1 += r.agree1();
    agree2 += r.agree2();
  }
  if (samples > 0) {
    study.agreement1 = static_cast<double>(agree1) / samples;
    study.agreement2 = static_cast<double>(agree2) / samples;
  }
  const int avoider_last_first = last_mover(GameKind::AEStrict, 1, 1, 0, n) == 0 ? 0 : 1;
  const int enforcer_last_first = 1 - avoider_last_first;
  study.ae_dd_avoider_last = ae_dd_pool_winner(n, 1, avoider_last_first) == 1;
  study.ae_2dd_enforcer_last = ae_dd_pool_winner(n, 2, enforcer_last_first) == 1;
  for (const auto& r : study.runs) {
    if (r.tau_dd != kNeverHit && !study.ae_dd_avoider_last) ++study.ae_violations;
    if (r.tau_2dd != kNeverHit && !study.ae_2dd_enforcer_last) ++study.ae_violations;
  }
  return study;
}

// ---------------------------------------------------------------------------
// Poisson limit

PoissonReport poisson_limit_check(const Graph& H, double c, int n, int samples, uint64_t master_seed,
                                  int jobs) {
  if (!is_strictly_balanced(H)) throw std::invalid_argument("poisson_limit_check: H must be strictly balanced");
  if (c < 0 || n < H.n() || samples < 1) throw std::invalid_argument("poisson_limit_check: bad parameters");
  PoissonReport rep;
  rep.c = c;
  rep.n = n;
  rep.samples = samples;
  rep.master_seed = master_seed;
  rep.exponent = threshold_exponent(H, DensityKind::M);
  rep.p = std::min(1.0, p_from_exponent(n, c, rep.exponent));
  const double aut = static_cast<double>(automorphism_count(H));
  rep.lambda = std::pow(c, H.m()) / aut;
  double falling = 1;
  for (int i = 0; i < H.n(); ++i) falling *= n - i;
  rep.lambda_n = falling * std::pow(rep.p, H.m()) / aut;
  rep.expected = std::exp(-rep.lambda);
  std::vector<char> free(samples, 0);
  parallel_for(samples, jobs, [&](int i) {
    free[i] = !contains_copy(sample_gnp(n, rep.p, stream_seed(master_seed, i)), H);
  });
  rep.estimate = static_cast<double>(std::count(free.begin(), free.end(), 1)) / samples;
  rep.std_error = std::sqrt(rep.estimate * (1 - rep.estimate) / samples);
  return rep;
}

// ---------------------------------------------------------------------------
// Threshold scan

std::vector<ThresholdScanRow> threshold_scan(const GameSpec& spec, const Rational& exponent,
                                             const std::vector<int>& n_list,
                                             const std::vector<double>& c_grid, int samples,
                                             uint64_t master_seed, int jobs) {
  std::vector<ThresholdScanRow> rows;
  uint64_t row_index = 0;
  for (int n : n_list) {
    for (double c : c_grid) {
      ThresholdScanRow row;
      row.n = n;
      row.c = c;
      row.exponent = exponent;
      row.p = std::min(1.0, p_from_exponent(n, c, exponent));
      row.samples = samples;
      const uint64_t row_seed = stream_seed(master_seed, row_index++);
      std::vector<int> outcome(samples, -1);
      std::vector<double> ms(samples, 0);
      std::vector<std::string> errors(samples);
      parallel_for(samples, jobs, [&](int i) {
        Graph G = sample_gnp(n, row.p, stream_seed(row_seed, i));
        auto t0 = std::chrono::steady_clock::now();
        try {
          outcome[i] = decide_winner_fast(spec, G).winner;
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
        ms[i] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      });
      int spoiler = 0;
      double total_ms = 0;
      std::string first_error;
      for (int i = 0; i < samples; ++i) {
        total_ms += ms[i];
        if (outcome[i] == 0) ++row.builder_wins;
        else if (outcome[i] == 1) ++spoiler;
        else {
          ++row.failures;
          if (first_error.empty()) first_error = "sample " + std::to_string(i) + ": " + errors[i];
        }
      }
      if (row.failures * 100 > samples)
        throw std::runtime_error("threshold_scan: " + std::to_string(row.failures) + " of " +
                                 std::to_string(samples) + " samples failed at n=" + std::to_string(n) +
                                 ", c=" + std::to_string(c) + " (" + first_error + ")");
      const int decided = samples - row.failures;
      if (decided > 0) {
        row.win_rate = static_cast<double>(row.builder_wins) / decided;
        row.spoiler_rate = static_cast<double>(spoiler) / decided;
      }
      row.mean_ms = samples > 0 ? total_ms / samples : 0;
      rows.push_back(row);
    }
  }
  return rows;
}

std::string threshold_csv(const std::vector<ThresholdScanRow>& rows) {
  std::ostringstream out;
  out << "n,c,p_exponent,c_value,samples,win_rate,mean_ms\n";
  for (const auto& r : rows)
    out << r.n << ',' << r.c << ',' << to_string(r.exponent) << ',' << r.p << ',' << r.samples << ','
        << r.win_rate << ',' << r.mean_ms << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Minimal trees

MinimalTreeResult minimal_tree_search(const Graph& T, int b, GameKind kind, int max_host) {
  if (!T.is_tree() || T.n() > 4) throw std::invalid_argument("minimal_tree_search: T must be a tree on <= 4 vertices");
  if (kind != GameKind::MB && kind != GameKind::CW)
    throw std::invalid_argument("minimal_tree_search supports mb and cw");
  if (max_host > 10) throw std::invalid_argument("minimal_tree_search: hosts are limited to 10 vertices");
  MinimalTreeResult res;
  res.trees_checked.assign(max_host + 1, 0);
  for (int s = 1; s <= max_host; ++s) {
    for (const Graph& host : free_trees(s)) {
      ++res.trees_checked[s];
      Game g = make_game({kind, 1, b, T, 0}, host);
      if (g.targets.empty()) continue;
      if (solve(g).winner == 0) res.hosts.push_back(host);
    }
    if (!res.hosts.empty()) {
      res.size = s;
      return res;
    }
  }
  throw std::runtime_error("minimal_tree_search: no host on at most " + std::to_string(max_host) +
                           " vertices");
}

}  // namespace vglab
