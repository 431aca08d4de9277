#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vglab/density.hpp"
#include "vglab/engine.hpp"
#include "vglab/graph.hpp"
#include "vglab/strategies.hpp"

namespace vglab {

enum class DecisionMethod { EmptyCore, Pairing, ComponentSolve, FullSolve };
std::string to_string(DecisionMethod m);

struct ComponentEvidence {
  std::vector<int> vertices;  // original labels of G
  std::string tag;            // recognized structure
  bool by_pairing = false;    // spoiler win certified by a blocking pairing
  Pairing pairing;            // original labels, when by_pairing
  int winner_first = -1;      // MB: builder moving first; CW: the winner
  int winner_second = -1;     // MB only, -1 when not needed
};

struct DecisionCertificate {
  DecisionMethod method = DecisionMethod::FullSolve;
  int winner = 1;  // side
  Role winner_role = Role::Breaker;
  int deletion_steps = 0;
  std::vector<int> core_vertices;
  std::vector<ComponentEvidence> components;
  uint64_t nodes = 0;
};

// Winner of an MB or CW game with a = 1. The spoiler wins on G iff it wins
// on the (H,b)-core, so the core is decided component by component: blocking
// natural pairings first, exact solves otherwise. Falls back to solving G
// when a component exceeds the solver limits; throws std::length_error when
// G does too.
DecisionCertificate decide_winner_fast(const GameSpec& spec, const Graph& G,
                                       const SolveLimits& limits = {});

// Re-derives the certificate's claims (core, pairings, component outcomes)
// and returns the winner they imply; throws std::logic_error if a claim fails.
int replay_certificate(const GameSpec& spec, const Graph& G, const DecisionCertificate& cert,
                       const SolveLimits& limits = {});

// Hitting times of one random graph process, n vertices. -1 marks a time
// that could not be determined (the decision pipeline gave up).
struct HittingRun {
  int run_id = 0;
  uint64_t seed = 0;
  long long tau_dd = -1;
  long long tau_2dd = -1;
  long long tau_m1 = -1;  // Maker-first (1:1) triangle-game win
  long long tau_m2 = -1;  // Maker-second win
  bool violation1 = false;  // DD present but Maker-first loses
  bool violation2 = false;  // 2 disjoint DDs present but Maker-second loses
  bool agree1() const { return tau_m1 >= 0 && tau_m1 == tau_dd; }
  bool agree2() const { return tau_m2 >= 0 && tau_m2 == tau_2dd; }
};

struct HittingStudy {
  int n = 0;
  uint64_t master_seed = 0;
  std::vector<HittingRun> runs;
  int violations1 = 0;
  int violations2 = 0;
  int undecided1 = 0;  // runs whose tau_m1 the pipeline could not settle
  int undecided2 = 0;
  double agreement1 = 0;  // over all runs; undecided runs count as disagreeing
  double agreement2 = 0;
  // Strict (1:1) triangle game: Enforcer wins on DD plus n-7 further
  // vertices when Avoider moves last, and on 2 disjoint DDs plus n-14
  // further vertices when Enforcer moves last. Exact solves; any graph
  // containing the structure inherits the win, so each run's DD (2DD)
  // hitting time bounds the Enforcer-win hitting time from above.
  bool ae_dd_avoider_last = false;
  bool ae_2dd_enforcer_last = false;
  int ae_violations = 0;
};

// Requires 14 <= n <= 40.
HittingStudy hitting_time_study(int n, int samples, uint64_t master_seed, int jobs = 1);

// Exact winner of the strict (1:1) triangle game on `copies` disjoint DDs
// plus isolated vertices up to n, with `first` moving first.
int ae_dd_pool_winner(int n, int copies, int first);

struct PoissonReport {
  double c = 0;
  int n = 0;
  int samples = 0;
  uint64_t master_seed = 0;
  Rational exponent;     // p = c n^(-exponent), exponent = 1/m(H)
  double p = 0;
  double lambda = 0;     // c^e(H) / |Aut(H)|
  double lambda_n = 0;   // (n)_v p^e / |Aut(H)|, the finite-n mean
  double expected = 0;   // e^(-lambda)
  double estimate = 0;   // fraction of H-free samples
  double std_error = 0;
};

PoissonReport poisson_limit_check(const Graph& H, double c, int n, int samples,
                                  uint64_t master_seed, int jobs = 1);

struct ThresholdScanRow {
  int n = 0;
  double c = 0;
  Rational exponent;
  double p = 0;
  int samples = 0;
  int builder_wins = 0;
  int failures = 0;
  double win_rate = 0;      // builder_wins / decided samples
  double spoiler_rate = 0;  // spoiler wins / decided samples
  double mean_ms = 0;
};

// Samples G(n, c n^(-exponent)) and decides each with decide_winner_fast.
// Throws std::runtime_error when more than 1% of a row's samples fail.
std::vector<ThresholdScanRow> threshold_scan(const GameSpec& spec, const Rational& exponent,
                                             const std::vector<int>& n_list,
                                             const std::vector<double>& c_grid, int samples,
                                             uint64_t master_seed, int jobs = 1);
std::string threshold_csv(const std::vector<ThresholdScanRow>& rows);

struct MinimalTreeResult {
  int size = 0;
  std::vector<Graph> hosts;          // all minimal hosts, one per isomorphism class
  std::vector<int> trees_checked;    // trees_checked[s] = trees on s vertices tried
};

// Smallest trees on which the builder (Maker moving first, or Client) wins
// the (1:b) T-game. Requires v(T) <= 4; throws std::runtime_error when no
// host on at most `max_host` (<= 10) vertices works.
MinimalTreeResult minimal_tree_search(const Graph& T, int b, GameKind kind, int max_host = 10);

}  // namespace vglab
