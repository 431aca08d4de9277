#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "vglab/density.hpp"
#include "vglab/graph.hpp"

namespace vglab {

// Edge slots of K_n in lexicographic order: (0,1), (0,2), ..., (n-2,n-1).
long long edge_slots(int n);
long long slot_of_edge(int n, int u, int v);
Edge edge_of_slot(int n, long long slot);

// p = c * n^(-x); x is usually threshold_exponent(H, kind).
double p_from_exponent(int n, double c, const Rational& x);

// G(n, p) by geometric skipping over the edge slots. Throws
// std::invalid_argument unless 0 <= p <= 1.
Graph sample_gnp(int n, double p, uint64_t seed);

// The random graph process: a uniformly random order of all edge slots.
struct ProcessRun {
  int n = 0;
  uint64_t seed = 0;
  std::vector<long long> order;  // order[t] = slot of the (t+1)-th edge
};

ProcessRun sample_process(int n, uint64_t seed);
// G_i: the first i edges. Throws std::out_of_range unless 0 <= i <= edge_slots(n).
Graph prefix_graph(const ProcessRun& run, long long i);

// Text form: "n seed" on the first line, then the slots separated by spaces.
std::string serialize_run(const ProcessRun& run);
ProcessRun parse_run(const std::string& text);

inline constexpr long long kNeverHit = std::numeric_limits<long long>::max();

struct HittingTimeResult {
  std::string property;
  long long tau = kNeverHit;  // kNeverHit when no prefix has the property
  bool hit() const { return tau != kNeverHit; }
};

using GraphPredicate = std::function<bool(const Graph&)>;

// min{i : G_i has the property}. Monotone properties are located by binary
// search, others by a linear scan from G_0.
HittingTimeResult hitting_time(const ProcessRun& run, const GraphPredicate& predicate,
                               bool monotone, const std::string& property = "");

}  // namespace vglab
