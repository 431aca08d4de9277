#include "vglab/random_models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "vglab/rng.hpp"

namespace vglab {

long long edge_slots(int n) { return n < 2 ? 0 : static_cast<long long>(n) * (n - 1) / 2; }

long long slot_of_edge(int n, int u, int v) {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= n || u == v) throw std::out_of_range("slot_of_edge: not an edge of K_n");
  // Slots before row u: (n-1) + (n-2) + ... + (n-u).
  return static_cast<long long>(u) * (2LL * n - u - 1) / 2 + (v - u - 1);
}

Edge edge_of_slot(int n, long long slot) {
  if (slot < 0 || slot >= edge_slots(n)) throw std::out_of_range("edge_of_slot: slot out of range");
  int u = 0;
  long long row = n - 1;
  while (slot >= row) {
    slot -= row;
    --row;
    ++u;
  }
  return {u, u + 1 + static_cast<int>(slot)};
}

double p_from_exponent(int n, double c, const Rational& x) {
  return c * std::pow(static_cast<double>(n),
                      -static_cast<double>(x.numerator()) / static_cast<double>(x.denominator()));
}

Graph sample_gnp(int n, double p, uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_gnp: p must be in [0, 1]");
  if (n < 0) throw std::invalid_argument("sample_gnp: n must be non-negative");
  const long long slots = edge_slots(n);
  std::vector<Edge> edges;
  if (p == 1.0) {
    edges.reserve(slots);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  } else if (p > 0.0) {
    Rng rng(seed);
    std::geometric_distribution<long long> gap(p);
    int u = 0;
    long long row_start = 0, row_len = n - 1;
    for (long long s = gap(rng); s < slots; s += 1 + gap(rng)) {
      while (s >= row_start + row_len) {
        row_start += row_len;
        --row_len;
        ++u;
      }
      edges.emplace_back(u, u + 1 + static_cast<int>(s - row_start));
    }
  }
  return Graph(n, std::move(edges));
}

ProcessRun sample_process(int n, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("sample_process: n must be non-negative");
  ProcessRun run{n, seed, std::vector<long long>(edge_slots(n))};
  std::iota(run.order.begin(), run.order.end(), 0LL);
  Rng rng(seed);
  std::shuffle(run.order.begin(), run.order.end(), rng);
  return run;
}

Graph prefix_graph(const ProcessRun& run, long long i) {
  if (i < 0 || i > static_cast<long long>(run.order.size()))
    throw std::out_of_range("prefix_graph: index out of range");
  std::vector<Edge> edges;
  edges.reserve(i);
  for (long long t = 0; t < i; ++t) edges.push_back(edge_of_slot(run.n, run.order[t]));
  return Graph(run.n, std::move(edges));
}

std::string serialize_run(const ProcessRun& run) {
  std::ostringstream out;
  out << run.n << ' ' << run.seed << '\n';
  for (size_t t = 0; t < run.order.size(); ++t) out << (t ? " " : "") << run.order[t];
  out << '\n';
  return out.str();
}

ProcessRun parse_run(const std::string& text) {
  std::istringstream in(text);
  ProcessRun run;
  if (!(in >> run.n >> run.seed) || run.n < 0) throw std::invalid_argument("parse_run: bad header");
  const long long slots = edge_slots(run.n);
  std::vector<char> seen(slots, 0);
  long long s;
  while (in >> s) {
    if (s < 0 || s >= slots || seen[s]) throw std::invalid_argument("parse_run: bad or repeated slot");
    seen[s] = 1;
    run.order.push_back(s);
  }
  if (static_cast<long long>(run.order.size()) != slots)
    throw std::invalid_argument("parse_run: not a permutation of all edge slots");
  return run;
}

HittingTimeResult hitting_time(const ProcessRun& run, const GraphPredicate& predicate,
                               bool monotone, const std::string& property) {
  HittingTimeResult res{property, kNeverHit};
  const long long m = static_cast<long long>(run.order.size());
  if (monotone) {
    if (!predicate(prefix_graph(run, m))) return res;
    long long lo = 0, hi = m;  // predicate(hi) holds; answer in [lo, hi]
    while (lo < hi) {
      long long mid = lo + (hi - lo) / 2;
      if (predicate(prefix_graph(run, mid))) hi = mid;
      else lo = mid + 1;
    }
    res.tau = lo;
    return res;
  }
  std::vector<Edge> edges;
  for (long long i = 0; i <= m; ++i) {
    if (i > 0) edges.push_back(edge_of_slot(run.n, run.order[i - 1]));
    if (predicate(Graph(run.n, edges))) {
      res.tau = i;
      return res;
    }
  }
  return res;
}

}  // namespace vglab
