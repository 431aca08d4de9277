#include "vglab/density.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace vglab {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

void check_size(const Graph& g) {
  if (g.n() > kMaxDensityVertices)
    throw std::length_error("density: graph has " + std::to_string(g.n()) +
                            " vertices, limit is " + std::to_string(kMaxDensityVertices));
}

// Edge counts of every induced subgraph, indexed by vertex mask. Built
// incrementally from the lowest set bit.
std::vector<int> subset_edge_counts(const Graph& g) {
  const int n = g.n();
  std::vector<uint32_t> nb(n, 0);
  for (auto [u, v] : g.edges()) {
    nb[u] |= 1u << v;
    nb[v] |= 1u << u;
  }
  std::vector<int> cnt(size_t{1} << n, 0);
  for (uint32_t s = 1; s < (1u << n); ++s) {
    int low = std::countr_zero(s);
    uint32_t rest = s & (s - 1);
    cnt[s] = cnt[rest] + std::popcount(nb[low] & rest);
  }
  return cnt;
}

std::vector<int> mask_to_vertices(uint32_t s) {
  std::vector<int> out;
  for (int v = 0; s; ++v, s >>= 1)
    if (s & 1) out.push_back(v);
  return out;
}

// d_0 = e/v; d_i = (e - i + 1)/(v - i) for i >= 1.
Rational subset_density(int e, int v, int i) { return i == 0 ? Rational(e, v) : Rational(e - i + 1, v - i); }

// Max of d_i over subsets with at least min_size vertices;
// ties keep the smallest mask.
DensityWitness best_over_subsets(const std::vector<int>& cnt, int n, int i, int min_size) {
  bool have = false;
  Rational best(0);
  uint32_t arg = 0;
  for (uint32_t s = 1; s < (1u << n); ++s) {
    int v = std::popcount(s);
    if (v < min_size) continue;
    Rational val = subset_density(cnt[s], v, i);
    if (!have || val > best) {
      best = val;
      arg = s;
      have = true;
    }
  }
  return {best, mask_to_vertices(arg)};
}

bool strictly_above_proper(const std::vector<int>& cnt, int n, int i) {
  uint32_t full = (1u << n) - 1;
  Rational whole = subset_density(cnt[full], n, i);
  for (uint32_t s = 1; s < full; ++s) {
    int v = std::popcount(s);
    if (v < i + 1) continue;
    if (subset_density(cnt[s], v, i) >= whole) return false;
  }
  return true;
}

}  // namespace

Rational density(const Graph& g) {
  if (g.n() < 1) throw std::invalid_argument("density: empty graph");
  return Rational(g.m(), g.n());
}

Rational i_density(const Graph& g, int i) {
  if (g.n() <= i) throw std::invalid_argument("i-density needs more than i vertices");
  return subset_density(g.m(), g.n(), i);
}

DensityWitness max_density(const Graph& g) {
  if (g.n() < 1) throw std::invalid_argument("max_density: empty graph");
  check_size(g);
  auto cnt = subset_edge_counts(g);
  return best_over_subsets(cnt, g.n(), 0, 1);
}

DensityWitness max_i_density(const Graph& g, int i) {
  if (i < 1 || i > 2) throw std::invalid_argument("max_i_density: i must be 1 or 2");
  if (g.n() < i + 1) throw std::invalid_argument("max_i_density: too few vertices");
  check_size(g);
  auto cnt = subset_edge_counts(g);
  return best_over_subsets(cnt, g.n(), i, i + 1);
}

bool is_strictly_balanced(const Graph& g) {
  if (g.n() < 1) throw std::invalid_argument("is_strictly_balanced: empty graph");
  check_size(g);
  auto cnt = subset_edge_counts(g);
  return strictly_above_proper(cnt, g.n(), 0);
}

bool is_strictly_i_balanced(const Graph& g, int i) {
  if (i < 0 || i > 2) throw std::invalid_argument("is_strictly_i_balanced: i must be 0, 1 or 2");
  if (g.n() < i + 1) throw std::invalid_argument("is_strictly_i_balanced: too few vertices");
  check_size(g);
  auto cnt = subset_edge_counts(g);
  return strictly_above_proper(cnt, g.n(), i);
}

DensityReport density_report(const Graph& g) {
  if (g.n() < 2) throw std::invalid_argument("density_report: needs at least 2 vertices");
  check_size(g);
  auto cnt = subset_edge_counts(g);
  DensityReport r;
  r.d = density(g);
  r.m = best_over_subsets(cnt, g.n(), 0, 1);
  r.m1 = best_over_subsets(cnt, g.n(), 1, 2);
  if (g.n() >= 3) r.m2 = best_over_subsets(cnt, g.n(), 2, 3);
  r.strictly_balanced = strictly_above_proper(cnt, g.n(), 0);
  r.strictly_1_balanced = strictly_above_proper(cnt, g.n(), 1);
  return r;
}

DensityKind parse_density_kind(const std::string& s) {
  if (s == "m") return DensityKind::M;
  if (s == "m1") return DensityKind::M1;
  if (s == "m2") return DensityKind::M2;
  throw std::invalid_argument("unknown density kind '" + s + "' (expected m, m1 or m2)");
}

Rational threshold_exponent(const Graph& H, DensityKind kind) {
  Rational m = kind == DensityKind::M    ? max_density(H).value
               : kind == DensityKind::M1 ? max_i_density(H, 1).value
                                         : max_i_density(H, 2).value;
  if (m <= 0) throw std::invalid_argument("threshold_exponent: density is not positive");
  return Rational(1) / m;
}

double clique_ramsey_constant_bound(int b, int k) {
  if (b < 1 || k < 2) throw std::invalid_argument("clique_ramsey_constant_bound: need b >= 1, k >= 2");
  return std::pow(static_cast<double>(b) * k, 2.0 / (k - 1));
}

}  // namespace vglab
