#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "vglab/graph.hpp"

namespace vglab {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);  // "p/q", or "p" when q == 1

struct DensityWitness {
  Rational value;
  std::vector<int> vertices;  // induced subgraph realizing the value
};

struct DensityReport {
  Rational d;
  DensityWitness m;
  DensityWitness m1;
  std::optional<DensityWitness> m2;  // present when v >= 3
  bool strictly_balanced = false;
  bool strictly_1_balanced = false;
};

// Largest graph accepted by the subset enumerations below.
inline constexpr int kMaxDensityVertices = 24;

Rational density(const Graph& g);
// d_i(G) = (e - i + 1) / (v - i), requires v > i.
Rational i_density(const Graph& g, int i);
DensityWitness max_density(const Graph& g);
DensityWitness max_i_density(const Graph& g, int i);
bool is_strictly_balanced(const Graph& g);
bool is_strictly_i_balanced(const Graph& g, int i);
DensityReport density_report(const Graph& g);

enum class DensityKind { M, M1, M2 };
DensityKind parse_density_kind(const std::string& s);
// 1/m_kind(H): the magnitude of the exponent in p = n^{-1/m_kind(H)}.
Rational threshold_exponent(const Graph& H, DensityKind kind);

// (b k)^{2/(k-1)}, the lower bound on the clique-game constant.
double clique_ramsey_constant_bound(int b, int k);

}  // namespace vglab
