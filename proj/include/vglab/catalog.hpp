#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vglab/graph.hpp"

namespace vglab {

enum class Family {
  Complete,       // K_k
  Cycle,          // C_k
  Path,           // P_l, l vertices
  Star,           // S_d, d edges
  DaryTree,       // complete d-ary tree with h levels
  Diamond,        // K4 minus an edge
  DD,             // two diamonds sharing their center
  TTT,            // triangle chain of three triangles
  DDt,            // two diamonds joined by a triangle chain
  K3Cycle,        // cyclic chain of t triangles
  TripleDiamond,  // diamond chain of length 3
  FeasibleA,
  FeasibleB,
  FeasibleC,
};

struct CatalogId {
  Family family;
  std::vector<int> params;
};

// Canonical labeled construction. Throws std::invalid_argument on bad params.
//
// Vertex labels of the named structures:
//   Diamond        x=0 y=1 z=2 w=3 (zw missing)
//   DD             x=0 y1=1 z1=2 z2=3 y2=4 z3=5 z4=6
//   TTT            v1..v5 = 0..4
//   DD_t           a1=0, b_i=2i-1, c_i=2i (i=1..t), x=2t+1, y=2t+2
//   K3-cycle       a_i=2(i-1), b_i=2(i-1)+1, c_i=a_{i+1}, c_t=a_1
//   TripleDiamond  x1=0 x2=1 y1=2 y2=3 z1=4 z2=5 z3=6 z4=7 w1=8 w2=9
Graph make_catalog_graph(const CatalogId& id);

// Parses names such as K3, C5, P4, S2, TREE_2_3, DIAMOND, DD, TTT, DD_3,
// K3CYCLE_5, TRIPLE_DIAMOND, GAMMA_A. Case-insensitive.
CatalogId parse_catalog_id(const std::string& name);
std::string catalog_name(const CatalogId& id);

// Link i glues vertex `first` of copy i to vertex `second` of copy i+1.
using Joint = std::pair<int, int>;

// Default joints: enter each copy at vertex 0 and leave at the lowest-index
// vertex farthest from 0 (distance floor(k/2) on C_k).
std::vector<Joint> default_joints(const Graph& H, int links);

Graph h_chain(const Graph& H, int t, const std::vector<Joint>& joints = {});
Graph h_cycle(const Graph& H, int t, const std::vector<Joint>& joints = {});

// Natural pairs used by pairing strategies, in catalog labels.
std::vector<std::vector<int>> natural_pairs(const CatalogId& id);

// Member sets of the DD_t pairings: lambda_x when Client holds x, lambda_y
// when Client holds y.
std::vector<std::vector<int>> ddt_lambda_x(int t);
std::vector<std::vector<int>> ddt_lambda_y(int t);

}  // namespace vglab
