#include "vglab/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <stdexcept>

namespace vglab {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

int param(const CatalogId& id, size_t i, const char* fam) {
  require(id.params.size() > i, std::string(fam) + ": missing parameter");
  return id.params[i];
}

Graph complete(int k) {
  std::vector<Edge> es;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) es.emplace_back(u, v);
  return Graph(k, es);
}

Graph cycle(int k) {
  std::vector<Edge> es;
  for (int i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
  return Graph(k, es);
}

Graph path(int l) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < l; ++i) es.emplace_back(i, i + 1);
  return Graph(l, es);
}

Graph star(int d) {
  std::vector<Edge> es;
  for (int i = 1; i <= d; ++i) es.emplace_back(0, i);
  return Graph(d + 1, es);
}

Graph dary_tree(int d, int h) {
  // Level-order labeling: children of v are d*v+1 .. d*v+d.
  int n = 0, level = 1;
  for (int i = 0; i < h; ++i, level *= d) n += level;
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.emplace_back((v - 1) / d, v);
  return Graph(n, es);
}

Graph ddt(int t) {
  auto b = [](int i) { return 2 * i - 1; };
  auto c = [](int i) { return 2 * i; };
  auto a = [&](int i) { return i == 1 ? 0 : c(i - 1); };
  int x = 2 * t + 1, y = 2 * t + 2;
  std::vector<Edge> es;
  for (int i = 1; i <= t; ++i) {
    es.emplace_back(a(i), b(i));
    es.emplace_back(b(i), c(i));
    es.emplace_back(a(i), c(i));
  }
  es.emplace_back(x, a(1));
  es.emplace_back(x, c(1));
  es.emplace_back(y, c(t - 1));
  es.emplace_back(y, c(t));
  return Graph(2 * t + 3, es);
}

Graph k3_cycle(int t) {
  std::vector<Edge> es;
  int n = 2 * t;
  for (int i = 0; i < t; ++i) {
    int a = 2 * i, b = 2 * i + 1, next = (2 * i + 2) % n;
    es.emplace_back(a, b);
    es.emplace_back(b, next);
    es.emplace_back(a, next);
  }
  return Graph(n, es);
}

std::string upper(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return s;
}

std::vector<int> bfs_dist(const Graph& g, int s) {
  std::vector<int> d(g.n(), -1);
  std::queue<int> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v))
      if (d[w] < 0) {
        d[w] = d[v] + 1;
        q.push(w);
      }
  }
  return d;
}

}  // namespace

Graph make_catalog_graph(const CatalogId& id) {
  switch (id.family) {
    case Family::Complete: {
      int k = param(id, 0, "K_k");
      require(k >= 1, "K_k requires k >= 1");
      return complete(k);
    }
    case Family::Cycle: {
      int k = param(id, 0, "C_k");
      require(k >= 3, "C_k requires k >= 3");
      return cycle(k);
    }
    case Family::Path: {
      int l = param(id, 0, "P_l");
      require(l >= 1, "P_l requires l >= 1");
      return path(l);
    }
    case Family::Star: {
      int d = param(id, 0, "S_d");
      require(d >= 0, "S_d requires d >= 0");
      return star(d);
    }
    case Family::DaryTree: {
      int d = param(id, 0, "d-ary tree"), h = param(id, 1, "d-ary tree");
      require(d >= 1 && h >= 1, "d-ary tree requires d >= 1 and h >= 1");
      return dary_tree(d, h);
    }
    case Family::Diamond:
      return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    case Family::DD:
      return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                       {0, 4}, {0, 5}, {0, 6}, {4, 5}, {4, 6}});
    case Family::TTT:
      return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
    case Family::DDt: {
      int t = param(id, 0, "DD_t");
      require(t >= 2, "DD_t requires t >= 2");
      return ddt(t);
    }
    case Family::K3Cycle: {
      int t = param(id, 0, "K3-cycle");
      require(t >= 3, "K3-cycle requires t >= 3");
      return k3_cycle(t);
    }
    case Family::TripleDiamond: {
      enum { x1, x2, y1, y2, z1, z2, z3, z4, w1, w2 };
      return Graph(10, {{y1, x1}, {y1, z1}, {y1, z2}, {x1, z1}, {x1, z2},
                        {x1, x2}, {x1, w1}, {x1, w2}, {x2, w1}, {x2, w2},
                        {x2, y2}, {x2, z3}, {x2, z4}, {y2, z3}, {y2, z4}});
    }
    case Family::FeasibleA: {
      // Two C4-pairs glued at R: A,L,M,R,Z1,B,Y1,Y2,Z2; x1=L, x2=R.
      enum { A, L, M, R, Z1, B, Y1, Y2, Z2 };
      return Graph(9, {{A, L}, {L, M}, {M, R}, {A, R}, {L, B}, {B, R},
                       {Y1, R}, {Z2, R}, {Y2, Z1}, {Z1, R}, {Y1, Y2}, {Z2, Y2}});
    }
    case Family::FeasibleB:
      return Graph(7, {{0, 1}, {0, 3}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}});
    case Family::FeasibleC: {
      std::vector<Edge> es;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
          int v = 3 * r + c;
          if (c < 2) es.emplace_back(v, v + 1);
          if (r < 2) es.emplace_back(v, v + 3);
        }
      return Graph(9, es);
    }
  }
  throw std::invalid_argument("unknown catalog family");
}

CatalogId parse_catalog_id(const std::string& raw) {
  std::string s = upper(raw);
  auto num_after = [&](size_t pos) {
    std::string rest = s.substr(pos);
    if (!rest.empty() && rest[0] == '_') rest = rest.substr(1);
    require(!rest.empty() && std::all_of(rest.begin(), rest.end(), ::isdigit),
            "bad catalog name '" + raw + "'");
    return std::stoi(rest);
  };
  static const std::map<std::string, Family> fixed = {
      {"DIAMOND", Family::Diamond},        {"DD", Family::DD},
      {"TTT", Family::TTT},                {"TRIPLE_DIAMOND", Family::TripleDiamond},
      {"DDD", Family::TripleDiamond},      {"GAMMA_A", Family::FeasibleA},
      {"GAMMA_B", Family::FeasibleB},      {"GAMMA_C", Family::FeasibleC},
      {"FEASIBLE_A", Family::FeasibleA},   {"FEASIBLE_B", Family::FeasibleB},
      {"FEASIBLE_C", Family::FeasibleC},
  };
  if (auto it = fixed.find(s); it != fixed.end()) return {it->second, {}};
  if (s.rfind("K3CYCLE", 0) == 0) return {Family::K3Cycle, {num_after(7)}};
  if (s.rfind("DD_", 0) == 0) return {Family::DDt, {num_after(3)}};
  if (s.rfind("TREE_", 0) == 0) {
    auto sep = s.find('_', 5);
    require(sep != std::string::npos, "TREE needs TREE_<d>_<h>");
    int d = std::stoi(s.substr(5, sep - 5));
    return {Family::DaryTree, {d, num_after(sep + 1)}};
  }
  if (s.size() >= 2) {
    char f = s[0];
    if (f == 'K') return {Family::Complete, {num_after(1)}};
    if (f == 'C') return {Family::Cycle, {num_after(1)}};
    if (f == 'P') return {Family::Path, {num_after(1)}};
    if (f == 'S') return {Family::Star, {num_after(1)}};
  }
  throw std::invalid_argument("unknown catalog graph '" + raw + "'");
}

std::string catalog_name(const CatalogId& id) {
  auto p = [&](size_t i) { return std::to_string(id.params.at(i)); };
  switch (id.family) {
    case Family::Complete: return "K" + p(0);
    case Family::Cycle: return "C" + p(0);
    case Family::Path: return "P" + p(0);
    case Family::Star: return "S" + p(0);
    case Family::DaryTree: return "TREE_" + p(0) + "_" + p(1);
    case Family::Diamond: return "DIAMOND";
    case Family::DD: return "DD";
    case Family::TTT: return "TTT";
    case Family::DDt: return "DD_" + p(0);
    case Family::K3Cycle: return "K3CYCLE_" + p(0);
    case Family::TripleDiamond: return "TRIPLE_DIAMOND";
    case Family::FeasibleA: return "GAMMA_A";
    case Family::FeasibleB: return "GAMMA_B";
    case Family::FeasibleC: return "GAMMA_C";
  }
  return "?";
}

std::vector<Joint> default_joints(const Graph& H, int links) {
  require(H.n() >= 2, "H-chain requires v(H) >= 2");
  auto d = bfs_dist(H, 0);
  int out = 1;
  for (int v = 1; v < H.n(); ++v)
    if (d[v] > d[out]) out = v;
  return std::vector<Joint>(std::max(links, 0), Joint{out, 0});
}

namespace {

// Lays out t copies; copy i+1 enters at joints[i].second, glued to the image
// of joints[i].first in copy i. Returns vertex images per copy.
std::vector<std::vector<int>> layout_chain(const Graph& H, int t, const std::vector<Joint>& joints,
                                           int& total) {
  const int v = H.n();
  for (size_t i = 0; i < joints.size(); ++i) {
    auto [out, in] = joints[i];
    require(out >= 0 && out < v && in >= 0 && in < v, "joint vertex out of range");
  }
  for (int i = 1; i + 1 < t; ++i)
    require(joints[i - 1].second != joints[i].first,
            "inconsistent joints: a copy would share its entry and exit vertex");
  std::vector<std::vector<int>> img(t, std::vector<int>(v, -1));
  total = 0;
  for (int u = 0; u < v; ++u) img[0][u] = total++;
  for (int i = 1; i < t; ++i) {
    auto [out, in] = joints[i - 1];
    img[i][in] = img[i - 1][out];
    for (int u = 0; u < v; ++u)
      if (u != in) img[i][u] = total++;
  }
  return img;
}

}  // namespace

Graph h_chain(const Graph& H, int t, const std::vector<Joint>& joints_in) {
  require(t >= 1, "H-chain requires t >= 1");
  require(H.is_connected() && H.n() >= 2, "H-chain requires connected H with v(H) >= 2");
  auto joints = joints_in.empty() ? default_joints(H, t - 1) : joints_in;
  require(static_cast<int>(joints.size()) == t - 1, "H-chain needs t-1 joints");
  int total = 0;
  auto img = layout_chain(H, t, joints, total);
  std::vector<Edge> es;
  for (int i = 0; i < t; ++i)
    for (auto [a, b] : H.edges()) es.emplace_back(img[i][a], img[i][b]);
  return Graph(total, es);
}

Graph h_cycle(const Graph& H, int t, const std::vector<Joint>& joints_in) {
  require(t >= 3, "H-cycle requires t >= 3");
  require(H.is_connected() && H.n() >= 2, "H-cycle requires connected H with v(H) >= 2");
  auto joints = joints_in.empty() ? default_joints(H, t) : joints_in;
  require(static_cast<int>(joints.size()) == t, "H-cycle needs t joints");
  require(joints[t - 1].second != joints[0].first && joints[t - 2].second != joints[t - 1].first,
          "inconsistent joints: a copy would share its entry and exit vertex");
  int total = 0;
  std::vector<Joint> chain_joints(joints.begin(), joints.end() - 1);
  auto img = layout_chain(H, t, chain_joints, total);
  // Close the cycle: copy t's exit vertex becomes copy 1's entry vertex.
  int from = img[t - 1][joints[t - 1].first];
  int to = img[0][joints[t - 1].second];
  std::vector<int> relabel(total);
  for (int x = 0, next = 0; x < total; ++x) relabel[x] = (x == from) ? -1 : next++;
  int to_label = relabel[to];
  relabel[from] = to_label;
  std::vector<Edge> es;
  for (int i = 0; i < t; ++i)
    for (auto [a, b] : H.edges()) es.emplace_back(relabel[img[i][a]], relabel[img[i][b]]);
  return Graph(total - 1, es);
}

std::vector<std::vector<int>> natural_pairs(const CatalogId& id) {
  switch (id.family) {
    case Family::TTT: return {{1, 2}, {3, 4}};
    case Family::DD: return {{1, 4}, {2, 3}, {5, 6}};
    case Family::K3Cycle: {
      std::vector<std::vector<int>> out;
      for (int i = 0; i < id.params.at(0); ++i) out.push_back({2 * i, 2 * i + 1});
      return out;
    }
    case Family::FeasibleA: return {{1, 3}, {6, 7}, {4, 8}};
    case Family::FeasibleB: return {{0, 3}, {6, 5}};
    case Family::FeasibleC: return {{1, 4}, {3, 6}, {5, 8}};
    default: throw std::invalid_argument("no natural pairing for " + catalog_name(id));
  }
}

std::vector<std::vector<int>> ddt_lambda_x(int t) {
  require(t >= 2, "DD_t requires t >= 2");
  std::vector<std::vector<int>> out{{0, 2}};
  for (int i = 2; i <= t; ++i) out.push_back({2 * i - 1, 2 * i});
  return out;
}

std::vector<std::vector<int>> ddt_lambda_y(int t) {
  require(t >= 2, "DD_t requires t >= 2");
  auto a = [](int i) { return i == 1 ? 0 : 2 * (i - 1); };
  std::vector<std::vector<int>> out{{a(t), 2 * t}};
  for (int i = 1; i <= t - 1; ++i) out.push_back({a(i), 2 * i - 1});
  return out;
}

}  // namespace vglab
