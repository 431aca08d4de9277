#include "vglab/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace vglab {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  build();
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
    if (u < 0 || v >= n)
      throw std::invalid_argument("graph: edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range for n=" + std::to_string(n));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw std::invalid_argument("graph: duplicate edge (" + std::to_string(dup->first) + "," +
                                std::to_string(dup->second) + ")");
  build();
}

void Graph::build() {
  words_ = (n_ + 63) / 64;
  adj_.assign(n_, {});
  rows_.assign(static_cast<size_t>(n_) * words_, 0);
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    rows_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
    rows_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

uint64_t Graph::neighbor_mask(int v) const {
  if (n_ > 64) throw std::logic_error("neighbor_mask requires n <= 64");
  return rows_[v];
}

Graph Graph::induced(const std::vector<int>& verts) const {
  std::vector<int> pos(n_, -1);
  for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (auto [u, v] : edges_)
    if (pos[u] >= 0 && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
  return Graph(static_cast<int>(verts.size()), std::move(es));
}

Graph Graph::edge_subgraph(const std::vector<Edge>& keep) const {
  for (auto [u, v] : keep)
    if (!has_edge(u, v)) throw std::invalid_argument("edge_subgraph: edge not present");
  return Graph(n_, keep);
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (auto [u, v] : edges_) es.emplace_back(perm[u], perm[v]);
  return Graph(n_, std::move(es));
}

Graph Graph::with_edge(int u, int v) const {
  auto es = edges_;
  es.emplace_back(u, v);
  return Graph(n_, std::move(es));
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<int> seen(n_, 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (size_t i = 0; i < comp.size(); ++i)
      for (int w : adj_[comp[i]])
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

bool Graph::is_forest() const {
  return m() == n_ - static_cast<int>(components().size());
}

bool Graph::is_tree() const { return n_ >= 1 && is_connected() && m() == n_ - 1; }

bool Graph::is_two_connected() const {
  if (n_ < 2 || !is_connected()) return false;
  if (n_ == 2) return m() == 1;
  std::vector<int> disc(n_, -1), low(n_, 0);
  int timer = 0;
  bool articulation = false;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int w : adj_[v]) {
      if (w == parent) continue;
      if (disc[w] >= 0) {
        low[v] = std::min(low[v], disc[w]);
      } else {
        ++children;
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (parent >= 0 && low[w] >= disc[v]) articulation = true;
      }
    }
    if (parent < 0 && children > 1) articulation = true;
  };
  dfs(0, -1);
  return !articulation;
}

std::vector<int> Graph::external_neighborhood(const std::vector<int>& U) const {
  std::vector<char> in(n_, 0), mark(n_, 0);
  for (int u : U) in[u] = 1;
  std::vector<int> out;
  for (int u : U)
    for (int w : adj_[u])
      if (!in[w] && !mark[w]) {
        mark[w] = 1;
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

Graph disjoint_union(const std::vector<Graph>& graphs) {
  int n = 0;
  std::vector<Edge> es;
  for (const auto& g : graphs) {
    for (auto [u, v] : g.edges()) es.emplace_back(u + n, v + n);
    n += g.n();
  }
  return Graph(n, std::move(es));
}

namespace {

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw std::invalid_argument("parse_graph: missing header line");
  auto read_pair = [](const std::string& l, size_t lineno) {
    std::istringstream ls(l);
    long long a, b;
    std::string rest;
    if (!(ls >> a >> b) || (ls >> rest))
      throw std::invalid_argument("parse_graph: malformed line " + std::to_string(lineno) + ": '" +
                                  l + "'");
    return std::pair<long long, long long>(a, b);
  };
  auto [n, m] = read_pair(lines[0], 1);
  if (n < 0 || m < 0) throw std::invalid_argument("parse_graph: negative header values");
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw std::invalid_argument("parse_graph: header declares " + std::to_string(m) +
                                " edges but found " + std::to_string(lines.size() - 1));
  std::vector<Edge> es;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto [u, v] = read_pair(lines[i], i + 1);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("parse_graph: vertex out of range on line " +
                                  std::to_string(i + 1));
    es.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph(static_cast<int>(n), std::move(es));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string canonical_form(const Graph& g) {
  const int n = g.n();
  if (n > 12) throw std::invalid_argument("canonical_form: graph too large (n > 12)");
  // Vertices are placed in nonincreasing degree order; within a degree class
  // every ordering is tried, keeping the lexicographically largest bit string.
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<int> slot_degree(deg);
  std::sort(slot_degree.rbegin(), slot_degree.rend());

  std::string best, cur;
  std::vector<int> order;
  std::vector<char> used(n, 0);
  bool have_best = false;
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      if (!have_best || cur > best) {
        best = cur;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || deg[v] != slot_degree[pos]) continue;
      size_t len = cur.size();
      for (int i = 0; i < pos; ++i) cur.push_back(g.has_edge(order[i], v) ? '1' : '0');
      // Prune when the prefix already loses to the best complete string.
      bool keep = !have_best || cur.compare(0, cur.size(), best, 0, cur.size()) >= 0;
      if (keep) {
        used[v] = 1;
        order.push_back(v);
        rec(pos + 1);
        order.pop_back();
        used[v] = 0;
      }
      cur.resize(len);
    }
  };
  rec(0);
  std::string header = std::to_string(n) + ":";
  return header + best;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  const int n = a.n();
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  if (n == 0) return true;
  // Order a's vertices so each (after the first in its component) has an
  // already-placed neighbor; this keeps the candidate sets small.
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  for (int root = 0; root < n; ++root) {
    if (placed[root]) continue;
    int start = root;
    for (int v = 0; v < n; ++v)
      if (!placed[v] && da[v] > da[start]) start = v;
    size_t head = order.size();
    order.push_back(start);
    placed[start] = 1;
    for (size_t i = head; i < order.size(); ++i)
      for (int w : a.neighbors(order[i]))
        if (!placed[w]) {
          placed[w] = 1;
          order.push_back(w);
        }
  }
  std::vector<int> map(n, -1), used(n, 0);
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == order.size()) return true;
    int v = order[i];
    for (int c = 0; c < n; ++c) {
      if (used[c] || db[c] != da[v]) continue;
      bool ok = true;
      for (size_t j = 0; j < i && ok; ++j) {
        int u = order[j];
        if (a.has_edge(u, v) != b.has_edge(map[u], c)) ok = false;
      }
      if (!ok) continue;
      map[v] = c;
      used[c] = 1;
      if (rec(i + 1)) return true;
      used[c] = 0;
      map[v] = -1;
    }
    return false;
  };
  return rec(0);
}

}  // namespace vglab
