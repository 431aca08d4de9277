#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vglab/box_games.hpp"
#include "vglab/catalog.hpp"
#include "vglab/core_reduction.hpp"
#include "vglab/density.hpp"
#include "vglab/engine.hpp"
#include "vglab/experiments.hpp"
#include "vglab/graph.hpp"
#include "vglab/random_models.hpp"
#include "vglab/strategies.hpp"
#include "vglab/subgraph.hpp"
#include "vglab/tree_strategies.hpp"

using namespace vglab;
using Json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphInput {
  std::string catalog;
  std::string path;
};

struct GameFlags {
  std::string game = "mb";
  int a = 1;
  int b = 1;
  std::string target = "K3";
  std::string first = "0";
};

struct Common {
  std::string out;
  std::string format;
  bool pretty = false;
  int jobs = 1;
  std::optional<uint64_t> seed_flag;
};

void add_graph_input(CLI::App* sub, GraphInput& in) {
  auto* c = sub->add_option("--catalog", in.catalog, "catalog graph, e.g. DD, K3CYCLE_5, TREE_2_3");
  auto* g = sub->add_option("--graph", in.path, "edge-list file ('-' for stdin)");
  c->excludes(g);
}

void add_game_flags(CLI::App* sub, GameFlags& f) {
  sub->add_option("--game", f.game, "mb, ae_strict, ae_monotone, wc, cw")->capture_default_str();
  sub->add_option("--a", f.a, "bias of Maker / Avoider / Client")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--b", f.b, "bias of Breaker / Enforcer / Waiter")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--target", f.target, "target graph H (catalog name)")->capture_default_str();
  sub->add_option("--first", f.first, "first mover: a role name or side 0/1")->capture_default_str();
}

void add_output(CLI::App* sub, Common& c, bool randomized) {
  sub->add_option("--out", c.out, "write output to this file instead of stdout");
  sub->add_option("--format", c.format, "json, csv or dot (where supported)");
  sub->add_flag("--pretty", c.pretty, "human-readable output");
  if (randomized) {
    sub->add_option("--seed", c.seed_flag, "master seed (default: $VGLAB_SEED, else 0)");
    sub->add_option("--jobs", c.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  }
}

uint64_t effective_seed(const Common& c) {
  if (c.seed_flag) return *c.seed_flag;
  if (const char* env = std::getenv("VGLAB_SEED")) {
    try {
      size_t pos = 0;
      uint64_t v = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("VGLAB_SEED is not an unsigned integer: '" + std::string(env) + "'");
  }
  return 0;
}

Graph load_graph(const GraphInput& in, bool required = true) {
  if (!in.catalog.empty()) return make_catalog_graph(parse_catalog_id(in.catalog));
  if (!in.path.empty()) {
    std::stringstream buf;
    if (in.path == "-") {
      buf << std::cin.rdbuf();
    } else {
      std::ifstream f(in.path);
      if (!f) throw std::runtime_error("cannot open graph file '" + in.path + "'");
      buf << f.rdbuf();
    }
    return parse_graph(buf.str());
  }
  if (required) throw UsageError("one of --catalog or --graph is required");
  return Graph();
}

Graph target_graph(const std::string& name) {
  try {
    return make_catalog_graph(parse_catalog_id(name));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--target: ") + e.what());
  }
}

GameKind game_kind(const std::string& s) {
  try {
    return parse_game_kind(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--game: ") + e.what());
  }
}

int first_side(GameKind kind, const std::string& s) {
  if (s == "0" || s == "1") return s[0] - '0';
  for (Role r : {Role::Maker, Role::Breaker, Role::Avoider, Role::Enforcer, Role::Waiter, Role::Client})
    if (to_string(r) == s) {
      try {
        return side_of(kind, r);
      } catch (const std::exception&) {
        throw UsageError("--first: " + s + " does not play " + to_string(kind));
      }
    }
  throw UsageError("--first: expected a role name or 0/1, got '" + s + "'");
}

GameSpec game_spec(const GameFlags& f) {
  GameSpec spec;
  spec.kind = game_kind(f.game);
  spec.a = f.a;
  spec.b = f.b;
  spec.H = target_graph(f.target);
  spec.first = first_side(spec.kind, f.first);
  return spec;
}

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.n()}, {"m", g.m()}, {"edges", edges}};
}

Json witness_json(const DensityWitness& w) {
  return Json{{"value", to_string(w.value)}, {"vertices", w.vertices}};
}

std::string moves_text(const std::vector<MoveRecord>& t) {
  std::string s;
  for (const auto& r : t) {
    if (!s.empty()) s += ' ';
    s += std::to_string(r.side) + ":[";
    auto vs = mask_vertices(r.move);
    for (size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
    s += ']';
  }
  return s;
}

class Output {
 public:
  explicit Output(const Common& c) : c_(c) {}
  void json(const Json& j) { text(c_.pretty ? j.dump(2) + "\n" : j.dump() + "\n"); }
  void text(const std::string& s) {
    if (c_.out.empty()) {
      std::cout << s;
      return;
    }
    std::ofstream f(c_.out);
    if (!f) throw std::runtime_error("cannot write '" + c_.out + "'");
    f << s;
  }

 private:
  const Common& c_;
};

std::unique_ptr<Strategy> named_strategy(const std::string& name, const Game& game, const GameSpec& spec,
                                         const Graph& G) {
  if (name == "random") return std::make_unique<RandomStrategy>();
  if (name == "optimal") return std::make_unique<OptimalStrategy>(game);
  if (name == "pairing") {
    ComponentTag tag = recognize_component(G);
    CatalogId id{Family::TTT, {}};
    switch (tag.kind) {
      case ComponentKind::TTT: break;
      case ComponentKind::DD: id = {Family::DD, {}}; break;
      case ComponentKind::K3Cycle: id = {Family::K3Cycle, {tag.t}}; break;
      case ComponentKind::FeasibleA: id = {Family::FeasibleA, {}}; break;
      case ComponentKind::FeasibleB: id = {Family::FeasibleB, {}}; break;
      case ComponentKind::FeasibleC: id = {Family::FeasibleC, {}}; break;
      default: throw std::runtime_error("pairing: board has no natural pairing");
    }
    Pairing p;
    for (const auto& m : natural_pairs(id)) {
      std::vector<int> mm;
      for (int x : m) mm.push_back(tag.labeling[x]);
      p.members.push_back(mm);
    }
    return spoiler_pairing_strategy(p, spec.kind);
  }
  if (name == "maker_dd_first") return maker_dd_strategy(G, PlayOrder::First);
  if (name == "maker_dd_second") return maker_dd_strategy(G, PlayOrder::Second);
  if (name == "waiter_ddt") return waiter_ddt_strategy(G, recognize_component(G).t);
  if (name == "enforcer_dd") return enforcer_dd_strategy(G, last_mover(game) == 0);
  if (name == "client_triple_diamond") return client_triple_diamond_strategy(G);
  throw UsageError("unknown strategy '" + name +
                   "' (random, optimal, pairing, maker_dd_first, maker_dd_second, waiter_ddt, "
                   "enforcer_dd, client_triple_diamond)");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

Rational parse_rational(const std::string& s, const std::string& flag) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw UsageError(flag + ": expected a rational such as 7/10, got '" + s + "'");
  }
}

std::string fmt(double x) {
  std::ostringstream o;
  o << std::setprecision(6) << x;
  return o.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vglab: vertex H-games on graphs and random graphs"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common common;
  GraphInput input;
  GameFlags gf;

  auto* analyze = app.add_subcommand("analyze", "densities and balancedness of a graph");
  add_graph_input(analyze, input);
  add_output(analyze, common, false);

  std::string catalog_name_arg;
  auto* catalog = app.add_subcommand("catalog", "print a catalog graph");
  catalog->add_option("name", catalog_name_arg, "catalog name")->required();
  add_output(catalog, common, false);

  std::string copies_of;
  auto* recognize = app.add_subcommand("recognize", "classify the connected components of a graph");
  add_graph_input(recognize, input);
  recognize->add_option("--target", copies_of, "also list the vertex sets of all copies of this graph");
  add_output(recognize, common, false);

  bool fast = false;
  auto* solve_cmd = app.add_subcommand("solve", "exact winner of a vertex H-game");
  add_graph_input(solve_cmd, input);
  add_game_flags(solve_cmd, gf);
  solve_cmd->add_flag("--fast", fast, "use the core/pairing/component pipeline (mb, cw)");
  add_output(solve_cmd, common, false);

  std::string strat_a = "optimal", strat_b = "optimal";
  auto* match = app.add_subcommand("match", "play two named strategies against each other");
  add_graph_input(match, input);
  add_game_flags(match, gf);
  match->add_option("--strategy-a", strat_a, "strategy for side 0 (Maker/Avoider/Client)")->capture_default_str();
  match->add_option("--strategy-b", strat_b, "strategy for side 1 (Breaker/Enforcer/Waiter)")->capture_default_str();
  add_output(match, common, true);

  auto* core = app.add_subcommand("core", "(H,b) deletion algorithm and core");
  add_graph_input(core, input);
  core->add_option("--target", gf.target, "target graph H")->capture_default_str();
  core->add_option("--b", gf.b, "bias b")->capture_default_str()->check(CLI::PositiveNumber);
  std::string core_order = "deterministic";
  core->add_option("--order", core_order, "deletion order: deterministic or random (seeded)")->capture_default_str();
  add_output(core, common, true);

  BoxGameSpec box_spec;
  std::string box_kind = "wc", box_first = "0";
  int box_n_max = 0;
  bool box_waiter = false;
  auto* box = app.add_subcommand("box", "box games: exact winner, prediction, BoxWaiter check");
  box->add_option("--kind", box_kind, "wc, ae_strict, ae_monotone")->capture_default_str();
  box->add_option("--n", box_spec.n, "number of boxes")->capture_default_str()->check(CLI::PositiveNumber);
  box->add_option("--k", box_spec.k, "box size")->capture_default_str()->check(CLI::PositiveNumber);
  box->add_option("--a", box_spec.a, "bias a")->capture_default_str()->check(CLI::PositiveNumber);
  box->add_option("--b", box_spec.b, "bias b")->capture_default_str()->check(CLI::PositiveNumber);
  box->add_option("--first", box_first, "first mover side 0/1 (AE kinds)")->capture_default_str();
  box->add_option("--n-max", box_n_max, "tabulate n = 1..n-max instead of a single n");
  box->add_flag("--boxwaiter", box_waiter, "check the recursive BoxWaiter on (a+b)^k boxes");
  add_output(box, common, false);

  int n = 30;
  double p = -1, c = 1;
  std::string exponent;
  auto* sample = app.add_subcommand("sample", "sample G(n,p)");
  sample->add_option("--n", n, "vertices")->capture_default_str();
  sample->add_option("--p", p, "edge probability");
  sample->add_option("--c", c, "p = c n^(-x) when --p is absent")->capture_default_str();
  sample->add_option("--exponent", exponent, "x in p = c n^(-x), e.g. 7/10");
  sample->add_option("--target", gf.target, "use x = 1/m_1(target) when --exponent is absent");
  add_output(sample, common, true);

  long long prefix = -1;
  auto* process = app.add_subcommand("process", "random graph process");
  process->add_option("--n", n, "vertices")->capture_default_str();
  process->add_option("--prefix", prefix, "print G_i instead of the edge order");
  add_output(process, common, true);

  int samples = 100;
  auto* hitting = app.add_subcommand("hitting", "hitting-time study for the (1:1) triangle games");
  hitting->add_option("--n", n, "vertices")->capture_default_str();
  hitting->add_option("--samples", samples, "runs")->capture_default_str();
  add_output(hitting, common, true);

  std::string n_list = "30", c_list = "0.2,0.5";
  auto* threshold = app.add_subcommand("threshold", "builder win frequency across p = c n^(-x)");
  add_game_flags(threshold, gf);
  threshold->add_option("--n", n_list, "comma-separated n values")->capture_default_str();
  threshold->add_option("--c", c_list, "comma-separated c values")->capture_default_str();
  threshold->add_option("--exponent", exponent, "x (default 1/m_1(target))");
  threshold->add_option("--samples", samples, "samples per row")->capture_default_str();
  add_output(threshold, common, true);

  auto* poisson = app.add_subcommand("poisson", "P[G(n, c n^(-1/m(H))) is H-free] vs e^(-lambda)");
  poisson->add_option("--target", gf.target, "strictly balanced H")->capture_default_str();
  poisson->add_option("--n", n, "vertices")->capture_default_str();
  poisson->add_option("--c", c, "constant c")->capture_default_str();
  poisson->add_option("--samples", samples, "samples")->capture_default_str();
  add_output(poisson, common, true);

  int max_host = 10;
  auto* mintree = app.add_subcommand("mintree", "smallest trees on which the builder wins the T-game");
  mintree->add_option("--target", gf.target, "tree T (at most 4 vertices)")->capture_default_str();
  mintree->add_option("--b", gf.b, "bias b")->capture_default_str()->check(CLI::PositiveNumber);
  mintree->add_option("--game", gf.game, "mb or cw")->capture_default_str();
  mintree->add_option("--max-host", max_host, "largest host size tried (<= 10)")->capture_default_str();
  add_output(mintree, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Output out(common);
  try {
    if (*analyze) {
      Graph g = load_graph(input);
      DensityReport r = density_report(g);
      Json j{{"n", g.n()}, {"e", g.m()}, {"d", to_string(r.d)}, {"m", to_string(r.m.value)},
             {"m1", to_string(r.m1.value)}};
      if (r.m2) j["m2"] = to_string(r.m2->value);
      j["strictly_balanced"] = r.strictly_balanced;
      j["strictly_1_balanced"] = r.strictly_1_balanced;
      if (common.pretty) {
        j["m_witness"] = witness_json(r.m);
        j["m1_witness"] = witness_json(r.m1);
      }
      out.json(j);
    } else if (*catalog) {
      CatalogId id = parse_catalog_id(catalog_name_arg);
      Graph g = make_catalog_graph(id);
      if (common.format == "dot") out.text(to_dot(g, catalog_name(id)));
      else if (common.format == "edges") out.text(serialize_graph(g));
      else if (common.format.empty() || common.format == "json") {
        Json j{{"name", catalog_name(id)}};
        j.update(graph_json(g));
        out.json(j);
      } else throw UsageError("--format: catalog supports json, edges, dot");
    } else if (*recognize) {
      Graph g = load_graph(input);
      Json comps = Json::array();
      for (const auto& comp : g.components()) {
        ComponentTag tag = recognize_component(g.induced(comp));
        comps.push_back({{"vertices", comp}, {"kind", to_string(tag)}});
      }
      Json j{{"components", comps}};
      if (!copies_of.empty()) j["copies"] = copy_vertex_sets(g, target_graph(copies_of));
      out.json(j);
    } else if (*solve_cmd) {
      Graph g = load_graph(input);
      GameSpec spec = game_spec(gf);
      Json j{{"game", to_string(spec.kind)}, {"a", spec.a}, {"b", spec.b}, {"target", gf.target},
             {"first", spec.first}};
      if (fast) {
        DecisionCertificate cert = decide_winner_fast(spec, g);
        j["winner"] = to_string(cert.winner_role);
        j["method"] = to_string(cert.method);
        j["core_vertices"] = cert.core_vertices;
        Json comps = Json::array();
        for (const auto& ev : cert.components) {
          Json cj{{"vertices", ev.vertices}, {"tag", ev.tag}, {"winner_first", ev.winner_first}};
          if (ev.winner_second >= 0) cj["winner_second"] = ev.winner_second;
          if (ev.by_pairing) cj["pairing"] = ev.pairing.members;
          comps.push_back(cj);
        }
        j["components"] = comps;
      } else {
        Outcome o = solve(spec, g);
        j["winner"] = to_string(o.winner_role(spec.kind));
        j["nodes"] = o.nodes;
      }
      out.json(j);
    } else if (*match) {
      Graph g = load_graph(input);
      GameSpec spec = game_spec(gf);
      Game game = make_game(spec, g);
      uint64_t seed = effective_seed(common);
      auto sa = named_strategy(strat_a, game, spec, g);
      auto sb = named_strategy(strat_b, game, spec, g);
      MatchResult r = play_match(game, *sa, *sb, seed);
      Json j{{"seed", seed}, {"game", to_string(spec.kind)}, {"strategy_a", strat_a}, {"strategy_b", strat_b},
             {"winner", to_string(role_of(spec.kind, r.winner))}, {"transcript", moves_text(r.transcript)}};
      if (r.error) j["error"] = *r.error;
      out.json(j);
    } else if (*core) {
      Graph g = load_graph(input);
      Graph H = target_graph(gf.target);
      uint64_t seed = effective_seed(common);
      if (core_order != "deterministic" && core_order != "random")
        throw UsageError("--order: expected deterministic or random, got '" + core_order + "'");
      DeletionTrace t = compute_core(g, H, gf.b,
                                     core_order == "random" ? OrderPolicy::SeededRandom : OrderPolicy::Deterministic,
                                     seed);
      Json steps = Json::array();
      for (const auto& s : t.steps) {
        Json sj{{"kind", to_string(s.kind)}};
        if (s.kind == StepKind::BadEdge) sj["edge"] = {s.edge.first, s.edge.second};
        else sj["vertices"] = s.vertices;
        steps.push_back(sj);
      }
      out.json(Json{{"seed", seed}, {"order", core_order}, {"target", gf.target}, {"b", gf.b},
                    {"U", t.U}, {"W", t.W}, {"core_vertices", t.core_vertices},
                    {"core_edges", graph_json(t.core)["edges"]}, {"steps", steps}});
    } else if (*box) {
      box_spec.kind = parse_box_kind(box_kind);
      if (box_first != "0" && box_first != "1") throw UsageError("--first: expected 0 or 1");
      box_spec.first = box_first[0] - '0';
      auto row = [&](const BoxGameSpec& s) {
        Json j{{"n", s.n}, {"k", s.k}, {"winner", to_string(box_winner_role(s, box_solve(s)))}};
        if (s.kind == BoxKind::AEBoxStrict)
          j["predicted_large_n"] = to_string(aebox_predicted_winner(s.a, s.b, s.k));
        return j;
      };
      Json j{{"kind", to_string(box_spec.kind)}, {"a", box_spec.a}, {"b", box_spec.b}, {"k", box_spec.k},
             {"first", box_spec.first}};
      if (box_spec.kind == BoxKind::AEBoxStrict) j["gcd_condition"] = aebox_gcd_condition(box_spec.a, box_spec.b, box_spec.k);
      if (box_waiter) {
        if (box_spec.kind != BoxKind::WCBox) throw UsageError("--boxwaiter needs --kind wc");
        BoxGameSpec s = box_spec;
        s.n = static_cast<int>(boxwaiter_boxes_needed(s.a, s.b, s.k));
        Game g = box_game(s);
        auto st = boxwaiter_strategy(s);
        CheckResult r = exhaustive_strategy_check(g, *st, 1, CheckOptions{64, 0});
        j["n"] = s.n;
        j["boxwaiter_wins"] = r.wins;
        if (!r.wins) j["counterexample"] = moves_text(r.counterexample);
      } else if (box_n_max > 0) {
        Json rows = Json::array();
        for (int i = 1; i <= box_n_max; ++i) {
          BoxGameSpec s = box_spec;
          s.n = i;
          rows.push_back(row(s));
        }
        j["rows"] = rows;
      } else {
        j.update(row(box_spec));
      }
      out.json(j);
    } else if (*sample) {
      uint64_t seed = effective_seed(common);
      double prob = p;
      std::string x_text;
      if (prob < 0) {
        Rational x = !exponent.empty() ? parse_rational(exponent, "--exponent")
                                       : threshold_exponent(target_graph(gf.target), DensityKind::M1);
        x_text = to_string(x);
        prob = std::min(1.0, p_from_exponent(n, c, x));
      }
      Graph g = sample_gnp(n, prob, seed);
      if (common.format == "dot") out.text("// seed=" + std::to_string(seed) + "\n" + to_dot(g));
      else if (common.format == "edges") out.text("# seed=" + std::to_string(seed) + "\n" + serialize_graph(g));
      else {
        Json j{{"seed", seed}, {"p", prob}};
        if (!x_text.empty()) {
          j["c"] = c;
          j["exponent"] = x_text;
        }
        j.update(graph_json(g));
        out.json(j);
      }
    } else if (*process) {
      uint64_t seed = effective_seed(common);
      ProcessRun run = sample_process(n, seed);
      if (prefix >= 0) {
        Graph g = prefix_graph(run, prefix);
        Json j{{"seed", seed}, {"prefix", prefix}};
        j.update(graph_json(g));
        out.json(j);
      } else if (common.format == "text") {
        out.text(serialize_run(run));
      } else {
        out.json(Json{{"seed", seed}, {"n", n}, {"order", run.order}});
      }
    } else if (*hitting) {
      uint64_t seed = effective_seed(common);
      HittingStudy s = hitting_time_study(n, samples, seed, common.jobs);
      auto tau = [](long long t) {
        return t == kNeverHit ? std::string("inf") : t < 0 ? std::string("fail") : std::to_string(t);
      };
      if (common.format == "csv" || common.format.empty()) {
        std::ostringstream o;
        o << "# seed=" << seed << " n=" << n << " runs=" << samples << " violations1=" << s.violations1
          << " violations2=" << s.violations2 << " ae_violations=" << s.ae_violations
          << " agreement1=" << fmt(s.agreement1) << " agreement2=" << fmt(s.agreement2)
          << " undecided1=" << s.undecided1 << " undecided2=" << s.undecided2 << "\n";
        o << "run_id,tau_dd,tau_2dd,tau_m1,tau_m2,agree1,agree2\n";
        for (const auto& r : s.runs)
          o << r.run_id << ',' << tau(r.tau_dd) << ',' << tau(r.tau_2dd) << ',' << tau(r.tau_m1) << ','
            << tau(r.tau_m2) << ',' << r.agree1() << ',' << r.agree2() << '\n';
        out.text(o.str());
      } else {
        Json runs = Json::array();
        for (const auto& r : s.runs)
          runs.push_back({{"run_id", r.run_id}, {"seed", r.seed}, {"tau_dd", tau(r.tau_dd)},
                          {"tau_2dd", tau(r.tau_2dd)}, {"tau_m1", tau(r.tau_m1)}, {"tau_m2", tau(r.tau_m2)}});
        out.json(Json{{"seed", seed}, {"n", n}, {"runs", samples}, {"violations1", s.violations1},
                      {"violations2", s.violations2}, {"ae_dd_avoider_last", s.ae_dd_avoider_last},
                      {"ae_2dd_enforcer_last", s.ae_2dd_enforcer_last}, {"ae_violations", s.ae_violations},
                      {"agreement1", s.agreement1}, {"agreement2", s.agreement2}, {"undecided1", s.undecided1}, {"undecided2", s.undecided2},
                      {"rows", runs}});
      }
    } else if (*threshold) {
      uint64_t seed = effective_seed(common);
      GameSpec spec = game_spec(gf);
      Rational x = !exponent.empty() ? parse_rational(exponent, "--exponent")
                                     : threshold_exponent(spec.H, DensityKind::M1);
      std::vector<int> ns;
      std::vector<double> cs;
      try {
        for (const auto& s : split_list(n_list)) ns.push_back(std::stoi(s));
        for (const auto& s : split_list(c_list)) cs.push_back(std::stod(s));
      } catch (const std::exception&) {
        throw UsageError("--n/--c: expected comma-separated numbers");
      }
      auto rows = threshold_scan(spec, x, ns, cs, samples, seed, common.jobs);
      if (common.format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows)
          arr.push_back({{"n", r.n}, {"c", r.c}, {"p_exponent", to_string(r.exponent)}, {"p", r.p},
                         {"samples", r.samples}, {"win_rate", r.win_rate}, {"spoiler_rate", r.spoiler_rate},
                         {"failures", r.failures}, {"mean_ms", r.mean_ms}});
        out.json(Json{{"seed", seed}, {"rows", arr}});
      } else {
        out.text("# seed=" + std::to_string(seed) + "\n" + threshold_csv(rows));
      }
    } else if (*poisson) {
      uint64_t seed = effective_seed(common);
      PoissonReport r = poisson_limit_check(target_graph(gf.target), c, n, samples, seed, common.jobs);
      out.json(Json{{"seed", seed}, {"target", gf.target}, {"n", r.n}, {"c", r.c},
                    {"exponent", to_string(r.exponent)}, {"p", r.p}, {"samples", r.samples},
                    {"lambda", r.lambda}, {"lambda_n", r.lambda_n}, {"expected", r.expected},
                    {"estimate", r.estimate}, {"std_error", r.std_error}});
    } else if (*mintree) {
      GameKind kind = game_kind(gf.game);
      MinimalTreeResult r = minimal_tree_search(target_graph(gf.target), gf.b, kind, max_host);
      Json hosts = Json::array();
      for (const auto& h : r.hosts) hosts.push_back(graph_json(h));
      out.json(Json{{"target", gf.target}, {"b", gf.b}, {"game", to_string(kind)}, {"size", r.size},
                    {"hosts", hosts}});
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
