#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct Run {
  std::string out;
  int status = -1;
};

// Runs the CLI with stderr discarded and VGLAB_SEED unset unless `env` says
// otherwise.
Run run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = "env -u VGLAB_SEED " + env + " " + VGLAB_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

struct Example {
  std::string args;
  std::string expected;
};

// "$ vglab ARGS" lines inside ```console blocks, each followed by its output.
std::vector<Example> readme_examples() {
  std::ifstream in(VGLAB_README_PATH);
  REQUIRE(in.good());
  std::vector<Example> out;
  std::string line;
  bool inside = false;
  while (std::getline(in, line)) {
    if (line.rfind("```", 0) == 0) {
      inside = line == "```console";
      continue;
    }
    if (!inside) continue;
    if (line.rfind("$ vglab ", 0) == 0) out.push_back({line.substr(8), ""});
    else if (!out.empty()) out.back().expected += line + "\n";
  }
  return out;
}

std::string without_last_csv_column(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] != '#') line = line.substr(0, line.rfind(','));
    out += line + "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("README examples reproduce their recorded output") {
  auto examples = readme_examples();
  CHECK(examples.size() >= 15);
  for (const auto& ex : examples) {
    CAPTURE(ex.args);
    Run r = run_cli(ex.args);
    CHECK(r.status == 0);
    CHECK(r.out == ex.expected);
  }
}

TEST_CASE("exit codes") {
  CHECK(run_cli("solve --badflag").status == 2);
  CHECK(run_cli("solve --catalog DD --game xx").status == 2);
  CHECK(run_cli("solve --catalog DD --a 0").status == 2);
  CHECK(run_cli("").status == 2);
  CHECK(run_cli("solve --catalog NOPE").status == 1);
  // Over the solver limit.
  CHECK(run_cli("solve --catalog K3CYCLE_10 --game mb --target K3").status == 1);
  CHECK(run_cli("solve --graph /nonexistent/file").status == 1);
  CHECK(run_cli("catalog DD").status == 0);
}

TEST_CASE("identical invocations give identical bytes") {
  for (const std::string args : {"sample --n 40 --p 0.1 --seed 9", "process --n 12 --seed 4",
                                 "match --catalog TTT --game mb --target K3 --strategy-a random "
                                 "--strategy-b random --seed 2",
                                 "core --catalog TTT --target K3 --order random --seed 3",
                                 "hitting --n 16 --samples 4 --seed 5",
                                 "poisson --target K3 --n 200 --c 1 --samples 30 --seed 6"}) {
    CAPTURE(args);
    Run a = run_cli(args), b = run_cli(args);
    CHECK(a.status == 0);
    CHECK(!a.out.empty());
    CHECK(a.out == b.out);
  }
  // mean_ms is wall-clock time; every other field must repeat.
  const std::string scan = "threshold --game mb --target K3 --n 12 --c 0.5,1 --samples 10 --seed 2 --format csv";
  Run a = run_cli(scan), b = run_cli(scan);
  CHECK(a.status == 0);
  CHECK(without_last_csv_column(a.out) == without_last_csv_column(b.out));
}

TEST_CASE("seed precedence") {
  Run flag = run_cli("sample --n 20 --p 0.3 --seed 11", "VGLAB_SEED=12");
  Run env = run_cli("sample --n 20 --p 0.3", "VGLAB_SEED=11");
  Run none = run_cli("sample --n 20 --p 0.3");
  Run zero = run_cli("sample --n 20 --p 0.3 --seed 0");
  CHECK(flag.out == env.out);
  CHECK(flag.out.rfind("{\"seed\":11,", 0) == 0);
  CHECK(none.out == zero.out);
  CHECK(none.out.rfind("{\"seed\":0,", 0) == 0);
}

TEST_CASE("--out writes the same bytes as stdout") {
  const std::string path = "vglab_cli_out_test.json";
  Run to_file = run_cli("analyze --catalog TTT --out " + path);
  CHECK(to_file.status == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == run_cli("analyze --catalog TTT").out);
  std::remove(path.c_str());
}
