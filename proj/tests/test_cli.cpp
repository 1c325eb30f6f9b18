#include <doctest.h>

#include <array>
#include <cstdio>
#include <regex>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "mgreen/cli.hpp"
#include "oracles.hpp"

using namespace mgreen;

namespace {

RunConfig config(const std::string& command, const std::string& graph) {
  RunConfig c;
  c.command = command;
  c.input = oracles::data_path(graph + ".json");
  return c;
}

struct Process {
  int status;
  std::string out;
};

// Runs the installed binary through the shell; stderr is discarded.
Process shell(const std::string& args) {
  const std::string cmd = std::string(MGREEN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

// Exact output is integers and p/q tokens only.
bool exact_tokens_only(const std::string& text) {
  static const std::regex decimal(R"(\d\.\d)");
  return !std::regex_search(text, decimal);
}

}  // namespace

TEST_CASE("tau and resistance on the circle") {
  const RunResult tau = run(config("tau", "circle"));
  CHECK(tau.exit_code == kExitOk);
  CHECK(tau.out == "1/6\n");

  RunConfig r = config("resistance", "circle");
  r.x = "0:0";
  r.y = "0:1/2";
  CHECK(run(r).out == "3/8\n");
  r.decimal = 4;
  CHECK(run(r).out == "3/8 (0.3750)\n");
}

TEST_CASE("matrices") {
  CHECK(run(config("laplacian", "circle")).out == "4 -2 -2\n-2 3 -1\n-2 -1 3\n");
  CHECK(run(config("pinv", "circle")).out == "1/9 -1/18 -1/18\n-1/18 11/72 -7/72\n-1/18 -7/72 11/72\n");
  RunConfig m = config("pinv", "circle");
  m.machine = true;
  const auto doc = nlohmann::json::parse(run(m).out);
  CHECK(doc["matrix"][1][2] == "-7/72");
}

TEST_CASE("epsilon on the tesseract") {
  const RunResult eps = run(config("epsilon", "tesseract"));
  CHECK(eps.exit_code == kExitOk);
  CHECK(eps.out == "7875/122\n7875/122\nMATCH\n");
  RunConfig g = config("epsilon", "tesseract");
  g.method = "green";
  CHECK(run(g).out == "7875/122\n");
  g.method = "bogus";
  CHECK(run(g).exit_code == kExitInputError);
}

TEST_CASE("value matrix, green and divisor override") {
  const RunResult vm = run(config("value-matrix", "circle"));
  CHECK(vm.out.find("z[2][0] = -1/48 - 1/4*x + 1/4*y + 1/4*x^2 + 1/4*y^2 - 1/2*x*y\n") != std::string::npos);
  CHECK(exact_tokens_only(vm.out));

  RunConfig g = config("green", "circle");
  g.x = "0:0";
  g.y = "0:1/2";
  CHECK(run(g).out == "-1/48\n");

  RunConfig s = config("green", "segment");
  s.divisor = "1,1";
  s.x = "0:0";
  s.y = "0:1";
  CHECK(run(s).out == "-1/4\n");

  RunConfig machine = config("value-matrix", "joint_circles");
  machine.machine = true;
  const auto doc = nlohmann::json::parse(run(machine).out);
  CHECK(doc["size"] == 6);
  CHECK(doc["entries"].size() == 36);
}

TEST_CASE("checks and oracle pass on committed fixtures") {
  for (const char* name : {"circle", "joint_circles", "banana", "two_bridges", "dumbbell"}) {
    CAPTURE(name);
    const RunResult check = run(config("check", name));
    CHECK(check.exit_code == kExitOk);
    CHECK(check.out.find("FAIL") == std::string::npos);

    RunConfig o = config("oracle", name);
    o.points = oracles::data_path(std::string("points/") + name + ".txt");
    const RunResult oracle = run(o);
    CHECK(oracle.exit_code == kExitOk);
    std::istringstream lines(oracle.out);
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
      ++count;
      const auto first = line.find(" DIFF 0 ");
      CHECK(first != std::string::npos);
      CHECK(line.size() >= 7);
      CHECK(line.substr(line.size() - 7) == " DIFF 0");
    }
    CHECK(count >= 50);
    CHECK(exact_tokens_only(oracle.out));
  }
}

TEST_CASE("inadequate input is repaired with a note") {
  const RunResult info = run(config("info", "circle_line"));
  CHECK(info.exit_code == kExitOk);
  CHECK(info.err.find("not adequate") != std::string::npos);
  CHECK(info.out.find("vertices: 4") != std::string::npos);
  CHECK(run(config("epsilon", "circle_line")).out.find("MATCH") != std::string::npos);
}

TEST_CASE("input errors exit with 2") {
  RunConfig bad = config("epsilon", "circle");
  bad.divisor = "-1,-1,0";
  const RunResult deg = run(bad);
  CHECK(deg.exit_code == kExitInputError);
  CHECK(deg.err.find("deg(D) = -2") != std::string::npos);

  CHECK(run(config("tau", "no_such_graph")).exit_code == kExitInputError);

  RunConfig short_divisor = config("epsilon", "circle");
  short_divisor.divisor = "1,2";
  CHECK(run(short_divisor).exit_code == kExitInputError);

  RunConfig off = config("resistance", "circle");
  off.x = "0:1";
  off.y = "0:0";
  CHECK(run(off).exit_code == kExitInputError);

  RunConfig unknown = config("frobnicate", "circle");
  CHECK(run(unknown).exit_code == kExitInputError);
}

TEST_CASE("the binary") {
  const std::string circle = oracles::data_path("circle.json");
  const Process tau = shell("tau " + circle);
  CHECK(tau.status == 0);
  CHECK(tau.out == "1/6\n");

  const Process eps = shell("epsilon --method both " + oracles::data_path("tesseract.json"));
  CHECK(eps.status == 0);
  CHECK(eps.out == "7875/122\n7875/122\nMATCH\n");

  const Process r = shell("resistance --x 0:0 --y 0:1/2 " + circle);
  CHECK(r.out == "3/8\n");

  const Process machine = shell("tau --machine --decimal 3 " + circle);
  const auto doc = nlohmann::json::parse(machine.out);
  CHECK(doc["tau"] == "1/6");
  CHECK(doc["decimal"] == "0.167");

  CHECK(shell("tau").status == 2);
  CHECK(shell("resistance --x 0:0 " + circle).status == 2);
  CHECK(shell("epsilon " + circle + " --divisor 1,1,-4").status == 2);
  CHECK(shell("").status == 2);
}
