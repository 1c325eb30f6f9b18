#include <iostream>

#include <CLI11.hpp>

#include "mgreen/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Admissible Arakelov-Green functions on metrized graphs, in exact arithmetic"};
  app.require_subcommand(1, 1);

  mgreen::RunConfig config;
  std::string divisor, x, y, points;
  int decimal = -1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("graph", config.input, "graph JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--divisor", divisor, "divisor coefficients a0,a1,... (overrides the file)");
    sub->add_option("--decimal", decimal, "append a decimal approximation with K digits")->check(CLI::NonNegativeNumber);
    sub->add_flag("--machine", config.machine, "emit one JSON document");
  };

  const std::pair<const char*, const char*> commands[] = {
      {"info", "summary: sizes, bridges, connectivity matrix"},
      {"laplacian", "discrete Laplacian matrix"},
      {"pinv", "Moore-Penrose pseudoinverse of the Laplacian"},
      {"tau", "tau constant"},
      {"resistance", "effective resistance r(x, y)"},
      {"green", "admissible Arakelov-Green function g(x, y)"},
      {"value-matrix", "closed form of g on every edge pair"},
      {"epsilon", "epsilon invariant of the divisor"},
      {"check", "representation-independence and vertex-formula checks"},
      {"oracle", "compare closed forms against the subdivision oracle"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    const std::string n = name;
    if (n == "resistance" || n == "green") {
      sub->add_option("--x", x, "first point EDGE:OFFSET")->required();
      sub->add_option("--y", y, "second point EDGE:OFFSET")->required();
    }
    if (n == "epsilon") {
      sub->add_option("--method", config.method, "green, resistance or both")
          ->check(CLI::IsMember({"green", "resistance", "both"}));
    }
    if (n == "oracle") {
      sub->add_option("--points", points, "file of 'i:p/q j:p/q' lines")->required()->check(CLI::ExistingFile);
    }
    sub->callback([&config, n] { config.command = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : mgreen::kExitInputError;
  }

  if (!divisor.empty()) config.divisor = divisor;
  if (!x.empty()) config.x = x;
  if (!y.empty()) config.y = y;
  if (!points.empty()) config.points = points;
  if (decimal >= 0) config.decimal = decimal;

  const mgreen::RunResult result = mgreen::run(config);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
