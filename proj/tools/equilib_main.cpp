#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "equilib/equilib.h"

namespace {

constexpr int kCompleted = 0;
constexpr int kUsageError = 1;
constexpr int kEvaluationError = 2;

int fail(eq_status status) {
  std::cerr << "equilib: " << eq_status_name(status) << ": " << eq_last_error() << "\n";
  return eq_is_evaluation_error(status) ? kEvaluationError : kUsageError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide generalized monotonicity and solve equilibrium problems on samples"};
  app.set_version_flag("--version", std::string(eq_version()));

  std::string command, config_path, out_path, kind, problem, hypothesis;
  double tol = -1.0;
  unsigned resolution = 0;

  app.add_option("command", command, "check | fip | solve | vip | gnep | cycle")
      ->required()
      ->check(CLI::IsMember({"check", "fip", "solve", "vip", "gnep", "cycle"}));
  app.add_option("config", config_path, "Problem configuration (JSON)")->required();
  app.add_option("--kind", kind, "Property, fip variant or vip hypothesis");
  app.add_option("--problem", problem, "ep | mep | qep | mqep | bridge | selection");
  app.add_option("--hypothesis", hypothesis, "neg-pseudo | upper-sign (vip)");
  app.add_option("--tol", tol, "Tolerance override")->check(CLI::NonNegativeNumber);
  app.add_option("--resolution", resolution, "Grid steps per axis")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kCompleted : kUsageError;
  }

  eq_config* cfg = nullptr;
  if (eq_status s = eq_config_load_file(config_path.c_str(), &cfg); s != EQ_OK) return fail(s);

  eq_run_options opts{};
  opts.kind = kind.empty() ? nullptr : kind.c_str();
  opts.problem = problem.empty() ? nullptr : problem.c_str();
  opts.hypothesis = hypothesis.empty() ? nullptr : hypothesis.c_str();
  opts.tol = tol;
  opts.resolution = resolution;

  char* report = nullptr;
  const eq_status s = eq_run(cfg, command.c_str(), &opts, &report);
  eq_config_free(cfg);
  if (s != EQ_OK) return fail(s);

  int rc = kCompleted;
  if (out_path.empty()) {
    std::cout << report << "\n";
  } else {
    std::ofstream out(out_path);
    if (!(out << report << "\n")) {
      std::cerr << "equilib: cannot write " << out_path << "\n";
      rc = kUsageError;
    }
  }
  eq_string_free(report);
  return rc;
}
