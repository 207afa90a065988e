#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apps.hpp"
#include "certificate.hpp"
#include "core.hpp"
#include "expr.hpp"
#include "json.hpp"
#include "solvers.hpp"

namespace equilib {

using json = nlohmann::ordered_json;

struct PlayerSpec {
  std::vector<std::size_t> block;  // 0-based coordinate indices
  std::shared_ptr<const expr::PointFunction> objective;
};

struct OperatorBranch {
  std::shared_ptr<const expr::PointFunction> when;  // null: always
  std::vector<std::vector<std::shared_ptr<const expr::PointFunction>>> values;
};

/// Validated problem description. `effective` is the document with every
/// default filled in; it is what reports embed and hash.
struct ProblemConfig {
  enum class Payload { Bifunction, Operator, Game };

  json effective;
  std::size_t dimension = 0;
  std::shared_ptr<const Domain> domain;
  unsigned resolution = 4;
  Tolerance tol;
  Budget budget;
  Payload payload = Payload::Bifunction;

  std::optional<Bifunction> bifunction;
  std::vector<OperatorBranch> operator_branches;
  std::vector<PlayerSpec> players;
  std::shared_ptr<const expr::PointFunction> joint_constraint;
  std::optional<ConstraintMap> constraint_map;
  std::vector<Vector> directions;

  Operator make_operator() const;
  // Joint feasible set at the given resolution: the box lattice filtered by
  // the joint constraint, or the domain itself when there is none.
  std::shared_ptr<const Domain> joint_domain(unsigned resolution) const;
  Game make_game(unsigned resolution) const;
  // The bifunction the payload induces: f itself, f_T, or Nikaido-Isoda f_0.
  Bifunction induced_bifunction(unsigned resolution) const;
};

/// Throws Error(ParseError) with line/column for malformed documents and
/// Error(SchemaError) listing every validation problem found.
ProblemConfig parse_config(std::string_view text, std::string_view source = "<string>");
ProblemConfig load_config(const std::filesystem::path& path);

std::vector<std::string> builtin_bifunctions();

struct RunFlags {
  std::optional<std::string> kind;
  std::optional<std::string> problem;
  std::optional<std::string> hypothesis;
  std::optional<double> tol;
  std::optional<unsigned> resolution;
};

std::vector<std::string> commands();

/// Dispatches a command and returns the full report. Mathematical verdicts
/// live in the report body; only usage or evaluation failures throw.
json run_command(std::string_view command, const ProblemConfig& config,
                 const RunFlags& flags);

/// Report without the "timing" member, the part that must be reproducible.
json replayable_part(const json& report);

std::string fnv1a64_hex(std::string_view data);

}  // namespace equilib
