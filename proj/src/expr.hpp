#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace equilib::expr {

enum class Op : std::uint8_t {
  Literal,
  Variable,
  Neg,
  Add,
  Sub,
  Mul,
  Div,
  Pow,  // exponent is always a Literal child
  Min,
  Max,
  Abs,
  Exp,
  Log,
  Sqrt,
  Le,
  Lt,
  Eq,
  If,
};

struct Node {
  Op op = Op::Literal;
  double value = 0.0;          // Literal
  std::uint32_t var = 0;       // Variable: index into the declared variables
  std::int32_t kids[3] = {-1, -1, -1};
};

/// Immutable parsed expression. Variable references resolve to positions in
/// the declared variable list given to parse().
class Ast {
 public:
  Ast(std::vector<Node> nodes, std::int32_t root, std::vector<std::string> vars)
      : nodes_(std::move(nodes)), root_(root), vars_(std::move(vars)) {}

  const std::vector<Node>& nodes() const { return nodes_; }
  std::int32_t root() const { return root_; }
  const std::vector<std::string>& variables() const { return vars_; }

  // Declared variables that actually occur in the tree.
  std::vector<std::string> free_variables() const;

 private:
  std::vector<Node> nodes_;
  std::int32_t root_;
  std::vector<std::string> vars_;
};

using Binding = std::map<std::string, double, std::less<>>;

// Throws Error(SyntaxError) with a 1-based column, or
// Error(UnknownVariable) naming the identifier.
Ast parse(std::string_view text, std::span<const std::string> declared_vars);

// values[i] binds declared variable i.
double evaluate(const Ast& ast, std::span<const double> values);
double evaluate(const Ast& ast, const Binding& env);

// Fully parenthesized form that reparses to the same tree.
std::string to_string(const Ast& ast);

bool structurally_equal(const Ast& a, const Ast& b);

/// x1..xn followed by y1..yn.
std::vector<std::string> bifunction_variables(std::size_t dim);
/// x1..xn.
std::vector<std::string> point_variables(std::size_t dim);

/// f(x, y) given by an expression in x1..xn, y1..yn.
Bifunction make_bifunction(std::string_view text, std::size_t dim);

/// Scalar function of a point given by an expression in x1..xn.
class PointFunction {
 public:
  PointFunction(std::string_view text, std::size_t dim);

  double operator()(const Point& p) const;
  const std::string& text() const { return text_; }

 private:
  std::shared_ptr<const Ast> ast_;
  std::string text_;
  std::size_t dim_;
};

}  // namespace equilib::expr
