#include "expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>

namespace equilib::expr {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> vars)
      : text_(text), vars_(vars) {}

  Ast run() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty expression");
    auto root = parse_cmp();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return Ast(std::move(nodes_), root,
               std::vector<std::string>(vars_.begin(), vars_.end()));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError,
                "syntax error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(std::string_view(&c, 1)))
      fail(std::string("expected '") + c + "'");
  }

  std::int32_t add(Node n) {
    nodes_.push_back(n);
    return static_cast<std::int32_t>(nodes_.size() - 1);
  }

  std::int32_t node(Op op, std::int32_t a, std::int32_t b = -1,
                    std::int32_t c = -1) {
    Node n;
    n.op = op;
    n.kids[0] = a;
    n.kids[1] = b;
    n.kids[2] = c;
    return add(n);
  }

  std::int32_t parse_cmp() {
    auto lhs = parse_sum();
    Op op;
    if (accept("<="))
      op = Op::Le;
    else if (accept("=="))
      op = Op::Eq;
    else if (accept("<"))
      op = Op::Lt;
    else
      return lhs;
    auto rhs = parse_sum();
    skip_ws();
    if (pos_ < text_.size() && (text_[pos_] == '<' || text_[pos_] == '='))
      fail("comparisons do not chain");
    return node(op, lhs, rhs);
  }

  std::int32_t parse_sum() {
    auto lhs = parse_term();
    while (true) {
      if (accept("+"))
        lhs = node(Op::Add, lhs, parse_term());
      else if (accept("-"))
        lhs = node(Op::Sub, lhs, parse_term());
      else
        return lhs;
    }
  }

  std::int32_t parse_term() {
    auto lhs = parse_unary();
    while (true) {
      if (accept("*"))
        lhs = node(Op::Mul, lhs, parse_unary());
      else if (accept("/"))
        lhs = node(Op::Div, lhs, parse_unary());
      else
        return lhs;
    }
  }

  std::int32_t parse_unary() {
    if (accept("-")) return node(Op::Neg, parse_unary());
    return parse_power();
  }

  std::int32_t parse_power() {
    auto base = parse_primary();
    if (!accept("^")) return base;
    bool paren = accept("(");
    bool neg = accept("-");
    skip_ws();
    if (pos_ >= text_.size() || !(std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                  text_[pos_] == '.'))
      fail("exponent must be a numeric literal");
    double v = number();
    if (paren) expect(')');
    Node lit;
    lit.op = Op::Literal;
    lit.value = neg ? -v : v;
    return node(Op::Pow, base, add(lit));
  }

  double number() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    double v = 0.0;
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || !std::isfinite(v)) fail("malformed number");
    pos_ += static_cast<std::size_t>(res.ptr - first);
    return v;
  }

  std::int32_t parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      Node lit;
      lit.op = Op::Literal;
      lit.value = number();
      return add(lit);
    }
    if (c == '(') {
      ++pos_;
      auto inner = parse_cmp();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '(') return call(name, start);
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end())
        throw Error(ErrorCode::UnknownVariable, "unknown variable: " + name);
      Node v;
      v.op = Op::Variable;
      v.var = static_cast<std::uint32_t>(it - vars_.begin());
      return add(v);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::int32_t call(const std::string& name, std::size_t name_pos) {
    struct Fn {
      std::string_view name;
      Op op;
      int arity;
    };
    static constexpr Fn table[] = {
        {"abs", Op::Abs, 1},  {"exp", Op::Exp, 1}, {"log", Op::Log, 1},
        {"sqrt", Op::Sqrt, 1}, {"min", Op::Min, 2}, {"max", Op::Max, 2},
        {"if", Op::If, 3},
    };
    const Fn* fn = nullptr;
    for (const auto& f : table)
      if (f.name == name) fn = &f;
    if (!fn) {
      pos_ = name_pos;
      fail("unknown function '" + name + "'");
    }
    expect('(');
    std::int32_t args[3] = {-1, -1, -1};
    for (int i = 0; i < fn->arity; ++i) {
      if (i) expect(',');
      args[i] = parse_cmp();
    }
    expect(')');
    return node(fn->op, args[0], args[1], args[2]);
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
  std::vector<Node> nodes_;
};

double checked(double v, const char* what) {
  if (!std::isfinite(v))
    throw Error(ErrorCode::DomainError,
                std::string("non-finite result in ") + what);
  return v;
}

double eval_node(const Ast& ast, std::int32_t id, std::span<const double> vals) {
  const Node& n = ast.nodes()[static_cast<std::size_t>(id)];
  auto kid = [&](int i) { return eval_node(ast, n.kids[i], vals); };
  switch (n.op) {
    case Op::Literal: return n.value;
    case Op::Variable: return vals[n.var];
    case Op::Neg: return -kid(0);
    case Op::Add: return checked(kid(0) + kid(1), "addition");
    case Op::Sub: return checked(kid(0) - kid(1), "subtraction");
    case Op::Mul: return checked(kid(0) * kid(1), "multiplication");
    case Op::Div: {
      const double num = kid(0);
      const double den = kid(1);
      if (den == 0.0) throw Error(ErrorCode::DivisionByZero, "division by zero");
      return checked(num / den, "division");
    }
    case Op::Pow: {
      const double base = kid(0);
      const double e = kid(1);
      if (base == 0.0 && e < 0.0)
        throw Error(ErrorCode::DivisionByZero, "zero raised to negative power");
      if (base < 0.0 && e != std::floor(e))
        throw Error(ErrorCode::DomainError,
                    "negative base with non-integer exponent");
      return checked(std::pow(base, e), "power");
    }
    case Op::Min: return std::min(kid(0), kid(1));
    case Op::Max: return std::max(kid(0), kid(1));
    case Op::Abs: return std::fabs(kid(0));
    case Op::Exp: return checked(std::exp(kid(0)), "exp");
    case Op::Log: {
      const double a = kid(0);
      if (a <= 0.0) throw Error(ErrorCode::DomainError, "log of non-positive value");
      return std::log(a);
    }
    case Op::Sqrt: {
      const double a = kid(0);
      if (a < 0.0) throw Error(ErrorCode::DomainError, "sqrt of negative value");
      return std::sqrt(a);
    }
    case Op::Le: return kid(0) <= kid(1) ? 1.0 : 0.0;
    case Op::Lt: return kid(0) < kid(1) ? 1.0 : 0.0;
    case Op::Eq: return kid(0) == kid(1) ? 1.0 : 0.0;
    case Op::If: return kid(0) != 0.0 ? kid(1) : kid(2);
  }
  return 0.0;
}

std::string format_number(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void print(const Ast& ast, std::int32_t id, std::string& out) {
  const Node& n = ast.nodes()[static_cast<std::size_t>(id)];
  auto binary = [&](std::string_view op) {
    out += '(';
    print(ast, n.kids[0], out);
    out += ' ';
    out += op;
    out += ' ';
    print(ast, n.kids[1], out);
    out += ')';
  };
  auto call = [&](std::string_view name, int arity) {
    out += name;
    out += '(';
    for (int i = 0; i < arity; ++i) {
      if (i) out += ", ";
      print(ast, n.kids[i], out);
    }
    out += ')';
  };
  switch (n.op) {
    case Op::Literal: out += format_number(n.value); break;
    case Op::Variable: out += ast.variables()[n.var]; break;
    case Op::Neg:
      out += "(-";
      print(ast, n.kids[0], out);
      out += ')';
      break;
    case Op::Add: binary("+"); break;
    case Op::Sub: binary("-"); break;
    case Op::Mul: binary("*"); break;
    case Op::Div: binary("/"); break;
    case Op::Pow: {
      out += '(';
      print(ast, n.kids[0], out);
      const double e = ast.nodes()[static_cast<std::size_t>(n.kids[1])].value;
      out += e < 0 ? "^(" + format_number(e) + "))" : "^" + format_number(e) + ")";
      break;
    }
    case Op::Min: call("min", 2); break;
    case Op::Max: call("max", 2); break;
    case Op::Abs: call("abs", 1); break;
    case Op::Exp: call("exp", 1); break;
    case Op::Log: call("log", 1); break;
    case Op::Sqrt: call("sqrt", 1); break;
    case Op::Le: binary("<="); break;
    case Op::Lt: binary("<"); break;
    case Op::Eq: binary("=="); break;
    case Op::If: call("if", 3); break;
  }
}

bool equal_at(const Ast& a, std::int32_t ia, const Ast& b, std::int32_t ib) {
  if ((ia < 0) != (ib < 0)) return false;
  if (ia < 0) return true;
  const Node& x = a.nodes()[static_cast<std::size_t>(ia)];
  const Node& y = b.nodes()[static_cast<std::size_t>(ib)];
  if (x.op != y.op) return false;
  if (x.op == Op::Literal) return x.value == y.value;
  if (x.op == Op::Variable)
    return a.variables()[x.var] == b.variables()[y.var];
  for (int i = 0; i < 3; ++i)
    if (!equal_at(a, x.kids[i], b, y.kids[i])) return false;
  return true;
}

}  // namespace

std::vector<std::string> Ast::free_variables() const {
  std::set<std::uint32_t> used;
  for (const auto& n : nodes_)
    if (n.op == Op::Variable) used.insert(n.var);
  std::vector<std::string> out;
  for (auto i : used) out.push_back(vars_[i]);
  return out;
}

Ast parse(std::string_view text, std::span<const std::string> declared_vars) {
  return Parser(text, declared_vars).run();
}

double evaluate(const Ast& ast, std::span<const double> values) {
  if (values.size() < ast.variables().size())
    throw Error(ErrorCode::MissingVariable, "too few variable values");
  return eval_node(ast, ast.root(), values);
}

double evaluate(const Ast& ast, const Binding& env) {
  const auto& vars = ast.variables();
  std::vector<double> vals(vars.size(), 0.0);
  for (const auto& name : ast.free_variables()) {
    auto it = env.find(name);
    if (it == env.end())
      throw Error(ErrorCode::MissingVariable, "missing variable: " + name);
    auto pos = std::find(vars.begin(), vars.end(), name) - vars.begin();
    vals[static_cast<std::size_t>(pos)] = it->second;
  }
  return eval_node(ast, ast.root(), vals);
}

std::string to_string(const Ast& ast) {
  std::string out;
  print(ast, ast.root(), out);
  return out;
}

bool structurally_equal(const Ast& a, const Ast& b) {
  return equal_at(a, a.root(), b, b.root());
}

std::vector<std::string> point_variables(std::size_t dim) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= dim; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

std::vector<std::string> bifunction_variables(std::size_t dim) {
  auto v = point_variables(dim);
  for (std::size_t i = 1; i <= dim; ++i) v.push_back("y" + std::to_string(i));
  return v;
}

Bifunction make_bifunction(std::string_view text, std::size_t dim) {
  const auto vars = bifunction_variables(dim);
  auto ast = std::make_shared<const Ast>(parse(text, vars));
  return Bifunction(
      [ast, dim](const Point& x, const Point& y) {
        if (x.dim() != dim || y.dim() != dim)
          throw Error(ErrorCode::DimensionMismatch,
                      "bifunction argument has wrong dimension");
        double vals[64];
        std::vector<double> heap;
        double* v = vals;
        if (2 * dim > 64) {
          heap.resize(2 * dim);
          v = heap.data();
        }
        std::copy(x.coords().begin(), x.coords().end(), v);
        std::copy(y.coords().begin(), y.coords().end(), v + dim);
        return evaluate(*ast, std::span<const double>(v, 2 * dim));
      },
      "expr:" + std::string(text));
}

PointFunction::PointFunction(std::string_view text, std::size_t dim)
    : text_(text), dim_(dim) {
  const auto vars = point_variables(dim);
  ast_ = std::make_shared<const Ast>(parse(text, vars));
}

double PointFunction::operator()(const Point& p) const {
  if (p.dim() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "point has wrong dimension");
  return evaluate(*ast_, p.coords());
}

}  // namespace equilib::expr
