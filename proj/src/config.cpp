#include "config.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>

#include "fip.hpp"
#include "monotonicity.hpp"
#include "report.hpp"

namespace equilib {

namespace {

constexpr std::string_view kVersion = "0.1.0";

const std::set<std::string, std::less<>> kTopLevelKeys = {
    "name",   "description", "dimension", "domain",         "resolution", "tolerance",
    "budgets", "bifunction", "operator",  "game",           "constraint_map",
    "directions"};

struct Builtin {
  std::string_view name;
  double (*fn)(const Point&, const Point&);
};

constexpr Builtin kBuiltins[] = {
    {"zero", [](const Point&, const Point&) { return 0.0; }},
    {"inner-product",
     [](const Point& x, const Point& y) { return dot(x.coords(), y.coords()); }},
    {"distance-indicator",
     [](const Point& x, const Point& y) {
       double d = 0.0;
       for (std::size_t i = 0; i < x.dim(); ++i) d = std::max(d, std::fabs(x[i] - y[i]));
       return d <= 0.5 ? 0.0 : 1.0;
     }},
    {"coordinate-sum-difference",
     [](const Point& x, const Point& y) {
       double s = 0.0;
       for (std::size_t i = 0; i < x.dim(); ++i) s += y[i] - x[i];
       return s;
     }},
};

// Collects every schema problem instead of stopping at the first.
class Validator {
 public:
  void error(const std::string& field, const std::string& what) {
    errors_.push_back(field + ": " + what);
  }
  bool ok() const { return errors_.empty(); }
  const std::vector<std::string>& errors() const { return errors_; }

  std::optional<unsigned> positive_int(const json& j, const std::string& field) {
    if (!j.is_number_integer() || j.get<long long>() < 1) {
      error(field, "expected a positive integer");
      return std::nullopt;
    }
    return static_cast<unsigned>(j.get<long long>());
  }

  std::optional<double> number(const json& j, const std::string& field) {
    if (!j.is_number()) {
      error(field, "expected a number");
      return std::nullopt;
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
      error(field, "expected a finite number");
      return std::nullopt;
    }
    return v;
  }

  std::optional<Point> point(const json& j, const std::string& field, std::size_t dim) {
    if (!j.is_array() || j.size() != dim) {
      error(field, "expected an array of " + std::to_string(dim) + " numbers");
      return std::nullopt;
    }
    std::vector<double> c;
    for (std::size_t i = 0; i < j.size(); ++i) {
      auto v = number(j[i], field + "[" + std::to_string(i) + "]");
      if (!v) return std::nullopt;
      c.push_back(*v);
    }
    return Point(std::move(c));
  }

  template <typename Make>
  auto compile(const json& j, const std::string& field, Make&& make)
      -> std::optional<decltype(make(std::string()))> {
    if (!j.is_string() || j.get<std::string>().empty()) {
      error(field, "expected a non-empty expression string");
      return std::nullopt;
    }
    try {
      return make(j.get<std::string>());
    } catch (const Error& e) {
      error(field, e.what());
      return std::nullopt;
    }
  }

 private:
  std::vector<std::string> errors_;
};

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::vector<std::string> builtin_bifunctions() {
  std::vector<std::string> names;
  for (const auto& b : kBuiltins) names.emplace_back(b.name);
  return names;
}

std::vector<std::string> commands() { return {"check", "fip", "solve", "vip", "gnep", "cycle"}; }

std::string fnv1a64_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ProblemConfig parse_config(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string(source) + ":" +
                                           location(text, e.byte == 0 ? 0 : e.byte - 1) +
                                           ": " + e.what());
  }

  Validator v;
  ProblemConfig cfg;
  if (!doc.is_object())
    throw Error(ErrorCode::SchemaError, "(root): expected an object");
  for (const auto& [key, _] : doc.items())
    if (!kTopLevelKeys.count(key)) v.error(key, "unknown field");

  json eff = json::object();
  if (doc.contains("name")) {
    if (doc["name"].is_string()) eff["name"] = doc["name"];
    else v.error("name", "expected a string");
  }
  if (doc.contains("description")) {
    if (doc["description"].is_string()) eff["description"] = doc["description"];
    else v.error("description", "expected a string");
  }

  // dimension
  std::size_t dim = 0;
  if (!doc.contains("dimension")) {
    v.error("dimension", "required");
  } else if (auto d = v.positive_int(doc["dimension"], "dimension")) {
    dim = *d;
  }
  cfg.dimension = dim;
  eff["dimension"] = dim;

  // domain
  if (!doc.contains("domain") || !doc["domain"].is_object()) {
    v.error("domain", "required object with 'box' or 'points'");
  } else if (dim > 0) {
    const auto& d = doc["domain"];
    const bool has_box = d.contains("box"), has_pts = d.contains("points");
    if (has_box == has_pts || d.size() != 1) {
      v.error("domain", "exactly one of 'box' or 'points' is required");
    } else if (has_box) {
      const auto& b = d["box"];
      if (!b.is_array() || b.size() != dim) {
        v.error("domain.box", "expected " + std::to_string(dim) + " [lo, hi] pairs");
      } else {
        std::vector<Interval> bounds;
        bool good = true;
        for (std::size_t i = 0; i < dim; ++i) {
          const std::string f = "domain.box[" + std::to_string(i) + "]";
          auto p = v.point(b[i], f, 2);
          if (!p) {
            good = false;
            continue;
          }
          if ((*p)[0] > (*p)[1]) {
            v.error(f, "lo > hi");
            good = false;
          }
          bounds.push_back({(*p)[0], (*p)[1]});
        }
        if (good) cfg.domain = std::make_shared<const Domain>(Domain::box(bounds));
      }
    } else {
      const auto& pts = d["points"];
      if (!pts.is_array() || pts.empty()) {
        v.error("domain.points", "expected a non-empty array of points");
      } else {
        std::vector<Point> ps;
        bool good = true;
        for (std::size_t i = 0; i < pts.size(); ++i) {
          auto p = v.point(pts[i], "domain.points[" + std::to_string(i) + "]", dim);
          if (p) ps.push_back(*p);
          else good = false;
        }
        if (good) {
          try {
            cfg.domain = std::make_shared<const Domain>(Domain::finite_set(ps));
          } catch (const Error& e) {
            v.error("domain.points", e.what());
          }
        }
      }
    }
  }
  if (cfg.domain) {
    json dj = json::object();
    if (cfg.domain->kind() == Domain::Kind::Box) {
      json b = json::array();
      for (const auto& iv : cfg.domain->bounds()) b.push_back({iv.lo, iv.hi});
      dj["box"] = b;
    } else {
      dj["points"] = report::points(cfg.domain->points());
    }
    eff["domain"] = dj;
  }

  if (doc.contains("resolution")) {
    if (auto r = v.positive_int(doc["resolution"], "resolution")) cfg.resolution = *r;
  }
  eff["resolution"] = cfg.resolution;

  if (doc.contains("tolerance")) {
    auto t = v.number(doc["tolerance"], "tolerance");
    if (t && *t < 0) v.error("tolerance", "must be >= 0");
    else if (t) cfg.tol = Tolerance(*t);
  }
  eff["tolerance"] = cfg.tol.value;

  if (doc.contains("budgets")) {
    const auto& b = doc["budgets"];
    if (!b.is_object()) {
      v.error("budgets", "expected an object");
    } else {
      for (const auto& [key, val] : b.items()) {
        unsigned* slot = key == "max_cycle_len"          ? &cfg.budget.max_cycle_len
                         : key == "max_subset"           ? &cfg.budget.max_subset
                         : key == "simplex_subdivisions" ? &cfg.budget.simplex_subdivisions
                         : key == "segment_subdivisions" ? &cfg.budget.segment_subdivisions
                                                         : nullptr;
        if (!slot) {
          v.error("budgets." + key, "unknown field");
          continue;
        }
        if (auto n = v.positive_int(val, "budgets." + key)) *slot = *n;
      }
      if (cfg.budget.segment_subdivisions < 2)
        v.error("budgets.segment_subdivisions", "must be >= 2");
    }
  }
  eff["budgets"] = report::budget(cfg.budget);

  const int payloads = static_cast<int>(doc.contains("bifunction")) +
                       static_cast<int>(doc.contains("operator")) +
                       static_cast<int>(doc.contains("game"));
  if (payloads == 0)
    v.error("(payload)", "one of 'bifunction', 'operator' or 'game' is required");
  if (payloads > 1)
    v.error("(payload)", "'bifunction', 'operator' and 'game' are mutually exclusive");

  if (doc.contains("bifunction") && dim > 0) {
    cfg.payload = ProblemConfig::Payload::Bifunction;
    const auto& b = doc["bifunction"];
    if (b.is_object()) {
      if (b.size() != 1 || !b.contains("builtin") || !b["builtin"].is_string()) {
        v.error("bifunction", "expected {\"builtin\": name}");
      } else {
        const auto name = b["builtin"].get<std::string>();
        for (const auto& bi : kBuiltins)
          if (bi.name == name) cfg.bifunction = Bifunction(bi.fn, "builtin:" + name);
        if (!cfg.bifunction)
          v.error("bifunction.builtin",
                  "unknown builtin '" + name + "' (known: " +
                      join(builtin_bifunctions(), ", ") + ")");
      }
    } else {
      cfg.bifunction = v.compile(b, "bifunction", [&](const std::string& s) {
        return expr::make_bifunction(s, dim);
      });
    }
    eff["bifunction"] = b;
  }

  auto point_fn = [&](const std::string& s) {
    return std::make_shared<const expr::PointFunction>(s, dim);
  };

  if (doc.contains("operator") && dim > 0) {
    cfg.payload = ProblemConfig::Payload::Operator;
    const auto& ops = doc["operator"];
    if (!ops.is_array() || ops.empty()) {
      v.error("operator", "expected a non-empty array of branches");
    } else {
      for (std::size_t i = 0; i < ops.size(); ++i) {
        const std::string f = "operator[" + std::to_string(i) + "]";
        const auto& br = ops[i];
        if (!br.is_object() || !br.contains("values")) {
          v.error(f, "expected {\"when\": expr, \"values\": [[expr, ...], ...]}");
          continue;
        }
        for (const auto& [key, _] : br.items())
          if (key != "when" && key != "values") v.error(f + "." + key, "unknown field");
        OperatorBranch branch;
        if (br.contains("when"))
          if (auto w = v.compile(br["when"], f + ".when", point_fn)) branch.when = *w;
        const auto& vals = br["values"];
        if (!vals.is_array() || vals.empty()) {
          v.error(f + ".values", "expected a non-empty array of vectors");
          continue;
        }
        for (std::size_t k = 0; k < vals.size(); ++k) {
          const std::string fk = f + ".values[" + std::to_string(k) + "]";
          if (!vals[k].is_array() || vals[k].size() != dim) {
            v.error(fk, "expected " + std::to_string(dim) + " expressions");
            continue;
          }
          std::vector<std::shared_ptr<const expr::PointFunction>> vec;
          for (std::size_t c = 0; c < dim; ++c)
            if (auto e = v.compile(vals[k][c], fk + "[" + std::to_string(c) + "]", point_fn))
              vec.push_back(*e);
          branch.values.push_back(std::move(vec));
        }
        cfg.operator_branches.push_back(std::move(branch));
      }
    }
    eff["operator"] = ops;
  }

  if (doc.contains("game") && dim > 0) {
    cfg.payload = ProblemConfig::Payload::Game;
    const auto& g = doc["game"];
    if (!g.is_object() || !g.contains("players") || !g["players"].is_array() ||
        g["players"].empty()) {
      v.error("game", "expected {\"players\": [...], \"constraint\": expr}");
    } else {
      for (const auto& [key, _] : g.items())
        if (key != "players" && key != "constraint") v.error("game." + key, "unknown field");
      std::vector<int> owner(dim, -1);
      const auto& ps = g["players"];
      for (std::size_t nu = 0; nu < ps.size(); ++nu) {
        const std::string f = "game.players[" + std::to_string(nu) + "]";
        const auto& p = ps[nu];
        if (!p.is_object() || !p.contains("block") || !p.contains("objective")) {
          v.error(f, "expected {\"block\": [indices], \"objective\": expr}");
          continue;
        }
        PlayerSpec spec;
        const auto& blk = p["block"];
        if (!blk.is_array() || blk.empty()) v.error(f + ".block", "expected a non-empty array");
        else
          for (const auto& idx : blk) {
            if (!idx.is_number_integer() || idx.get<long long>() < 1 ||
                static_cast<std::size_t>(idx.get<long long>()) > dim) {
              v.error(f + ".block", "indices must be in 1.." + std::to_string(dim));
              continue;
            }
            const auto i = static_cast<std::size_t>(idx.get<long long>() - 1);
            if (owner[i] != -1) v.error(f + ".block", "coordinate x" + std::to_string(i + 1) +
                                                          " already owned by another player");
            owner[i] = static_cast<int>(nu);
            spec.block.push_back(i);
          }
        if (auto o = v.compile(p["objective"], f + ".objective", point_fn)) spec.objective = *o;
        cfg.players.push_back(std::move(spec));
      }
      for (std::size_t i = 0; i < dim; ++i)
        if (owner[i] == -1) v.error("game.players", "coordinate x" + std::to_string(i + 1) +
                                                        " is not owned by any player");
      if (g.contains("constraint"))
        if (auto c = v.compile(g["constraint"], "game.constraint", point_fn))
          cfg.joint_constraint = *c;
    }
    eff["game"] = g;
  }

  if (doc.contains("constraint_map") && dim > 0) {
    auto ast = v.compile(doc["constraint_map"], "constraint_map", [&](const std::string& s) {
      const auto vars = expr::bifunction_variables(dim);
      return std::make_shared<const expr::Ast>(expr::parse(s, vars));
    });
    if (ast) {
      auto a = *ast;
      cfg.constraint_map = ConstraintMap(
          [a, dim](const Point& x, const Point& y) {
            std::vector<double> vals(x.coords().begin(), x.coords().end());
            vals.insert(vals.end(), y.coords().begin(), y.coords().end());
            return expr::evaluate(*a, vals) != 0.0;
          },
          doc["constraint_map"].get<std::string>());
      eff["constraint_map"] = doc["constraint_map"];
    }
  }

  if (doc.contains("directions") && dim > 0) {
    const auto& ds = doc["directions"];
    if (!ds.is_array() || ds.empty()) {
      v.error("directions", "expected a non-empty array of vectors");
    } else {
      for (std::size_t i = 0; i < ds.size(); ++i)
        if (auto p = v.point(ds[i], "directions[" + std::to_string(i) + "]", dim)) {
          Vector d(p->coords().begin(), p->coords().end());
          if (std::all_of(d.begin(), d.end(), [](double c) { return c == 0.0; }))
            v.error("directions[" + std::to_string(i) + "]", "must be non-zero");
          else cfg.directions.push_back(std::move(d));
        }
      eff["directions"] = ds;
    }
  }

  if (!v.ok()) throw Error(ErrorCode::SchemaError, join(v.errors(), "\n"));
  cfg.effective = std::move(eff);
  return cfg;
}

ProblemConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::ParseError, path.string() + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.string());
}

Operator ProblemConfig::make_operator() const {
  if (payload != Payload::Operator)
    throw Error(ErrorCode::InvalidArgument, "config has no operator payload");
  auto branches = std::make_shared<const std::vector<OperatorBranch>>(operator_branches);
  return Operator(
      [branches](const Point& x) {
        for (const auto& b : *branches) {
          if (b.when && (*b.when)(x) == 0.0) continue;
          std::vector<Vector> out;
          for (const auto& vec : b.values) {
            Vector v;
            for (const auto& c : vec) v.push_back((*c)(x));
            out.push_back(std::move(v));
          }
          return out;
        }
        throw Error(ErrorCode::DomainError, "no operator branch applies at " + x.to_string());
      },
      dimension, "config operator");
}

std::shared_ptr<const Domain> ProblemConfig::joint_domain(unsigned res) const {
  if (!joint_constraint) return domain;
  std::vector<Point> kept;
  for (const auto& p : sample_domain(domain, res))
    if ((*joint_constraint)(p) != 0.0) kept.push_back(p);
  if (kept.empty())
    throw Error(ErrorCode::EmptyInput, "joint constraint excludes every sample point");
  return std::make_shared<const Domain>(Domain::finite_set(std::move(kept)));
}

Game ProblemConfig::make_game(unsigned res) const {
  if (payload != Payload::Game)
    throw Error(ErrorCode::InvalidArgument, "config has no game payload");
  std::vector<std::vector<std::size_t>> partition;
  std::vector<Objective> objectives;
  for (const auto& p : players) {
    partition.push_back(p.block);
    auto fn = p.objective;
    objectives.push_back({[fn](const Point& x) { return (*fn)(x); }, fn->text()});
  }
  return Game(std::move(partition), std::move(objectives), joint_domain(res));
}

Bifunction ProblemConfig::induced_bifunction(unsigned res) const {
  switch (payload) {
    case Payload::Bifunction: return *bifunction;
    case Payload::Operator: return bifunction_from_operator(make_operator());
    case Payload::Game: return nikaido_isoda(make_game(res));
  }
  throw Error(ErrorCode::InvalidArgument, "no payload");
}

namespace {

std::vector<std::string> split_all(const std::optional<std::string>& flag,
                                   const std::vector<std::string>& all,
                                   std::string_view what) {
  const std::string k = flag.value_or("all");
  if (k == "all") return all;
  if (std::find(all.begin(), all.end(), k) == all.end())
    throw Error(ErrorCode::InvalidArgument, "unknown " + std::string(what) + " '" + k +
                                                "' (expected one of: all, " + join(all, ", ") +
                                                ")");
  return {k};
}

json run_check(const ProblemConfig& cfg, const PointSample& sample, unsigned res,
               Tolerance tol, const RunFlags& flags) {
  std::vector<std::string> kinds;
  for (auto k : {PropertyKind::Monotone, PropertyKind::PseudoMonotone,
                 PropertyKind::QuasiMonotone, PropertyKind::CyclicMonotone,
                 PropertyKind::CyclicQuasiMonotone, PropertyKind::ProperlyQuasiMonotone,
                 PropertyKind::UpperSign})
    kinds.emplace_back(to_string(k));
  const bool has_op = cfg.payload == ProblemConfig::Payload::Operator;
  std::vector<std::string> all = kinds;
  all.push_back("lower-sign-continuity");
  all.push_back("upper-sign-continuity");
  auto selected = split_all(flags.kind, all, "property kind");
  if (!flags.kind && !has_op) selected = kinds;

  const auto f = cfg.induced_bifunction(res);
  json certs = json::array();
  for (const auto& k : selected) {
    if (auto pk = parse_property_kind(k)) {
      auto c = check_property(f, sample, *pk, cfg.budget, tol);
      json j = report::certificate(c);
      j["replays"] = replay(c, f);
      certs.push_back(std::move(j));
      continue;
    }
    if (!has_op)
      throw Error(ErrorCode::InvalidArgument, k + " requires an operator payload");
    const auto T = cfg.make_operator();
    auto dirs = cfg.directions;
    if (dirs.empty()) dirs = sample.source() ? default_directions(*sample.source())
                                             : unit_directions(sample.dim());
    certs.push_back(report::certificate(check_sign_continuity(
        T, sample,
        k == "lower-sign-continuity" ? SignContinuity::Lower : SignContinuity::Upper, dirs,
        cfg.budget.segment_subdivisions, tol)));
  }
  return json{{"bifunction", f.provenance()}, {"certificates", std::move(certs)}};
}

json run_fip(const ProblemConfig& cfg, const PointSample& sample, unsigned res,
             Tolerance tol, const RunFlags& flags) {
  const bool has_op = cfg.payload == ProblemConfig::Payload::Operator;
  std::vector<std::string> all{"fip", "fip-star", "diagonal", "subset-witness", "operator-fip"};
  std::vector<std::string> selected;
  if (!flags.kind) {
    selected = {"fip", "fip-star", "diagonal"};
    if (has_op) selected.push_back("operator-fip");
  } else {
    selected = split_all(flags.kind, all, "fip kind");
  }
  const auto f = cfg.induced_bifunction(res);
  json out = json::object();
  out["bifunction"] = f.provenance();
  json reports = json::array();
  for (const auto& k : selected) {
    if (k == "diagonal") {
      reports.push_back(report::certificate(diagonal_check(f, sample, tol)));
      continue;
    }
    FipReport r;
    if (k == "fip") r = check_fip(f, sample, cfg.budget.max_subset, tol);
    else if (k == "fip-star")
      r = check_fip_star(f, sample, cfg.budget.max_subset, cfg.budget.simplex_subdivisions, tol);
    else if (k == "subset-witness")
      r = check_subset_witness(f, sample, cfg.budget.max_subset, tol);
    else {
      if (!has_op) throw Error(ErrorCode::InvalidArgument, "operator-fip requires an operator payload");
      r = check_operator_fip(cfg.make_operator(), sample, cfg.budget.max_subset, tol);
    }
    json j = report::fip(r);
    if (r.variant != FipVariant::Operator) j["reverified"] = reverify(r, f, sample);
    reports.push_back(std::move(j));
  }
  out["reports"] = std::move(reports);
  return out;
}

json run_solve(const ProblemConfig& cfg, const PointSample& sample, unsigned res,
               Tolerance tol, const RunFlags& flags) {
  const std::string problem = flags.problem.value_or("ep");
  const auto f = cfg.induced_bifunction(res);
  const ConstraintMap K = cfg.constraint_map.value_or(ConstraintMap::whole_domain());
  json out{{"problem", problem}, {"bifunction", f.provenance()},
           {"constraint_map", K.description()}};
  if (problem == "ep" || problem == "mep") {
    const auto s = problem == "ep" ? solve_ep(f, sample, tol) : solve_mep(f, sample, tol);
    out["result"] = report::solutions(s);
    out["reverified"] = reverify(s, f, sample);
  } else if (problem == "mqep") {
    const auto s = solve_mqep(f, K, sample, tol);
    out["result"] = report::solutions(s);
    out["reverified"] = reverify(s, f, sample, K);
  } else if (problem == "qep") {
    const auto r = solve_qep(f, K, sample, cfg.budget, tol);
    out["result"] = report::qep(r);
    out["reverified"] = reverify(r.qep, f, sample, K) && reverify(r.mqep, f, sample, K);
  } else if (problem == "bridge") {
    out["result"] = report::bridge(bridge_ep_mep(f, sample, cfg.budget, tol));
  } else if (problem == "selection") {
    json maps = json::array();
    for (const auto& x : sample) {
      try {
        maps.push_back(report::selection(selection_map(f, K, x, sample, tol)));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::EmptyConstraint) throw;
        maps.push_back(json{{"x", report::point(x)}, {"error", "EmptyConstraint"}});
      }
    }
    out["result"] = std::move(maps);
  } else {
    throw Error(ErrorCode::InvalidArgument,
                "unknown problem '" + problem + "' (expected ep, mep, qep, mqep, bridge, selection)");
  }
  return out;
}

json run_vip(const ProblemConfig& cfg, const PointSample& sample, Tolerance tol,
             const RunFlags& flags) {
  if (cfg.payload != ProblemConfig::Payload::Operator)
    throw Error(ErrorCode::InvalidArgument, "vip requires an operator payload");
  const std::string h = flags.hypothesis.value_or(flags.kind.value_or("neg-pseudo"));
  VipHypothesis hyp;
  if (h == "neg-pseudo") hyp = VipHypothesis::NegPseudo;
  else if (h == "upper-sign") hyp = VipHypothesis::UpperSign;
  else throw Error(ErrorCode::InvalidArgument,
                   "unknown hypothesis '" + h + "' (expected neg-pseudo or upper-sign)");
  const auto T = cfg.make_operator();
  const auto r = solve_vip(T, sample, hyp, cfg.budget, tol, cfg.directions);
  const auto direct = solve_vip_direct(T, sample, tol);
  json out{{"hypothesis", h}, {"result", report::vip(r)}};
  out["direct_check_agrees"] = direct.points() == r.solutions.points();
  return out;
}

json run_cycle(const ProblemConfig& cfg, const PointSample& sample, unsigned res,
               Tolerance tol) {
  const auto f = cfg.induced_bifunction(res);
  try {
    const auto w = extract_violation_cycle(f, sample, tol);
    return json{{"status", "cycle"}, {"cycle", report::cycle(w)}};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoViolation) throw;
    return json{{"status", "NoViolation"}, {"message", e.what()}};
  }
}

}  // namespace

json run_command(std::string_view command, const ProblemConfig& config,
                 const RunFlags& flags) {
  const auto started = std::chrono::steady_clock::now();
  const unsigned res = flags.resolution.value_or(config.resolution);
  if (res == 0) throw Error(ErrorCode::InvalidResolution, "resolution must be >= 1");
  const Tolerance tol = flags.tol ? Tolerance(*flags.tol) : config.tol;

  json eff = config.effective;
  eff["resolution"] = res;
  eff["tolerance"] = tol.value;

  const auto cmds = commands();
  if (std::find(cmds.begin(), cmds.end(), command) == cmds.end())
    throw Error(ErrorCode::InvalidArgument, "unknown command '" + std::string(command) +
                                                "' (expected one of: " + join(cmds, ", ") + ")");

  const auto domain = config.payload == ProblemConfig::Payload::Game
                          ? config.joint_domain(res)
                          : config.domain;
  const PointSample sample = sample_domain(domain, res);

  json result;
  if (command == "check") result = run_check(config, sample, res, tol, flags);
  else if (command == "fip") result = run_fip(config, sample, res, tol, flags);
  else if (command == "solve") result = run_solve(config, sample, res, tol, flags);
  else if (command == "vip") result = run_vip(config, sample, tol, flags);
  else if (command == "cycle") result = run_cycle(config, sample, res, tol);
  else {
    if (config.payload != ProblemConfig::Payload::Game)
      throw Error(ErrorCode::InvalidArgument, "gnep requires a game payload");
    const auto game = config.make_game(res);
    result = report::gnep(solve_gnep(game, sample, tol), game);
  }

  json flag_echo = json::object();
  if (flags.kind) flag_echo["kind"] = *flags.kind;
  if (flags.problem) flag_echo["problem"] = *flags.problem;
  if (flags.hypothesis) flag_echo["hypothesis"] = *flags.hypothesis;
  if (flags.tol) flag_echo["tol"] = *flags.tol;
  if (flags.resolution) flag_echo["resolution"] = *flags.resolution;

  json rep;
  rep["tool"] = "equilib";
  rep["version"] = kVersion;
  rep["command"] = command;
  rep["flags"] = std::move(flag_echo);
  rep["config_hash"] = "fnv1a64:" + fnv1a64_hex(eff.dump());
  rep["config"] = std::move(eff);
  rep["budgets"] = report::budget(config.budget);
  rep["sample_size"] = sample.size();
  rep["result"] = std::move(result);
  const auto elapsed = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  rep["timing"] = json{{"timestamp", timestamp_utc()}, {"runtime_ms", elapsed}};
  return rep;
}

json replayable_part(const json& report) {
  json copy = report;
  copy.erase("timing");
  return copy;
}

}  // namespace equilib
