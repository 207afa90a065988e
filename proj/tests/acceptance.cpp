// Prints one PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "apps.hpp"
#include "config.hpp"
#include "fip.hpp"
#include "monotonicity.hpp"
#include "oracle.hpp"
#include "solvers.hpp"

using namespace equilib;

namespace {

std::string g_corpus = EQUILIB_CORPUS_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first failed expectation of a criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && out_.pass) {
      out_.pass = false;
      out_.detail = what;
    }
  }
  Outcome done(const std::string& summary) {
    if (out_.pass) out_.detail = summary + " (" + std::to_string(checks_) + " checks)";
    return out_;
  }

 private:
  Outcome out_;
  std::size_t checks_ = 0;
};

ProblemConfig corpus(const std::string& name) { return load_config(g_corpus + "/" + name); }

PointSample sample_of(const ProblemConfig& cfg, unsigned res) {
  return sample_domain(
      cfg.payload == ProblemConfig::Payload::Game ? cfg.joint_domain(res) : cfg.domain, res);
}

std::set<std::size_t> indices(const SolutionSet& s) {
  std::set<std::size_t> out;
  for (const auto& sol : s.solutions) out.insert(sol.index);
  return out;
}

std::vector<std::string> corpus_configs() {
  std::ifstream in(g_corpus + "/manifest.json");
  const auto m = json::parse(in);
  std::set<std::string> names;
  for (const auto& r : m["runs"]) names.insert(r["config"].get<std::string>());
  return {names.begin(), names.end()};
}

// Random value tables on index samples {0, .., n-1}.
struct RandomInstance {
  std::string family;
  oracle::Table table;
  Bifunction f;
  PointSample sample;
};

std::vector<RandomInstance> random_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> size(4, 6);
  const char* families[] = {"uniform", "potential", "skew", "negative-biased"};
  std::vector<RandomInstance> out;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = static_cast<std::size_t>(size(rng));
    const std::string fam = families[k % 4];
    oracle::Table t(n, std::vector<double>(n));
    std::vector<double> h(n);
    for (auto& v : h) v = u(rng);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (fam == "uniform") t[i][j] = u(rng);
        else if (fam == "potential") t[i][j] = h[j] - h[i];
        else if (fam == "negative-biased") t[i][j] = u(rng) - 0.6;
        else if (j > i) t[i][j] = u(rng), t[j][i] = -t[i][j];
      }
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(Point{static_cast<double>(i)});
    Bifunction f(
        [t](const Point& x, const Point& y) {
          return t[static_cast<std::size_t>(x[0])][static_cast<std::size_t>(y[0])];
        },
        "table:" + fam);
    out.push_back({fam, t, f, sample_domain(Domain::finite_set(pts), 1)});
  }
  return out;
}

const std::vector<RandomInstance>& random_instances() {
  static const auto instances = random_corpus(240, 20240601);
  return instances;
}

Outcome criterion1() {
  Checker c;
  const auto cfg = corpus("example1.json");
  const auto& f = *cfg.bifunction;
  for (unsigned res : {cfg.resolution, 10u}) {
    const auto s = sample_domain(cfg.domain, res);
    const auto fip = check_fip(f, s, cfg.budget.max_subset);
    c.expect(fip.holds(), "check_fip not HOLDS at res " + std::to_string(res));
    for (const auto& e : fip.witness_table)
      c.expect(e.witness == Point{0.0}, "fip witness is not 0");
    const std::vector<Point> one{Point{1.0}};
    c.expect(!find_witness(f, one, simplex_grid(one, cfg.budget.simplex_subdivisions).points()),
             "A = {1} has a fip* witness");
  }
  const auto s = sample_domain(cfg.domain, cfg.resolution);
  const auto star = check_fip_star(f, s, cfg.budget.max_subset, cfg.budget.simplex_subdivisions);
  c.expect(!star.holds(), "check_fip_star not VIOLATED");
  c.expect(star.violated_subset == std::vector<Point>{Point{1.0}}, "violated subset is not {1}");
  c.expect(f(Point{1.0}, Point{1.0}) == 1.0, "f(1,1) != 1.0 exactly");
  const auto diag = diagonal_check(f, s);
  c.expect(!diag.holds(), "diagonal_check not VIOLATED");
  if (!diag.holds()) {
    const auto& w = std::get<PointWitness>(*diag.witness);
    c.expect(w.x == Point{1.0} && w.value == 1.0, "diagonal witness is not x = 1");
  }
  return c.done("fip HOLDS (witness 0), fip* VIOLATED at A={1}, diagonal VIOLATED at x=1");
}

Outcome criterion2() {
  Checker c;
  const auto cfg = corpus("example2.json");
  const auto& f = *cfg.bifunction;
  c.expect(cfg.budget.max_subset == 3 && cfg.budget.simplex_subdivisions == 4,
           "example2 budgets are not max_subset 3 / subdivisions 4");
  for (unsigned res : {cfg.resolution, 4u}) {
    const auto s = sample_domain(cfg.domain, res);
    const auto star = check_fip_star(f, s, 3, 4);
    c.expect(star.holds(), "fip* not HOLDS at res " + std::to_string(res));
    for (const auto& e : star.witness_table)
      for (auto i : e.subset)
        c.expect(std::abs(s[i][0] - e.witness[0]) <= 0.5, "fip* witness farther than 1/2");
  }
  const auto q = check_property(f, sample_domain(cfg.domain, cfg.resolution),
                                PropertyKind::QuasiMonotone, cfg.budget);
  c.expect(!q.holds(), "quasi-monotone not VIOLATED");
  if (!q.holds()) {
    const auto& w = std::get<PairWitness>(*q.witness);
    c.expect(w.x == Point{0.0} && w.y == Point{1.0}, "pair is not (0, 1)");
    c.expect(w.f_xy == 1.0 && w.f_yx == 1.0, "pair values are not exactly 1.0");
  }
  return c.done("fip* HOLDS within 1/2, quasi-monotone VIOLATED at (0,1) with values 1.0");
}

Outcome criterion3() {
  Checker c;
  std::size_t violated = 0;
  const Tolerance tol(0.0);
  for (const auto& inst : random_instances()) {
    const auto n = static_cast<unsigned>(inst.sample.size());
    Budget b;
    b.max_cycle_len = n;
    const auto cyc = check_property(inst.f, inst.sample, PropertyKind::CyclicQuasiMonotone, b, tol);
    const auto sub = check_subset_witness(inst.f, inst.sample, n, tol);
    c.expect(cyc.holds() == sub.holds(), "cycle and subset criteria disagree (" + inst.family + ")");
    c.expect(cyc.holds() == !oracle::cyclic_quasi_violated(inst.table, 0.0, n),
             "cycle check disagrees with oracle");
    c.expect(sub.holds() == !oracle::subset_witness_violated(inst.table, 0.0),
             "subset check disagrees with oracle");
    if (cyc.holds() || sub.holds()) continue;
    ++violated;
    std::vector<Point> A = sub.violated_subset;
    const auto w = extract_violation_cycle(inst.f, sample_domain(Domain::finite_set(A), 1), tol);
    c.expect(w.points.front() == w.points.back(), "extracted cycle is not closed");
    for (std::size_t k = 0; k < w.length(); ++k)
      c.expect(w.edge_values[k] > 0.0 && inst.f(w.points[k], w.points[k + 1]) > 0.0,
               "extracted cycle edge is not positive");
  }
  c.expect(violated > 0 && violated < random_instances().size(), "degenerate random corpus");
  return c.done(std::to_string(random_instances().size()) + " random tables agree, " +
                std::to_string(violated) + " self-certifying cycles");
}

Outcome criterion4() {
  Checker c;
  const Tolerance tol(0.0);
  std::size_t mono = 0, cmono = 0;
  for (const auto& inst : random_instances()) {
    Budget b;
    b.max_cycle_len = static_cast<unsigned>(inst.sample.size());
    auto holds = [&](PropertyKind k) { return check_property(inst.f, inst.sample, k, b, tol).holds(); };
    const bool m = holds(PropertyKind::Monotone), p = holds(PropertyKind::PseudoMonotone),
               q = holds(PropertyKind::QuasiMonotone), cm = holds(PropertyKind::CyclicMonotone),
               cq = holds(PropertyKind::CyclicQuasiMonotone);
    mono += m;
    cmono += cm;
    c.expect(!m || p, "monotone but not pseudo-monotone (" + inst.family + ")");
    c.expect(!p || q, "pseudo-monotone but not quasi-monotone (" + inst.family + ")");
    c.expect(!cm || cq, "cyclic monotone but not cyclic quasi-monotone (" + inst.family + ")");
  }
  return c.done("zero exceptions; " + std::to_string(mono) + " monotone, " +
                std::to_string(cmono) + " cyclic monotone instances");
}

// Every bifunction instance of the bundled corpus plus the random tables.
void for_each_instance(const std::function<void(const std::string&, const Bifunction&,
                                                const PointSample&)>& visit) {
  for (const auto& name : corpus_configs()) {
    const auto cfg = corpus(name);
    visit(name, cfg.induced_bifunction(cfg.resolution), sample_of(cfg, cfg.resolution));
  }
  for (const auto& inst : random_instances()) visit("random " + inst.family, inst.f, inst.sample);
}

Outcome criterion5() {
  Checker c;
  std::size_t count = 0;
  for_each_instance([&](const std::string& name, const Bifunction& f, const PointSample& s) {
    ++count;
    const Tolerance tol;
    c.expect(indices(solve_mep(f, s, tol)) ==
                 oracle::mep_by_intersection(oracle::table(f, s.points()), tol.value),
             "solve_mep differs from explicit intersection on " + name);
  });
  return c.done("exact equality on " + std::to_string(count) + " instances");
}

Outcome criterion6() {
  Checker c;
  std::size_t count = 0;
  for_each_instance([&](const std::string& name, const Bifunction& f, const PointSample& s) {
    ++count;
    c.expect(indices(solve_mep(f, s)) == indices(solve_ep(f.dual(), s)),
             "MEP(f) != EP(g) on " + name);
  });
  return c.done("exact equality on " + std::to_string(count) + " instances");
}

Outcome criterion7() {
  Checker c;
  const auto cfg = corpus("quasi_opt.json");
  c.expect(cfg.resolution == 10, "quasi_opt is not at resolution 10");
  const auto s = sample_of(cfg, cfg.resolution);
  const auto r = solve_qep(*cfg.bifunction, *cfg.constraint_map, s, cfg.budget, cfg.tol);
  c.expect(r.qep.points() == std::vector<Point>{Point{0.0}}, "solve_qep is not exactly {0}");
  for (const auto& sol : r.qep.solutions)
    c.expect(std::abs(sol.slack) <= 1e-9, "residual is not 0 within 1e-9");
  c.expect(reverify(r.qep, *cfg.bifunction, s, *cfg.constraint_map), "QEP reverification failed");
  return c.done("solve_qep = {0}, residual 0");
}

Outcome criterion8() {
  Checker c;
  const std::pair<const char*, double> cases[] = {{"vip_gradient.json", 0.0},
                                                  {"vip_constant.json", 1.0}};
  for (const auto& [name, expected] : cases) {
    const auto cfg = corpus(name);
    const auto s = sample_of(cfg, cfg.resolution);
    const auto T = cfg.make_operator();
    for (auto h : {VipHypothesis::NegPseudo, VipHypothesis::UpperSign}) {
      const auto r = solve_vip(T, s, h, cfg.budget, cfg.tol);
      c.expect(r.solutions.points() == std::vector<Point>{Point{expected}},
               std::string("solve_vip wrong on ") + name);
    }
    const auto op = check_operator_fip(T, s, cfg.budget.max_subset, cfg.tol);
    const auto fip = check_fip(bifunction_from_operator(T), s, cfg.budget.max_subset, cfg.tol);
    c.expect(op.verdict == fip.verdict, std::string("operator fip != fip(f_T) on ") + name);
    c.expect(op.holds(), std::string("operator fip not HOLDS on ") + name);
  }
  return c.done("{2x} -> {0}, {-1} -> {1}, operator fip verdict = fip(f_T) verdict");
}

Outcome criterion9() {
  Checker c;
  const auto cfg = corpus("gnep_separable.json");
  const auto game = cfg.make_game(cfg.resolution);
  const auto s = sample_of(cfg, cfg.resolution);
  const auto r = solve_gnep(game, s, cfg.tol);
  c.expect(r.equilibria == std::vector<Point>{Point{0.3, 0.3}}, "GNE set is not {(0.3, 0.3)}");
  c.expect(r.rejected.empty(), "some MEP point failed verify_gne");
  c.expect(verify_gne(game, Point{0.3, 0.3}, s, cfg.tol).pass, "verify_gne fails at (0.3, 0.3)");
  const auto f0 = nikaido_isoda(game);
  auto phi = [&](const Point& z) { return game.objective(0, z) + game.objective(1, z); };
  double worst = 0.0;
  for (const auto& x : s) {
    c.expect(f0(x, x) == 0.0, "f_0 diagonal is not exactly 0");
    for (const auto& y : s) worst = std::max(worst, std::abs(f0(x, y) - (phi(y) - phi(x))));
  }
  c.expect(worst <= 1e-12, "f_0 deviates from phi(y) - phi(x)");
  std::ostringstream d;
  d << "GNE {(0.3, 0.3)} verified; max |f_0 - (phi(y)-phi(x))| = " << worst;
  return c.done(d.str());
}

Outcome criterion10() {
  Checker c;
  const Budget defaults;
  for (const char* name : {"proper1_linear.json", "proper2_potential.json", "proper3_scaled.json",
                           "proper4_zero.json", "proper5_weighted.json"}) {
    const auto cfg = corpus(name);
    c.expect(cfg.budget.max_subset == defaults.max_subset &&
                 cfg.budget.simplex_subdivisions == defaults.simplex_subdivisions,
             std::string(name) + " overrides default budgets");
    const auto s = sample_of(cfg, cfg.resolution);
    const auto& f = *cfg.bifunction;
    c.expect(check_property(f, s, PropertyKind::ProperlyQuasiMonotone, defaults, cfg.tol).holds(),
             std::string(name) + " is not properly quasi-monotone on the sample");
    c.expect(check_fip_star(f, s, defaults.max_subset, defaults.simplex_subdivisions, cfg.tol).holds(),
             std::string("fip* not HOLDS on ") + name);
  }
  return c.done("properly quasi-monotone and fip* HOLDS on all 5");
}

Outcome criterion11() {
  Checker c;
  std::ifstream in(g_corpus + "/manifest.json");
  const auto m = json::parse(in);
  std::size_t runs = 0;
  for (const auto& r : m["runs"]) {
    const auto cfg = corpus(r["config"].get<std::string>());
    RunFlags flags;
    if (r.contains("flags")) {
      const auto& fl = r["flags"];
      if (fl.contains("kind")) flags.kind = fl["kind"].get<std::string>();
      if (fl.contains("problem")) flags.problem = fl["problem"].get<std::string>();
      if (fl.contains("hypothesis")) flags.hypothesis = fl["hypothesis"].get<std::string>();
    }
    const std::string cmd = r["command"].get<std::string>();
    const auto first = replayable_part(run_command(cmd, cfg, flags)).dump();
    const auto second = replayable_part(run_command(cmd, cfg, flags));
    c.expect(first == second.dump(), "reports differ for " + r.dump());
    // The embedded effective config alone reproduces the result.
    const auto replayed = replayable_part(run_command(cmd, parse_config(second["config"].dump()), flags));
    c.expect(replayed["result"] == second["result"], "embedded config does not replay " + r.dump());
    c.expect(replayed["config_hash"] == second["config_hash"], "config hash unstable " + r.dump());
    ++runs;
  }
  return c.done(std::to_string(runs) + " corpus runs byte-identical and replayable");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_corpus = argv[1];
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"xy on [0,1]: fip / fip* / diagonal", criterion1},
      {"distance indicator: fip* holds, quasi-monotone fails at (0,1)", criterion2},
      {"cyclic quasi-monotone: cycles vs subset witnesses", criterion3},
      {"implication diagram on random tables", criterion4},
      {"MEP equals intersection of sublevel sets", criterion5},
      {"MEP(f) equals EP(-f(y,x))", criterion6},
      {"quasi-optimisation QEP", criterion7},
      {"VIP instances and operator fip", criterion8},
      {"separable GNEP", criterion9},
      {"properly quasi-monotone corpus has fip*", criterion10},
      {"determinism and replay", criterion11},
  };
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  int id = 0;
  for (const auto& [title, run] : criteria) {
    ++id;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << title << ": " << o.detail
              << "\n";
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << "(" << id - failures << "/" << id
            << ", " << secs << " s)\n";
  return failures ? 1 : 0;
}
