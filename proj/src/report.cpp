#include "report.hpp"

namespace equilib::report {

json point(const Point& p) {
  json a = json::array();
  for (double c : p.coords()) a.push_back(c);
  return a;
}

json points(const std::vector<Point>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(point(p));
  return a;
}

json budget(const Budget& b) {
  return json{{"max_cycle_len", b.max_cycle_len},
              {"max_subset", b.max_subset},
              {"simplex_subdivisions", b.simplex_subdivisions},
              {"segment_subdivisions", b.segment_subdivisions}};
}

json cycle(const CycleWitness& w) {
  return json{{"type", "cycle"},
              {"points", points(w.points)},
              {"edge_values", w.edge_values}};
}

namespace {

struct WitnessVisitor {
  json operator()(const PairWitness& w) const {
    return json{{"type", "pair"}, {"x", point(w.x)}, {"y", point(w.y)},
                {"f_xy", w.f_xy}, {"f_yx", w.f_yx}};
  }
  json operator()(const CycleWitness& w) const { return cycle(w); }
  json operator()(const SubsetWitness& w) const {
    return json{{"type", "subset"}, {"subset", points(w.subset)},
                {"x", point(w.x)}, {"values", w.values}};
  }
  json operator()(const PointWitness& w) const {
    return json{{"type", "point"}, {"x", point(w.x)}, {"value", w.value}};
  }
  json operator()(const SegmentWitness& w) const {
    return json{{"type", "segment"}, {"x", point(w.x)}, {"y", point(w.y)},
                {"segment", points(w.segment)},
                {"premise_values", w.premise_values}, {"f_xy", w.f_xy}};
  }
  json operator()(const DirectionWitness& w) const {
    return json{{"type", "direction"}, {"x", point(w.x)},
                {"direction", w.direction},
                {"conclusion_value", w.conclusion_value}};
  }
};

}  // namespace

json certificate(const Certificate& c) {
  json j{{"property", c.property},
         {"verdict", std::string(to_string(c.verdict))},
         {"tol", c.tol},
         {"budget", budget(c.budget)},
         {"stats", {{"checks", c.stats.checks}, {"skipped", c.stats.skipped}}}};
  j["witness"] = c.witness ? std::visit(WitnessVisitor{}, *c.witness) : json(nullptr);
  if (!c.notes.empty()) j["notes"] = c.notes;
  return j;
}

json fip(const FipReport& r) {
  json table = json::array();
  for (const auto& e : r.witness_table)
    table.push_back(json{{"subset", e.subset}, {"witness", point(e.witness)}});
  json j{{"variant", std::string(to_string(r.variant))},
         {"verdict", std::string(to_string(r.verdict))},
         {"tol", r.tol},
         {"budget", {{"max_subset", r.max_subset},
                     {"simplex_subdivisions", r.simplex_subdivisions}}},
         {"subsets_checked", r.subsets_checked}};
  j["violated_subset"] = r.violated_subset.empty() ? json(nullptr)
                                                   : points(r.violated_subset);
  j["witness_table"] = std::move(table);
  return j;
}

json solutions(const SolutionSet& s) {
  json list = json::array();
  for (const auto& sol : s.solutions)
    list.push_back(json{{"point", point(sol.point)},
                        {"index", sol.index},
                        {"slack", sol.slack}});
  json j{{"problem", std::string(to_string(s.problem))},
         {"count", s.solutions.size()},
         {"sample_size", s.sample_size},
         {"tol", s.tol},
         {"solutions", std::move(list)}};
  if (!s.notes.empty()) j["notes"] = s.notes;
  return j;
}

namespace {

json inclusion(const Inclusion& inc) {
  json j{{"holds", inc.holds}};
  j["offending"] = inc.offending ? point(*inc.offending) : json(nullptr);
  return j;
}

}  // namespace

json bridge(const BridgeReport& r) {
  return json{{"ep", solutions(r.ep)},
              {"mep", solutions(r.mep)},
              {"pseudo_monotone", certificate(r.pseudo)},
              {"neg_pseudo_monotone", certificate(r.neg_pseudo)},
              {"upper_sign", certificate(r.upper_sign)},
              {"ep_in_mep", inclusion(r.ep_in_mep)},
              {"mep_in_ep", inclusion(r.mep_in_ep)},
              {"artifacts", r.artifacts}};
}

json selection(const SelectionMapResult& r) {
  return json{{"x", point(r.x)},
              {"image", points(r.image)},
              {"empty", r.empty},
              {"discretization_warning", r.discretization_warning}};
}

json qep(const QepReport& r) {
  json ups = json::array();
  for (const auto& u : r.upgrades)
    ups.push_back(json{{"point", point(u.point)},
                       {"upper_sign_local", u.upper_sign_local},
                       {"solves_qep", u.solves_qep}});
  return json{{"qep", solutions(r.qep)},
              {"mqep", solutions(r.mqep)},
              {"upgrades", std::move(ups)}};
}

json vip(const VipReport& r) {
  return json{{"solutions", solutions(r.solutions)},
              {"operator_fip", fip(r.operator_fip)},
              {"hypothesis", certificate(r.hypothesis)},
              {"warnings", r.warnings}};
}

json gnep(const GnepReport& r, const Game& game) {
  json rejected = json::array();
  for (const auto& [p, check] : r.rejected)
    rejected.push_back(json{{"point", point(p)},
                            {"worst_improvement", check.worst_improvement},
                            {"per_player", check.per_player}});
  return json{{"players", game.players()},
              {"minty", solutions(r.mep)},
              {"equilibria", points(r.equilibria)},
              {"verified", r.rejected.empty()},
              {"rejected", std::move(rejected)}};
}

}  // namespace equilib::report
