#pragma once

#include "apps.hpp"
#include "certificate.hpp"
#include "fip.hpp"
#include "json.hpp"
#include "solvers.hpp"

namespace equilib::report {

using json = nlohmann::ordered_json;

json point(const Point& p);
json points(const std::vector<Point>& ps);
json budget(const Budget& b);
json certificate(const Certificate& c);
json fip(const FipReport& r);
json solutions(const SolutionSet& s);
json cycle(const CycleWitness& w);
json bridge(const BridgeReport& r);
json selection(const SelectionMapResult& r);
json qep(const QepReport& r);
json vip(const VipReport& r);
json gnep(const GnepReport& r, const Game& game);

}  // namespace equilib::report
