#include "polybn/report.hpp"

#include <map>

#include "polybn/brill_noether.hpp"

namespace polybn {

using nlohmann::ordered_json;

ordered_json class_json(const PolygonClass& c) {
  ordered_json vertices = ordered_json::array();
  for (const auto& v : c.representative.vertices())
    vertices.push_back(ordered_json::array({v.x, v.y}));
  return ordered_json{{"vertices", std::move(vertices)},
                      {"dim", c.representative.dim()},
                      {"n_points", c.n_points},
                      {"n_interior", c.n_interior},
                      {"lw", c.lw}};
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json j = class_json(v.polygon_class);
  j["genus"] = v.genus;
  j["admissible"] = v.admissible;
  j["reason"] = reason_tag(v.reason);
  return j;
}

ordered_json full_report(unsigned threads, Int max_genus) {
  ordered_json report;
  report["schema"] = 1;
  report["max_genus"] = max_genus;

  ordered_json admissible = ordered_json::array();
  ordered_json excluded = ordered_json::array();
  int degenerate = 0, two_dimensional = 0;
  std::map<Int, int> by_genus;
  for (const auto& v : classify_interior_polygons(max_genus, threads)) {
    if (v.admissible) {
      admissible.push_back(verdict_json(v));
      ++(v.polygon_class.representative.dim() < 2 ? degenerate : two_dimensional);
      ++by_genus[v.genus];
    } else {
      excluded.push_back(verdict_json(v));
    }
  }
  report["admissible"] = std::move(admissible);
  report["admissible_count"] = degenerate + two_dimensional;
  ordered_json genus_counts;
  for (const auto& [g, n] : by_genus) genus_counts[std::to_string(g)] = n;
  report["admissible_breakdown"] = ordered_json{
      {"degenerate", degenerate},
      {"two_dimensional", two_dimensional},
      {"by_genus", std::move(genus_counts)}};
  report["excluded"] = std::move(excluded);

  ordered_json midrange;
  ordered_json genus10;
  for (Int g = 7; g <= 12; ++g) {
    auto summary = verify_midrange(g, threads);
    int width_excluded = 0;
    ordered_json named = ordered_json::array();
    for (const auto& v : summary.verdicts) {
      if (v.reason == Reason::kWidthExcluded)
        ++width_excluded;
      else
        named.push_back(verdict_json(v));
    }
    ordered_json row{{"max_lw_delta", summary.max_lw_delta},
                     {"half_threshold", summary.half_threshold},
                     {"width_bound_holds", summary.width_bound_holds},
                     {"interior_class_count", summary.verdicts.size()},
                     {"width_excluded_count", width_excluded},
                     {"named_rule_classes", named}};
    if (g == 10) {
      genus10["interior_class_count"] = summary.verdicts.size();
      for (const auto& v : summary.verdicts)
        if (v.reason == Reason::kGenus10Clifford) {
          genus10["exceptional_class"] = verdict_json(v);
          genus10["rho_10_9_3"] = rho({10, 9, 3});
        }
    }
    midrange[std::to_string(g)] = std::move(row);
  }
  report["midrange"] = std::move(midrange);
  report["genus10"] = std::move(genus10);

  ordered_json holding = ordered_json::array();
  Int last_holding = 0;
  for (const auto& [g, ok] : verify_largeg(200))
    if (ok) {
      holding.push_back(g);
      last_holding = g;
    }
  report["crossover"] = ordered_json{{"holding_genera", std::move(holding)},
                                     {"last_holding_genus", last_holding},
                                     {"checked_up_to", 200}};
  report["crossover_genus"] = last_holding;

  // The exclusions above are verified arithmetic; the existence of
  // curves realizing the admissible classes is established elsewhere
  // and is not re-proved by this toolkit.
  report["directions"] =
      ordered_json{{"exclusions", "verified (width caps and named divisor rules, "
                                  "all Brill-Noether numbers recomputed)"},
                   {"existence", "not verified (requires explicit curve "
                                 "constructions, out of scope)"}};
  return report;
}

}  // namespace polybn
