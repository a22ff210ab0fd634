#include "nvgroups/serialize.hpp"

#include <cmath>

namespace nvgroups {

using nlohmann::json;

std::array<double, 4> rounded_coords(const Quaternion& q) {
  return {round12(q.w), round12(q.x), round12(q.y), round12(q.z)};
}

std::vector<GroupedOrbit> group_by_orbit(const CosetSpace& space, const OrbitMultiset& m,
                                         double tol) {
  std::vector<GroupedOrbit> groups;
  for (const auto& item : m.items) {
    bool placed = false;
    for (auto& g : groups) {
      if (space.orbit_distance(g.orbit, item) <= tol) {
        ++g.multiplicity;
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({item, 1});
  }
  return groups;
}

json space_json(const CosetSpace& space) {
  return {{"base", to_string(space.base())}, {"group", space.group().spec().name()}, {"n", space.n()}};
}

json orbit_json(const CosetSpace& space, const Orbit& orbit) {
  return {{"space", space_json(space)}, {"rep", rounded_coords(orbit.rep)}};
}

json multiset_json(const CosetSpace& space, const OrbitMultiset& m) {
  json entries = json::array();
  for (const auto& g : group_by_orbit(space, m)) {
    entries.push_back({{"rep", rounded_coords(g.orbit.rep)}, {"multiplicity", g.multiplicity}});
  }
  return {{"space", space_json(space)},
          {"size", m.size()},
          {"tie_warnings", m.tie_warnings()},
          {"entries", entries}};
}

json group_json(const RotationGroup& group) {
  json elements = json::array();
  for (const auto& g : group.elements()) {
    const AxisAngle r = rotation_of(g.rep());
    json axis = nullptr;
    if (r.axis) axis = {round12(r.axis->x), round12(r.axis->y), round12(r.axis->z)};
    elements.push_back({{"rep", rounded_coords(g.rep())},
                        {"order", element_order(g, group)},
                        {"angle", round12(r.angle)},
                        {"axis", axis}});
  }
  return {{"group", group.spec().name()},
          {"n", group.order()},
          {"cover_size", group.cover().size()},
          {"elements", elements}};
}

json report_json(const AxiomReport& report) {
  return {{"space", report.space},
          {"axiom", report.axiom},
          {"trials", report.trials},
          {"failures", report.failures},
          {"max_deviation", report.max_deviation},
          {"warnings", report.warnings},
          {"tolerance", report.tolerance},
          {"passed", report.passed()}};
}

json report_json(const ClassificationReport& report) {
  return {{"base", to_string(report.base)},
          {"family", report.spec.name()},
          {"n", report.n},
          {"parity", report.even() ? "even" : "odd"},
          {"tau_fixed_points", report.tau_fixed_points},
          {"predicted_space", to_string(report.predicted)},
          {"evidence",
           {{"suspension", report.suspension.passed},
            {"riemann_hurwitz", report.riemann_hurwitz.holds},
            {"parity_consistent", report.parity_consistent}}}};
}

}  // namespace nvgroups
