#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include <json.hpp>

#include "nvgroups/axioms.hpp"
#include "nvgroups/coset.hpp"
#include "nvgroups/rotgroups.hpp"
#include "nvgroups/topology.hpp"

namespace nvgroups {

std::array<double, 4> rounded_coords(const Quaternion& q);

struct GroupedOrbit {
  Orbit orbit;
  std::size_t multiplicity = 0;
};

// Collapses orbit-equal entries (within tol), keeping first-seen order.
std::vector<GroupedOrbit> group_by_orbit(const CosetSpace& space, const OrbitMultiset& m,
                                         double tol = kPointEps);

nlohmann::json space_json(const CosetSpace& space);
nlohmann::json orbit_json(const CosetSpace& space, const Orbit& orbit);
nlohmann::json multiset_json(const CosetSpace& space, const OrbitMultiset& m);
nlohmann::json group_json(const RotationGroup& group);
nlohmann::json report_json(const AxiomReport& report);
nlohmann::json report_json(const ClassificationReport& report);

}  // namespace nvgroups
