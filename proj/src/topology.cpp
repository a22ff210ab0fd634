#include "nvgroups/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

#include "nvgroups/errors.hpp"
#include "nvgroups/tolerance.hpp"

namespace nvgroups {
namespace {

constexpr double kHalfTurnEps = 1e-9;

bool vec_less(const Vec3& a, const Vec3& b) {
  return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
}

bool contains(const std::vector<Vec3>& points, const Vec3& p) {
  return std::any_of(points.begin(), points.end(),
                     [&](const Vec3& q) { return (q - p).norm() < kPointEps; });
}

}  // namespace

Vec3 AntipodalSolutions::circle_point(double t) const {
  // Any vector not parallel to the axis spans the orthogonal plane with it.
  const Vec3 helper = std::abs(axis.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 u = cross(axis, helper).normalized();
  const Vec3 v = cross(axis, u);
  return u * std::cos(t) + v * std::sin(t);
}

std::vector<Vec3> AntipodalSolutions::sample_circle(std::size_t count) const {
  std::vector<Vec3> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    out.push_back(circle_point(2 * std::numbers::pi * static_cast<double>(s) /
                               static_cast<double>(count)));
  }
  return out;
}

AntipodalSolutions solve_antipodal(const UnitQuaternion& q) {
  // Re(q x q^-1) = Re(x), so a solution is purely imaginary and q acts on it
  // as the rotation g; g(x) = -x has a unit solution iff g is a half-turn.
  const AxisAngle r = rotation_of(q);
  AntipodalSolutions out;
  if (r.axis && std::abs(r.angle - std::numbers::pi) <= kHalfTurnEps) {
    out.solvable = true;
    out.axis = *r.axis;
  }
  return out;
}

bool tau_has_fixed_points(const RotationGroup& group) {
  return std::any_of(group.cover().begin(), group.cover().end(),
                     [](const UnitQuaternion& q) { return solve_antipodal(q).solvable; });
}

SuspensionEvidence check_suspension(const RotationGroup& group, std::size_t samples,
                                    std::uint64_t seed, const QuaternionAction& action) {
  const QuaternionAction act =
      action ? action : [](const UnitQuaternion& q, const Quaternion& x) { return conj_action(q, x); };
  SuspensionEvidence ev;
  for (const auto& q : group.cover()) {
    ev.pole_deviation = std::max(ev.pole_deviation, distance(act(q, Quaternion::one()), Quaternion::one()));
    ev.pole_deviation = std::max(ev.pole_deviation, distance(act(q, -Quaternion::one()), -Quaternion::one()));
  }
  Rng rng(seed, 5);
  for (std::size_t s = 0; s < samples; ++s) {
    const UnitQuaternion x = random_unit(rng);
    for (const auto& q : group.cover()) {
      ev.max_deviation = std::max(ev.max_deviation, std::abs(re(act(q, x)) - re(x)));
    }
  }
  ev.passed = ev.max_deviation < kReTolerance && ev.pole_deviation < kReTolerance;
  return ev;
}

std::vector<std::size_t> SingularOrbitData::signature() const {
  std::vector<std::size_t> sig;
  for (const auto& o : orbits) sig.push_back(o.stabilizer);
  return sig;
}

SingularOrbitData singular_orbits(const RotationGroup& group) {
  SingularOrbitData data;
  data.group_order = group.order();

  std::vector<Vec3> poles;
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (i == group.identity_index()) continue;
    const AxisAngle r = rotation_of(group.elements()[i].rep());
    if (!r.axis) continue;
    for (const Vec3& p : {*r.axis, -*r.axis}) {
      if (!contains(poles, p)) poles.push_back(p);
    }
  }

  std::vector<bool> assigned(poles.size(), false);
  for (std::size_t s = 0; s < poles.size(); ++s) {
    if (assigned[s]) continue;
    const Vec3 p = poles[s];
    std::vector<Vec3> orbit;
    std::size_t stabilizer = 0;
    for (const auto& g : group.elements()) {
      const Vec3 image = conj_action(g.rep(), p);
      if ((image - p).norm() < kPointEps) ++stabilizer;
      if (!contains(orbit, image)) orbit.push_back(image);
    }
    for (std::size_t t = 0; t < poles.size(); ++t) {
      if (!assigned[t] && contains(orbit, poles[t])) assigned[t] = true;
    }
    const Vec3 rep = *std::max_element(orbit.begin(), orbit.end(), vec_less);
    data.orbits.push_back({rep, orbit.size(), stabilizer});
  }

  std::sort(data.orbits.begin(), data.orbits.end(), [](const SingularOrbit& a, const SingularOrbit& b) {
    if (a.stabilizer != b.stabilizer) return a.stabilizer < b.stabilizer;
    return vec_less(a.representative, b.representative);
  });
  return data;
}

std::vector<std::size_t> classical_signature(const GroupSpec& spec) {
  std::vector<std::size_t> sig;
  switch (spec.family) {
    case Family::Cyclic: {
      const auto n = static_cast<std::size_t>(spec.param);
      sig = {n, n};
      break;
    }
    case Family::Dihedral:
      sig = {2, 2, static_cast<std::size_t>(spec.param)};
      break;
    case Family::Tetrahedral: sig = {2, 3, 3}; break;
    case Family::Octahedral: sig = {2, 3, 4}; break;
    case Family::Icosahedral: sig = {2, 3, 5}; break;
  }
  // nu = 1 marks a regular point (C_1, D_1); drop it.
  std::erase_if(sig, [](std::size_t nu) { return nu < 2; });
  std::sort(sig.begin(), sig.end());
  return sig;
}

RiemannHurwitzAudit riemann_hurwitz(const RotationGroup& group) {
  RiemannHurwitzAudit audit;
  audit.signature = singular_orbits(group).signature();
  const auto n = static_cast<long long>(group.order());
  long long branching = 0;
  for (const std::size_t nu_raw : audit.signature) {
    const auto nu = static_cast<long long>(nu_raw);
    if (nu == 0 || n % nu != 0) {
      audit.divisible = false;
      continue;
    }
    branching += n - n / nu;
  }
  audit.euler_times_order = 2 * n - branching;
  audit.holds = audit.divisible && audit.euler_times_order == 2;
  return audit;
}

bool riemann_hurwitz_check(const RotationGroup& group) { return riemann_hurwitz(group).holds; }

std::vector<UnitQuaternion> extended_orbit(const RotationGroup& group, const UnitQuaternion& x) {
  std::vector<UnitQuaternion> orbit;
  for (const auto& g : group.elements()) {
    const UnitQuaternion image(conj_action(g.rep(), x));
    for (const UnitQuaternion& p : {image, -image}) {
      const bool seen = std::any_of(orbit.begin(), orbit.end(), [&](const UnitQuaternion& o) {
        return distance(o, p) < kPointEps;
      });
      if (!seen) orbit.push_back(p);
    }
  }
  return orbit;
}

std::string_view to_string(Space3 space) { return space == Space3::S3 ? "S3" : "RP3"; }

ClassificationReport classify(Base base, const RotationGroup& group) {
  ClassificationReport report;
  report.base = base;
  report.spec = group.spec();
  report.n = group.order();
  report.tau_fixed_points = tau_has_fixed_points(group);
  report.has_half_turn = has_half_turn(group);
  report.parity_consistent =
      report.tau_fixed_points == report.has_half_turn && report.has_half_turn == report.even();
  if (!report.parity_consistent) {
    throw ConsistencyFailure("parity signals disagree for " + group.spec().name() +
                             ": tau fixed points " + (report.tau_fixed_points ? "yes" : "no") +
                             ", half-turn " + (report.has_half_turn ? "yes" : "no") + ", order " +
                             std::to_string(report.n));
  }
  if (base == Base::SO3 && !report.tau_fixed_points) {
    report.predicted = Space3::RP3;
  } else {
    report.predicted = Space3::S3;
  }
  report.suspension = check_suspension(group, 1000, 0);
  report.riemann_hurwitz = riemann_hurwitz(group);
  return report;
}

ClassificationReport classify(Base base, const GroupSpec& spec) {
  return classify(base, build_group(spec));
}

}  // namespace nvgroups
