#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nvgroups/coset.hpp"
#include "nvgroups/quaternion.hpp"
#include "nvgroups/rotgroups.hpp"

namespace nvgroups {

// Solutions of q x q^-1 = -x on Sp(1). They exist exactly when q induces a
// half-turn, and then form the unit circle of Im H orthogonal to its axis.
struct AntipodalSolutions {
  bool solvable = false;
  Vec3 axis;

  // Point of the solution circle at parameter t; requires `solvable`.
  Vec3 circle_point(double t) const;
  std::vector<Vec3> sample_circle(std::size_t count) const;
};

AntipodalSolutions solve_antipodal(const UnitQuaternion& q);

// Whether the involution induced by x -> -x on Sp(1)/G has a fixed point, i.e.
// whether some lift q of some element admits q x q^-1 = -x.
bool tau_has_fixed_points(const RotationGroup& group);

struct SuspensionEvidence {
  bool passed = false;
  // max |Re(q x q^-1) - Re(x)| over cover elements and samples
  double max_deviation = 0.0;
  // max |q (+-1) q^-1 -+ 1| over cover elements
  double pole_deviation = 0.0;
};

using QuaternionAction = std::function<Quaternion(const UnitQuaternion&, const Quaternion&)>;

// The cover acts on Sp(1) preserving Re and fixing +-1, so Sp(1)/G is the
// suspension of S^2/G. `action` defaults to conjugation; other actions serve
// as negative controls.
SuspensionEvidence check_suspension(const RotationGroup& group, std::size_t samples,
                                    std::uint64_t seed, const QuaternionAction& action = {});

struct SingularOrbit {
  Vec3 representative;
  std::size_t size = 0;        // points of S^2 in the orbit
  std::size_t stabilizer = 0;  // nu, elements of G fixing each point
};

struct SingularOrbitData {
  std::size_t group_order = 0;
  // Sorted by stabilizer order, then by representative.
  std::vector<SingularOrbit> orbits;

  std::vector<std::size_t> signature() const;
};

// Fixed points on S^2 of the nontrivial rotations, grouped into G-orbits.
SingularOrbitData singular_orbits(const RotationGroup& group);

// Stabilizer signatures with nu >= 2: C_n (n,n); D_m (2,2,m); T (2,3,3); O (2,3,4); I (2,3,5).
std::vector<std::size_t> classical_signature(const GroupSpec& spec);

struct RiemannHurwitzAudit {
  std::vector<std::size_t> signature;
  // n * (2 - sum(1 - 1/nu)), evaluated in integers as 2n - sum(n - n/nu).
  long long euler_times_order = 0;
  bool divisible = true;
  bool holds = false;
};

RiemannHurwitzAudit riemann_hurwitz(const RotationGroup& group);
bool riemann_hurwitz_check(const RotationGroup& group);

// Orbit of x under G x C_2 acting by (g, s)(x) = s q x q^-1.
std::vector<UnitQuaternion> extended_orbit(const RotationGroup& group, const UnitQuaternion& x);

enum class Space3 { S3, RP3 };
std::string_view to_string(Space3 space);

struct ClassificationReport {
  Base base = Base::Sp1;
  GroupSpec spec;
  std::size_t n = 0;
  bool tau_fixed_points = false;
  bool has_half_turn = false;
  Space3 predicted = Space3::S3;
  SuspensionEvidence suspension;
  RiemannHurwitzAudit riemann_hurwitz;
  bool parity_consistent = false;

  bool even() const { return n % 2 == 0; }
};

// Throws ConsistencyFailure when tau fixed points, half-turns and parity disagree.
ClassificationReport classify(Base base, const GroupSpec& spec);
ClassificationReport classify(Base base, const RotationGroup& group);

}  // namespace nvgroups
