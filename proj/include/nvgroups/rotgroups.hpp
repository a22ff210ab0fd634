#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nvgroups/quaternion.hpp"

namespace nvgroups {

enum class Family { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };

// One of the finite subgroups of SO(3), up to the fixed axis conventions below.
//   Cyclic(n):    rotations by 2pi/n about z
//   Dihedral(m):  Cyclic(m) plus the half-turn about x
//   Tetrahedral:  rotations of the tetrahedron inscribed in [-1,1]^3 (lifts: Hurwitz units)
//   Octahedral:   Tetrahedral plus the quarter-turn about z
//   Icosahedral:  Tetrahedral plus the lift (phi + phi^-1 i + j)/2
struct GroupSpec {
  Family family = Family::Cyclic;
  int param = 1;  // n for Cyclic, m for Dihedral, unused otherwise

  static GroupSpec cyclic(int n);
  static GroupSpec dihedral(int m);
  static GroupSpec tetrahedral() { return {Family::Tetrahedral, 0}; }
  static GroupSpec octahedral() { return {Family::Octahedral, 0}; }
  static GroupSpec icosahedral() { return {Family::Icosahedral, 0}; }

  // "C5", "d3", "T", "o", "I". Throws ParseError.
  static GroupSpec parse(std::string_view text);

  std::string name() const;
  std::size_t order() const;

  bool operator==(const GroupSpec&) const = default;
};

// C1..C8, D1..D6, T, O, I
std::vector<GroupSpec> catalog();

// Sign-canonical representative: the first coordinate with |c| > eps is positive.
UnitQuaternion canonical_sign(const UnitQuaternion& q);

// A point of SO(3) = Sp(1)/{+1,-1}.
class ProjPoint {
 public:
  ProjPoint() = default;
  explicit ProjPoint(const UnitQuaternion& q) : rep_(canonical_sign(q)) {}

  const UnitQuaternion& rep() const { return rep_; }

  // min(|p - q|, |p + q|) over the two lifts.
  friend double distance(const ProjPoint& a, const ProjPoint& b);

 private:
  UnitQuaternion rep_;
};

// Rounded to 12 decimal places, with -0 folded to 0.
double round12(double v);

// Lexicographic order on coordinates rounded to 12 decimals.
bool rounded_less(const Quaternion& a, const Quaternion& b);

class RotationGroup {
 public:
  // Takes one lift per element as given, without closing or checking the set.
  // The identity must be present. Used for deliberately broken "groups" in
  // negative controls.
  static RotationGroup from_lifts(GroupSpec spec, const std::vector<UnitQuaternion>& lifts);

  const GroupSpec& spec() const { return spec_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<ProjPoint>& elements() const { return elements_; }
  // Both lifts of every element, 2n entries.
  const std::vector<UnitQuaternion>& cover() const { return cover_; }
  std::size_t identity_index() const { return identity_; }

  std::optional<std::size_t> find(const ProjPoint& g, double eps) const;

 private:
  RotationGroup() = default;

  GroupSpec spec_;
  std::vector<ProjPoint> elements_;
  std::vector<UnitQuaternion> cover_;
  std::size_t identity_ = 0;
};

// Breadth-first closure of the generator lifts in Sp(1). Throws ClosureFailure
// when the closure exceeds twice the expected order or misses it.
RotationGroup build_group(const GroupSpec& spec);

std::vector<UnitQuaternion> binary_cover(const RotationGroup& group);

// Least d >= 1 with g^d = e. Throws NotInGroup.
int element_order(const ProjPoint& g, const RotationGroup& group);

bool has_half_turn(const RotationGroup& group);

// Copy of `group` whose element `index` is composed with a rotation by `angle`
// about `axis`. The result is no longer a group.
RotationGroup perturb_element(const RotationGroup& group, std::size_t index, const Vec3& axis,
                              double angle);

}  // namespace nvgroups
