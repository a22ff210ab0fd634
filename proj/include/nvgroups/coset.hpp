#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nvgroups/quaternion.hpp"
#include "nvgroups/rotgroups.hpp"
#include "nvgroups/tolerance.hpp"

namespace nvgroups {

enum class Base { Sp1, SO3 };

std::string_view to_string(Base base);
// "sp1" | "so3", case-insensitive. Throws ParseError.
Base parse_base(std::string_view text);

// A point pi(w) of X = W/G, stored as its canonical representative.
struct Orbit {
  UnitQuaternion rep;
  // Another G-image sat within kTieBand of the chosen maximum.
  bool tie = false;
};

// A value of mu: an unordered list of orbits, repeated according to multiplicity.
struct OrbitMultiset {
  std::vector<Orbit> items;

  std::size_t size() const { return items.size(); }
  std::size_t tie_warnings() const;
};

struct MatchResult {
  bool matched = false;
  // Largest distance among matched pairs; meaningful when matched.
  double max_distance = 0.0;
};

// X = W/G for W = Sp(1) or SO(3), with G acting on W by conjugation.
class CosetSpace {
 public:
  CosetSpace(Base base, RotationGroup group);

  Base base() const { return base_; }
  const RotationGroup& group() const { return group_; }
  std::size_t n() const { return group_.order(); }
  // e.g. "Sp1/T"
  std::string descriptor() const;

  // g_i(w) = q_i w q_i^-1 for the i-th element of G.
  UnitQuaternion act(std::size_t i, const UnitQuaternion& w) const;
  // All n images g_i(w), sign-canonical when W = SO(3).
  std::vector<UnitQuaternion> images(const UnitQuaternion& w) const;

  // Distance between points of W: Euclidean on Sp(1), over both lifts on SO(3).
  double point_distance(const Quaternion& a, const Quaternion& b) const;

  // Canonical representative: lexicographic maximum of the G-images, comparing
  // coordinates that differ by at most kPointEps as equal.
  Orbit project(const UnitQuaternion& w) const;
  Orbit identity() const { return project(UnitQuaternion()); }

  // mu(pi(a), pi(b)) = [pi(a g_1(b)), ..., pi(a g_n(b))] from the stored representatives.
  OrbitMultiset mu(const Orbit& x, const Orbit& y) const;
  // Same formula evaluated at arbitrary points a, b of W.
  OrbitMultiset mu_points(const UnitQuaternion& a, const UnitQuaternion& b) const;
  Orbit inv(const Orbit& x) const;

  // mu(x, mu(y, z)) and mu(mu(x, y), z), n^2 entries each.
  OrbitMultiset mu_left(const Orbit& x, const Orbit& y, const Orbit& z) const;
  OrbitMultiset mu_right(const Orbit& x, const Orbit& y, const Orbit& z) const;

  // min over G-images; a metric on X.
  double orbit_distance(const Orbit& x, const Orbit& y) const;

  // True when no two G-images of w are closer than `separation`.
  bool is_generic(const UnitQuaternion& w, double separation = kGenericSeparation) const;

  // Perfect matching of A onto B with every pair within `tol`. Throws SizeMismatch.
  MatchResult match(const OrbitMultiset& a, const OrbitMultiset& b, double tol) const;
  bool multiset_equal(const OrbitMultiset& a, const OrbitMultiset& b, double tol) const {
    return match(a, b, tol).matched;
  }

 private:
  UnitQuaternion to_base(const UnitQuaternion& w) const;

  Base base_;
  RotationGroup group_;
};

}  // namespace nvgroups
