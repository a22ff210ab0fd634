#include "nvgroups/coset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <utility>

#include "nvgroups/errors.hpp"

namespace nvgroups {
namespace {

// Lexicographic comparison where coordinates within eps count as equal.
int eps_compare(const Quaternion& a, const Quaternion& b, double eps) {
  const auto ca = a.coords();
  const auto cb = b.coords();
  for (std::size_t c = 0; c < 4; ++c) {
    const double d = ca[c] - cb[c];
    if (std::abs(d) > eps) return d > 0 ? 1 : -1;
  }
  return 0;
}

}  // namespace

std::string_view to_string(Base base) { return base == Base::Sp1 ? "sp1" : "so3"; }

Base parse_base(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "sp1") return Base::Sp1;
  if (lower == "so3") return Base::SO3;
  throw ParseError("unknown base '" + std::string(text) + "' (expected sp1 or so3)");
}

std::size_t OrbitMultiset::tie_warnings() const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [](const Orbit& o) { return o.tie; }));
}

CosetSpace::CosetSpace(Base base, RotationGroup group) : base_(base), group_(std::move(group)) {}

std::string CosetSpace::descriptor() const {
  return std::string(base_ == Base::Sp1 ? "Sp1/" : "SO3/") + group_.spec().name();
}

UnitQuaternion CosetSpace::to_base(const UnitQuaternion& w) const {
  return base_ == Base::SO3 ? canonical_sign(w) : w;
}

UnitQuaternion CosetSpace::act(std::size_t i, const UnitQuaternion& w) const {
  return to_base(UnitQuaternion(conj_action(group_.elements()[i].rep(), w)));
}

std::vector<UnitQuaternion> CosetSpace::images(const UnitQuaternion& w) const {
  std::vector<UnitQuaternion> out;
  out.reserve(n());
  for (std::size_t i = 0; i < n(); ++i) out.push_back(act(i, w));
  return out;
}

double CosetSpace::point_distance(const Quaternion& a, const Quaternion& b) const {
  const double d = distance(a, b);
  return base_ == Base::SO3 ? std::min(d, distance(a, -b)) : d;
}

Orbit CosetSpace::project(const UnitQuaternion& w) const {
  const auto imgs = images(w);
  std::size_t best = 0;
  for (std::size_t i = 1; i < imgs.size(); ++i) {
    if (eps_compare(imgs[i], imgs[best], kPointEps) > 0) best = i;
  }
  Orbit orbit{imgs[best], false};
  for (const auto& img : imgs) {
    const double d = point_distance(img, orbit.rep);
    if (d > kPointEps && d <= kTieBand) {
      orbit.tie = true;
      break;
    }
  }
  return orbit;
}

OrbitMultiset CosetSpace::mu_points(const UnitQuaternion& a, const UnitQuaternion& b) const {
  OrbitMultiset out;
  out.items.reserve(n());
  for (std::size_t i = 0; i < n(); ++i) {
    out.items.push_back(project((a * act(i, b)).renormalized()));
  }
  return out;
}

OrbitMultiset CosetSpace::mu(const Orbit& x, const Orbit& y) const {
  OrbitMultiset out = mu_points(x.rep, y.rep);
  if (x.tie || y.tie) {
    for (auto& o : out.items) o.tie = true;
  }
  return out;
}

Orbit CosetSpace::inv(const Orbit& x) const {
  Orbit out = project(inverse(x.rep));
  out.tie = out.tie || x.tie;
  return out;
}

OrbitMultiset CosetSpace::mu_left(const Orbit& x, const Orbit& y, const Orbit& z) const {
  OrbitMultiset out;
  out.items.reserve(n() * n());
  for (const auto& u : mu(y, z).items) {
    auto part = mu(x, u);
    out.items.insert(out.items.end(), part.items.begin(), part.items.end());
  }
  return out;
}

OrbitMultiset CosetSpace::mu_right(const Orbit& x, const Orbit& y, const Orbit& z) const {
  OrbitMultiset out;
  out.items.reserve(n() * n());
  for (const auto& u : mu(x, y).items) {
    auto part = mu(u, z);
    out.items.insert(out.items.end(), part.items.begin(), part.items.end());
  }
  return out;
}

double CosetSpace::orbit_distance(const Orbit& x, const Orbit& y) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n(); ++i) {
    best = std::min(best, point_distance(x.rep, act(i, y.rep)));
  }
  return best;
}

bool CosetSpace::is_generic(const UnitQuaternion& w, double separation) const {
  const auto imgs = images(w);
  for (std::size_t i = 0; i < imgs.size(); ++i) {
    for (std::size_t j = i + 1; j < imgs.size(); ++j) {
      if (point_distance(imgs[i], imgs[j]) < separation) return false;
    }
  }
  return true;
}

}  // namespace nvgroups
