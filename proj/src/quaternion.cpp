#include "nvgroups/quaternion.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nvgroups/tolerance.hpp"

namespace nvgroups {

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Vec3 Vec3::normalized() const {
  const double n = norm();
  return {x / n, y / n, z / n};
}

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quaternion qmul(const Quaternion& a, const Quaternion& b) {
  return {
      a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
      a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
      a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
      a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
  };
}

double distance(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

UnitQuaternion::UnitQuaternion(const Quaternion& q) {
  const double n = q.norm();
  if (!(n > 1e-300) || !std::isfinite(n)) {
    throw std::domain_error("cannot normalize a zero or non-finite quaternion");
  }
  q_ = q * (1.0 / n);
}

UnitQuaternion UnitQuaternion::from_axis_angle(const Vec3& axis, double angle) {
  const Vec3 u = axis.normalized();
  const double s = std::sin(angle / 2);
  return UnitQuaternion(Quaternion{std::cos(angle / 2), u.x * s, u.y * s, u.z * s});
}

Quaternion conj_action(const UnitQuaternion& q, const Quaternion& x) {
  return qmul(qmul(q.value(), x), conj(q.value()));
}

Vec3 conj_action(const UnitQuaternion& q, const Vec3& v) {
  return im(conj_action(q, Quaternion::pure(v)));
}

AxisAngle rotation_of(const UnitQuaternion& q) {
  // q and -q give the same rotation; work with the lift having w >= 0.
  Quaternion p = q.value();
  if (p.w < 0) p = -p;
  const Vec3 v = im(p);
  const double s = v.norm();
  if (s <= kPointEps) return {std::nullopt, 0.0};

  Vec3 axis = v * (1.0 / s);
  double angle = 2.0 * std::atan2(s, p.w);
  const double lead = std::abs(axis.x) > kPointEps ? axis.x
                      : std::abs(axis.y) > kPointEps ? axis.y
                                                    : axis.z;
  if (lead < 0) {
    axis = -axis;
    angle = 2.0 * std::numbers::pi - angle;
  }
  return {axis, angle};
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

UnitQuaternion random_unit(Rng& rng) {
  for (;;) {
    const Quaternion g{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    if (g.norm() >= 1e-8) return UnitQuaternion(g);
  }
}

}  // namespace nvgroups
