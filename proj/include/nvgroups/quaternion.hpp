#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>

namespace nvgroups {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

  double norm() const;
  Vec3 normalized() const;
};

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// w + xi + yj + zk
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }
  static constexpr Quaternion pure(const Vec3& v) { return {0.0, v.x, v.y, v.z}; }

  constexpr std::array<double, 4> coords() const { return {w, x, y, z}; }

  constexpr Quaternion operator+(const Quaternion& o) const {
    return {w + o.w, x + o.x, y + o.y, z + o.z};
  }
  constexpr Quaternion operator-(const Quaternion& o) const {
    return {w - o.w, x - o.x, y - o.y, z - o.z};
  }
  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }

  constexpr bool operator==(const Quaternion&) const = default;

  double norm() const;
};

// Hamilton product.
Quaternion qmul(const Quaternion& a, const Quaternion& b);
inline Quaternion operator*(const Quaternion& a, const Quaternion& b) { return qmul(a, b); }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double re(const Quaternion& q) { return q.w; }
constexpr Vec3 im(const Quaternion& q) { return {q.x, q.y, q.z}; }

// Euclidean distance in R^4.
double distance(const Quaternion& a, const Quaternion& b);

// A point of Sp(1) = S^3. Construction always renormalizes.
class UnitQuaternion {
 public:
  constexpr UnitQuaternion() = default;

  // Throws std::domain_error when |q| is too small to normalize.
  explicit UnitQuaternion(const Quaternion& q);

  static UnitQuaternion from_axis_angle(const Vec3& axis, double angle);

  constexpr const Quaternion& value() const { return q_; }
  constexpr operator const Quaternion&() const { return q_; }  // NOLINT(google-explicit-constructor)

  constexpr double w() const { return q_.w; }
  constexpr double x() const { return q_.x; }
  constexpr double y() const { return q_.y; }
  constexpr double z() const { return q_.z; }

  UnitQuaternion operator-() const { return UnitQuaternion(-q_, Trusted{}); }

  // Product without renormalization; callers renormalize long chains.
  friend UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b) {
    return UnitQuaternion(qmul(a.q_, b.q_), Trusted{});
  }

  UnitQuaternion renormalized() const { return UnitQuaternion(q_); }

 private:
  struct Trusted {};
  constexpr UnitQuaternion(const Quaternion& q, Trusted) : q_(q) {}

  Quaternion q_ = Quaternion::one();
};

inline UnitQuaternion inverse(const UnitQuaternion& q) { return UnitQuaternion(conj(q.value())); }

// q x q^-1
Quaternion conj_action(const UnitQuaternion& q, const Quaternion& x);
Vec3 conj_action(const UnitQuaternion& q, const Vec3& v);

// Rotation of R^3 = Im H induced by a unit quaternion. `axis` is empty for the
// identity rotation; otherwise its first coordinate of magnitude > eps is positive
// and `angle` lies in [0, 2pi) measured counter-clockwise about `axis`.
struct AxisAngle {
  std::optional<Vec3> axis;
  double angle = 0.0;
};

AxisAngle rotation_of(const UnitQuaternion& q);

// Seeded, deterministic random source.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t stream);

  double normal() { return normal_(engine_); }
  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
  std::size_t index(std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(engine_);
  }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

// Uniform on S^3: a normalized Gaussian 4-vector.
UnitQuaternion random_unit(Rng& rng);

}  // namespace nvgroups
