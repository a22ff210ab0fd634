#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nvgroups/quaternion.hpp"
#include "oracles.hpp"

using namespace nvgroups;

namespace {

void check_close(const Quaternion& a, const Quaternion& b, double eps = 1e-15) {
  CHECK(oracle::max_coord_diff(a, b) <= eps);
}

void check_close(const Vec3& a, const Vec3& b, double eps) { CHECK((a - b).norm() <= eps); }

Quaternion random_quaternion(Rng& rng) { return {rng.normal(), rng.normal(), rng.normal(), rng.normal()}; }

}  // namespace

TEST_CASE("basis relations") {
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  const Quaternion minus_one{-1, 0, 0, 0};
  CHECK(i * i == minus_one);
  CHECK(j * j == minus_one);
  CHECK(k * k == minus_one);
  CHECK(i * j * k == minus_one);
  CHECK(i * j == k);
  CHECK(j * i == -k);
}

TEST_CASE("qmul examples") {
  CHECK(qmul(Quaternion::i(), Quaternion::j()) == Quaternion::k());

  const Quaternion q{0.3, -1.2, 2.5, 0.7};
  CHECK(qmul(Quaternion::one(), q) == q);

  // (1 + i)(1 + j) / 2 = (1 + j + i + ij) / 2
  const double r = 1 / std::sqrt(2.0);
  const Quaternion a{r, r, 0, 0};
  const Quaternion b{r, 0, r, 0};
  const Quaternion expected{0.5, 0.5, 0.5, 0.5};
  check_close(qmul(a, b), expected, 1e-15);
  check_close(oracle::table_product(a, b), expected, 1e-15);
}

TEST_CASE("qmul matches the basis-table product") {
  Rng rng(11);
  for (int t = 0; t < 1000; ++t) {
    const Quaternion a = random_quaternion(rng);
    const Quaternion b = random_quaternion(rng);
    check_close(qmul(a, b), oracle::table_product(a, b), 1e-14);
  }
}

TEST_CASE("associativity and norm multiplicativity on random triples") {
  Rng rng(12);
  double assoc = 0, norm = 0;
  for (int t = 0; t < 1000; ++t) {
    const Quaternion a = random_unit(rng), b = random_unit(rng), c = random_unit(rng);
    assoc = std::max(assoc, oracle::max_coord_diff((a * b) * c, a * (b * c)));
    norm = std::max(norm, std::abs((a * b).norm() - a.norm() * b.norm()));
  }
  CHECK(assoc < 1e-12);
  CHECK(norm < 1e-12);
}

TEST_CASE("conjugate, real and imaginary parts, inverse") {
  CHECK(conj(Quaternion::i()) == -Quaternion::i());
  CHECK(inverse(UnitQuaternion(Quaternion::k())).value() == -Quaternion::k());

  const Quaternion q{1.5, -2, 3, 0.25};
  CHECK(re(q) == 1.5);
  const Vec3 v = im(q);
  CHECK((Quaternion{re(q), v.x, v.y, v.z} == q));

  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const UnitQuaternion u = random_unit(rng);
    check_close(u * inverse(u), Quaternion::one(), 1e-15);
  }
}

TEST_CASE("conjugation action") {
  // k j k^-1 = k j (-k) = -(k j) k = i k = -j
  const UnitQuaternion k(Quaternion::k());
  const Quaternion expected = -Quaternion::j();
  check_close(conj_action(k, Quaternion::j()), expected);
  check_close(oracle::table_product(oracle::table_product(Quaternion::k(), Quaternion::j()),
                                    conj(Quaternion::k())),
              expected);

  const Quaternion x{0.1, 0.2, -0.3, 0.4};
  CHECK(conj_action(UnitQuaternion(), x) == x);

  Rng rng(14);
  for (int t = 0; t < 200; ++t) {
    const UnitQuaternion q = random_unit(rng);
    check_close(conj_action(q, Quaternion::one()), Quaternion::one(), 1e-15);

    const Quaternion y = random_quaternion(rng);
    const Quaternion qy = conj_action(q, y);
    CHECK(std::abs(re(qy) - re(y)) < 1e-12);
    CHECK(std::abs(qy.norm() - y.norm()) < 1e-12);
    // -1 is in the kernel of the double cover.
    CHECK(oracle::max_coord_diff(conj_action(-q, y), qy) == 0.0);
  }
}

TEST_CASE("rotation_of") {
  SUBCASE("k is the half-turn about z") {
    const UnitQuaternion k(Quaternion::k());
    const AxisAngle r = rotation_of(k);
    REQUIRE(r.axis);
    check_close(*r.axis, {0, 0, 1}, 1e-15);
    CHECK(r.angle == doctest::Approx(std::numbers::pi).epsilon(1e-15));
    for (const Vec3& v : {Vec3{1, 0, 0}, Vec3{0, 1, 0}}) {
      check_close(conj_action(k, v), oracle::rodrigues(*r.axis, r.angle, v), 1e-12);
      check_close(conj_action(k, v), -v, 1e-15);
    }
  }

  SUBCASE("identity has no axis, and neither does -1") {
    for (const double s : {1.0, -1.0}) {
      const AxisAngle r = rotation_of(UnitQuaternion(Quaternion{s, 0, 0, 0}));
      CHECK_FALSE(r.axis);
      CHECK(r.angle == 0.0);
    }
  }

  SUBCASE("axis-angle reproduces the conjugation action") {
    Rng rng(15);
    for (int t = 0; t < 1000; ++t) {
      const UnitQuaternion q = random_unit(rng);
      const AxisAngle r = rotation_of(q);
      REQUIRE(r.axis);
      CHECK(r.angle >= 0.0);
      CHECK(r.angle < 2 * std::numbers::pi);
      CHECK(std::abs(r.axis->norm() - 1) < 1e-12);
      const double lead = std::abs(r.axis->x) > 1e-9 ? r.axis->x
                          : std::abs(r.axis->y) > 1e-9 ? r.axis->y
                                                      : r.axis->z;
      CHECK(lead > 0);
      for (const Vec3& e : {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}) {
        check_close(conj_action(q, e), oracle::rodrigues(*r.axis, r.angle, e), 1e-9);
      }
    }
  }

  SUBCASE("axis flip maps angle to 2pi - angle") {
    const UnitQuaternion q = UnitQuaternion::from_axis_angle({0, 0, -1}, std::numbers::pi / 2);
    const AxisAngle r = rotation_of(q);
    REQUIRE(r.axis);
    check_close(*r.axis, {0, 0, 1}, 1e-15);
    CHECK(r.angle == doctest::Approx(3 * std::numbers::pi / 2).epsilon(1e-14));
  }
}

TEST_CASE("random_unit") {
  constexpr int kCount = 10000;
  Rng rng(0);
  std::array<double, 4> mean{};
  double worst_norm = 0;
  for (int t = 0; t < kCount; ++t) {
    const UnitQuaternion q = random_unit(rng);
    worst_norm = std::max(worst_norm, std::abs(q.value().norm() - 1));
    const auto c = q.value().coords();
    for (int a = 0; a < 4; ++a) mean[a] += c[a] / kCount;
  }
  CHECK(worst_norm <= 1e-12);
  for (const double m : mean) CHECK(std::abs(m) < 4 / std::sqrt(double(kCount)));

  Rng a(42), b(42);
  for (int t = 0; t < 50; ++t) CHECK(random_unit(a).value() == random_unit(b).value());
}

TEST_CASE("normalizing zero throws") {
  CHECK_THROWS_AS(UnitQuaternion(Quaternion{}), std::domain_error);
}
