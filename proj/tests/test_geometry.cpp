#include <doctest.h>

#include <stdexcept>
#include <cmath>
#include <random>

#include "nrems/geometry.hpp"

using namespace nrems;

TEST_CASE("specular_point - symmetric pair lands at the origin") {
    const Point2 p = specular_point({-10.0, 10.0}, {10.0, 10.0});
    CHECK(p.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p.y == 0.0);
}

TEST_CASE("specular_point - mirror-image construction") {
    // Line from (-3, -3) to (1, 1) crosses y = 0 at the origin; both sides
    // then see the plane under the same sine, s_y/D_i = r_y/D_o = 1/sqrt(2).
    const Point2 s{-3.0, 3.0};
    const Point2 r{1.0, 1.0};
    const Point2 p = specular_point(s, r);
    CHECK(p.x == doctest::Approx(0.0).epsilon(1e-12));
    const double lhs = s.y / distance(p, s);
    const double rhs = r.y / distance(r, p);
    CHECK(lhs == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(rhs == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("specular_point - sine ratio identity and reciprocity") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> pos(-30.0, 30.0);
    std::uniform_real_distribution<double> height(0.1, 40.0);
    for (int k = 0; k < 200; ++k) {
        const Point2 s{pos(gen), height(gen)};
        const Point2 r{pos(gen), height(gen)};
        const Point2 p = specular_point(s, r);
        const double lhs = s.y / distance(p, s);
        const double rhs = r.y / distance(r, p);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
        const Point2 q = specular_point(r, s);
        CHECK(q.x == doctest::Approx(p.x).epsilon(1e-9));
    }
}

TEST_CASE("specular_point - rejects degenerate heights") {
    CHECK_THROWS_AS(specular_point({0.0, 0.0}, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(specular_point({0.0, 1.0}, {1.0, -2.0}), std::invalid_argument);
}

TEST_CASE("boresight_center - vertical boresight") {
    const auto hit = boresight_center({3.0, 10.0}, kPi / 2.0);
    CHECK(hit.range == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(hit.point.x == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("boresight_center - oblique rays") {
    const auto a = boresight_center({0.0, 10.0}, kPi / 6.0);
    CHECK(a.range == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(a.point.x == doctest::Approx(17.3205080757).epsilon(1e-9));

    const auto b = boresight_center({-5.0, 5.0}, kPi / 4.0);
    CHECK(b.range == doctest::Approx(7.0710678119).epsilon(1e-9));
    CHECK(b.point.x == doctest::Approx(0.0).epsilon(1e-9));
    // Returned range really is the distance to the returned point.
    CHECK(distance(b.point, {-5.0, 5.0}) == doctest::Approx(b.range).epsilon(1e-12));
}

TEST_CASE("boresight_center - continuous at the vertical limit") {
    const Point2 s{2.0, 8.0};
    const auto hit = boresight_center(s, kPi / 2.0 - 1e-9);
    CHECK(hit.point.x == doctest::Approx(s.x).epsilon(1e-6));
    CHECK(hit.range == doctest::Approx(s.y).epsilon(1e-9));
}

TEST_CASE("boresight_center - rejects bad pointing") {
    CHECK_THROWS_AS(boresight_center({0.0, 1.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(boresight_center({0.0, 1.0}, kPi / 2.0 + 0.01), std::invalid_argument);
    CHECK_THROWS_AS(boresight_center({0.0, -1.0}, kPi / 4.0), std::invalid_argument);
}

TEST_CASE("reflection_angle - known angles") {
    CHECK(reflection_angle({0.0, 0.0}, {0.0, 5.0}) == doctest::Approx(0.0));
    CHECK(reflection_angle({0.0, 0.0}, {5.0, 5.0}) == doctest::Approx(kPi / 4.0).epsilon(1e-12));
    // 3-4-5 triangle: acos(3/5)
    CHECK(reflection_angle({2.0, 0.0}, {6.0, 3.0}) ==
          doctest::Approx(std::acos(0.6)).epsilon(1e-12));
}

TEST_CASE("reflection_angle - specular identity") {
    // Place the target on the mirror continuation of a ray with depression
    // angle psi; the reflection angle from the normal must equal pi/2 - psi.
    const double psi = 0.31 * kPi;
    const Point2 p{1.0, 0.0};
    const Point2 r = p + 12.0 * Point2{std::cos(psi), std::sin(psi)};
    CHECK(reflection_angle(p, r) == doctest::Approx(kPi / 2.0 - psi).epsilon(1e-12));
}

TEST_CASE("reflection_angle - rejects a target on the plane point") {
    CHECK_THROWS_AS(reflection_angle({1.0, 0.0}, {1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(reflection_angle({1.0, 0.5}, {2.0, 1.0}), std::invalid_argument);
}

TEST_CASE("x_projection - axis cases and 3-4-5") {
    CHECK(x_projection({0.0, 0.0}, {1.0, 0.0}) == doctest::Approx(1.0));
    CHECK(x_projection({0.0, 0.0}, {0.0, 7.0}) == doctest::Approx(0.0));
    CHECK(x_projection({0.0, 0.0}, {3.0, 4.0}) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK_THROWS_AS(x_projection({1.0, 2.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("SourceTrajectory - sampling and validation") {
    SourceTrajectory traj{{-1.0, 5.0}, 10.0, 0.2, 0.05};
    traj.validate();
    CHECK(traj.snapshot_count() == 5);
    const Point2 p = traj.position(0.1);
    CHECK(p.x == doctest::Approx(0.0));
    CHECK(p.y == doctest::Approx(5.0));

    SourceTrajectory bad = traj;
    bad.speed = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = traj;
    bad.snapshot_interval = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("wrap_two_pi - range and identity") {
    CHECK(wrap_two_pi(0.0) == 0.0);
    CHECK(wrap_two_pi(2.0 * kPi) == doctest::Approx(0.0));
    CHECK(wrap_two_pi(-0.5) == doctest::Approx(2.0 * kPi - 0.5).epsilon(1e-12));
    CHECK(wrap_two_pi(7.0) == doctest::Approx(7.0 - 2.0 * kPi).epsilon(1e-12));
}
