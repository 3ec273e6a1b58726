#include "orthochroma/generators.hpp"

#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

using namespace orthochroma;
using namespace orthochroma::generators;
using orthochroma::numtheory::BigInt;
using orthochroma::numtheory::BigRational;
using orthochroma::projective::Colour3;
using orthochroma::sphere::SpherePoint;

TEST_SUITE_BEGIN("generators");

TEST_CASE("exact rotations validate their matrix") {
    CHECK_NOTHROW(ExactRotation::identity());
    CHECK_NOTHROW(ExactRotation::rotation_z());
    CHECK_NOTHROW(ExactRotation::rotation_y());

    // a reflection is orthogonal but orientation-reversing
    ExactRotation::Matrix refl{{{BigRational(1), 0, 0},
                                {0, BigRational(1), 0},
                                {0, 0, BigRational(-1)}}};
    CHECK_THROWS_AS(ExactRotation{refl}, std::invalid_argument);

    ExactRotation::Matrix skew{{{BigRational(1), BigRational(1), 0},
                                {0, BigRational(1), 0},
                                {0, 0, BigRational(1)}}};
    CHECK_THROWS_AS(ExactRotation{skew}, std::invalid_argument);
}

TEST_CASE("the two named rotations act as frozen") {
    const auto start = SpherePoint::from_quadruple(1, 0, 0, 1);
    const auto rz = ExactRotation::rotation_z();
    const auto p1 = rz.apply(start);
    CHECK(p1 == SpherePoint::from_quadruple(3, 4, 0, 5));
    const auto p2 = rz.apply(p1);
    CHECK(p2 == SpherePoint::from_quadruple(-7, 24, 0, 25));
    CHECK(rz.apply(p2) == SpherePoint::from_quadruple(-117, 44, 0, 125));

    const auto ry = ExactRotation::rotation_y();
    CHECK(ry.apply(start) == SpherePoint::from_quadruple(3, 0, -4, 5));

    // composition agrees with repeated application
    const auto rz2 = rz * rz;
    CHECK(rz2.apply(start) == p2);
    CHECK(ExactRotation::identity().apply(start) == start);
}

TEST_CASE("z-orbit stays red") {
    const auto orb = orbit(ExactRotation::rotation_z(), SpherePoint::from_quadruple(1, 0, 0, 1), 60);
    REQUIRE(orb.size() == 60);
    CHECK(orb[0].point == SpherePoint::from_quadruple(1, 0, 0, 1));
    std::set<SpherePoint> distinct;
    for (const auto& e : orb) {
        CHECK(e.colour == Colour3::Red);
        CHECK(e.point.c() == 0);  // rotation about z fixes the equator
        distinct.insert(e.point);
    }
    CHECK(distinct.size() == 60);  // the rotation has infinite order
    CHECK_THROWS_AS(orbit(ExactRotation::rotation_z(), orb[0].point, 0), std::invalid_argument);
}

TEST_CASE("quadruple enumeration at small heights") {
    const auto h1 = enum_points(EnumMode::Quadruple, 1);
    REQUIRE(h1.size() == 6);
    for (const auto& p : h1) CHECK(p.d() == 1);

    CHECK(enum_points(EnumMode::Quadruple, 2).size() == 6);  // no new d = 2 points exist
    CHECK(enum_points(EnumMode::Quadruple, 3).size() == 30);
    CHECK(enum_points(EnumMode::Quadruple, 5).size() == 54);

    // canonical order: by (d, a, b, c), no duplicates
    const auto h9 = enum_points(EnumMode::Quadruple, 9);
    CHECK(std::is_sorted(h9.begin(), h9.end(), [](const SpherePoint& p, const SpherePoint& q) {
        return std::tuple(p.d(), p.a(), p.b(), p.c()) < std::tuple(q.d(), q.a(), q.b(), q.c());
    }));
    CHECK(std::set<SpherePoint>(h9.begin(), h9.end()).size() == h9.size());
}

TEST_CASE("quadruple enumeration is complete against brute force") {
    std::set<std::array<long long, 4>> brute;
    for (long long d = 1; d <= 9; ++d) {
        for (long long a = -d; a <= d; ++a) {
            for (long long b = -d; b <= d; ++b) {
                for (long long c = -d; c <= d; ++c) {
                    if (a * a + b * b + c * c != d * d) continue;
                    if (std::gcd(std::gcd(std::abs(a), std::abs(b)),
                                 std::gcd(std::abs(c), d)) != 1) {
                        continue;
                    }
                    brute.insert({a, b, c, d});
                }
            }
        }
    }
    std::set<std::array<long long, 4>> seen;
    for_each_point(EnumMode::Quadruple, 9, [&](const SpherePoint& p) {
        seen.insert({static_cast<long long>(p.a()), static_cast<long long>(p.b()),
                     static_cast<long long>(p.c()), static_cast<long long>(p.d())});
    });
    CHECK(seen == brute);
}

TEST_CASE("stereo enumeration hits the recorded values") {
    const auto pts = enum_points(EnumMode::Stereo, 2);
    CHECK(pts.size() == 49);
    const std::set<SpherePoint> set(pts.begin(), pts.end());
    CHECK(set.size() == 49);
    CHECK(set.count(SpherePoint::from_quadruple(0, 0, -1, 1)) == 1);
    CHECK(set.count(SpherePoint::from_quadruple(1, 0, 0, 1)) == 1);
    CHECK(set.count(SpherePoint::from_quadruple(4, 0, -3, 5)) == 1);
    // the north pole is never reached by the parametrization
    CHECK(set.count(SpherePoint::from_quadruple(0, 0, 1, 1)) == 0);
}

TEST_CASE("streaming and collecting agree") {
    const auto collected = enum_points(EnumMode::Quadruple, 7);
    std::vector<SpherePoint> streamed;
    for_each_point(EnumMode::Quadruple, 7, [&](const SpherePoint& p) { streamed.push_back(p); });
    CHECK(streamed == collected);
}

TEST_CASE("height caps and validation") {
    CHECK_THROWS_AS(enum_points(EnumMode::Quadruple, 0), std::invalid_argument);
    CHECK_THROWS_AS(enum_points(EnumMode::Quadruple, 1001), std::invalid_argument);
    CHECK_THROWS_AS(enum_points(EnumMode::Stereo, 25), std::invalid_argument);
    CHECK_THROWS_AS(for_each_point(EnumMode::Quadruple, 2001, [](const SpherePoint&) {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(for_each_point(EnumMode::Stereo, 65, [](const SpherePoint&) {}),
                    std::invalid_argument);
}

TEST_CASE("coverage grids bin what they should") {
    // the 60-point z-orbit fills every quadrant of the equator
    const auto orb = orbit(ExactRotation::rotation_z(), SpherePoint::from_quadruple(1, 0, 0, 1), 60);
    std::vector<SpherePoint> pts;
    for (const auto& e : orb) pts.push_back(e.point);
    auto grid = CoverageGrid::equator(4);
    const auto rep = coverage(pts, grid);
    CHECK(rep.points_counted == 60);
    CHECK(rep.off_domain == 0);
    CHECK(rep.empty_cells == 0);
    CHECK(rep.total_cells == 4);

    // recorded sweeps, frozen
    auto g1 = CoverageGrid::sphere(8, 8);
    const auto r1 = coverage(EnumMode::Quadruple, 40, g1);
    CHECK(r1.points_counted == 2646);
    CHECK(r1.off_domain == 0);
    CHECK(r1.empty_cells == 0);

    auto g2 = CoverageGrid::equator(4);
    const auto r2 = coverage(EnumMode::Quadruple, 40, g2);
    CHECK(r2.points_counted == 52);   // only exact equator points count
    CHECK(r2.off_domain == 2594);
    CHECK(r2.empty_cells == 0);

    auto g3 = CoverageGrid::sphere(2, 4);
    const auto r3 = coverage(EnumMode::Quadruple, 10, g3);
    CHECK(r3.points_counted == 174);
    CHECK(r3.empty_cells == 0);

    CHECK_THROWS_AS(CoverageGrid::equator(0), std::invalid_argument);
    CHECK_THROWS_AS(CoverageGrid::sphere(0, 4), std::invalid_argument);
}

TEST_CASE("the dense stereo sweep leaves no cell empty") {
    // 20 x 20 equal-area grid against the full height-40 stereo enumeration
    auto grid = CoverageGrid::sphere(20, 20);
    const auto rep = coverage(EnumMode::Stereo, 40, grid);
    CHECK(rep.points_counted == 3837681);
    CHECK(rep.off_domain == 0);
    CHECK(rep.empty_cells == 0);
}

TEST_CASE("circle scans and the dichotomy") {
    const auto u = SpherePoint::from_quadruple(1, 0, 0, 1);

    // differing colours: the circle avoids the axis colour entirely
    const auto diff = circle_scan(u, SpherePoint::from_quadruple(0, 3, 4, 5), 60);
    CHECK_FALSE(diff.same_colour_case);
    CHECK(diff.colour_u == Colour3::Red);
    CHECK(diff.colour_v == Colour3::White);
    CHECK(diff.points.size() == 68);
    CHECK(diff.with_u_colour == 0);
    CHECK(diff.other_colour == 68);
    CHECK(diff.dichotomy_holds);

    // same colour: every rational point on the circle shares it
    const auto same = circle_scan(u, SpherePoint::from_quadruple(3, 4, 0, 5), 60);
    CHECK(same.same_colour_case);
    CHECK(same.points.size() == 12);
    CHECK(same.with_u_colour == 12);
    CHECK(same.other_colour == 0);
    CHECK(same.dichotomy_holds);

    const auto tilted = circle_scan(SpherePoint::from_quadruple(2, 2, 1, 3),
                                    SpherePoint::from_quadruple(2, -2, 1, 3), 60);
    CHECK(tilted.same_colour_case);
    CHECK(tilted.points.size() == 18);
    CHECK(tilted.with_u_colour == 18);
    CHECK(tilted.other_colour == 0);

    // every reported point really lies on the circle
    for (const auto& e : same.points) {
        CHECK(sphere::inner(e.point, u).value == sphere::inner(same.points[0].point, u).value);
    }

    CHECK_THROWS_AS(circle_scan(u, u.antipode(), 10), std::invalid_argument);
}

TEST_SUITE_END();
