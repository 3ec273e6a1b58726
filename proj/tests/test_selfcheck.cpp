#include "orthochroma/selfcheck.hpp"

#include "doctest.h"

using namespace orthochroma;
using orthochroma::sphere::SpherePoint;

TEST_SUITE_BEGIN("selfcheck");

TEST_CASE("every suite passes under several seeds") {
    for (const std::uint64_t seed : {0ull, 1ull, 12345ull}) {
        const auto suites = selfcheck::check_all(2, 30, 1e-9, seed);
        REQUIRE(suites.size() == 6);
        CHECK(suites[0].name == "numtheory");
        CHECK(suites[1].name == "projective");
        CHECK(suites[2].name == "sphere");
        CHECK(suites[3].name == "fourcolor");
        CHECK(suites[4].name == "generators");
        CHECK(suites[5].name == "graphs");
        for (const auto& s : suites) {
            CHECK(s.pass());
            CHECK(s.checks > 0);
            CHECK(s.failures.empty());
        }
    }
}

TEST_CASE("alternative parameters also pass") {
    CHECK(selfcheck::check_projective(5, 25, 9).pass());
    CHECK(selfcheck::check_sphere(15, 4).pass());
    CHECK(selfcheck::check_fourcolor(1e-7, 2).pass());
}

TEST_CASE("the brute oracles agree with the fast paths on basics") {
    const auto axes = graphs::OrthoGraph::build(
        {graphs::VertexPoint::from_sphere(SpherePoint::from_quadruple(1, 0, 0, 1)),
         graphs::VertexPoint::from_sphere(SpherePoint::from_quadruple(0, 1, 0, 1)),
         graphs::VertexPoint::from_sphere(SpherePoint::from_quadruple(0, 0, 1, 1))});
    CHECK(selfcheck::brute_chromatic(axes) == 3);

    for (const auto& a : fourcolor::SignPattern::all()) {
        for (const auto& b : fourcolor::SignPattern::all()) {
            CHECK(selfcheck::brute_ortho_class(a, b) == fourcolor::ortho_class(a, b));
        }
    }
}

TEST_SUITE_END();
