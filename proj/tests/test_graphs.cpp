#include "orthochroma/graphs.hpp"

#include "orthochroma/generators.hpp"
#include "orthochroma/selfcheck.hpp"

#include "doctest.h"

#include <random>
#include <set>

using namespace orthochroma;
using namespace orthochroma::graphs;
using orthochroma::sphere::AlgSpherePoint;
using orthochroma::sphere::SpherePoint;

namespace {

VertexPoint sp(long long a, long long b, long long c, long long d) {
    return VertexPoint::from_sphere(SpherePoint::from_quadruple(a, b, c, d));
}

VertexPoint alg(long long x, long long y, long long z) {
    return VertexPoint::from_alg(*AlgSpherePoint::from_direction(x, y, z));
}

}  // namespace

TEST_SUITE_BEGIN("graphs");

TEST_CASE("build deduplicates but keeps antipodes apart") {
    const auto g = OrthoGraph::build({sp(1, 0, 0, 1), sp(1, 0, 0, 1), sp(-1, 0, 0, 1)});
    CHECK(g.n() == 2);
    CHECK(g.m() == 0);  // antipodes are parallel, not orthogonal

    // a rational point entering through the algebraic door is the same vertex
    const auto h = OrthoGraph::build({sp(3, 4, 0, 5), alg(3, 4, 0)});
    CHECK(h.n() == 1);
    CHECK(h.vertex(0).rational.has_value());
}

TEST_CASE("the five-point mixed example") {
    const auto g = OrthoGraph::build(
        {sp(1, 0, 0, 1), sp(0, 1, 0, 1), sp(0, 0, 1, 1), alg(1, 1, 0), alg(-1, 1, 0)});
    CHECK(g.n() == 5);
    CHECK(g.m() == 6);
    const std::set<std::pair<int, int>> want{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}};
    CHECK(std::set<std::pair<int, int>>(g.edges().begin(), g.edges().end()) == want);
    CHECK(g.adjacent(3, 4));
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK_FALSE(g.all_rational());

    const auto res = chromatic_number(g);
    CHECK(res.chi == 3);
    CHECK(res.clique_lower == 3);
    CHECK(validate_colouring(g, res.witness).valid);

    const auto sub = g.induced({2, 3, 4});
    CHECK(sub.n() == 3);
    CHECK(sub.m() == 3);
    CHECK(chromatic_number(sub).chi == 3);
}

TEST_CASE("chromatic number on basic graphs") {
    // octahedron of the six signed axes
    const auto axes = OrthoGraph::build({sp(1, 0, 0, 1), sp(-1, 0, 0, 1), sp(0, 1, 0, 1),
                                         sp(0, -1, 0, 1), sp(0, 0, 1, 1), sp(0, 0, -1, 1)});
    CHECK(axes.m() == 12);
    const auto res = chromatic_number(axes);
    CHECK(res.chi == 3);
    CHECK(res.greedy_upper >= res.chi);
    CHECK(res.clique_lower <= res.chi);

    // first four z-orbit points are pairwise non-orthogonal: an empty graph
    const auto orb = generators::orbit(generators::ExactRotation::rotation_z(),
                                       SpherePoint::from_quadruple(1, 0, 0, 1), 4);
    std::vector<VertexPoint> pts;
    for (const auto& e : orb) pts.push_back(VertexPoint::from_sphere(e.point));
    const auto empty = OrthoGraph::build(pts);
    CHECK(empty.m() == 0);
    CHECK(chromatic_number(empty).chi == 1);

    const auto one = OrthoGraph::build({sp(1, 0, 0, 1)});
    CHECK(chromatic_number(one).chi == 1);
    const auto none = OrthoGraph::build({});
    CHECK(chromatic_number(none).chi == 0);
}

TEST_CASE("colouring validation") {
    const auto g = OrthoGraph::build({sp(1, 0, 0, 1), sp(0, 1, 0, 1), sp(0, 0, 1, 1)});
    REQUIRE(g.m() == 3);
    CHECK(validate_colouring(g, {{0, 1, 2}, 3}).valid);
    const auto bad = validate_colouring(g, {{0, 0, 2}, 3});
    CHECK_FALSE(bad.valid);
    CHECK(bad.violation == std::pair<int, int>{0, 1});
    CHECK_THROWS_AS(validate_colouring(g, {{0, 1}, 3}), std::invalid_argument);
    CHECK_THROWS_AS(validate_colouring(g, {{0, 1, 3}, 3}), std::invalid_argument);
    CHECK_THROWS_AS(validate_colouring(g, {{0, 1, -1}, 3}), std::invalid_argument);
}

TEST_CASE("solver cap raises a bounded error") {
    std::vector<VertexPoint> pts;
    generators::for_each_point(generators::EnumMode::Quadruple, 7,
                               [&](const SpherePoint& p) { pts.push_back(VertexPoint::from_sphere(p)); });
    const auto g = OrthoGraph::build(pts);  // 102 vertices
    REQUIRE(g.n() > 64);
    CHECK_THROWS_AS(chromatic_number(g), too_large_error);
    try {
        chromatic_number(g);
    } catch (const too_large_error& e) {
        CHECK(e.vertices == g.n());
        CHECK(e.cap == 64);
        CHECK(e.lower_bound >= 3);
        CHECK(e.upper_bound >= e.lower_bound);
    }
    // a raised cap solves it; the answer must be the rational ceiling
    const auto res = chromatic_number(g, 128);
    CHECK(res.chi == 3);
    CHECK(validate_colouring(g, res.witness).valid);
}

TEST_CASE("solver agrees with brute force on random mixed graphs") {
    std::vector<VertexPoint> pool;
    generators::for_each_point(generators::EnumMode::Quadruple, 5,
                               [&](const SpherePoint& p) { pool.push_back(VertexPoint::from_sphere(p)); });
    for (long long x = -2; x <= 2; ++x) {
        for (long long y = -2; y <= 2; ++y) {
            for (long long z = -2; z <= 2; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                if (auto p = AlgSpherePoint::from_direction(x, y, z); p && !p->is_rational()) {
                    pool.push_back(VertexPoint::from_alg(*p));
                }
            }
        }
    }
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> size(1, 9);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<VertexPoint> pts;
        const int k = size(rng);
        for (int i = 0; i < k; ++i) pts.push_back(pool[pick(rng)]);
        const auto g = OrthoGraph::build(pts);
        const auto fast = chromatic_number(g);
        CHECK(fast.chi == selfcheck::brute_chromatic(g));
        CHECK(validate_colouring(g, fast.witness).valid);
        CHECK(fast.witness.palette == fast.chi);
    }
}

TEST_CASE("DIMACS export is the frozen format") {
    const auto g = OrthoGraph::build({sp(1, 0, 0, 1), sp(0, 1, 0, 1), sp(0, 0, 1, 1)});
    const auto text = to_dimacs(g);
    CHECK(text.find("c orthogonality graph\n") == 0);
    CHECK(text.find("c v 1 (1,0,0;1)\n") != std::string::npos);
    CHECK(text.find("p edge 3 3\n") != std::string::npos);
    CHECK(text.find("e 1 2\n") != std::string::npos);
    CHECK(text.find("e 2 3\n") != std::string::npos);
    CHECK(text.back() == '\n');
}

TEST_CASE("search is deterministic and honest about rational pools") {
    SearchConfig cfg;
    cfg.rational_height = 5;
    cfg.alg_height = 2;
    cfg.subset_size = 8;
    cfg.budget = 6;
    cfg.seed = 7;

    const auto pool = build_pool(cfg);
    CHECK(pool.size() == 66);  // 54 rational + 12 diagonal directions

    const auto a = search_4chromatic(cfg), b = search_4chromatic(cfg);
    CHECK(a.seed == 7);
    CHECK(a.pool_size == 66);
    CHECK(a.candidates_tried == 6);
    CHECK_FALSE(a.pool_all_rational);
    CHECK(a.best_chi == b.best_chi);
    CHECK(a.best_lower_bound == b.best_lower_bound);
    CHECK(a.found.size() == b.found.size());
    CHECK(a.best_chi >= 1);
    CHECK(a.best_chi <= 3);  // nothing 4-chromatic hides in 8-point subsets here

    cfg.seed = 8;
    const auto c = search_4chromatic(cfg);
    CHECK(c.seed == 8);

    // growth strategy packs edges and reliably reaches a triangle
    cfg.strategy = SubsetStrategy::Grow;
    cfg.budget = 3;
    const auto d = search_4chromatic(cfg);
    CHECK(d.best_chi == 3);

    // rational-only pools are flagged: the parity colouring caps chi at 3
    SearchConfig flat;
    flat.rational_height = 3;
    flat.budget = 2;
    flat.subset_size = 6;
    const auto e = search_4chromatic(flat);
    CHECK(e.pool_all_rational);
    CHECK(e.best_chi <= 3);
    CHECK(e.found.empty());

    // zero budget echoes the configuration without sampling
    flat.budget = 0;
    const auto f = search_4chromatic(flat);
    CHECK(f.candidates_tried == 0);
    CHECK(f.best_chi == 0);
    CHECK(f.pool_size == 30);
}

TEST_SUITE_END();
