#include "orthochroma/serialize.hpp"

#include <stdexcept>
#include <utility>

namespace orthochroma::serialize {

using numtheory::BigInt;
using numtheory::BigRational;
using numtheory::QSqrt2;

json to_json(const BigRational& q) { return numtheory::rational_str(q); }

BigRational rational_from_json(const json& j) {
    if (!j.is_string()) {
        throw std::invalid_argument("rational_from_json: expected a decimal string, got " +
                                    j.dump());
    }
    return numtheory::parse_rational(j.get<std::string>());
}

json to_json(const QSqrt2& q) {
    return json{{"r", to_json(q.rat())}, {"s", to_json(q.sqrt2_coeff())}};
}

QSqrt2 qsqrt2_from_json(const json& j) {
    return QSqrt2(rational_from_json(j.at("r")), rational_from_json(j.at("s")));
}

json to_json(const projective::PrimitiveTriple& t) {
    return json{{"x", t.x().str()}, {"y", t.y().str()}, {"z", t.z().str()}};
}

projective::PrimitiveTriple triple_from_json(const json& j) {
    return projective::PrimitiveTriple::normalize(BigInt(j.at("x").get<std::string>()),
                                                  BigInt(j.at("y").get<std::string>()),
                                                  BigInt(j.at("z").get<std::string>()));
}

json to_json(const sphere::SpherePoint& p) {
    return json{{"a", p.a().str()}, {"b", p.b().str()}, {"c", p.c().str()}, {"d", p.d().str()}};
}

sphere::SpherePoint sphere_point_from_json(const json& j) {
    return sphere::SpherePoint::from_quadruple(
        BigInt(j.at("a").get<std::string>()), BigInt(j.at("b").get<std::string>()),
        BigInt(j.at("c").get<std::string>()), BigInt(j.at("d").get<std::string>()));
}

json to_json(const sphere::AlgSpherePoint& p) {
    return json{{"x", to_json(p.x())}, {"y", to_json(p.y())}, {"z", to_json(p.z())}};
}

sphere::AlgSpherePoint alg_point_from_json(const json& j) {
    return sphere::AlgSpherePoint::from_coords(
        {qsqrt2_from_json(j.at("x")), qsqrt2_from_json(j.at("y")), qsqrt2_from_json(j.at("z"))});
}

json to_json(const graphs::VertexPoint& v) {
    if (v.rational) {
        json j = to_json(*v.rational);
        j["kind"] = "rational";
        return j;
    }
    json j = to_json(v.alg);
    j["kind"] = "algebraic";
    return j;
}

graphs::VertexPoint vertex_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "rational") return graphs::VertexPoint::from_sphere(sphere_point_from_json(j));
    if (kind == "algebraic") return graphs::VertexPoint::from_alg(alg_point_from_json(j));
    throw std::invalid_argument("unknown vertex kind '" + kind + "'");
}

json to_json(const graphs::OrthoGraph& g) {
    json verts = json::array();
    for (const auto& v : g.vertices()) verts.push_back(to_json(v));
    json edges = json::array();
    for (const auto& [i, j] : g.edges()) edges.push_back(json::array({i, j}));
    return json{{"vertices", std::move(verts)}, {"edges", std::move(edges)}};
}

graphs::OrthoGraph graph_from_json(const json& j) {
    std::vector<graphs::VertexPoint> pts;
    for (const auto& v : j.at("vertices")) pts.push_back(vertex_from_json(v));
    auto g = graphs::OrthoGraph::build(pts);
    if (g.n() != static_cast<int>(pts.size())) {
        throw std::invalid_argument("graph import: duplicate vertices");
    }
    std::vector<std::pair<int, int>> listed;
    for (const auto& e : j.at("edges")) {
        listed.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    if (listed != g.edges()) {
        throw std::invalid_argument("graph import: edge list disagrees with exact orthogonality");
    }
    return g;
}

json to_json(const graphs::Colouring& c) {
    return json{{"palette", c.palette}, {"assignment", c.assignment}};
}

graphs::Colouring colouring_from_json(const json& j) {
    return {j.at("assignment").get<std::vector<int>>(), j.at("palette").get<int>()};
}

json table_to_json(const fourcolor::ColourTable& table) {
    json j = json::object();
    for (const auto& p : fourcolor::SignPattern::all()) {
        j[p.str()] = fourcolor::to_string(fourcolor::colour4(p, table));
    }
    return j;
}

fourcolor::ColourTable table_from_json(const json& j) {
    fourcolor::ColourTable table{};
    if (j.size() != fourcolor::SignPattern::all().size()) {
        throw std::invalid_argument("colour table must cover all 26 sign patterns");
    }
    for (const auto& p : fourcolor::SignPattern::all()) {
        table[static_cast<std::size_t>(p.code())] =
            fourcolor::colour4_from_string(j.at(p.str()).get<std::string>());
    }
    return table;
}

json to_json(const fourcolor::TableReport& r) {
    json viols = json::array();
    for (const auto& v : r.violations) {
        viols.push_back(json{{"a", v.a.str()},
                             {"b", v.b.str()},
                             {"class", fourcolor::to_string(v.cls)},
                             {"colour_a", fourcolor::to_string(v.colour_a)},
                             {"colour_b", fourcolor::to_string(v.colour_b)}});
    }
    return json{{"pairs_checked", r.pairs_checked},
                {"violations", std::move(viols)},
                {"pass", r.pass()}};
}

json to_json(const projective::LineScanResult& r) {
    json pts = json::array();
    for (const auto& e : r.points) {
        pts.push_back(json{{"point", to_json(e.point)},
                           {"colour", projective::to_string(e.colour)}});
    }
    json cols = json::array();
    for (int c = 0; c < 3; ++c) {
        if (r.seen[static_cast<std::size_t>(c)]) {
            cols.push_back(projective::to_string(static_cast<projective::Colour3>(c)));
        }
    }
    return json{{"points", std::move(pts)},
                {"colours_seen", std::move(cols)},
                {"colour_count", r.colour_count()}};
}

json to_json(const generators::OrbitEntry& e) {
    return json{{"point", to_json(e.point)}, {"colour", projective::to_string(e.colour)}};
}

json to_json(const generators::CoverageReport& r) {
    return json{{"total_cells", r.total_cells},
                {"empty_cells", r.empty_cells},
                {"points_counted", r.points_counted},
                {"off_domain", r.off_domain},
                {"counts", r.counts}};
}

json to_json(const generators::CircleScanResult& r) {
    json pts = json::array();
    for (const auto& e : r.points) pts.push_back(to_json(e));
    return json{{"colour_u", projective::to_string(r.colour_u)},
                {"colour_v", projective::to_string(r.colour_v)},
                {"same_colour_case", r.same_colour_case},
                {"points", std::move(pts)},
                {"with_u_colour", r.with_u_colour},
                {"other_colour", r.other_colour},
                {"dichotomy_holds", r.dichotomy_holds}};
}

json to_json(const graphs::ChromaticResult& r) {
    return json{{"chi", r.chi},
                {"witness", to_json(r.witness)},
                {"clique_lower", r.clique_lower},
                {"greedy_upper", r.greedy_upper}};
}

json to_json(const graphs::SearchReport& r) {
    json found = json::array();
    for (const auto& c : r.found) {
        found.push_back(json{{"pool_indices", c.pool_indices}, {"chi", c.chi}});
    }
    return json{{"seed", r.seed},
                {"pool_size", r.pool_size},
                {"pool_all_rational", r.pool_all_rational},
                {"candidates_tried", r.candidates_tried},
                {"best_chi", r.best_chi},
                {"best_lower_bound", r.best_lower_bound},
                {"found", std::move(found)}};
}

}  // namespace orthochroma::serialize
