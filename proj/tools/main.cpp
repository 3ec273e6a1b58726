#include "orthochroma/claims.hpp"
#include "orthochroma/selfcheck.hpp"
#include "orthochroma/serialize.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using nlohmann::json;
using orthochroma::numtheory::BigInt;
using orthochroma::numtheory::BigRational;
using namespace orthochroma;

struct Common {
    std::uint64_t p = 2;
    std::int64_t height = 100;
    std::int64_t count = 1000;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    std::int64_t budget = 0;
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--p", c.p, "prime for valuation colourings")->capture_default_str();
    sub->add_option("--H", c.height, "height bound")->capture_default_str();
    sub->add_option("--N", c.count, "orbit length / sample count")->capture_default_str();
    sub->add_option("--tol", c.tol, "tolerance of the float front-end")->capture_default_str();
    sub->add_option("--seed", c.seed, "random seed, echoed in output")->capture_default_str();
    sub->add_option("--budget", c.budget, "search budget")->capture_default_str();
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "dimacs", "text"}))
        ->capture_default_str();
    sub->add_option("--out", c.out, "write output to a file instead of stdout");
}

// Sink that goes to --out when given, stdout otherwise.
class Output {
public:
    explicit Output(const Common& c) {
        if (!c.out.empty()) {
            file_.open(c.out);
            if (!file_) throw std::invalid_argument("cannot open output file '" + c.out + "'");
        }
    }

    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void require_json_or_text(const Common& c) {
    if (c.format == "dimacs") {
        throw usage_error("--format dimacs only applies to the graph subcommand");
    }
}

// Vector components come in as exact fractions or as floats; floats are
// only meaningful for the sign-pattern front-end.
struct Component {
    std::optional<BigRational> exact;
    double approx = 0;
};

Component parse_component(const std::string& text) {
    try {
        return {numtheory::parse_rational(text), 0};
    } catch (const std::invalid_argument&) {
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used == text.size()) return {std::nullopt, v};
    } catch (const std::exception&) {
    }
    throw usage_error("cannot parse vector component '" + text + "'");
}

sphere::SpherePoint parse_quadruple(const std::string& text) {
    std::array<BigInt, 4> q;
    std::stringstream ss(text);
    std::string part;
    for (int i = 0; i < 4; ++i) {
        if (!std::getline(ss, part, ',')) {
            throw usage_error("expected four comma-separated integers, got '" + text + "'");
        }
        q[static_cast<std::size_t>(i)] = BigInt(part);
    }
    if (std::getline(ss, part, ',')) {
        throw usage_error("expected four comma-separated integers, got '" + text + "'");
    }
    return sphere::SpherePoint::from_quadruple(q[0], q[1], q[2], q[3]);
}

// Clears denominators: exact components -> integer direction.
std::array<BigInt, 3> integer_direction(const std::array<BigRational, 3>& v) {
    BigInt l = 1;
    for (const auto& c : v) l = lcm(l, denominator(c));
    return {numerator(v[0]) * (l / denominator(v[0])),
            numerator(v[1]) * (l / denominator(v[1])),
            numerator(v[2]) * (l / denominator(v[2]))};
}

int cmd_gen(const Common& c, const std::string& mode) {
    require_json_or_text(c);
    Output out(c);
    auto& os = out.stream();
    const auto m = mode == "stereo" ? generators::EnumMode::Stereo : generators::EnumMode::Quadruple;
    if (c.format == "json") {
        os << json{{"command", "gen"}, {"mode", mode}, {"H", c.height}, {"seed", c.seed}}.dump()
           << "\n";
    } else {
        os << "# gen mode=" << mode << " H=" << c.height << " seed=" << c.seed << "\n";
    }
    generators::for_each_point(m, c.height, [&](const sphere::SpherePoint& p) {
        if (c.format == "json") {
            json j = serialize::to_json(p);
            j["colour"] = projective::to_string(sphere::colour3(p));
            os << j.dump() << "\n";
        } else {
            os << p.str() << " " << projective::to_string(sphere::colour3(p)) << "\n";
        }
    });
    return 0;
}

int cmd_color(const Common& c, const std::string& mode, const std::vector<std::string>& comps) {
    require_json_or_text(c);
    Output out(c);
    auto& os = out.stream();
    std::array<Component, 3> parsed;
    for (int i = 0; i < 3; ++i) parsed[static_cast<std::size_t>(i)] = parse_component(comps[i]);
    const bool exact = parsed[0].exact && parsed[1].exact && parsed[2].exact;

    json j{{"command", "color"}, {"mode", mode}, {"seed", c.seed}};
    std::string colour;
    if (mode == "four") {
        if (exact) {
            const std::array<BigRational, 3> v{*parsed[0].exact, *parsed[1].exact,
                                               *parsed[2].exact};
            colour = fourcolor::to_string(fourcolor::colour4(fourcolor::sign_pattern(v)));
        } else {
            auto val = [](const Component& p) {
                return p.exact ? numtheory::to_double(*p.exact) : p.approx;
            };
            colour = fourcolor::to_string(
                fourcolor::colour4_float(val(parsed[0]), val(parsed[1]), val(parsed[2]), c.tol));
        }
    } else if (mode == "valuation" || mode == "three") {
        if (!exact) {
            throw usage_error("mode '" + mode + "' needs exact rational components");
        }
        const auto dir = integer_direction({*parsed[0].exact, *parsed[1].exact, *parsed[2].exact});
        const auto t = projective::PrimitiveTriple::normalize(dir[0], dir[1], dir[2]);
        if (mode == "valuation") {
            colour = projective::to_string(projective::colour_valuation(t, c.p));
            j["p"] = c.p;
        } else {
            const auto p = sphere::SpherePoint::from_projective(t);
            if (!p) {
                std::cerr << "no rational unit vector in direction " << t.str() << "\n";
                return 1;
            }
            colour = projective::to_string(sphere::colour3(*p));
            j["point"] = serialize::to_json(*p);
        }
    } else {
        throw usage_error("unknown colour mode '" + mode + "'");
    }
    j["colour"] = colour;
    if (c.format == "json") {
        os << j.dump() << "\n";
    } else {
        os << colour << "\n";
    }
    return 0;
}

int cmd_verify(const Common& c) {
    require_json_or_text(c);
    Output out(c);
    auto& os = out.stream();
    const auto suites = selfcheck::check_all(c.p, c.height, c.tol, c.seed);
    bool all = true;
    json arr = json::array();
    for (const auto& s : suites) {
        all = all && s.pass();
        arr.push_back(json{{"name", s.name},
                           {"checks", s.checks},
                           {"failures", s.failures},
                           {"pass", s.pass()}});
    }
    if (c.format == "json") {
        os << json{{"command", "verify"}, {"seed", c.seed}, {"suites", arr}, {"all_pass", all}}
                  .dump()
           << "\n";
    } else {
        os << "# verify seed=" << c.seed << "\n";
        for (const auto& s : suites) {
            os << s.name << ": " << (s.pass() ? "pass" : "FAIL") << " (" << s.checks
               << " checks)\n";
            for (const auto& f : s.failures) os << "  " << f << "\n";
        }
        os << (all ? "all suites pass" : "FAILURES above") << "\n";
    }
    return all ? 0 : 1;
}

graphs::OrthoGraph build_cli_graph(const Common& c, std::int64_t alg_height,
                                   const std::string& in_file) {
    if (!in_file.empty()) {
        std::ifstream in(in_file);
        if (!in) throw usage_error("cannot open graph file '" + in_file + "'");
        json j;
        in >> j;
        return serialize::graph_from_json(j);
    }
    std::vector<graphs::VertexPoint> pts;
    generators::for_each_point(generators::EnumMode::Quadruple, c.height,
                               [&](const sphere::SpherePoint& p) {
                                   pts.push_back(graphs::VertexPoint::from_sphere(p));
                               });
    for (BigInt x = -alg_height; x <= alg_height; ++x) {
        for (BigInt y = -alg_height; y <= alg_height; ++y) {
            for (BigInt z = -alg_height; z <= alg_height; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                if (auto p = sphere::AlgSpherePoint::from_direction(x, y, z)) {
                    if (!p->is_rational()) pts.push_back(graphs::VertexPoint::from_alg(*p));
                }
            }
        }
    }
    return graphs::OrthoGraph::build(pts);
}

int cmd_graph(const Common& c, std::int64_t alg_height, const std::string& in_file) {
    Output out(c);
    auto& os = out.stream();
    const auto g = build_cli_graph(c, alg_height, in_file);
    if (c.format == "dimacs") {
        os << graphs::to_dimacs(g);
    } else if (c.format == "json") {
        json j = serialize::to_json(g);
        j["command"] = "graph";
        j["seed"] = c.seed;
        os << j.dump() << "\n";
    } else {
        os << "graph: " << g.n() << " vertices, " << g.m() << " edges\n";
    }
    return 0;
}

int cmd_chromatic(const Common& c, std::int64_t alg_height, const std::string& in_file, int cap) {
    require_json_or_text(c);
    Output out(c);
    auto& os = out.stream();
    const auto g = build_cli_graph(c, alg_height, in_file);
    try {
        const auto res = graphs::chromatic_number(g, cap);
        if (c.format == "json") {
            json j = serialize::to_json(res);
            j["command"] = "chromatic";
            j["seed"] = c.seed;
            j["n"] = g.n();
            j["m"] = g.m();
            os << j.dump() << "\n";
        } else {
            os << "chi = " << res.chi << " (clique >= " << res.clique_lower << ", greedy <= "
               << res.greedy_upper << ")\n";
        }
        return 0;
    } catch (const graphs::too_large_error& e) {
        if (c.format == "json") {
            os << json{{"command", "chromatic"},
                       {"seed", c.seed},
                       {"error", e.what()},
                       {"n", e.vertices},
                       {"cap", e.cap},
                       {"clique_lower", e.lower_bound},
                       {"greedy_upper", e.upper_bound}}
                      .dump()
               << "\n";
        } else {
            os << e.what() << "\n";
        }
        return 1;
    }
}

int cmd_orbit(const Common& c, const std::string& axis, const std::string& start) {
    require_json_or_text(c);
    Output out(c);
    auto& os = out.stream();
    const auto rot = axis == "y" ? generators::ExactRotation::rotation_y()
                                 : generators::ExactRotation::rotation_z();
    const auto p0 = start.empty() ? sphere::SpherePoint::from_quadruple(1, 0, 0, 1)
                                  : parse_quadruple(start);
    const auto orb = generators::orbit(rot, p0, static_cast<int>(c.count));
    bool mono = true;
    for (const auto& e : orb) mono = mono && e.colour == orb[0].colour;
    if (c.format == "json") {
        os << json{{"command", "orbit"},
                   {"axis", axis},
                   {"N", c.count},
                   {"seed", c.seed},
                   {"monochromatic", mono},
                   {"colour", projective::to_string(orb[0].colour)}}
                  .dump()
           << "\n";
        for (const auto& e : orb) os << serialize::to_json(e).dump() << "\n";
    } else {
        os << "# orbit axis=" << axis << " N=" << c.count << " seed=" << c.seed << "\n";
        for (const auto& e : orb) {
            os << e.point.str() << " " << projective::to_string(e.colour) << "\n";
        }
        os << (mono ? "monochromatic" : "NOT monochromatic") << "\n";
    }
    return 0;
}

int cmd_circle(const Common& c, const std::string& u_text, const std::string& v_text) {
    require_json_or_text(c);
    Output out(c);
    auto& os = out.stream();
    const auto u = parse_quadruple(u_text), v = parse_quadruple(v_text);
    const auto res = generators::circle_scan(u, v, c.height);
    if (c.format == "json") {
        json j = serialize::to_json(res);
        j["command"] = "circle";
        j["H"] = c.height;
        j["seed"] = c.seed;
        os << j.dump() << "\n";
    } else {
        os << "circle through " << v.str() << " about " << u.str() << ": "
           << res.points.size() << " points, "
           << (res.dichotomy_holds ? "dichotomy holds" : "DICHOTOMY FAILS") << "\n";
    }
    return res.dichotomy_holds ? 0 : 1;
}

int cmd_claims(const Common& c) {
    require_json_or_text(c);
    Output out(c);
    auto& os = out.stream();
    const auto claims = claims::run_all();
    if (c.format == "json") {
        json j = claims::to_json(claims);
        j["command"] = "claims";
        j["seed"] = c.seed;
        os << j.dump() << "\n";
    } else {
        for (const auto& cl : claims) {
            os << "[" << (cl.pass ? "pass" : "FAIL") << "] (" << cl.id << ") " << cl.statement
               << "\n";
            for (const auto& n : cl.notes) os << "    note: " << n << "\n";
            for (const auto& d : cl.discrepancies) os << "    finding: " << d << "\n";
        }
    }
    return claims::all_pass(claims) ? 0 : 1;
}

int cmd_table(const Common& c) {
    require_json_or_text(c);
    Output out(c);
    auto& os = out.stream();
    const auto rep = fourcolor::verify_table();
    if (c.format == "json") {
        os << json{{"command", "table"},
                   {"seed", c.seed},
                   {"table", serialize::table_to_json(fourcolor::colour4_table())},
                   {"certificate", serialize::to_json(rep)}}
                  .dump()
           << "\n";
    } else {
        for (const auto& p : fourcolor::SignPattern::all()) {
            os << p.str() << " " << fourcolor::to_string(fourcolor::colour4(p)) << "\n";
        }
        os << "certificate: " << rep.pairs_checked << " pairs, "
           << rep.violations.size() << " violations\n";
    }
    return rep.pass() ? 0 : 1;
}

int cmd_search(const Common& c, graphs::SearchConfig cfg) {
    require_json_or_text(c);
    Output out(c);
    auto& os = out.stream();
    cfg.seed = c.seed;
    cfg.budget = c.budget;
    const auto rep = graphs::search_4chromatic(cfg);
    if (c.format == "json") {
        json j = serialize::to_json(rep);
        j["command"] = "search";
        os << j.dump() << "\n";
    } else {
        os << "# search seed=" << rep.seed << " pool=" << rep.pool_size << "\n";
        os << "tried " << rep.candidates_tried << ", best chi " << rep.best_chi
           << ", found " << rep.found.size() << "\n";
        if (rep.pool_all_rational) {
            os << "pool is rational-only: chi >= 4 is impossible\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact colourings of the sphere orthogonality graph"};
    app.require_subcommand(1);

    Common common;
    std::string gen_mode = "quadruple", color_mode = "three";
    std::vector<std::string> color_comps;
    std::string axis = "z", start, u_text, v_text, in_file;
    std::int64_t alg_height = 0;
    int cap = 64;
    graphs::SearchConfig search_cfg;
    std::string strategy = "random";

    auto* gen = app.add_subcommand("gen", "enumerate sphere points with colours");
    add_common(gen, common);
    gen->add_option("--mode", gen_mode, "quadruple | stereo")
        ->check(CLI::IsMember({"quadruple", "stereo"}))
        ->capture_default_str();

    auto* color = app.add_subcommand("color", "colour a single vector");
    add_common(color, common);
    color->add_option("--mode", color_mode, "three | valuation | four")
        ->check(CLI::IsMember({"three", "valuation", "four"}))
        ->capture_default_str();
    color->add_option("components", color_comps, "vector components")->expected(3);

    auto* verify = app.add_subcommand("verify", "run every module's property suite");
    add_common(verify, common);

    auto* graph = app.add_subcommand("graph", "build and export an orthogonality graph");
    add_common(graph, common);
    graph->add_option("--alg-height", alg_height, "include Q(sqrt2) directions up to this height");
    graph->add_option("--in", in_file, "load a graph JSON file instead of enumerating");

    auto* chromatic = app.add_subcommand("chromatic", "exact chromatic number");
    add_common(chromatic, common);
    chromatic->add_option("--alg-height", alg_height, "include Q(sqrt2) directions");
    chromatic->add_option("--in", in_file, "load a graph JSON file instead of enumerating");
    chromatic->add_option("--cap", cap, "exact-solver vertex cap")->capture_default_str();

    auto* orbit = app.add_subcommand("orbit", "iterate an exact rotation");
    add_common(orbit, common);
    orbit->add_option("--axis", axis, "z | y")->check(CLI::IsMember({"z", "y"}))
        ->capture_default_str();
    orbit->add_option("--start", start, "start point as a,b,c,d (default 1,0,0,1)");

    auto* circle = app.add_subcommand("circle", "scan a circle for rational points");
    add_common(circle, common);
    circle->add_option("--u", u_text, "axis point as a,b,c,d")->required();
    circle->add_option("--v", v_text, "point on the circle as a,b,c,d")->required();

    auto* claims_cmd = app.add_subcommand("claims", "evaluate the documented assertions");
    add_common(claims_cmd, common);

    auto* table = app.add_subcommand("table", "print the 4-colouring table and certificate");
    add_common(table, common);

    auto* search = app.add_subcommand("search", "hunt for 4-chromatic subgraphs");
    add_common(search, common);
    search_cfg.rational_height = 5;
    search_cfg.alg_height = 2;
    search->add_option("--rational-height", search_cfg.rational_height, "rational pool height")
        ->capture_default_str();
    search->add_option("--alg-height", search_cfg.alg_height, "Q(sqrt2) pool height")
        ->capture_default_str();
    search->add_option("--orbit-points", search_cfg.orbit_points, "z-orbit pool points")
        ->capture_default_str();
    search->add_option("--subset-size", search_cfg.subset_size, "candidate subgraph size")
        ->capture_default_str();
    search->add_option("--strategy", strategy, "random | grow")
        ->check(CLI::IsMember({"random", "grow"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // --help is not an error
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(common, gen_mode);
        if (color->parsed()) {
            if (color_comps.size() != 3) throw usage_error("color needs three components");
            return cmd_color(common, color_mode, color_comps);
        }
        if (verify->parsed()) return cmd_verify(common);
        if (graph->parsed()) return cmd_graph(common, alg_height, in_file);
        if (chromatic->parsed()) return cmd_chromatic(common, alg_height, in_file, cap);
        if (orbit->parsed()) return cmd_orbit(common, axis, start);
        if (circle->parsed()) return cmd_circle(common, u_text, v_text);
        if (claims_cmd->parsed()) return cmd_claims(common);
        if (table->parsed()) return cmd_table(common);
        if (search->parsed()) {
            search_cfg.strategy = strategy == "grow" ? graphs::SubsetStrategy::Grow
                                                     : graphs::SubsetStrategy::Random;
            return cmd_search(common, search_cfg);
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
