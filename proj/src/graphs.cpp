#include "orthochroma/graphs.hpp"

#include "orthochroma/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace orthochroma::graphs {

namespace {

using numtheory::BigRational;

// Exact orthogonality; rational pairs take the integer-form shortcut, mixed
// pairs go through Q(sqrt2).
bool vertices_orthogonal(const VertexPoint& u, const VertexPoint& v) {
    if (u.rational && v.rational) return sphere::inner(*u.rational, *v.rational).orthogonal();
    return sphere::alg_orthogonal(u.alg, v.alg);
}

// Strict total order on exact points, for dedup maps.
struct CoordKey {
    std::array<BigRational, 6> k;

    explicit CoordKey(const AlgSpherePoint& p)
        : k{p.x().rat(),  p.x().sqrt2_coeff(), p.y().rat(),
            p.y().sqrt2_coeff(), p.z().rat(),  p.z().sqrt2_coeff()} {}

    bool operator<(const CoordKey& o) const {
        for (int i = 0; i < 6; ++i) {
            if (k[i] != o.k[i]) return k[i] < o.k[i];
        }
        return false;
    }
};

std::vector<VertexPoint> dedup_points(const std::vector<VertexPoint>& points) {
    std::vector<VertexPoint> out;
    std::map<CoordKey, int> seen;
    for (const auto& p : points) {
        if (seen.emplace(CoordKey(p.alg), static_cast<int>(out.size())).second) {
            out.push_back(p);
        }
    }
    return out;
}

}  // namespace

OrthoGraph OrthoGraph::build(const std::vector<VertexPoint>& points) {
    OrthoGraph g;
    g.vertices_ = dedup_points(points);
    const int n = g.n();
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!vertices_orthogonal(g.vertices_[i], g.vertices_[j])) continue;
            g.edges_.emplace_back(i, j);
            g.adj_[i].push_back(j);
            g.adj_[j].push_back(i);
        }
    }
    return g;
}

bool OrthoGraph::adjacent(int i, int j) const {
    const auto& nb = neighbours(i);
    return std::binary_search(nb.begin(), nb.end(), j);
}

bool OrthoGraph::all_rational() const {
    return std::all_of(vertices_.begin(), vertices_.end(),
                       [](const VertexPoint& v) { return v.rational.has_value(); });
}

OrthoGraph OrthoGraph::induced(const std::vector<int>& keep) const {
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("OrthoGraph::induced: duplicate vertex index");
    }
    if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= n())) {
        throw std::invalid_argument("OrthoGraph::induced: vertex index out of range");
    }
    OrthoGraph g;
    const int k = static_cast<int>(keep.size());
    g.vertices_.reserve(keep.size());
    for (int i : keep) g.vertices_.push_back(vertices_[static_cast<std::size_t>(i)]);
    g.adj_.assign(keep.size(), {});
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            if (!adjacent(keep[a], keep[b])) continue;
            g.edges_.emplace_back(a, b);
            g.adj_[a].push_back(b);
            g.adj_[b].push_back(a);
        }
    }
    return g;
}

ValidationResult validate_colouring(const OrthoGraph& g, const Colouring& c) {
    if (static_cast<int>(c.assignment.size()) != g.n()) {
        throw std::invalid_argument("validate_colouring: assignment is not total");
    }
    for (int col : c.assignment) {
        if (col < 0 || col >= c.palette) {
            throw std::invalid_argument("validate_colouring: colour index out of range");
        }
    }
    for (const auto& [i, j] : g.edges()) {
        if (c.assignment[static_cast<std::size_t>(i)] == c.assignment[static_cast<std::size_t>(j)]) {
            return {false, std::make_pair(i, j)};
        }
    }
    return {true, std::nullopt};
}

too_large_error::too_large_error(int vertices_in, int cap_in, int lower, int upper)
    : std::runtime_error("graph too large for exact solve: " + std::to_string(vertices_in) +
                         " vertices (cap " + std::to_string(cap_in) + "); bounds [" +
                         std::to_string(lower) + ", " + std::to_string(upper) + "]"),
      vertices(vertices_in), cap(cap_in), lower_bound(lower), upper_bound(upper) {}

namespace {

// Greedy DSATUR: colour the vertex seeing the most distinct neighbour
// colours first; ties by degree, then lowest index.
Colouring dsatur(const OrthoGraph& g) {
    const int n = g.n();
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<char>> sat_seen(static_cast<std::size_t>(n),
                                            std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<int> sat(static_cast<std::size_t>(n), 0);
    int palette = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int i = 0; i < n; ++i) {
            if (colour[i] != -1) continue;
            if (v == -1 || sat[i] > sat[v] ||
                (sat[i] == sat[v] && g.neighbours(i).size() > g.neighbours(v).size())) {
                v = i;
            }
        }
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        for (int u : g.neighbours(v)) {
            if (colour[u] != -1) used[colour[u]] = 1;
        }
        int c = 0;
        while (used[c]) ++c;
        colour[v] = c;
        palette = std::max(palette, c + 1);
        for (int u : g.neighbours(v)) {
            if (colour[u] == -1 && !sat_seen[u][c]) {
                sat_seen[u][c] = 1;
                ++sat[u];
            }
        }
    }
    return {std::move(colour), palette};
}

// Exact maximum clique, Carraghan-Pardalos style over a fixed order.
class CliqueSolver {
public:
    explicit CliqueSolver(const OrthoGraph& g) : g_(g) {
        order_.resize(static_cast<std::size_t>(g.n()));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return g.neighbours(a).size() > g.neighbours(b).size();
        });
    }

    std::vector<int> solve() {
        best_.clear();
        cur_.clear();
        expand(order_);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void expand(const std::vector<int>& cand) {
        if (cur_.size() + cand.size() <= best_.size()) return;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (cur_.size() + (cand.size() - i) <= best_.size()) return;
            const int v = cand[i];
            cur_.push_back(v);
            std::vector<int> next;
            for (std::size_t j = i + 1; j < cand.size(); ++j) {
                if (g_.adjacent(v, cand[j])) next.push_back(cand[j]);
            }
            if (next.empty()) {
                if (cur_.size() > best_.size()) best_ = cur_;
            } else {
                expand(next);
            }
            cur_.pop_back();
        }
    }

    const OrthoGraph& g_;
    std::vector<int> order_;
    std::vector<int> best_, cur_;
};

// Branch-and-bound k-colourability with dynamic DSATUR vertex selection.
// Fresh colours are opened lowest-first and at most one at a time, killing
// the palette symmetry; all ties break toward the lowest index.
class KColourSolver {
public:
    KColourSolver(const OrthoGraph& g, int k) : g_(g), k_(k) {
        colour_.assign(static_cast<std::size_t>(g.n()), -1);
    }

    std::optional<std::vector<int>> solve() {
        if (g_.n() == 0) return std::vector<int>{};
        if (recurse(0, -1)) return colour_;
        return std::nullopt;
    }

private:
    int saturation(int v, std::vector<char>& scratch) const {
        std::fill(scratch.begin(), scratch.end(), 0);
        int s = 0;
        for (int u : g_.neighbours(v)) {
            const int c = colour_[static_cast<std::size_t>(u)];
            if (c != -1 && !scratch[static_cast<std::size_t>(c)]) {
                scratch[static_cast<std::size_t>(c)] = 1;
                ++s;
            }
        }
        return s;
    }

    bool recurse(int done, int max_used) {
        if (done == g_.n()) return true;
        std::vector<char> scratch(static_cast<std::size_t>(k_), 0);
        int v = -1, vsat = -1;
        for (int i = 0; i < g_.n(); ++i) {
            if (colour_[static_cast<std::size_t>(i)] != -1) continue;
            const int s = saturation(i, scratch);
            if (s > vsat || (s == vsat && v != -1 &&
                             g_.neighbours(i).size() > g_.neighbours(v).size())) {
                v = i;
                vsat = s;
            }
        }
        if (vsat >= k_) return false;  // v has no feasible colour
        std::fill(scratch.begin(), scratch.end(), 0);
        for (int u : g_.neighbours(v)) {
            const int c = colour_[static_cast<std::size_t>(u)];
            if (c != -1) scratch[static_cast<std::size_t>(c)] = 1;
        }
        const int limit = std::min(k_ - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (scratch[static_cast<std::size_t>(c)]) continue;
            colour_[static_cast<std::size_t>(v)] = c;
            if (recurse(done + 1, std::max(max_used, c))) return true;
            colour_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    const OrthoGraph& g_;
    int k_;
    std::vector<int> colour_;
};

// Greedy clique for the too-large path: still a valid lower bound.
int greedy_clique(const OrthoGraph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.neighbours(a).size() > g.neighbours(b).size();
    });
    std::vector<int> clique;
    for (int v : order) {
        if (std::all_of(clique.begin(), clique.end(),
                        [&](int u) { return g.adjacent(u, v); })) {
            clique.push_back(v);
        }
    }
    return static_cast<int>(clique.size());
}

}  // namespace

ChromaticResult chromatic_number(const OrthoGraph& g, int cap) {
    if (cap < 1) throw std::invalid_argument("chromatic_number: cap must be positive");
    const int n = g.n();
    if (n == 0) return {0, {{}, 0}, 0, 0};
    if (n > cap) {
        throw too_large_error(n, cap, greedy_clique(g), dsatur(g).palette);
    }
    Colouring greedy = dsatur(g);
    const int upper = greedy.palette;
    const int lower = static_cast<int>(CliqueSolver(g).solve().size());
    for (int k = lower; k < upper; ++k) {
        if (auto a = KColourSolver(g, k).solve()) {
            return {k, {std::move(*a), k}, lower, upper};
        }
    }
    return {upper, std::move(greedy), lower, upper};
}

std::string to_dimacs(const OrthoGraph& g) {
    std::ostringstream os;
    os << "c orthogonality graph\n";
    for (int i = 0; i < g.n(); ++i) {
        os << "c v " << (i + 1) << " " << g.vertex(i).str() << "\n";
    }
    os << "p edge " << g.n() << " " << g.m() << "\n";
    for (const auto& [i, j] : g.edges()) {
        os << "e " << (i + 1) << " " << (j + 1) << "\n";
    }
    return os.str();
}

std::string to_string(SubsetStrategy s) {
    return s == SubsetStrategy::Random ? "random" : "grow";
}

std::vector<VertexPoint> build_pool(const SearchConfig& config) {
    std::vector<VertexPoint> pool = config.extra;
    if (config.rational_height > 0) {
        generators::for_each_point(generators::EnumMode::Quadruple, config.rational_height,
                                   [&](const SpherePoint& p) {
                                       pool.push_back(VertexPoint::from_sphere(p));
                                   });
    }
    if (config.alg_height > 0) {
        const auto h = config.alg_height;
        for (numtheory::BigInt x = -h; x <= h; ++x) {
            for (numtheory::BigInt y = -h; y <= h; ++y) {
                for (numtheory::BigInt z = -h; z <= h; ++z) {
                    if (x == 0 && y == 0 && z == 0) continue;
                    if (auto p = AlgSpherePoint::from_direction(x, y, z)) {
                        pool.push_back(VertexPoint::from_alg(*p));
                    }
                }
            }
        }
    }
    if (config.orbit_points > 0) {
        const auto rz = generators::ExactRotation::rotation_z();
        const auto start = SpherePoint::from_quadruple(1, 0, 0, 1);
        for (const auto& e : generators::orbit(rz, start, config.orbit_points)) {
            pool.push_back(VertexPoint::from_sphere(e.point));
        }
    }
    return dedup_points(pool);
}

SearchReport search_4chromatic(const SearchConfig& config) {
    if (config.subset_size < 1) {
        throw std::invalid_argument("search_4chromatic: subset size must be positive");
    }
    if (config.subset_size > config.solver_cap) {
        throw std::invalid_argument("search_4chromatic: subset size exceeds solver cap");
    }
    const auto pool = build_pool(config);
    SearchReport rep;
    rep.seed = config.seed;
    rep.pool_size = pool.size();
    rep.pool_all_rational = std::all_of(pool.begin(), pool.end(), [](const VertexPoint& v) {
        return v.rational.has_value();
    });
    if (pool.empty()) return rep;

    const int k = std::min<int>(config.subset_size, static_cast<int>(pool.size()));
    for (std::int64_t t = 0; t < config.budget; ++t) {
        // Per-candidate generator, so candidates could be farmed out to
        // workers without changing the report.
        std::mt19937_64 eng(config.seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(t + 1));
        std::vector<int> subset;
        if (config.strategy == SubsetStrategy::Random) {
            std::vector<int> idx(pool.size());
            std::iota(idx.begin(), idx.end(), 0);
            for (int i = 0; i < k; ++i) {
                std::uniform_int_distribution<std::size_t> pick(i, idx.size() - 1);
                std::swap(idx[static_cast<std::size_t>(i)], idx[pick(eng)]);
                subset.push_back(idx[static_cast<std::size_t>(i)]);
            }
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            subset.push_back(static_cast<int>(pick(eng)));
            std::vector<char> in_set(pool.size(), 0);
            in_set[static_cast<std::size_t>(subset[0])] = 1;
            while (static_cast<int>(subset.size()) < k) {
                int best = -1, best_deg = -1;
                for (std::size_t u = 0; u < pool.size(); ++u) {
                    if (in_set[u]) continue;
                    int deg = 0;
                    for (int s : subset) {
                        deg += vertices_orthogonal(pool[u], pool[static_cast<std::size_t>(s)]);
                    }
                    if (deg > best_deg) {
                        best = static_cast<int>(u);
                        best_deg = deg;
                    }
                }
                subset.push_back(best);
                in_set[static_cast<std::size_t>(best)] = 1;
            }
        }
        std::sort(subset.begin(), subset.end());

        std::vector<VertexPoint> pts;
        pts.reserve(subset.size());
        for (int i : subset) pts.push_back(pool[static_cast<std::size_t>(i)]);
        const auto g = OrthoGraph::build(pts);
        const auto res = chromatic_number(g, config.solver_cap);
        ++rep.candidates_tried;
        rep.best_chi = std::max(rep.best_chi, res.chi);
        rep.best_lower_bound = std::max(rep.best_lower_bound, res.clique_lower);
        if (res.chi >= 4) rep.found.push_back({subset, res.chi});
    }
    return rep;
}

}  // namespace orthochroma::graphs
