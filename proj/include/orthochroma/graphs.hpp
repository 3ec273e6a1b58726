#pragma once

#include "orthochroma/sphere.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orthochroma::graphs {

using sphere::AlgSpherePoint;
using sphere::SpherePoint;

/// Graph vertex: an exact unit vector, tagged with its quadruple when the
/// coordinates are rational. Inner products always go through Q(sqrt2), so
/// rational and algebraic vertices mix freely.
struct VertexPoint {
    AlgSpherePoint alg;
    std::optional<SpherePoint> rational;

    static VertexPoint from_sphere(const SpherePoint& p) {
        return {AlgSpherePoint::from_sphere(p), p};
    }
    static VertexPoint from_alg(const AlgSpherePoint& p) { return {p, sphere::to_sphere(p)}; }

    friend bool operator==(const VertexPoint& u, const VertexPoint& v) { return u.alg == v.alg; }

    std::string str() const { return rational ? rational->str() : alg.str(); }
};

/// Finite orthogonality graph: vertices are exact unit vectors (antipodes
/// distinct), edges exactly the orthogonal pairs. Immutable after build.
class OrthoGraph {
public:
    /// Deduplicates in input order, then connects exactly-orthogonal pairs.
    static OrthoGraph build(const std::vector<VertexPoint>& points);

    int n() const { return static_cast<int>(vertices_.size()); }
    std::int64_t m() const { return static_cast<std::int64_t>(edges_.size()); }
    const std::vector<VertexPoint>& vertices() const { return vertices_; }
    const VertexPoint& vertex(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }
    /// Edges as (i, j) with i < j, lexicographically sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int i) const {
        return adj_.at(static_cast<std::size_t>(i));
    }
    bool adjacent(int i, int j) const;

    /// Every vertex has rational coordinates (so the parity colouring
    /// applies and chi <= 3).
    bool all_rational() const;

    OrthoGraph induced(const std::vector<int>& keep) const;

private:
    OrthoGraph() = default;

    std::vector<VertexPoint> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Total colour assignment (0-based) out of a palette of `palette` colours.
struct Colouring {
    std::vector<int> assignment;
    int palette = 0;
};

struct ValidationResult {
    bool valid = false;
    std::optional<std::pair<int, int>> violation;  // first bad edge, lexicographic
};

/// Proper iff no edge is monochromatic. The assignment must be total and
/// within the palette; anything else is an argument error, not impropriety.
ValidationResult validate_colouring(const OrthoGraph& g, const Colouring& c);

/// Thrown when a graph exceeds the exact-solve cap; carries the cheap
/// bounds that are still available.
class too_large_error : public std::runtime_error {
public:
    too_large_error(int vertices, int cap, int lower, int upper);

    int vertices, cap, lower_bound, upper_bound;
};

struct ChromaticResult {
    int chi = 0;
    Colouring witness;
    int clique_lower = 0;  // exact maximum clique size
    int greedy_upper = 0;  // DSATUR bound
};

/// Exact chromatic number: DSATUR upper bound, maximum-clique lower bound,
/// branch-and-bound k-colourability in between. Deterministic: ties always
/// break toward the lowest vertex index, and fresh colours are only opened
/// in order.
ChromaticResult chromatic_number(const OrthoGraph& g, int cap = 64);

/// DIMACS .col: vertex coordinates as comments, "p edge n m", 1-based e-lines.
std::string to_dimacs(const OrthoGraph& g);

enum class SubsetStrategy { Random, Grow };

std::string to_string(SubsetStrategy s);

/// Candidate pool plus sampling plan for the 4-chromatic hunt. The pool
/// mixes rational enumeration, Q(sqrt2) integer directions and z-rotation
/// orbit points; `budget` counts candidate subgraphs.
struct SearchConfig {
    std::int64_t rational_height = 0;  // enum_points(Quadruple, H) when > 0
    std::int64_t alg_height = 0;       // integer directions with |x|,|y|,|z| <= H
    int orbit_points = 0;              // z-orbit of (1,0,0;1)
    std::vector<VertexPoint> extra;    // caller-supplied points, prepended
    SubsetStrategy strategy = SubsetStrategy::Random;
    int subset_size = 12;
    std::uint64_t seed = 0;
    std::int64_t budget = 0;
    int solver_cap = 64;
};

struct SearchCandidate {
    std::vector<int> pool_indices;
    int chi = 0;
};

struct SearchReport {
    std::uint64_t seed = 0;
    std::size_t pool_size = 0;
    bool pool_all_rational = false;  // chi >= 4 impossible in that case
    std::int64_t candidates_tried = 0;
    int best_chi = 0;
    int best_lower_bound = 0;             // largest clique seen
    std::vector<SearchCandidate> found;   // candidates with chi >= 4
};

/// Builds the pool from the config (extra + enumeration + directions +
/// orbit, deduplicated in that order).
std::vector<VertexPoint> build_pool(const SearchConfig& config);

/// Samples `budget` subgraphs and solves each exactly. Deterministic in
/// (config, seed); a zero budget just echoes the seed and pool facts.
SearchReport search_4chromatic(const SearchConfig& config);

}  // namespace orthochroma::graphs
