#pragma once

#include "orthochroma/fourcolor.hpp"
#include "orthochroma/graphs.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orthochroma::selfcheck {

/// Outcome of one module's property suite: how many individual checks ran
/// and a description of each failure (empty = pass).
struct SuiteResult {
    std::string name;
    std::int64_t checks = 0;
    std::vector<std::string> failures;

    bool pass() const { return failures.empty(); }
};

/// Chromatic number by plain backtracking in fixed vertex order — no
/// bounds, no clever ordering — as an independent oracle for the solver.
int brute_chromatic(const graphs::OrthoGraph& g);

/// Orthogonality class by exhaustive search over integer vectors with
/// entries in {-3..3} matching the patterns.
fourcolor::OrthoClass brute_ortho_class(const fourcolor::SignPattern& a,
                                        const fourcolor::SignPattern& b);

// One suite per module. Randomized checks draw from the given seed; every
// suite also re-checks its module's frozen examples.
SuiteResult check_numtheory(std::uint64_t seed);
SuiteResult check_projective(std::uint64_t p, std::int64_t height, std::uint64_t seed);
SuiteResult check_sphere(std::int64_t height, std::uint64_t seed);
SuiteResult check_fourcolor(double tol, std::uint64_t seed);
SuiteResult check_generators(std::uint64_t seed);
SuiteResult check_graphs(std::uint64_t seed);

std::vector<SuiteResult> check_all(std::uint64_t p, std::int64_t height, double tol,
                                   std::uint64_t seed);

}  // namespace orthochroma::selfcheck
