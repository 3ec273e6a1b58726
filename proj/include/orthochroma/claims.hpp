#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace orthochroma::claims {

/// One checked assertion. `pass` reflects the computed checks only;
/// discrepancies are findings worth reading (a value that differs from how
/// the statement is usually quoted), not failures.
struct ClaimResult {
    std::string id;
    std::string statement;
    bool pass = false;
    std::vector<std::string> notes;
    std::vector<std::string> discrepancies;
};

/// The classic example assertions about the colourings, evaluated exactly:
///  (a) the white diagonal pair, (b) the black orthogonal pair, (c) the
///  black pair whose inner product is 12, (d) the parity invariant on
///  enumerated points, (e) orbit monochromaticity and the angle convention,
///  (f) the 4-colouring certificate.
std::vector<ClaimResult> run_all();

bool all_pass(const std::vector<ClaimResult>& claims);

nlohmann::json to_json(const ClaimResult& c);
nlohmann::json to_json(const std::vector<ClaimResult>& claims);

}  // namespace orthochroma::claims
