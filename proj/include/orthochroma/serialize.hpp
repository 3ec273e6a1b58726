#pragma once

#include "orthochroma/fourcolor.hpp"
#include "orthochroma/generators.hpp"
#include "orthochroma/graphs.hpp"
#include "orthochroma/projective.hpp"
#include "orthochroma/sphere.hpp"

#include "json.hpp"

namespace orthochroma::serialize {

using nlohmann::json;

// Big integers and rationals travel as decimal strings ("a" or "a/b") so
// consumers are never bitten by number-width limits.

json to_json(const numtheory::BigRational& q);
numtheory::BigRational rational_from_json(const json& j);

json to_json(const numtheory::QSqrt2& q);  // {"r": rational, "s": sqrt2 coefficient}
numtheory::QSqrt2 qsqrt2_from_json(const json& j);

json to_json(const projective::PrimitiveTriple& t);
projective::PrimitiveTriple triple_from_json(const json& j);

json to_json(const sphere::SpherePoint& p);
sphere::SpherePoint sphere_point_from_json(const json& j);

json to_json(const sphere::AlgSpherePoint& p);
sphere::AlgSpherePoint alg_point_from_json(const json& j);

// {"kind": "rational" | "algebraic", ...coordinates}
json to_json(const graphs::VertexPoint& v);
graphs::VertexPoint vertex_from_json(const json& j);

// {"vertices": [...], "edges": [[i,j],...]}; the importer rebuilds the
// edges from scratch and refuses input whose edge list disagrees with
// exact orthogonality.
json to_json(const graphs::OrthoGraph& g);
graphs::OrthoGraph graph_from_json(const json& j);

json to_json(const graphs::Colouring& c);
graphs::Colouring colouring_from_json(const json& j);

// Sign-pattern table as {"+00": "red", ...}; import validates completeness.
json table_to_json(const fourcolor::ColourTable& table);
fourcolor::ColourTable table_from_json(const json& j);

// One-way report serializers.
json to_json(const fourcolor::TableReport& r);
json to_json(const projective::LineScanResult& r);
json to_json(const generators::OrbitEntry& e);
json to_json(const generators::CoverageReport& r);
json to_json(const generators::CircleScanResult& r);
json to_json(const graphs::ChromaticResult& r);
json to_json(const graphs::SearchReport& r);

}  // namespace orthochroma::serialize
