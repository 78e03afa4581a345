#pragma once

#include <functional>
#include <string>

#include "cubeplan/cube_complex.hpp"
#include "cubeplan/geodesic.hpp"
#include "cubeplan/pip.hpp"

namespace cubeplan {

// JSON text <-> library objects. Parsers throw ParseError on malformed text
// or wrongly shaped documents; semantically bad content (cyclic covers,
// cubes that do not close up, ...) surfaces as the target type's own
// validation error. Serializers are deterministic byte for byte.
//
// Description format:   {"elements": ["a", ...],
//                        "covers": [["lower", "upper"], ...],
//                        "inconsistent": [["p", "q"], ...]}
// Conflicts may be given minimally; the upward closure is taken on load.
Pip pip_from_json(const std::string& text);
std::string pip_to_json(const Pip& pip);

// Complex format:       {"vertices": ["v", ...],
//                        "edges": [["u", "v", "label"], ...],
//                        "cubes": [["base", ["label", ...]], ...],
//                        "root": "v"}
// "cubes" and "root" are optional; vertices are referenced by name.
CubeComplex complex_from_json(const std::string& text);
std::string complex_to_json(const CubeComplex& x);

// Compact one-line plan, e.g.
//   {"metric":"linf","distance":2,"batches":[["a","b"],["c"]],
//    "vertices":["{}","{a, b}","{a, b, c}"]}
// Batch entries are element names; trace vertices are rendered with
// vertex_name, by default as the brace listing of the ideal.
std::string plan_to_json(const GeodesicPlan& plan, const Pip& pip);
std::string plan_to_json(
    const GeodesicPlan& plan, const Pip& pip,
    const std::function<std::string(const Bitset&)>& vertex_name);

// Graphviz views: the Hasse diagram with dotted minimal-conflict chords,
// and the 1-skeleton with edges coloured by hyperplane class.
std::string pip_to_dot(const Pip& pip);
std::string complex_to_dot(const CubeComplex& x);

}  // namespace cubeplan
