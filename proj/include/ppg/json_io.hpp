#pragma once

#include <json.hpp>

#include "ppg/pathsynth.hpp"
#include "ppg/powergraph.hpp"

namespace ppg {

using Json = nlohmann::ordered_json;

/// {n, from, to, vertices, certificates: [{direction, exponent}], lemma_tag,
/// declared_bound, length}; "best_effort": true is added for forced runs.
/// Exponents are decimal strings.
Json to_json(const PathWitness& w);

/// Inverse of to_json for a path; certificates are read back verbatim and
/// not re-checked (use validate()). Throws ParseError on malformed input.
PathWitness path_witness_from_json(const Json& j);

Json to_json(const BoundsReport& r);
Json to_json(const WitnessChecks& c);
Json to_json(const ComponentReport& r);

}  // namespace ppg
