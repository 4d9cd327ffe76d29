#pragma once

#include "specht/designs.hpp"
#include "specht/hemmer.hpp"
#include "specht/tabloids.hpp"

#include <string>
#include <utility>
#include <vector>

namespace specht {

// All big integers are serialized as decimal strings; object keys are
// emitted in sorted order, so equal values serialize to identical bytes.

/// {"v": N, "blocks": [[[elements...], "coeff"], ...]}
std::string to_json(const BlockVector& c);
BlockVector block_vector_from_json(const std::string& text);

/// {"v", "l", "t", "lambdas": ["..."], "blocks": [...]}
std::string design_to_json(const DesignParams& params, const BlockVector& c);
std::pair<DesignParams, BlockVector> design_from_json(const std::string& text);

/// {"parts": [...], "entries": [[[row2, ..., rowR], "coeff"], ...]}
std::string to_json(const TabloidVector& u);
TabloidVector tabloid_vector_from_json(const std::string& text);

/// {"entries": [{"i", "v", "is_multiple_of_f", "scalar"}...],
///  "condition_i", "condition_ii", "verdict"}
std::string to_json(const HemmerReport& report);

/// {"lambda": [...], "p": p, "family": "...", "u": {...},
///  "scalars": ["..."], "report": {...}}
std::string witness_to_json(const Composition& lambda, const PrimeP& p, const std::string& family,
                            const TabloidVector& u, const std::vector<Int>& scalars,
                            const HemmerReport& report);

}  // namespace specht
