// SPDX-License-Identifier: MIT
#pragma once

#include <string>

#include <json.hpp>

#include "hgs/canonicalize.hpp"
#include "hgs/hypergraph.hpp"
#include "hgs/qudit_space.hpp"

namespace hgs {

using Json = nlohmann::ordered_json;

Json load_json_file(const std::string& path);

// {"p","r","d","modulus"} or {"name"} for a catalog ring.
RingPtr ring_from_json(const Json& j);
Json ring_to_json(const GaloisRing& ring);
Json element_to_json(const GaloisRing& ring, Elem a);

Exponent exponent_from_json(const GaloisRing& ring, const Json& j);

CalibratedHypergraph calibrated_from_json(const Json& j);
Json calibrated_to_json(const CalibratedHypergraph& h);

WeightedHypergraph weighted_from_json(const Json& j);
Json weighted_to_json(const WeightedHypergraph& h);

MarkedHypergraph marked_from_json(const Json& j);

// Edges carry "terms": [{"exponents": [..], "coeff": c}].
PolyHypergraph poly_from_json(const Json& j);

Json morphism_to_json(const OrdinalMorphism& f);

std::string config_to_string(const Config& x);
Json state_to_json(const FlatState& psi, bool dense);
std::string state_to_text(const FlatState& psi, bool dense);

}  // namespace hgs
