// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hgs/hypergraph.hpp"
#include "hgs/qudit_space.hpp"

namespace hgs {

bool is_effective(const CalibratedHypergraph& h);
bool is_primitive(const CalibratedHypergraph& h);

struct Effective {
    CalibratedHypergraph hypergraph;
    Scalar constant = 0;  // sigma(input) = constant + sigma(output)
};

Effective effectivize(const CalibratedHypergraph& h);

struct SupportIndex {
    Edge support;  // sorted, possibly empty
    std::size_t index = 0;
};

SupportIndex support_index(const CalibratedHypergraph& h);

struct PrimitiveCore {
    OrdinalMorphism chart;  // increasing injection [index] -> [l]
    CalibratedHypergraph core;
};

PrimitiveCore primitive_core(const CalibratedHypergraph& h);

constexpr std::size_t kMaxPermutationSize = 6;

// Lexicographically least permutation f with G f(a) = b.
std::optional<OrdinalMorphism> congruent(const CalibratedHypergraph& a, const CalibratedHypergraph& b);
std::vector<OrdinalMorphism> isotropy_group(const CalibratedHypergraph& h);

Scalar weighted_phase_function(const WeightedHypergraph& h, const Config& x);
CalibratedHypergraph weighted_to_calibrated(const WeightedHypergraph& h);

// Phase polynomial: per edge, natural exponents a(r) listed in edge order.
struct PolyHypergraph {
    RingPtr ring;
    std::size_t l = 0;
    std::map<Edge, std::map<std::vector<unsigned>, Scalar>> terms;
};

Scalar poly_phase_function(const PolyHypergraph& h, const Config& x);
CalibratedHypergraph poly_to_calibrated(const PolyHypergraph& h);

struct QubitWeighted {
    WeightedHypergraph hypergraph;
    Scalar constant = 0;
};

QubitWeighted qubit_to_weighted(const CalibratedHypergraph& h);

}  // namespace hgs
