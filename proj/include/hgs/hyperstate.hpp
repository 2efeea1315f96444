// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgs/dense.hpp"
#include "hgs/hypergraph.hpp"
#include "hgs/qudit_space.hpp"

namespace hgs {

Scalar phase_function(const CalibratedHypergraph& h, const Config& x);

// sigma on every configuration, in enumeration order.
std::vector<Scalar> phase_table(const CalibratedHypergraph& h);

FlatState build_state(const CalibratedHypergraph& h);
FlatState apply_d(const CalibratedHypergraph& h, const FlatState& psi);

// K(a) = X(a) L(a) acting on a computational-basis table.
FlatState stabilizer_apply(const CalibratedHypergraph& h, const Config& a, const FlatState& psi);
FlatState stabilizer_apply(const std::vector<Scalar>& sigma, const Config& a, const FlatState& psi);

FlatState basis_state(const CalibratedHypergraph& h, const Config& a);

bool check_covariance(const CalibratedHypergraph& h, const OrdinalMorphism& f);

// Dense operators built from their defining products.
DenseMatrix d_matrix(const CalibratedHypergraph& h);
DenseMatrix stabilizer_matrix(const CalibratedHypergraph& h, const Config& a);

struct DenseCheck {
    bool passed = false;
    double max_error = 0;
};

DenseCheck check_stabilizer_pushforward(const CalibratedHypergraph& h, const OrdinalMorphism& f,
                                        std::size_t cap = dense_cap());

// Sum_b |b> omega^<a,b> <b| against K(a).
DenseCheck check_spectral_form(const CalibratedHypergraph& h, const Config& a,
                               std::size_t cap = dense_cap());

struct LmeReport {
    bool orthonormal = false;          // exact path
    std::optional<DenseCheck> reduced;  // reduced-density path, absent when over cap
    bool passed() const { return orthonormal && (!reduced || reduced->passed); }
};

LmeReport lme_check(const CalibratedHypergraph& h, std::size_t cap = dense_cap(4096));

struct CheckLine {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
    bool ok() const { return passed == total; }
};

// Stabilizer suite: invariance, K(0), group law, distinctness, eigenrelation.
std::vector<CheckLine> stabilizer_suite(const CalibratedHypergraph& h);

}  // namespace hgs
