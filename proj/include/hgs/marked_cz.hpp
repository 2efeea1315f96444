// SPDX-License-Identifier: MIT
#pragma once

#include "hgs/field_poly.hpp"
#include "hgs/hypergraph.hpp"
#include "hgs/qudit_space.hpp"

namespace hgs {

// Default control value p - 1.
Elem default_xstar(const GaloisRing& ring);

Scalar cz_phase(const GaloisRing& ring, const Edge& edge, Vertex target, Elem xstar, const Config& x);

// Same value through x_target * prod p(x_control).
Scalar cz_phase_polynomial(const GaloisRing& ring, const Edge& edge, Vertex target, Elem xstar,
                           const Config& x);

// p(x) = delta_{x, xstar}
FieldPolynomial p_polynomial(const GaloisRing& ring, Elem xstar);

Scalar marked_phase_function(const MarkedHypergraph& h, Elem xstar, const Config& x);
FlatState marked_state(const MarkedHypergraph& h, Elem xstar);
CalibratedHypergraph marked_to_calibrated(const MarkedHypergraph& h, Elem xstar);

}  // namespace hgs
