// SPDX-License-Identifier: MIT
#pragma once

#include "hgs/canonicalize.hpp"
#include "hgs/cyclicity.hpp"
#include "hgs/dense.hpp"
#include "hgs/field_poly.hpp"
#include "hgs/galois_ring.hpp"
#include "hgs/hypergraph.hpp"
#include "hgs/hyperstate.hpp"
#include "hgs/io.hpp"
#include "hgs/marked_cz.hpp"
#include "hgs/qudit_space.hpp"
