// SPDX-License-Identifier: MIT
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hgs/hypergraph.hpp"

namespace hgs {

using Config = std::vector<Elem>;
using Complex = std::complex<double>;

// Enumerates E[l] in mixed radix, last qudit fastest.
class ConfigSpace {
public:
    ConfigSpace(const GaloisRing& ring, std::size_t l);

    std::size_t grade() const { return l_; }
    std::uint64_t count() const { return count_; }
    Config decode(std::uint64_t index) const;
    std::uint64_t encode(const Config& x) const;

private:
    std::size_t l_;
    std::uint32_t q_;
    std::uint64_t count_;
};

Scalar trace_pairing(const GaloisRing& ring, const Config& x, const Config& y);
Config config_add(const GaloisRing& ring, const Config& x, const Config& y);
Config config_neg(const GaloisRing& ring, const Config& x);
Config concat(const Config& x, const Config& y);

Config ef(const GaloisRing& ring, const OrdinalMorphism& f, const Config& x);
Config ef_transpose(const OrdinalMorphism& f, const Config& y);

enum class Basis { computational, hadamard };

const char* basis_name(Basis b);

// A state whose coefficients are q^{norm_exp/2} omega^{phase(x)}.
struct FlatState {
    RingPtr ring;
    std::size_t l = 0;
    Basis basis = Basis::computational;
    int norm_exp = 0;
    std::vector<Scalar> phases;

    bool operator==(const FlatState& o) const;
};

bool equal_up_to_phase(const FlatState& a, const FlatState& b, Scalar* offset = nullptr);

FlatState uniform_state(RingPtr ring, std::size_t l);

FlatState apply_pauli_z(const Config& a, const FlatState& psi);
FlatState apply_pauli_x(const Config& a, const FlatState& psi);
FlatState apply_he_morphism(const OrdinalMorphism& f, const FlatState& psi);
FlatState tensor(const FlatState& a, const FlatState& b);
FlatState shift_phase(const FlatState& psi, Scalar c);

// Exact sum of q^l roots of unity: counts[k] terms equal to omega^k.
struct CyclotomicSum {
    int modulus = 0;
    int p = 0;
    std::vector<long long> counts;

    bool is_zero() const;
    bool equals_integer(long long value) const;
};

// <a|b> without the q^{(n_a+n_b)/2} factor.
CyclotomicSum inner_product(const FlatState& a, const FlatState& b);

struct DenseState {
    std::size_t l = 0;
    std::vector<Complex> amplitudes;
};

Complex root_of_unity(const GaloisRing& ring, long long k);

// Coordinates in the computational basis.
DenseState to_dense(const FlatState& psi);

enum class Direction { forward, inverse };

DenseState fourier(const GaloisRing& ring, const DenseState& psi, Direction dir);

double distance(const DenseState& a, const DenseState& b);

}  // namespace hgs
