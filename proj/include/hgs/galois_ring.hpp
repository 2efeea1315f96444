// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hgs/error.hpp"

namespace hgs {

// Elements are addressed by their canonical index. The index of the element
// c_0 + c_1 t + ... + c_{d-1} t^{d-1} is sum_i c_i n^i with n = p^r, so 0 and 1
// come first and the rest follow in numeric order of the digit vector.
using Elem = std::uint32_t;

// A prime-subring value in [0, p^r).
using Scalar = int;

struct RingElement {
    std::vector<int> coeffs;
    bool operator==(const RingElement&) const = default;
};

class GaloisRing;
using RingPtr = std::shared_ptr<const GaloisRing>;

class GaloisRing {
public:
    static constexpr std::uint64_t kMaxOrder = 1024;

    // Validates parameters and the modulus, then builds the operation tables.
    static RingPtr make(int p, int r, int d, std::vector<int> modulus);

    int p() const { return p_; }
    int r() const { return r_; }
    int d() const { return d_; }
    int characteristic() const { return n_; }
    std::uint32_t size() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }
    bool is_field() const { return r_ == 1; }
    bool is_prime_field() const { return r_ == 1 && d_ == 1; }

    bool same_as(const GaloisRing& o) const {
        return p_ == o.p_ && r_ == o.r_ && d_ == o.d_ && modulus_ == o.modulus_;
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    // theta, the class of x modulo h(x); equals the scalar -h_0 when d = 1.
    Elem generator() const { return generator_; }
    std::optional<Elem> primitive_theta() const { return theta_; }

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem pow(Elem a, std::uint64_t k) const;

    Elem from_scalar(Scalar s) const;
    std::optional<Scalar> as_scalar(Elem a) const;

    RingElement element(Elem a) const;
    Elem index_of(const RingElement& e) const;
    Elem index_of(const std::vector<int>& coeffs) const;
    std::string to_string(Elem a) const;

    // Matrix trace of multiplication-by-x in the theta-power basis.
    Scalar trace(Elem a) const { return trace_[a]; }
    Scalar trace_of_product(Elem a, Elem b) const { return trace_[mul(a, b)]; }

    bool is_unit(Elem a) const;

    // Teichmueller digits a_0..a_{r-1} with x = sum a_k p^k.
    std::vector<Elem> p_adic_digits(Elem a) const;
    Elem frobenius(Elem a) const;
    Scalar trace_frobenius(Elem a) const;
    std::vector<Elem> teichmuller_set() const;

    // Index and period of the power sequence of each element.
    unsigned iota(Elem a) const { return iota_[a]; }
    unsigned period(Elem a) const { return period_[a]; }

private:
    GaloisRing() = default;
    void build();
    Elem require_theta() const;
    Scalar trace_by_matrix(Elem a) const;

    int p_ = 0, r_ = 0, d_ = 0, n_ = 0;
    std::uint32_t q_ = 0;
    std::vector<int> modulus_;
    std::vector<int> digits_;  // q * d coefficient table
    std::vector<Elem> add_, mul_, neg_;
    std::vector<Scalar> trace_;
    std::vector<unsigned> iota_, period_;
    Elem generator_ = 0;
    std::optional<Elem> theta_;
};

bool is_prime(int n);

// Monic irreducibility of a polynomial over F_p by trial division.
bool irreducible_mod_p(const std::vector<int>& poly, int p);

// Rings used throughout the tests and the CLI. Names: F2 F3 F4 F5 F7 F8 F9
// Z4 Z8 Z9 GR22 GR42 GR43.
RingPtr catalog_ring(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace hgs
