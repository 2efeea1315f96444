// SPDX-License-Identifier: MIT
#include "hgs/qudit_space.hpp"

#include <cmath>
#include <numbers>

namespace hgs {

ConfigSpace::ConfigSpace(const GaloisRing& ring, std::size_t l) : l_(l), q_(ring.size()), count_(1) {
    for (std::size_t i = 0; i < l; ++i) {
        count_ *= q_;
        if (count_ > (1ull << 26)) throw Error("TooLarge", "configuration space too large");
    }
}

Config ConfigSpace::decode(std::uint64_t index) const {
    Config x(l_);
    for (std::size_t i = l_; i-- > 0;) {
        x[i] = static_cast<Elem>(index % q_);
        index /= q_;
    }
    return x;
}

std::uint64_t ConfigSpace::encode(const Config& x) const {
    std::uint64_t index = 0;
    for (Elem v : x) index = index * q_ + v;
    return index;
}

namespace {

void require_grade(std::size_t a, std::size_t b) {
    if (a != b) throw Error("GradeMismatch", "configuration grades differ");
}

Scalar reduce(long long v, int n) {
    long long m = v % n;
    return static_cast<Scalar>(m < 0 ? m + n : m);
}

}  // namespace

Scalar trace_pairing(const GaloisRing& ring, const Config& x, const Config& y) {
    require_grade(x.size(), y.size());
    long long sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += ring.trace_of_product(x[i], y[i]);
    return reduce(sum, ring.characteristic());
}

Config config_add(const GaloisRing& ring, const Config& x, const Config& y) {
    require_grade(x.size(), y.size());
    Config z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = ring.add(x[i], y[i]);
    return z;
}

Config config_neg(const GaloisRing& ring, const Config& x) {
    Config z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = ring.neg(x[i]);
    return z;
}

Config concat(const Config& x, const Config& y) {
    Config z = x;
    z.insert(z.end(), y.begin(), y.end());
    return z;
}

Config ef(const GaloisRing& ring, const OrdinalMorphism& f, const Config& x) {
    require_grade(x.size(), f.source);
    Config y(f.target, ring.zero());
    for (std::size_t r = 0; r < x.size(); ++r) y[f(r)] = ring.add(y[f(r)], x[r]);
    return y;
}

Config ef_transpose(const OrdinalMorphism& f, const Config& y) {
    require_grade(y.size(), f.target);
    Config x(f.source);
    for (std::size_t r = 0; r < f.source; ++r) x[r] = y[f(r)];
    return x;
}

const char* basis_name(Basis b) { return b == Basis::computational ? "computational" : "hadamard"; }

bool FlatState::operator==(const FlatState& o) const {
    return ring->same_as(*o.ring) && l == o.l && basis == o.basis && norm_exp == o.norm_exp &&
           phases == o.phases;
}

bool equal_up_to_phase(const FlatState& a, const FlatState& b, Scalar* offset) {
    if (!a.ring->same_as(*b.ring) || a.l != b.l || a.basis != b.basis || a.norm_exp != b.norm_exp ||
        a.phases.size() != b.phases.size())
        return false;
    const int n = a.ring->characteristic();
    const Scalar c = a.phases.empty() ? 0 : reduce(a.phases[0] - b.phases[0], n);
    for (std::size_t i = 0; i < a.phases.size(); ++i)
        if (reduce(a.phases[i] - b.phases[i], n) != c) return false;
    if (offset) *offset = c;
    return true;
}

FlatState uniform_state(RingPtr ring, std::size_t l) {
    ConfigSpace space(*ring, l);
    return FlatState{std::move(ring), l, Basis::computational, -static_cast<int>(l),
                     std::vector<Scalar>(space.count(), 0)};
}

FlatState apply_pauli_z(const Config& a, const FlatState& psi) {
    require_grade(a.size(), psi.l);
    const auto& ring = *psi.ring;
    ConfigSpace space(ring, psi.l);
    FlatState out = psi;
    for (std::uint64_t i = 0; i < space.count(); ++i) {
        Config x = space.decode(i);
        if (psi.basis == Basis::computational) {
            out.phases[i] = reduce(psi.phases[i] + trace_pairing(ring, a, x), ring.characteristic());
        } else {
            out.phases[space.encode(config_add(ring, x, a))] = psi.phases[i];
        }
    }
    return out;
}

FlatState apply_pauli_x(const Config& a, const FlatState& psi) {
    require_grade(a.size(), psi.l);
    const auto& ring = *psi.ring;
    ConfigSpace space(ring, psi.l);
    FlatState out = psi;
    for (std::uint64_t i = 0; i < space.count(); ++i) {
        Config x = space.decode(i);
        if (psi.basis == Basis::hadamard) {
            out.phases[i] = reduce(psi.phases[i] + trace_pairing(ring, a, x), ring.characteristic());
        } else {
            out.phases[i] = psi.phases[space.encode(config_add(ring, x, a))];
        }
    }
    return out;
}

FlatState apply_he_morphism(const OrdinalMorphism& f, const FlatState& psi) {
    if (psi.basis != Basis::computational)
        throw Error("WrongBasis", "morphism action needs the computational basis");
    require_grade(f.source, psi.l);
    const auto& ring = *psi.ring;
    ConfigSpace src(ring, f.source), dst(ring, f.target);
    FlatState out{psi.ring, f.target, Basis::computational,
                  psi.norm_exp + static_cast<int>(f.source) - static_cast<int>(f.target),
                  std::vector<Scalar>(dst.count())};
    for (std::uint64_t i = 0; i < dst.count(); ++i)
        out.phases[i] = psi.phases[src.encode(ef_transpose(f, dst.decode(i)))];
    return out;
}

FlatState tensor(const FlatState& a, const FlatState& b) {
    if (a.basis != b.basis) throw Error("BasisMismatch", "tensor factors use different bases");
    if (!a.ring->same_as(*b.ring)) throw Error("RingMismatch", "tensor factors over different rings");
    const int n = a.ring->characteristic();
    FlatState out{a.ring, a.l + b.l, a.basis, a.norm_exp + b.norm_exp, {}};
    out.phases.reserve(a.phases.size() * b.phases.size());
    for (Scalar u : a.phases)
        for (Scalar v : b.phases) out.phases.push_back(reduce(u + v, n));
    return out;
}

FlatState shift_phase(const FlatState& psi, Scalar c) {
    FlatState out = psi;
    for (auto& v : out.phases) v = reduce(v + c, psi.ring->characteristic());
    return out;
}

bool CyclotomicSum::is_zero() const {
    // The kernel of k -> omega^k for omega of order p^r is spanned by the
    // cosets of the subgroup of order p.
    const int m = modulus / p;
    for (int s = 0; s < m; ++s)
        for (int j = 1; j < p; ++j)
            if (counts[s + j * m] != counts[s]) return false;
    return true;
}

bool CyclotomicSum::equals_integer(long long value) const {
    CyclotomicSum shifted = *this;
    shifted.counts[0] -= value;
    return shifted.is_zero();
}

CyclotomicSum inner_product(const FlatState& a, const FlatState& b) {
    if (a.basis != b.basis) throw Error("BasisMismatch", "inner product across bases");
    if (a.phases.size() != b.phases.size()) throw Error("GradeMismatch", "state grades differ");
    const int n = a.ring->characteristic();
    CyclotomicSum s{n, a.ring->p(), std::vector<long long>(n, 0)};
    for (std::size_t i = 0; i < a.phases.size(); ++i) ++s.counts[reduce(b.phases[i] - a.phases[i], n)];
    return s;
}

Complex root_of_unity(const GaloisRing& ring, long long k) {
    const int n = ring.characteristic();
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(reduce(k, n)) / n;
    return {std::cos(angle), std::sin(angle)};
}

DenseState to_dense(const FlatState& psi) {
    const auto& ring = *psi.ring;
    const double scale = std::pow(static_cast<double>(ring.size()), psi.norm_exp / 2.0);
    DenseState out{psi.l, {}};
    out.amplitudes.reserve(psi.phases.size());
    for (Scalar v : psi.phases) out.amplitudes.push_back(scale * root_of_unity(ring, v));
    if (psi.basis == Basis::hadamard) out = fourier(ring, out, Direction::forward);
    return out;
}

DenseState fourier(const GaloisRing& ring, const DenseState& psi, Direction dir) {
    const std::size_t q = ring.size();
    const double norm = 1.0 / std::sqrt(static_cast<double>(q));
    std::vector<Complex> single(q * q);
    for (Elem y = 0; y < q; ++y)
        for (Elem x = 0; x < q; ++x) {
            Complex w = norm * root_of_unity(ring, ring.trace_of_product(y, x));
            single[y * q + x] = dir == Direction::forward ? w : std::conj(w);
        }
    DenseState out = psi;
    std::vector<Complex> tmp(q);
    std::size_t stride = 1;
    for (std::size_t pos = 0; pos < psi.l; ++pos, stride *= q) {
        const std::size_t block = stride * q;
        for (std::size_t base = 0; base < out.amplitudes.size(); base += block)
            for (std::size_t off = 0; off < stride; ++off) {
                for (std::size_t y = 0; y < q; ++y) {
                    Complex acc = 0;
                    for (std::size_t x = 0; x < q; ++x)
                        acc += single[y * q + x] * out.amplitudes[base + off + x * stride];
                    tmp[y] = acc;
                }
                for (std::size_t y = 0; y < q; ++y) out.amplitudes[base + off + y * stride] = tmp[y];
            }
    }
    return out;
}

double distance(const DenseState& a, const DenseState& b) {
    if (a.amplitudes.size() != b.amplitudes.size()) return INFINITY;
    double sum = 0;
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i) sum += std::norm(a.amplitudes[i] - b.amplitudes[i]);
    return std::sqrt(sum);
}

}  // namespace hgs
