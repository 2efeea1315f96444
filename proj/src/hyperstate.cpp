// SPDX-License-Identifier: MIT
#include "hgs/hyperstate.hpp"

#include <cmath>
#include <set>

namespace hgs {

namespace {

Scalar reduce(long long v, int n) {
    long long m = v % n;
    return static_cast<Scalar>(m < 0 ? m + n : m);
}

void require_computational(const FlatState& psi) {
    if (psi.basis != Basis::computational)
        throw Error("WrongBasis", "operator acts on computational-basis tables");
}

void require_cap(std::uint64_t n, std::size_t cap) {
    if (n > cap) throw Error("TooLarge", "dense size " + std::to_string(n) + " exceeds cap " +
                                             std::to_string(cap));
}

}  // namespace

Scalar phase_function(const CalibratedHypergraph& h, const Config& x) {
    if (x.size() != h.l) throw Error("GradeMismatch", "configuration grade differs from l");
    const auto& ring = *h.ring;
    long long sum = 0;
    for (const auto& [edge, cal] : h.edges)
        for (const auto& [w, value] : cal) {
            Elem prod = ring.one();
            for (const auto& [v, u] : w) prod = ring.mul(prod, power(ring, x[v], u));
            sum += static_cast<long long>(value) * ring.trace(prod);
        }
    return reduce(sum, ring.characteristic());
}

std::vector<Scalar> phase_table(const CalibratedHypergraph& h) {
    ConfigSpace space(*h.ring, h.l);
    std::vector<Scalar> table(space.count());
    for (std::uint64_t i = 0; i < space.count(); ++i) table[i] = phase_function(h, space.decode(i));
    return table;
}

FlatState build_state(const CalibratedHypergraph& h) {
    return FlatState{h.ring, h.l, Basis::computational, -static_cast<int>(h.l), phase_table(h)};
}

FlatState apply_d(const CalibratedHypergraph& h, const FlatState& psi) {
    require_computational(psi);
    if (psi.l != h.l) throw Error("GradeMismatch", "state grade differs from l");
    FlatState out = psi;
    const auto sigma = phase_table(h);
    for (std::size_t i = 0; i < sigma.size(); ++i)
        out.phases[i] = reduce(out.phases[i] + sigma[i], h.ring->characteristic());
    return out;
}

FlatState stabilizer_apply(const std::vector<Scalar>& sigma, const Config& a, const FlatState& psi) {
    require_computational(psi);
    if (a.size() != psi.l) throw Error("GradeMismatch", "shift grade differs from state grade");
    const auto& ring = *psi.ring;
    ConfigSpace space(ring, psi.l);
    FlatState out = psi;
    for (std::uint64_t i = 0; i < space.count(); ++i) {
        const auto j = space.encode(config_add(ring, space.decode(i), a));
        out.phases[i] = reduce(static_cast<long long>(psi.phases[j]) + sigma[i] - sigma[j],
                               ring.characteristic());
    }
    return out;
}

FlatState stabilizer_apply(const CalibratedHypergraph& h, const Config& a, const FlatState& psi) {
    return stabilizer_apply(phase_table(h), a, psi);
}

FlatState basis_state(const CalibratedHypergraph& h, const Config& a) {
    return apply_pauli_z(a, build_state(h));
}

bool check_covariance(const CalibratedHypergraph& h, const OrdinalMorphism& f) {
    return apply_he_morphism(f, build_state(h)) == build_state(apply_morphism(f, h));
}

DenseMatrix d_matrix(const CalibratedHypergraph& h) {
    std::vector<Complex> diag;
    for (Scalar s : phase_table(h)) diag.push_back(root_of_unity(*h.ring, s));
    return DenseMatrix::diagonal(diag);
}

DenseMatrix stabilizer_matrix(const CalibratedHypergraph& h, const Config& a) {
    const DenseMatrix d = d_matrix(h);
    return d * pauli_x_matrix(*h.ring, a) * adjoint(d);
}

DenseCheck check_stabilizer_pushforward(const CalibratedHypergraph& h, const OrdinalMorphism& f,
                                        std::size_t cap) {
    const auto& ring = *h.ring;
    ConfigSpace src(ring, f.source), dst(ring, f.target);
    require_cap(std::max(src.count(), dst.count()), cap);
    const auto image = apply_morphism(f, h);
    const DenseMatrix hf = he_morphism_matrix(ring, f);
    const DenseMatrix hf_adj = adjoint(hf);
    const double scale = std::pow(static_cast<double>(ring.size()),
                                  static_cast<double>(f.source) - static_cast<double>(f.target));

    std::vector<DenseMatrix> image_ops;
    for (std::uint64_t j = 0; j < dst.count(); ++j) image_ops.push_back(stabilizer_matrix(image, dst.decode(j)));

    DenseCheck result{true, 0.0};
    for (std::uint64_t i = 0; i < src.count(); ++i) {
        const Config a = src.decode(i);
        const DenseMatrix lhs = hf * stabilizer_matrix(h, a) * hf_adj;
        DenseMatrix rhs(dst.count(), dst.count());
        for (std::uint64_t j = 0; j < dst.count(); ++j)
            if (ef_transpose(f, dst.decode(j)) == a) rhs = rhs + image_ops[j];
        const double err = max_abs_diff(lhs, Complex(scale) * rhs);
        result.max_error = std::max(result.max_error, err);
    }
    result.passed = result.max_error < 1e-9;
    return result;
}

DenseCheck check_spectral_form(const CalibratedHypergraph& h, const Config& a, std::size_t cap) {
    const auto& ring = *h.ring;
    ConfigSpace space(ring, h.l);
    require_cap(space.count(), cap);
    DenseMatrix sum(space.count(), space.count());
    for (std::uint64_t i = 0; i < space.count(); ++i) {
        const Config b = space.decode(i);
        const auto v = to_dense(basis_state(h, b)).amplitudes;
        const Complex eig = root_of_unity(ring, trace_pairing(ring, a, b));
        for (std::size_t r = 0; r < v.size(); ++r)
            for (std::size_t c = 0; c < v.size(); ++c) sum(r, c) += eig * v[r] * std::conj(v[c]);
    }
    DenseCheck out;
    out.max_error = max_abs_diff(sum, stabilizer_matrix(h, a));
    out.passed = out.max_error < 1e-9;
    return out;
}

LmeReport lme_check(const CalibratedHypergraph& h, std::size_t cap) {
    const auto& ring = *h.ring;
    ConfigSpace space(ring, h.l);
    const FlatState psi = build_state(h);
    std::vector<FlatState> translates;
    for (std::uint64_t i = 0; i < space.count(); ++i) translates.push_back(apply_pauli_z(space.decode(i), psi));

    LmeReport report;
    report.orthonormal = true;
    // With norm_exp = -l, <a|b> = q^{-l} times the exact cyclotomic sum.
    const long long full = static_cast<long long>(space.count());
    for (std::size_t i = 0; i < translates.size() && report.orthonormal; ++i)
        for (std::size_t j = i; j < translates.size(); ++j) {
            const auto s = inner_product(translates[i], translates[j]);
            if (!(i == j ? s.equals_integer(full) : s.is_zero())) {
                report.orthonormal = false;
                break;
            }
        }
    if (psi.norm_exp != -static_cast<int>(h.l)) report.orthonormal = false;

    const std::uint64_t n = space.count();
    if (n * n <= cap) {
        // Extended state sum_x Z(x)|psi> (x) F+|x> q^{-l/2}, first factor index major.
        std::vector<Complex> ext(n * n);
        const double scale = 1.0 / std::sqrt(static_cast<double>(n));
        for (std::uint64_t j = 0; j < n; ++j) {
            const auto col = to_dense(translates[j]).amplitudes;
            for (std::uint64_t i = 0; i < n; ++i) ext[i * n + j] = scale * col[i];
        }
        DenseMatrix rho(n, n);
        for (std::uint64_t i = 0; i < n; ++i)
            for (std::uint64_t k = 0; k < n; ++k) {
                Complex acc = 0;
                for (std::uint64_t j = 0; j < n; ++j) acc += ext[i * n + j] * std::conj(ext[k * n + j]);
                rho(i, k) = acc;
            }
        DenseCheck check;
        check.max_error = max_abs_diff(rho, Complex(1.0 / static_cast<double>(n)) * DenseMatrix::identity(n));
        check.passed = check.max_error < 1e-9;
        report.reduced = check;
    }
    return report;
}

std::vector<CheckLine> stabilizer_suite(const CalibratedHypergraph& h) {
    const auto& ring = *h.ring;
    ConfigSpace space(ring, h.l);
    const auto n = space.count();
    const auto sigma = phase_table(h);
    const FlatState psi = build_state(h);
    std::vector<Config> configs;
    for (std::uint64_t i = 0; i < n; ++i) configs.push_back(space.decode(i));
    std::vector<FlatState> basis;
    for (const auto& b : configs) basis.push_back(apply_pauli_z(b, psi));

    CheckLine invariance{"stabilizer", 0, n};
    CheckLine identity{"identity K(0)", 0, n};
    CheckLine eigen{"eigenrelation", 0, n * n};
    CheckLine group{"group law", 0, n * n};
    CheckLine distinct{"distinct", 0, 1};

    const Config zero(h.l, ring.zero());
    for (std::uint64_t b = 0; b < n; ++b)
        if (stabilizer_apply(sigma, zero, basis[b]) == basis[b]) ++identity.passed;

    // images[a][b] = K(a)|b>
    std::vector<std::vector<FlatState>> images(n);
    for (std::uint64_t a = 0; a < n; ++a) {
        if (stabilizer_apply(sigma, configs[a], psi) == psi) ++invariance.passed;
        for (std::uint64_t b = 0; b < n; ++b) {
            images[a].push_back(stabilizer_apply(sigma, configs[a], basis[b]));
            if (images[a][b] == shift_phase(basis[b], trace_pairing(ring, configs[a], configs[b])))
                ++eigen.passed;
        }
    }
    for (std::uint64_t a = 0; a < n; ++a)
        for (std::uint64_t c = 0; c < n; ++c) {
            const auto sum = space.encode(config_add(ring, configs[a], configs[c]));
            bool ok = true;
            for (std::uint64_t b = 0; b < n && ok; ++b)
                ok = stabilizer_apply(sigma, configs[a], images[c][b]) == images[sum][b];
            if (ok) ++group.passed;
        }
    std::set<std::vector<Scalar>> signatures;
    for (std::uint64_t a = 0; a < n; ++a) {
        std::vector<Scalar> sig;
        for (const auto& img : images[a]) sig.insert(sig.end(), img.phases.begin(), img.phases.end());
        signatures.insert(sig);
    }
    if (signatures.size() == n) distinct.passed = 1;
    return {invariance, identity, group, distinct, eigen};
}

}  // namespace hgs
