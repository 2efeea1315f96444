// SPDX-License-Identifier: MIT
#include "hgs/galois_ring.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace hgs {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

namespace {

int mod(long long a, int m) {
    long long v = a % m;
    return static_cast<int>(v < 0 ? v + m : v);
}

// Remainder of a by the monic b over F_p; both least-significant first.
std::vector<int> poly_rem_mod_p(std::vector<int> a, const std::vector<int>& b, int p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        int c = mod(a.back(), p);
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = mod(a[shift + i] - static_cast<long long>(c) * b[i], p);
        a.pop_back();
    }
    return a;
}

}  // namespace

bool irreducible_mod_p(const std::vector<int>& poly, int p) {
    std::vector<int> h;
    for (int c : poly) h.push_back(mod(c, p));
    while (!h.empty() && h.back() == 0) h.pop_back();
    const int d = static_cast<int>(h.size()) - 1;
    if (d < 1) return false;
    // Every reducible polynomial has a monic factor of degree at most d/2.
    for (int k = 1; 2 * k <= d; ++k) {
        long long count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            std::vector<int> f(k + 1, 0);
            long long c = code;
            for (int i = 0; i < k; ++i) {
                f[i] = static_cast<int>(c % p);
                c /= p;
            }
            f[k] = 1;
            auto rem = poly_rem_mod_p(h, f, p);
            bool zero = true;
            for (int v : rem) zero = zero && v == 0;
            if (zero) return false;
        }
    }
    return true;
}

RingPtr GaloisRing::make(int p, int r, int d, std::vector<int> modulus) {
    if (!is_prime(p)) throw Error("BadParameter", "p = " + std::to_string(p) + " is not prime");
    if (r < 1 || d < 1) throw Error("BadParameter", "r and d must be positive");
    long long n = 1, q = 1;
    for (int i = 0; i < r; ++i) n *= p;
    for (int i = 0; i < d; ++i) q *= n;
    if (q > static_cast<long long>(kMaxOrder))
        throw Error("BadParameter", "ring order " + std::to_string(q) + " exceeds " +
                                        std::to_string(kMaxOrder));
    if (static_cast<int>(modulus.size()) != d + 1)
        throw Error("NonMonic", "modulus must have d+1 coefficients");
    for (int c : modulus)
        if (c < 0 || c >= n) throw Error("BadCoefficient", "modulus coefficient out of range");
    if (modulus.back() != 1) throw Error("NonMonic", "leading coefficient must be 1");
    if (!irreducible_mod_p(modulus, p))
        throw Error("ReducibleModulus", "modulus reduction mod p factors over F_p");

    auto ring = std::shared_ptr<GaloisRing>(new GaloisRing());
    ring->p_ = p;
    ring->r_ = r;
    ring->d_ = d;
    ring->n_ = static_cast<int>(n);
    ring->q_ = static_cast<std::uint32_t>(q);
    ring->modulus_ = std::move(modulus);
    ring->build();
    return ring;
}

void GaloisRing::build() {
    const std::size_t q = q_;
    digits_.assign(q * d_, 0);
    for (std::size_t a = 0; a < q; ++a) {
        std::size_t v = a;
        for (int i = 0; i < d_; ++i) {
            digits_[a * d_ + i] = static_cast<int>(v % n_);
            v /= n_;
        }
    }
    auto encode = [&](const std::vector<long long>& c) {
        Elem idx = 0, scale = 1;
        for (int i = 0; i < d_; ++i) {
            idx += static_cast<Elem>(mod(c[i], n_)) * scale;
            scale *= n_;
        }
        return idx;
    };

    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    neg_.assign(q, 0);
    std::vector<long long> buf(2 * d_, 0);
    for (std::size_t a = 0; a < q; ++a) {
        const int* x = &digits_[a * d_];
        for (int i = 0; i < d_; ++i) buf[i] = -x[i];
        neg_[a] = encode(buf);
        for (std::size_t b = 0; b < q; ++b) {
            const int* y = &digits_[b * d_];
            for (int i = 0; i < d_; ++i) buf[i] = x[i] + y[i];
            add_[a * q + b] = encode(buf);

            std::fill(buf.begin(), buf.end(), 0);
            for (int i = 0; i < d_; ++i)
                for (int j = 0; j < d_; ++j) buf[i + j] += static_cast<long long>(x[i]) * y[j];
            for (int k = 2 * d_ - 2; k >= d_; --k) {
                long long c = mod(buf[k], n_);
                buf[k] = 0;
                for (int i = 0; i < d_; ++i) buf[k - d_ + i] -= c * modulus_[i];
            }
            mul_[a * q + b] = encode(buf);
        }
    }

    if (d_ == 1) {
        generator_ = static_cast<Elem>(mod(-modulus_[0], n_));
    } else {
        generator_ = static_cast<Elem>(n_);
    }

    trace_.assign(q, 0);
    for (std::size_t a = 0; a < q; ++a) trace_[a] = trace_by_matrix(static_cast<Elem>(a));

    iota_.assign(q, 0);
    period_.assign(q, 0);
    for (std::size_t a = 0; a < q; ++a) {
        std::map<Elem, unsigned> seen;
        Elem cur = 1;
        unsigned k = 0;
        while (!seen.count(cur)) {
            seen[cur] = k++;
            cur = mul(cur, static_cast<Elem>(a));
        }
        iota_[a] = seen[cur];
        period_[a] = k - seen[cur];
    }

    unsigned want = 1;
    for (int i = 0; i < d_; ++i) want *= p_;
    want -= 1;
    auto has_order = [&](Elem a) { return iota_[a] == 0 && period_[a] == want; };
    if (has_order(generator_)) {
        theta_ = generator_;
    } else {
        for (Elem a = 1; a < q_; ++a)
            if (has_order(a)) {
                theta_ = a;
                break;
            }
    }
}

Scalar GaloisRing::trace_by_matrix(Elem a) const {
    long long sum = 0;
    Elem basis = 1;
    for (int j = 0; j < d_; ++j) {
        Elem image = mul(a, basis);
        sum += digits_[image * d_ + j];
        basis = mul(basis, generator_);
    }
    return mod(sum, n_);
}

Elem GaloisRing::pow(Elem a, std::uint64_t k) const {
    Elem result = 1, base = a;
    while (k) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

Elem GaloisRing::from_scalar(Scalar s) const { return static_cast<Elem>(mod(s, n_)); }

std::optional<Scalar> GaloisRing::as_scalar(Elem a) const {
    if (a < static_cast<Elem>(n_)) return static_cast<Scalar>(a);
    return std::nullopt;
}

RingElement GaloisRing::element(Elem a) const {
    if (a >= q_) throw Error("BadCoefficient", "element index out of range");
    return RingElement{std::vector<int>(digits_.begin() + a * d_, digits_.begin() + (a + 1) * d_)};
}

Elem GaloisRing::index_of(const RingElement& e) const { return index_of(e.coeffs); }

Elem GaloisRing::index_of(const std::vector<int>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != d_)
        throw Error("BadCoefficient", "element needs " + std::to_string(d_) + " coefficients");
    Elem idx = 0, scale = 1;
    for (int i = 0; i < d_; ++i) {
        if (coeffs[i] < 0 || coeffs[i] >= n_) throw Error("BadCoefficient", "coefficient out of range");
        idx += static_cast<Elem>(coeffs[i]) * scale;
        scale *= n_;
    }
    return idx;
}

std::string GaloisRing::to_string(Elem a) const {
    const auto e = element(a);
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < d_; ++i) {
        int c = e.coeffs[i];
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c;
            os << 't';
            if (i > 1) os << '^' << i;
        }
    }
    if (first) os << '0';
    return os.str();
}

bool GaloisRing::is_unit(Elem a) const {
    for (int i = 0; i < d_; ++i)
        if (digits_[a * d_ + i] % p_ != 0) return true;
    return false;
}

Elem GaloisRing::require_theta() const {
    if (!theta_) throw Error("NoPrimitiveElement", "ring has no element of order p^d-1");
    return *theta_;
}

std::vector<Elem> GaloisRing::teichmuller_set() const {
    Elem theta = require_theta();
    std::vector<Elem> t{0};
    Elem cur = 1;
    for (unsigned i = 0; i < period_[theta]; ++i) {
        t.push_back(cur);
        cur = mul(cur, theta);
    }
    return t;
}

std::vector<Elem> GaloisRing::p_adic_digits(Elem a) const {
    const auto t = teichmuller_set();
    std::vector<Elem> out;
    std::vector<int> cur = element(a).coeffs;
    for (int alpha = 0; alpha < r_; ++alpha) {
        std::optional<Elem> digit;
        for (Elem cand : t) {
            bool match = true;
            for (int i = 0; i < d_ && match; ++i)
                match = (cur[i] - digits_[cand * d_ + i]) % p_ == 0;
            if (match) {
                digit = cand;
                break;
            }
        }
        if (!digit) throw Error("Internal", "no Teichmueller digit found");
        out.push_back(*digit);
        for (int i = 0; i < d_; ++i) cur[i] = mod(cur[i] - digits_[*digit * d_ + i], n_) / p_;
    }
    return out;
}

Elem GaloisRing::frobenius(Elem a) const {
    const auto digits = p_adic_digits(a);
    Elem result = 0;
    long long scale = 1;
    for (Elem digit : digits) {
        result = add(result, mul(pow(digit, p_), from_scalar(static_cast<Scalar>(scale % n_))));
        scale *= p_;
    }
    return result;
}

Scalar GaloisRing::trace_frobenius(Elem a) const {
    Elem sum = a, cur = a;
    for (int i = 1; i < d_; ++i) {
        cur = frobenius(cur);
        sum = add(sum, cur);
    }
    auto s = as_scalar(sum);
    if (!s) throw Error("Internal", "Frobenius trace left the prime subring");
    return *s;
}

namespace {

struct CatalogEntry {
    int p, r, d;
    std::vector<int> modulus;
};

const std::map<std::string, CatalogEntry>& catalog_table() {
    static const std::map<std::string, CatalogEntry> table = {
        {"F2", {2, 1, 1, {0, 1}}},        {"F3", {3, 1, 1, {0, 1}}},
        {"F5", {5, 1, 1, {0, 1}}},        {"F7", {7, 1, 1, {0, 1}}},
        {"F4", {2, 1, 2, {1, 1, 1}}},     {"GR22", {2, 1, 2, {1, 1, 1}}},
        {"F8", {2, 1, 3, {1, 1, 0, 1}}},  {"F9", {3, 1, 2, {1, 0, 1}}},
        {"Z4", {2, 2, 1, {0, 1}}},        {"Z8", {2, 3, 1, {0, 1}}},
        {"Z9", {3, 2, 1, {0, 1}}},        {"GR42", {2, 2, 2, {1, 1, 1}}},
        {"GR43", {2, 2, 3, {3, 1, 2, 1}}},
    };
    return table;
}

}  // namespace

RingPtr catalog_ring(const std::string& name) {
    static std::mutex lock;
    static std::map<std::string, RingPtr> cache;
    std::lock_guard<std::mutex> guard(lock);
    if (auto it = cache.find(name); it != cache.end()) return it->second;
    const auto& table = catalog_table();
    auto it = table.find(name);
    if (it == table.end()) throw Error("UnknownRing", "no catalog ring named " + name);
    const auto& e = it->second;
    auto ring = GaloisRing::make(e.p, e.r, e.d, e.modulus);
    cache[name] = ring;
    return ring;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& [name, entry] : catalog_table()) names.push_back(name);
    return names;
}

}  // namespace hgs
