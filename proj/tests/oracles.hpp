#pragma once

// Test-only reference implementations, kept independent of the library's
// table-based field arithmetic and Gray-code enumeration kernels.  Field
// operations here work directly on polynomial digit vectors; distances come
// from a plain odometer walk over all messages with a naive matrix-vector
// encode.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "lrc/linear.hpp"

namespace oracle {

using PV = std::vector<uint32_t>;

// schoolbook multiply mod f over GF(p); vectors are ascending digit lists
inline PV ref_pmulmod(const PV& a, const PV& b, const PV& f, uint32_t p) {
    PV r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<uint32_t>((r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    const size_t s = f.size() - 1;
    for (size_t d = r.size(); d-- > s;) {
        const uint64_t c = r[d];
        if (!c) continue;
        r[d] = 0;
        for (size_t j = 0; j < s; ++j)
            r[d - s + j] = static_cast<uint32_t>((r[d - s + j] + c * (p - f[j])) % p);
    }
    r.resize(s);
    return r;
}

// Reference field on element indices, built from the same defining
// polynomial but computing products by polynomial arithmetic.
struct RefField {
    uint32_t p = 0, s = 0, q = 0;
    PV f;

    explicit RefField(const lrc::Field& field)
        : p(field.characteristic()), s(field.extension_degree()), q(field.order()), f(field.modulus()) {}

    PV digits(uint32_t v) const {
        PV d(s);
        for (uint32_t i = 0; i < s; ++i, v /= p) d[i] = v % p;
        return d;
    }
    uint32_t index(const PV& d) const {
        uint32_t v = 0, scale = 1;
        for (uint32_t i = 0; i < s; ++i, scale *= p) v += d[i] * scale;
        return v;
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        PV da = digits(a), db = digits(b);
        for (uint32_t i = 0; i < s; ++i) da[i] = (da[i] + db[i]) % p;
        return index(da);
    }
    uint32_t neg(uint32_t a) const {
        PV da = digits(a);
        for (uint32_t i = 0; i < s; ++i) da[i] = (p - da[i]) % p;
        return index(da);
    }
    uint32_t mul(uint32_t a, uint32_t b) const {
        PV r = ref_pmulmod(digits(a), digits(b), f, p);
        r.resize(s, 0);
        return index(r);
    }
    uint32_t pow(uint32_t a, uint64_t e) const {
        uint32_t acc = 1, base = a;
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::domain_error("oracle: inverse of zero");
        return pow(a, q - 2);
    }
    uint64_t element_order(uint32_t a) const {
        if (a == 0) throw std::domain_error("oracle: order of zero");
        uint64_t ord = 1;
        uint32_t cur = a;
        while (cur != 1) {
            cur = mul(cur, a);
            ++ord;
            if (ord > q) throw std::logic_error("oracle: order runaway");
        }
        return ord;
    }
};

// multiplicative order of X in GF(p)[X]/(f); 0 if X is not invertible or the
// order is not finite within the unit-group size
inline uint64_t x_order_mod(const PV& f, uint32_t p) {
    const size_t s = f.size() - 1;
    PV x(s, 0);
    if (s == 1) {
        x[0] = (p - f[0]) % p;
    } else {
        x[1] = 1;
    }
    PV one(s, 0);
    one[0] = 1;
    PV cur = x;
    uint64_t space = 1;
    for (size_t i = 0; i < s; ++i) space *= p;
    for (uint64_t ord = 1; ord <= space; ++ord) {
        if (cur == one) return ord;
        cur = ref_pmulmod(cur, x, f, p);
        cur.resize(s, 0);
    }
    return 0;
}

struct NaiveReport {
    uint32_t d = 0, omega = 0;
    std::vector<uint64_t> histogram;
};

// full enumeration with an odometer counter and naive encode via RefField
inline NaiveReport naive_weight_report(const lrc::LinearCode& c) {
    const RefField f(c.field());
    const uint32_t n = c.n(), k = c.k(), q = f.q;
    uint64_t total = 1;
    for (uint32_t i = 0; i < k; ++i) {
        total *= q;
        if (total > (1u << 22)) throw std::runtime_error("oracle enumeration too large");
    }
    NaiveReport rep;
    rep.histogram.assign(n + 1, 0);
    std::vector<uint32_t> msg(k, 0);
    for (uint64_t s = 0; s < total; ++s) {
        std::vector<uint32_t> word(n, 0);
        for (uint32_t r = 0; r < k; ++r) {
            if (!msg[r]) continue;
            for (uint32_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(msg[r], c.at(r, j)));
        }
        uint32_t w = 0;
        for (uint32_t j = 0; j < n; ++j) w += word[j] != 0;
        ++rep.histogram[w];
        for (uint32_t r = 0; r < k; ++r) {
            if (++msg[r] < q) break;
            msg[r] = 0;
        }
    }
    for (uint32_t w = 1; w <= n; ++w)
        if (rep.histogram[w]) {
            rep.d = w;
            break;
        }
    for (uint32_t w = n; w >= 1; --w)
        if (rep.histogram[w]) {
            rep.omega = w;
            break;
        }
    return rep;
}

// sampling oracle: the smallest weight seen over random nonzero messages
inline uint32_t sampled_min_weight(const lrc::LinearCode& c, uint32_t trials, uint64_t seed) {
    const RefField f(c.field());
    std::mt19937_64 rng(seed);
    uint32_t best = UINT32_MAX;
    for (uint32_t t = 0; t < trials; ++t) {
        std::vector<uint32_t> msg(c.k());
        bool nz = false;
        for (auto& m : msg) {
            m = static_cast<uint32_t>(rng() % f.q);
            nz |= m != 0;
        }
        if (!nz) continue;
        std::vector<uint32_t> word(c.n(), 0);
        for (uint32_t r = 0; r < c.k(); ++r) {
            if (!msg[r]) continue;
            for (uint32_t j = 0; j < c.n(); ++j) word[j] = f.add(word[j], f.mul(msg[r], c.at(r, j)));
        }
        uint32_t w = 0;
        for (uint32_t j = 0; j < c.n(); ++j) w += word[j] != 0;
        best = std::min(best, w);
    }
    return best;
}

// random full-rank generator matrix
inline lrc::LinearCode random_code(const lrc::Field& f, uint32_t n, uint32_t k, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<uint32_t> g(static_cast<size_t>(n) * k);
        for (auto& v : g) v = static_cast<uint32_t>(rng() % f.order());
        try {
            return lrc::LinearCode(f, n, k, std::move(g), "random");
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::runtime_error("could not sample a full-rank matrix");
}

}  // namespace oracle
