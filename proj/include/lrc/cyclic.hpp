#pragma once

/// Cyclotomic cosets, defining sets, generator polynomials, cyclic-code
/// realization and the BCH distance bound.
///
/// A defining set is a union of q-cyclotomic cosets modulo n; the generator
/// polynomial is the product of (X - alpha^i) over the set, computed in the
/// splitting field and mapped down to GF(q).  Defining sets are stored fully
/// materialized (n <= 2^16).

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/galois.hpp"

namespace lrc {

/// Orbit of i under multiplication by q modulo n: {i*q^j mod n}.
inline std::vector<uint32_t> cyclotomic_coset(uint32_t i, uint32_t n, uint32_t q) {
    if (n == 0 || i >= n) throw std::invalid_argument("residue out of range");
    if (std::gcd<uint64_t>(n, q) != 1) throw std::invalid_argument("gcd(n, q) must be 1");
    std::vector<uint32_t> out;
    uint64_t cur = i;
    do {
        out.push_back(static_cast<uint32_t>(cur));
        cur = (cur * q) % n;
    } while (cur != i);
    std::sort(out.begin(), out.end());
    return out;
}

/// Residues of [0, n) closed under multiplication by q; the zero set of a
/// cyclic code's generator polynomial on the alpha-powers.
struct DefiningSet {
    uint32_t n = 0;
    uint32_t q = 0;
    std::vector<uint32_t> residues;  // sorted, unique, all < n

    bool contains(uint32_t i) const {
        return std::binary_search(residues.begin(), residues.end(), i);
    }

    bool closed_under_q() const {
        for (uint32_t r : residues)
            if (!contains(static_cast<uint32_t>((static_cast<uint64_t>(r) * q) % n))) return false;
        return true;
    }

    /// The shifted set {(i+z) mod n}.
    DefiningSet shifted(int64_t z) const {
        DefiningSet out{n, q, {}};
        out.residues.reserve(residues.size());
        for (uint32_t r : residues) {
            int64_t v = (static_cast<int64_t>(r) + z) % static_cast<int64_t>(n);
            if (v < 0) v += n;
            out.residues.push_back(static_cast<uint32_t>(v));
        }
        std::sort(out.residues.begin(), out.residues.end());
        return out;
    }

    friend bool operator==(const DefiningSet& a, const DefiningSet& b) {
        return a.n == b.n && a.q == b.q && a.residues == b.residues;
    }
};

struct NormalizeResult {
    DefiningSet ds;
    bool was_closed;  // input already a union of cosets
};

/// Reduce raw residues mod n (negatives allowed) and close the set under
/// multiplication by q.
inline NormalizeResult normalize_defset(uint32_t n, uint32_t q, const std::vector<int64_t>& raw) {
    if (n == 0) throw std::invalid_argument("length must be positive");
    if (std::gcd<uint64_t>(n, q) != 1) throw std::invalid_argument("gcd(n, q) must be 1");
    std::set<uint32_t> in;
    for (int64_t v : raw) {
        int64_t r = v % static_cast<int64_t>(n);
        if (r < 0) r += n;
        in.insert(static_cast<uint32_t>(r));
    }
    std::set<uint32_t> closed;
    for (uint32_t r : in)
        for (uint32_t c : cyclotomic_coset(r, n, q)) closed.insert(c);
    DefiningSet ds{n, q, std::vector<uint32_t>(closed.begin(), closed.end())};
    const bool was_closed = closed.size() == in.size();
    return {ds, was_closed};
}

/// 1 + length of the longest run {b, b+c, b+2c, ...} inside the set
/// (wraparound mod n), with c = 1 by default and maximized over all c
/// coprime to n when step_search is set.
inline uint32_t bch_bound(const DefiningSet& ds, bool step_search = false) {
    const uint32_t n = ds.n;
    if (n == 0) throw std::invalid_argument("empty defining set container");
    std::vector<char> member(n, 0);
    for (uint32_t r : ds.residues) member[r] = 1;

    auto longest_run = [&](const std::vector<char>& m) -> uint32_t {
        // longest circular run of 1s
        uint32_t best = 0, cur = 0;
        for (uint32_t i = 0; i < 2 * n; ++i) {
            if (m[i % n]) {
                ++cur;
                best = std::max(best, cur);
            } else {
                cur = 0;
            }
            if (best >= n) return n;  // all ones
        }
        return best;
    };

    uint32_t best = longest_run(member);
    if (step_search) {
        for (uint32_t c = 2; c < n; ++c) {
            if (std::gcd(c, n) != 1u) continue;
            // {b + jc} subset of D  <=>  consecutive residues in c^{-1} D
            uint64_t cinv = 1;
            for (uint32_t e = 0; e < n; ++e) {  // small n; plain search for the inverse
                if ((static_cast<uint64_t>(c) * e) % n == 1) {
                    cinv = e;
                    break;
                }
            }
            std::vector<char> mapped(n, 0);
            for (uint32_t r : ds.residues) mapped[(r * cinv) % n] = 1;
            best = std::max(best, longest_run(mapped));
        }
    }
    return best + 1;
}

class LinearCode;  // linear.hpp

/// A q-ary cyclic code realized from its defining set: generator polynomial,
/// dimension, and the splitting-field root context.
class CyclicCode {
public:
    CyclicCode(const Field& base, const DefiningSet& ds)
        : base_(&base), ds_(ds), root_(nth_root_context(base, ds.n)), g_(base) {
        if (base.order() != ds.q) throw std::invalid_argument("defining set is for a different field order");
        if (!ds_.closed_under_q())
            throw std::invalid_argument("defining set is not closed under multiplication by q");
        if (ds_.residues.size() == ds_.n) throw std::invalid_argument("defining set selects the zero code");
        g_ = product_over(ds_.residues);
        k_ = ds_.n - static_cast<uint32_t>(ds_.residues.size());
    }

    const Field& field() const noexcept { return *base_; }
    const DefiningSet& defining_set() const noexcept { return ds_; }
    const RootContext& root_context() const noexcept { return root_; }
    uint32_t n() const noexcept { return ds_.n; }
    uint32_t k() const noexcept { return k_; }
    const Poly& generator() const noexcept { return g_; }

    /// Minimal polynomial of alpha^i over GF(q).
    Poly minimal_polynomial(uint32_t i) const { return product_over(cyclotomic_coset(i, ds_.n, ds_.q)); }

    /// g evaluated at alpha^i, computed in the splitting field.
    uint32_t generator_root_value(uint32_t i) const {
        const Field& big = *root_.splitting;
        const uint32_t x = big.pow(root_.alpha, i);
        uint32_t acc = 0;
        const auto& c = g_.coeffs();
        for (size_t j = c.size(); j-- > 0;) acc = big.add(big.mul(acc, x), root_.embed.to_big(c[j]));
        return acc;
    }

    /// The k x n generator matrix whose rows are X^r g(X).
    std::vector<uint32_t> generator_matrix() const {
        const uint32_t n = ds_.n;
        std::vector<uint32_t> G(static_cast<size_t>(k_) * n, 0);
        const auto& c = g_.coeffs();
        for (uint32_t r = 0; r < k_; ++r)
            for (size_t j = 0; j < c.size(); ++j) G[static_cast<size_t>(r) * n + r + j] = c[j];
        return G;
    }

private:
    Poly product_over(const std::vector<uint32_t>& residues) const {
        const Field& big = *root_.splitting;
        // product of (X - alpha^i) in the splitting field
        std::vector<uint32_t> g = {1};
        for (uint32_t i : residues) {
            const uint32_t root = big.pow(root_.alpha, i);
            std::vector<uint32_t> next(g.size() + 1, 0);
            for (size_t j = 0; j < g.size(); ++j) {
                next[j + 1] = big.add(next[j + 1], g[j]);
                next[j] = big.add(next[j], big.mul(g[j], big.neg(root)));
            }
            g = std::move(next);
        }
        // coefficients must land in the base field
        std::vector<uint32_t> down(g.size());
        for (size_t j = 0; j < g.size(); ++j) {
            if (!root_.embed.contains(g[j]))
                throw std::invalid_argument("generator coefficients leave GF(q); set not closed");
            down[j] = root_.embed.to_sub(g[j]);
        }
        return Poly(*base_, std::move(down));
    }

    const Field* base_;
    DefiningSet ds_;
    RootContext root_;
    Poly g_;
    uint32_t k_ = 0;
};

}  // namespace lrc
