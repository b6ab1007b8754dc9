#pragma once

/// Upper bounds on code and LRC parameters and dimension-optimality
/// certification: the generalized Singleton bound, the alphabet-aware
/// dimension bound minimized over the locality deduction, the q-ary
/// sphere-packing bound applied to the block-to-symbol projection, and a
/// best-known-dimension provider backed by a bundled table with an analytic
/// fallback chain.
///
/// All bound arithmetic is exact: big naturals for ball volumes, integer
/// logarithms by comparison, never floating point.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "lrc/bounds_data.hpp"
#include "lrc/constructions.hpp"
#include "lrc/linear.hpp"
#include "lrc/locality.hpp"

namespace lrc {

namespace bndetail {

/// Minimal unsigned bignum (base 2^32) for exact ball volumes and integer
/// logarithms.
class BigNat {
public:
    static BigNat from(uint64_t v) {
        BigNat b;
        b.limbs_.push_back(static_cast<uint32_t>(v & 0xFFFFFFFFu));
        b.limbs_.push_back(static_cast<uint32_t>(v >> 32));
        b.trim();
        return b;
    }

    void mul_small(uint64_t m) {  // m < 2^32
        uint64_t carry = 0;
        for (auto& l : limbs_) {
            const uint64_t v = static_cast<uint64_t>(l) * m + carry;
            l = static_cast<uint32_t>(v & 0xFFFFFFFFu);
            carry = v >> 32;
        }
        while (carry) {
            limbs_.push_back(static_cast<uint32_t>(carry & 0xFFFFFFFFu));
            carry >>= 32;
        }
        trim();
    }

    void div_small_exact(uint64_t m) {
        uint64_t rem = 0;
        for (size_t i = limbs_.size(); i-- > 0;) {
            const uint64_t v = (rem << 32) | limbs_[i];
            limbs_[i] = static_cast<uint32_t>(v / m);
            rem = v % m;
        }
        if (rem != 0) throw std::logic_error("inexact small division in bound arithmetic");
        trim();
    }

    void add(const BigNat& o) {
        if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < limbs_.size(); ++i) {
            const uint64_t v = static_cast<uint64_t>(limbs_[i]) + (i < o.limbs_.size() ? o.limbs_[i] : 0) + carry;
            limbs_[i] = static_cast<uint32_t>(v & 0xFFFFFFFFu);
            carry = v >> 32;
        }
        if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    }

    int cmp(const BigNat& o) const {
        if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
        for (size_t i = limbs_.size(); i-- > 0;)
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
        return 0;
    }

    double log2_approx() const {
        if (limbs_.empty()) return -1e300;
        const size_t top = limbs_.size() - 1;
        double v = limbs_[top];
        if (top >= 1) v = v * 4294967296.0 + limbs_[top - 1];
        const double extra = (top >= 1 ? (top - 1) : 0) * 32.0;
        return std::log2(v) + extra;
    }

    std::string to_string() const {  // decimal, for reports
        std::vector<uint32_t> tmp = limbs_;
        std::string out;
        auto all_zero = [&] {
            for (uint32_t l : tmp)
                if (l) return false;
            return true;
        };
        if (all_zero()) return "0";
        while (!all_zero()) {
            uint64_t rem = 0;
            for (size_t i = tmp.size(); i-- > 0;) {
                const uint64_t v = (rem << 32) | tmp[i];
                tmp[i] = static_cast<uint32_t>(v / 10);
                rem = v % 10;
            }
            out.push_back(static_cast<char>('0' + rem));
        }
        std::reverse(out.begin(), out.end());
        return out;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
    std::vector<uint32_t> limbs_;
};

/// Volume of the radius-floor((d-1)/2) Hamming ball in GF(q)^n.
inline BigNat ball_volume(uint32_t n, uint32_t d, uint64_t q) {
    const uint32_t radius = (d - 1) / 2;
    BigNat sum = BigNat::from(1);
    BigNat term = BigNat::from(1);
    for (uint32_t j = 1; j <= radius && j <= n; ++j) {
        term.mul_small(n - j + 1);
        term.mul_small(q - 1);
        term.div_small_exact(j);
        sum.add(term);
    }
    return sum;
}

/// Smallest x with q^x >= v.
inline uint32_t ceil_log(uint64_t q, const BigNat& v) {
    BigNat cur = BigNat::from(1);
    uint32_t x = 0;
    while (cur.cmp(v) < 0) {
        cur.mul_small(q);
        ++x;
        if (x > 1u << 20) throw std::logic_error("integer log runaway");
    }
    return x;
}

inline std::pair<uint32_t, uint32_t> prime_power(uint64_t q) {
    if (q < 2) throw std::invalid_argument("alphabet must have at least two symbols");
    uint32_t p = 0;
    for (uint64_t d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = static_cast<uint32_t>(d);
            break;
        }
    uint32_t e = 0;
    uint64_t v = q;
    while (v % p == 0) {
        v /= p;
        ++e;
    }
    if (v != 1) throw std::invalid_argument("alphabet order must be a prime power");
    return {p, e};
}

}  // namespace bndetail

// ---------------------------------------------------------------------------
// best-known-dimension provider
// ---------------------------------------------------------------------------

/// Table of upper bounds on the dimension of [n, k, d]_q linear codes, keyed
/// by (q, n, d), merged over a bundled data set; the analytic chain in
/// kopt_upper is the fallback.
class KOptProvider {
public:
    static KOptProvider bundled() {
        KOptProvider p;
        std::istringstream in(kBundledKoptTable);
        p.parse(in);
        return p;
    }

    static KOptProvider from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open k_opt table: " + path);
        KOptProvider p;
        p.parse(in);
        return p;
    }

    void parse(std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            uint32_t q, n, d, kmax;
            if (!(ls >> q >> n >> d >> kmax)) continue;
            rows_[{q, n, d}] = kmax;
        }
    }

    void merge(const KOptProvider& other) {
        for (const auto& [key, v] : other.rows_) {
            auto it = rows_.find(key);
            if (it == rows_.end() || v < it->second) rows_[key] = v;
        }
    }

    std::optional<uint32_t> lookup(uint32_t q, uint32_t n, uint32_t d) const {
        const auto it = rows_.find({q, n, d});
        if (it == rows_.end()) return std::nullopt;
        return it->second;
    }

    const std::map<std::tuple<uint32_t, uint32_t, uint32_t>, uint32_t>& rows() const { return rows_; }

private:
    std::map<std::tuple<uint32_t, uint32_t, uint32_t>, uint32_t> rows_;
};

struct KOptValue {
    uint32_t k = 0;
    std::string source;  // "table" | "analytic" | "void"
};

/// Upper bound on the dimension of a length-n distance-d linear code over
/// GF(q): the table when it binds, else the minimum of Singleton,
/// sphere-packing, Plotkin (binary, 2d > n) and the Griesmer search.
/// Table rows propagate to nearby parameters: a row (n0, d0, k0) bounds any
/// (n, d) with d >= d0 by k0 + max(0, n - n0), via shortening for n > n0 and
/// zero-padding for n <= n0.  That keeps the chain monotone in n and
/// antitone in d even with a sparse table.
inline KOptValue kopt_upper(uint32_t n, uint32_t d, uint32_t q, const KOptProvider& provider) {
    if (d < 1) throw std::invalid_argument("distance must be at least 1");
    if (n < d) return {0, "void"};

    uint64_t analytic = n - d + 1;  // Singleton

    {  // sphere-packing
        const auto ball = bndetail::ball_volume(n, d, q);
        const uint32_t c = bndetail::ceil_log(q, ball);
        analytic = std::min<uint64_t>(analytic, n - c);
    }

    if (q == 2) {  // Plotkin
        uint32_t nn = n, dd = d;
        if (dd % 2 == 1) {
            ++nn;
            ++dd;
        }
        if (2 * dd > nn) {
            const uint64_t a = 2 * (dd / (2ull * dd - nn));
            uint64_t k = 0;
            while ((2ull << k) <= a) ++k;  // floor(log2 a)
            analytic = std::min<uint64_t>(analytic, k);
        }
    }

    {  // Griesmer search: largest k with sum_{i<k} ceil(d/q^i) <= n
        uint64_t sum = 0, qi = 1, k = 0;
        while (true) {
            const uint64_t term = (d + qi - 1) / qi;
            if (sum + term > n) break;
            sum += term;
            ++k;
            if (qi <= d) qi *= q;  // clamp: further terms are 1
        }
        analytic = std::min<uint64_t>(analytic, k);
    }

    uint64_t table = UINT64_MAX;
    for (const auto& [key, k0] : provider.rows()) {
        const auto& [rq, n0, d0] = key;
        if (rq != q || d0 > d) continue;
        const uint64_t candidate = k0 + (n > n0 ? n - n0 : 0);
        table = std::min(table, candidate);
    }
    if (table <= analytic) return {static_cast<uint32_t>(table), "table"};
    return {static_cast<uint32_t>(analytic), "analytic"};
}

// ---------------------------------------------------------------------------
// LRC bounds
// ---------------------------------------------------------------------------

/// d <= n - k + 1 - (ceil(k/r) - 1)(delta - 1).
inline int64_t generalized_singleton(uint32_t n, uint32_t k, uint32_t r, uint32_t delta) {
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    if (r < 1) throw std::invalid_argument("need r >= 1");
    if (delta < 2) throw std::invalid_argument("need delta >= 2");
    const int64_t ceil_kr = (static_cast<int64_t>(k) + r - 1) / r;
    return static_cast<int64_t>(n) - k + 1 - (ceil_kr - 1) * (static_cast<int64_t>(delta) - 1);
}

struct CmTerm {
    uint32_t t = 0;
    uint32_t n_rem = 0;
    uint32_t kopt = 0;
    std::string source;
    uint64_t value = 0;
};

struct CmResult {
    uint64_t k_max = 0;
    uint32_t argmin_t = 0;  // smallest minimizing t
    std::vector<CmTerm> terms;
};

/// k <= min_t { t r + k_opt(n - t(r+1), d) }, with k_opt(n', d) = 0 when
/// n' < d.  Records every term and which k_opt source fed it.
inline CmResult cm_bound(uint32_t n, uint32_t d, uint32_t r, const KOptProvider& provider, uint32_t q = 2) {
    if (r < 1) throw std::invalid_argument("need r >= 1");
    if (d < 1 || d > n) throw std::invalid_argument("need 1 <= d <= n");
    CmResult res;
    res.k_max = UINT64_MAX;
    for (uint32_t t = 0; t <= n / (r + 1); ++t) {
        CmTerm term;
        term.t = t;
        term.n_rem = n - t * (r + 1);
        const KOptValue kv =
            (term.n_rem < d) ? KOptValue{0, "void"} : kopt_upper(term.n_rem, d, q, provider);
        term.kopt = kv.k;
        term.source = kv.source;
        term.value = static_cast<uint64_t>(t) * r + kv.k;
        if (term.value < res.k_max) {
            res.k_max = term.value;
            res.argmin_t = t;
        }
        res.terms.push_back(std::move(term));
    }
    return res;
}

// ---------------------------------------------------------------------------
// sphere packing on the projected code
// ---------------------------------------------------------------------------

/// Exact rational Q^{n'} / ball(n', d') with prime-power numerator, plus
/// integer logarithms by comparison.
struct SpherePackingBound {
    uint32_t p = 0;          // characteristic
    uint64_t exponent = 0;   // numerator = p^exponent
    bndetail::BigNat ball;   // denominator
    double log2_value = 0;   // display only

    /// Largest K with base^K <= p^exponent / ball, for base = p^g.
    int64_t floor_log(uint64_t base) const {
        const auto [bp, g] = bndetail::prime_power(base);
        if (bp != p) throw std::invalid_argument("logarithm base must be a power of the characteristic");
        const uint32_t c = bndetail::ceil_log(p, ball);
        if (exponent < c) return -1;
        return static_cast<int64_t>((exponent - c) / g);
    }
};

/// Sphere-packing bound on the cardinality of a length-n' distance-d' code
/// over an alphabet of prime-power order Q.
inline SpherePackingBound qary_hamming_kmax(uint32_t n_prime, uint32_t d_prime, uint64_t alphabet) {
    if (d_prime < 1) throw std::invalid_argument("distance must be at least 1");
    const auto [p, e] = bndetail::prime_power(alphabet);
    SpherePackingBound b;
    b.p = p;
    b.exponent = static_cast<uint64_t>(e) * n_prime;
    b.ball = bndetail::ball_volume(n_prime, d_prime, alphabet);
    b.log2_value = static_cast<double>(b.exponent) * std::log2(static_cast<double>(p)) - b.ball.log2_approx();
    return b;
}

// ---------------------------------------------------------------------------
// certification
// ---------------------------------------------------------------------------

struct BoundReport {
    int64_t singleton_d_bound = 0;
    std::optional<bool> singleton_optimal;  // requires an exact distance
    CmResult cm;
    uint32_t cm_r = 0;
    uint32_t d_used = 0;
    // projection route
    uint32_t n_prime = 0;
    uint64_t alphabet = 0;
    uint32_t omega = 0;
    uint32_t d_prime_used = 0;
    int64_t k_prime_max = 0;
    int64_t projection_k_max = 0;
    std::string sphere_packing_bound;  // decimal cardinality bound, for the report
    double sphere_packing_log2 = 0;
    // verdicts
    uint64_t k_upper = 0;
    bool dimension_optimal = false;
    bool bound_violated = false;
    std::string verdict;  // optimality is relative to linear codes (table data)
};

struct CertifyInput {
    std::optional<uint32_t> d_exact;
    std::optional<uint32_t> d_prime_exact;
    uint64_t budget = kDefaultBudget;
};

/// Projection + sphere-packing dimension bound, the alphabet-aware bound and
/// the generalized Singleton bound for a constructed code, with verdicts.
inline BoundReport certify_dimension_optimality(const ConstructionResult& res, const KOptProvider& provider,
                                                const CertifyInput& input = {}) {
    const LinearCode& code = res.code;
    const LinearCode& l = res.locality_code;
    const uint32_t n = code.n(), k = code.k();
    const uint32_t q = code.field().order();
    if (n % l.n() != 0) throw std::invalid_argument("locality code does not partition the length");

    BoundReport rep;
    rep.d_used = input.d_exact ? *input.d_exact : res.predicted.d_lb;
    rep.cm_r = res.predicted.r;

    rep.singleton_d_bound = generalized_singleton(n, k, res.predicted.r, res.predicted.delta);
    if (input.d_exact) rep.singleton_optimal = static_cast<int64_t>(*input.d_exact) == rep.singleton_d_bound;

    rep.cm = cm_bound(n, rep.d_used, res.predicted.r, provider, q);

    const auto wl = weight_report(l, 1u << 16);  // locality codes are tiny
    rep.omega = wl.omega;
    rep.n_prime = n / l.n();
    const auto alphabet = checked_pow(q, l.k(), UINT64_MAX / 2);
    rep.alphabet = alphabet ? *alphabet : 0;
    const uint32_t projected_lower = (rep.d_used + rep.omega - 1) / rep.omega;
    rep.d_prime_used = input.d_prime_exact ? std::max(*input.d_prime_exact, projected_lower) : projected_lower;
    const auto sp = qary_hamming_kmax(rep.n_prime, rep.d_prime_used, rep.alphabet);
    rep.sphere_packing_log2 = sp.log2_value;
    rep.sphere_packing_bound = "2^" + std::to_string(sp.exponent) + "/" + sp.ball.to_string();
    rep.k_prime_max = sp.floor_log(rep.alphabet);
    rep.projection_k_max = rep.k_prime_max < 0 ? -1 : static_cast<int64_t>(l.k()) * rep.k_prime_max;

    rep.k_upper = rep.cm.k_max;
    if (rep.projection_k_max >= 0)
        rep.k_upper = std::min<uint64_t>(rep.k_upper, static_cast<uint64_t>(rep.projection_k_max));
    rep.dimension_optimal = k == rep.k_upper;
    rep.bound_violated = k > rep.k_upper;

    const bool sing = rep.singleton_optimal.value_or(false);
    if (rep.dimension_optimal && sing)
        rep.verdict = "singleton_and_dimension_optimal";
    else if (rep.dimension_optimal)
        rep.verdict = "dimension_optimal";
    else if (sing)
        rep.verdict = "singleton_optimal";
    else
        rep.verdict = "neither";
    return rep;
}

}  // namespace lrc
