#pragma once

/// Exact arithmetic in small finite fields GF(p^s), polynomials over them,
/// and n-th roots of unity in extension fields.
///
/// Fields are interned and immutable: Field::get(p, s) returns a canonical
/// instance whose defining polynomial is the first primitive polynomial of
/// degree s over GF(p) in ascending order of the integer encoding
/// sum c_i p^i of its non-leading coefficients.  Elements are integer
/// indices in [0, q) under the polynomial-basis encoding index = sum c_i p^i,
/// which keeps serialized codes bit-reproducible across runs.
///
/// Multiplication and division go through exp/log tables keyed to the fixed
/// primitive element gamma (the residue class of X).  Orders are capped at
/// 2^16; larger splitting fields are rejected rather than silently computed.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrc {

namespace gfdetail {

inline bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::vector<uint32_t> prime_factors(uint64_t v) {
    std::vector<uint32_t> out;
    for (uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(static_cast<uint32_t>(d));
            while (v % d == 0) v /= d;
        }
    if (v > 1) out.push_back(static_cast<uint32_t>(v));
    return out;
}

// Dense ascending coefficient vectors over GF(p); only used while searching
// for the defining polynomial and building tables.
using PVec = std::vector<uint32_t>;

inline void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a*b reduced modulo the monic polynomial f over GF(p).
inline PVec pmulmod(const PVec& a, const PVec& b, const PVec& f, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<uint32_t>((r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    }
    const size_t s = f.size() - 1;
    for (size_t d = r.size(); d-- > s;) {
        const uint64_t c = r[d];
        if (!c) continue;
        r[d] = 0;
        for (size_t j = 0; j < s; ++j)
            r[d - s + j] = static_cast<uint32_t>((r[d - s + j] + c * (p - f[j])) % p);
    }
    if (r.size() > s) r.resize(s);
    ptrim(r);
    return r;
}

inline PVec xpowmod(uint64_t e, const PVec& f, uint32_t p) {
    PVec base = {0, 1};
    ptrim(base);  // f may have degree 1
    if (f.size() == 2) {
        // x reduces immediately: x = -c0
        base = {(p - f[0]) % p};
        ptrim(base);
    }
    PVec acc = {1};
    while (e) {
        if (e & 1) acc = pmulmod(acc, base, f, p);
        base = pmulmod(base, base, f, p);
        e >>= 1;
    }
    return acc;
}

inline bool x_has_full_order(const PVec& f, uint32_t p, uint64_t group_order) {
    const PVec one = {1};
    if (xpowmod(group_order, f, p) != one) return false;
    for (uint32_t rho : prime_factors(group_order))
        if (xpowmod(group_order / rho, f, p) == one) return false;
    return true;
}

}  // namespace gfdetail

/// A small finite field GF(p^s) with table-based arithmetic on element
/// indices.  Immutable after construction; all operations are pure and safe
/// for unrestricted concurrent use.
class Field {
public:
    static constexpr uint32_t kMaxOrder = 1u << 16;

    /// Canonical interned field of order p^s.
    /// Throws std::invalid_argument for non-prime p and std::domain_error
    /// when p^s exceeds the table cap.
    static const Field& get(uint32_t p, uint32_t s);

    uint32_t characteristic() const noexcept { return p_; }
    uint32_t extension_degree() const noexcept { return s_; }
    uint32_t order() const noexcept { return q_; }

    /// Defining polynomial coefficients c0..cs (ascending, monic, primitive).
    const std::vector<uint32_t>& modulus() const noexcept { return modulus_; }

    uint32_t add(uint32_t a, uint32_t b) const noexcept {
        if (p_ == 2) return a ^ b;
        uint32_t r = 0;
        for (uint32_t i = 0; i < s_; ++i) {
            const uint32_t da = (a / pow_p_[i]) % p_;
            const uint32_t db = (b / pow_p_[i]) % p_;
            r += ((da + db) % p_) * pow_p_[i];
        }
        return r;
    }

    uint32_t neg(uint32_t a) const noexcept {
        if (p_ == 2) return a;
        uint32_t r = 0;
        for (uint32_t i = 0; i < s_; ++i) {
            const uint32_t d = (a / pow_p_[i]) % p_;
            r += ((p_ - d) % p_) * pow_p_[i];
        }
        return r;
    }

    uint32_t sub(uint32_t a, uint32_t b) const noexcept { return add(a, neg(b)); }

    uint32_t mul(uint32_t a, uint32_t b) const noexcept {
        if (a == 0 || b == 0) return 0;
        uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }

    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    uint32_t div(uint32_t a, uint32_t b) const {
        if (b == 0) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
        if (a == 0) return 0;
        uint32_t d = log_[a] + (q_ - 1) - log_[b];
        if (d >= q_ - 1) d -= q_ - 1;
        return exp_[d];
    }

    /// a^e with a^0 = 1 for a != 0; 0^e = 0 for e > 0; negative exponents
    /// invert (and reject a = 0).
    uint32_t pow(uint32_t a, int64_t e) const {
        if (a == 0) {
            if (e > 0) return 0;
            if (e == 0) return 1;
            throw std::domain_error("negative power of zero");
        }
        const int64_t m = q_ - 1;
        int64_t r = e % m;
        if (r < 0) r += m;
        const uint64_t t = static_cast<uint64_t>(log_[a]) * static_cast<uint64_t>(r) % m;
        return exp_[static_cast<uint32_t>(t)];
    }

    /// gamma^i for the fixed primitive element gamma.
    uint32_t exp(uint64_t i) const noexcept { return exp_[i % (q_ - 1)]; }

    /// Discrete log base gamma of a nonzero element.
    uint32_t log(uint32_t a) const {
        if (a == 0) throw std::domain_error("log of zero");
        return log_[a];
    }

    uint32_t primitive_element() const noexcept { return exp_[1 % (q_ - 1)]; }

private:
    Field(uint32_t p, uint32_t s);

    uint32_t p_, s_, q_;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> pow_p_;
    std::vector<uint32_t> exp_;  // size q-1
    std::vector<uint32_t> log_;  // size q, log_[0] unused
};

inline Field::Field(uint32_t p, uint32_t s) : p_(p), s_(s) {
    if (!gfdetail::is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (s < 1) throw std::invalid_argument("extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < s; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::domain_error("field order exceeds supported table size (2^16)");
    }
    q_ = static_cast<uint32_t>(q);

    pow_p_.resize(s_ + 1);
    pow_p_[0] = 1;
    for (uint32_t i = 1; i <= s_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;

    // Smallest primitive polynomial in the integer encoding of the
    // non-leading coefficients.  Full multiplicative order of X modulo f
    // implies both irreducibility and primitivity.
    gfdetail::PVec f;
    for (uint32_t v = 0; v < q_; ++v) {
        f.assign(s_ + 1, 0);
        for (uint32_t i = 0, rem = v; i < s_; ++i, rem /= p_) f[i] = rem % p_;
        f[s_] = 1;
        if (gfdetail::x_has_full_order(f, p_, q_ - 1)) break;
        f.clear();
    }
    if (f.empty()) throw std::logic_error("no primitive polynomial found");  // unreachable
    modulus_ = f;

    // exp/log tables by repeated multiplication with X.
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    uint32_t v = 1;
    for (uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = v;
        log_[v] = i;
        // v *= X, reduced by the defining polynomial:
        // v*p = top*p^s + rest, X^s == -(c_0 + c_1 X + ...), so the result
        // is rest - top*modulus digitwise mod p.
        const uint64_t shifted = static_cast<uint64_t>(v) * p_;
        const uint32_t top = static_cast<uint32_t>(shifted / q_);
        uint32_t next = static_cast<uint32_t>(shifted % q_);
        if (top) {
            for (uint32_t d = 0; d < s_; ++d) {
                const uint32_t cur = (next / pow_p_[d]) % p_;
                const uint32_t dec = (top * modulus_[d]) % p_;
                const uint32_t nd = (cur + p_ - dec) % p_;
                next = next - cur * pow_p_[d] + nd * pow_p_[d];
            }
        }
        v = next;
    }
    if (v != 1) throw std::logic_error("exp table did not close");  // unreachable for primitive moduli
}

inline const Field& Field::get(uint32_t p, uint32_t s) {
    static std::mutex mu;
    static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, s}];
    if (!slot) slot.reset(new Field(p, s));
    return *slot;
}

/// An element index bound to its field; arithmetic never mixes fields.
class FieldElement {
public:
    FieldElement(const Field& f, uint32_t value) : f_(&f), v_(value) {
        if (value >= f.order()) throw std::invalid_argument("element index out of range");
    }

    const Field& field() const noexcept { return *f_; }
    uint32_t value() const noexcept { return v_; }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        a.check(b);
        return FieldElement(*a.f_, a.f_->add(a.v_, b.v_));
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        a.check(b);
        return FieldElement(*a.f_, a.f_->sub(a.v_, b.v_));
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        a.check(b);
        return FieldElement(*a.f_, a.f_->mul(a.v_, b.v_));
    }
    friend FieldElement operator/(FieldElement a, FieldElement b) {
        a.check(b);
        return FieldElement(*a.f_, a.f_->div(a.v_, b.v_));
    }
    FieldElement pow(int64_t e) const { return FieldElement(*f_, f_->pow(v_, e)); }
    FieldElement inv() const { return FieldElement(*f_, f_->inv(v_)); }
    friend bool operator==(FieldElement a, FieldElement b) { return a.f_ == b.f_ && a.v_ == b.v_; }
    friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

private:
    void check(const FieldElement& o) const {
        if (f_ != o.f_) throw std::invalid_argument("arithmetic on elements of different fields");
    }
    const Field* f_;
    uint32_t v_;
};

/// Polynomial over a Field, ascending coefficients, normalized so the
/// leading coefficient is nonzero (zero polynomial = empty vector).
class Poly {
public:
    explicit Poly(const Field& f) : f_(&f) {}
    Poly(const Field& f, std::vector<uint32_t> coeffs) : f_(&f), c_(std::move(coeffs)) {
        for (uint32_t c : c_)
            if (c >= f.order()) throw std::invalid_argument("coefficient out of range");
        trim();
    }

    static Poly one(const Field& f) { return Poly(f, {1}); }
    static Poly monomial(const Field& f, uint32_t deg, uint32_t coeff = 1) {
        std::vector<uint32_t> c(deg + 1, 0);
        c[deg] = coeff;
        return Poly(f, std::move(c));
    }
    /// X^n - 1.
    static Poly xn_minus_1(const Field& f, uint32_t n) {
        std::vector<uint32_t> c(n + 1, 0);
        c[0] = f.neg(1);
        c[n] = 1;
        return Poly(f, std::move(c));
    }

    const Field& field() const noexcept { return *f_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<uint32_t>& coeffs() const noexcept { return c_; }
    uint32_t coeff(size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check(b);
        std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.f_->add(a.coeff(i), b.coeff(i));
        return Poly(*a.f_, std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check(b);
        std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.f_->sub(a.coeff(i), b.coeff(i));
        return Poly(*a.f_, std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b);
        if (a.is_zero() || b.is_zero()) return Poly(*a.f_);
        std::vector<uint32_t> c(a.c_.size() + b.c_.size() - 1, 0);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (!a.c_[i]) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = a.f_->add(c[i + j], a.f_->mul(a.c_[i], b.c_[j]));
        }
        return Poly(*a.f_, std::move(c));
    }

    /// Quotient and remainder by a nonzero divisor.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        check(d);
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<uint32_t> rem = c_;
        std::vector<uint32_t> quo(std::max<int>(degree() - d.degree() + 1, 0), 0);
        const uint32_t lead_inv = f_->inv(d.c_.back());
        for (int i = static_cast<int>(rem.size()) - 1; i >= d.degree(); --i) {
            if (!rem[i]) continue;
            const uint32_t q = f_->mul(rem[i], lead_inv);
            quo[i - d.degree()] = q;
            for (int j = 0; j <= d.degree(); ++j)
                rem[i - d.degree() + j] = f_->sub(rem[i - d.degree() + j], f_->mul(q, d.c_[j]));
        }
        return {Poly(*f_, std::move(quo)), Poly(*f_, std::move(rem))};
    }

    bool divides(const Poly& other) const { return other.divmod(*this).second.is_zero(); }

    uint32_t eval(uint32_t x) const noexcept {
        uint32_t acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check(const Poly& o) const {
        if (f_ != o.f_) throw std::invalid_argument("polynomials over different fields");
    }
    const Field* f_;
    std::vector<uint32_t> c_;
};

/// Canonical embedding of GF(p^e) into GF(p^E) with e | E, realized by the
/// smallest-index root of the subfield's defining polynomial.
class SubfieldEmbedding {
public:
    SubfieldEmbedding(const Field& sub, const Field& big) : sub_(&sub), big_(&big) {
        if (sub.characteristic() != big.characteristic())
            throw std::invalid_argument("subfield embedding requires equal characteristic");
        if (big.extension_degree() % sub.extension_degree() != 0)
            throw std::invalid_argument("no subfield of this degree");
        uint32_t root = 0;
        bool found = false;
        for (uint32_t x = 0; x < big.order(); ++x) {
            // Horner over the big field; sub's modulus coefficients live in
            // the shared prime subfield, where index == value.
            uint32_t acc = 0;
            const auto& m = sub.modulus();
            for (size_t i = m.size(); i-- > 0;) acc = big.add(big.mul(acc, x), m[i]);
            if (acc == 0) {
                root = x;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("defining polynomial has no root in extension");
        up_.assign(sub.order(), 0);
        down_.assign(big.order(), -1);
        const uint32_t p = sub.characteristic();
        for (uint32_t a = 0; a < sub.order(); ++a) {
            uint32_t acc = 0, rp = 1, rem = a;
            for (uint32_t i = 0; i < sub.extension_degree(); ++i, rem /= p) {
                acc = big.add(acc, big.mul(rem % p, rp));
                rp = big.mul(rp, root);
            }
            up_[a] = acc;
            down_[acc] = static_cast<int32_t>(a);
        }
    }

    const Field& subfield() const noexcept { return *sub_; }
    const Field& extension() const noexcept { return *big_; }
    uint32_t to_big(uint32_t a) const { return up_.at(a); }
    bool contains(uint32_t big_elem) const { return down_.at(big_elem) >= 0; }
    uint32_t to_sub(uint32_t big_elem) const {
        const int32_t v = down_.at(big_elem);
        if (v < 0) throw std::domain_error("element not in subfield");
        return static_cast<uint32_t>(v);
    }

private:
    const Field* sub_;
    const Field* big_;
    std::vector<uint32_t> up_;
    std::vector<int32_t> down_;
};

/// Splitting-field context for n-th roots of unity over GF(q).
struct RootContext {
    const Field* base;       // GF(q)
    const Field* splitting;  // GF(q^s)
    uint32_t n;
    uint32_t s;      // multiplicative order of q modulo n
    uint32_t alpha;  // element of exact order n in the splitting field
    SubfieldEmbedding embed;
};

/// Smallest s with n | q^s - 1, the field GF(q^s) and a fixed n-th root of
/// unity alpha = gamma^((q^s-1)/n).
inline RootContext nth_root_context(const Field& base, uint32_t n) {
    if (n == 0) throw std::invalid_argument("length must be positive");
    const uint32_t q = base.order();
    if (std::gcd<uint64_t>(n, q) != 1) throw std::invalid_argument("gcd(n, q) must be 1");
    uint32_t s = 0;
    uint64_t cur = 1;
    do {
        ++s;
        cur = (cur * q) % n;
        if (s > 64) throw std::logic_error("order search runaway");
    } while (cur != 1 % n);

    uint64_t big_order = 1;
    for (uint32_t i = 0; i < base.extension_degree() * s; ++i) {
        big_order *= base.characteristic();
        if (big_order > Field::kMaxOrder)
            throw std::domain_error("splitting field GF(" + std::to_string(q) + "^" + std::to_string(s) +
                                    ") exceeds supported table size");
    }
    const Field& big = Field::get(base.characteristic(), base.extension_degree() * s);
    const uint32_t alpha = big.exp((big.order() - 1) / n);
    // alpha must have exact order n
    if (big.pow(alpha, n) != 1) throw std::logic_error("alpha^n != 1");
    return RootContext{&base, &big, n, s, alpha, SubfieldEmbedding(base, big)};
}

}  // namespace lrc
