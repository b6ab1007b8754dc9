#pragma once

/// Generic linear-code analysis: encoding, exact minimum distance and weight
/// distribution by enumeration, block puncturing, code concatenation and
/// Hamming codes.
///
/// The enumeration kernels walk all q^k codewords in modular q-ary Gray-code
/// order, so each step adds a single scaled generator row.  Codewords are
/// bit-packed: plain words for q = 2, two bit-planes for q = 3 (bitsliced
/// mod-3 adder) and q = 4 (characteristic 2), a byte array with an addition
/// table otherwise.  The message space may be partitioned across threads;
/// partial histograms merge associatively, so results do not depend on the
/// worker count.

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "lrc/galois.hpp"

namespace lrc {

constexpr uint64_t kDefaultBudget = 1ull << 26;

/// Enumeration would exceed the caller's budget.
class EnumerationInfeasible : public std::runtime_error {
public:
    explicit EnumerationInfeasible(const std::string& what) : std::runtime_error(what) {}
};

inline std::optional<uint64_t> checked_pow(uint64_t base, uint32_t e, uint64_t cap) {
    uint64_t v = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (base != 0 && v > cap / base) return std::nullopt;
        v *= base;
    }
    return v;
}

namespace linalg {

/// In-place reduced row echelon form; returns the pivot column list.
inline std::vector<uint32_t> rref(const Field& f, std::vector<uint32_t>& m, uint32_t rows, uint32_t cols) {
    std::vector<uint32_t> pivots;
    uint32_t r = 0;
    for (uint32_t c = 0; c < cols && r < rows; ++c) {
        uint32_t pr = r;
        while (pr < rows && m[static_cast<size_t>(pr) * cols + c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (uint32_t j = 0; j < cols; ++j)
                std::swap(m[static_cast<size_t>(pr) * cols + j], m[static_cast<size_t>(r) * cols + j]);
        const uint32_t inv = f.inv(m[static_cast<size_t>(r) * cols + c]);
        for (uint32_t j = 0; j < cols; ++j)
            m[static_cast<size_t>(r) * cols + j] = f.mul(m[static_cast<size_t>(r) * cols + j], inv);
        for (uint32_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const uint32_t factor = m[static_cast<size_t>(i) * cols + c];
            if (!factor) continue;
            for (uint32_t j = 0; j < cols; ++j)
                m[static_cast<size_t>(i) * cols + j] =
                    f.sub(m[static_cast<size_t>(i) * cols + j], f.mul(factor, m[static_cast<size_t>(r) * cols + j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline uint32_t rank(const Field& f, std::vector<uint32_t> m, uint32_t rows, uint32_t cols) {
    return static_cast<uint32_t>(rref(f, m, rows, cols).size());
}

/// Coefficients expressing target as a combination of the given vectors
/// (each of length len), or nullopt.  Free coefficients are fixed to zero,
/// which makes the result deterministic.
inline std::optional<std::vector<uint32_t>> in_span(const Field& f, const std::vector<const uint32_t*>& vecs,
                                                    const uint32_t* target, uint32_t len) {
    const uint32_t m = static_cast<uint32_t>(vecs.size());
    std::vector<uint32_t> a(static_cast<size_t>(len) * (m + 1), 0);
    for (uint32_t i = 0; i < len; ++i) {
        for (uint32_t j = 0; j < m; ++j) a[static_cast<size_t>(i) * (m + 1) + j] = vecs[j][i];
        a[static_cast<size_t>(i) * (m + 1) + m] = target[i];
    }
    const auto pivots = rref(f, a, len, m + 1);
    for (uint32_t p : pivots)
        if (p == m) return std::nullopt;
    std::vector<uint32_t> coeffs(m, 0);
    for (uint32_t r = 0; r < pivots.size(); ++r) coeffs[pivots[r]] = a[static_cast<size_t>(r) * (m + 1) + m];
    return coeffs;
}

}  // namespace linalg

/// A linear [n, k] code over GF(q) given by a full-rank generator matrix.
class LinearCode {
public:
    LinearCode(const Field& f, uint32_t n, uint32_t k, std::vector<uint32_t> row_major_generator,
               std::string provenance = "")
        : f_(&f), n_(n), k_(k), g_(std::move(row_major_generator)), provenance_(std::move(provenance)) {
        if (n_ == 0 || k_ == 0 || k_ > n_) throw std::invalid_argument("need 1 <= k <= n");
        if (g_.size() != static_cast<size_t>(n_) * k_) throw std::invalid_argument("generator size mismatch");
        for (uint32_t v : g_)
            if (v >= f.order()) throw std::invalid_argument("generator entry out of range");
        if (linalg::rank(f, g_, k_, n_) != k_) throw std::invalid_argument("generator matrix is rank deficient");
    }

    const Field& field() const noexcept { return *f_; }
    uint32_t n() const noexcept { return n_; }
    uint32_t k() const noexcept { return k_; }
    uint32_t at(uint32_t r, uint32_t c) const noexcept { return g_[static_cast<size_t>(r) * n_ + c]; }
    const uint32_t* row(uint32_t r) const noexcept { return g_.data() + static_cast<size_t>(r) * n_; }
    const std::vector<uint32_t>& matrix() const noexcept { return g_; }
    const std::string& provenance() const noexcept { return provenance_; }

    /// Column i as a length-k vector.
    std::vector<uint32_t> column(uint32_t c) const {
        std::vector<uint32_t> out(k_);
        for (uint32_t r = 0; r < k_; ++r) out[r] = at(r, c);
        return out;
    }

private:
    const Field* f_;
    uint32_t n_, k_;
    std::vector<uint32_t> g_;
    std::string provenance_;
};

inline std::vector<uint32_t> encode(const LinearCode& c, const std::vector<uint32_t>& message) {
    if (message.size() != c.k()) throw std::invalid_argument("message length != k");
    const Field& f = c.field();
    std::vector<uint32_t> out(c.n(), 0);
    for (uint32_t r = 0; r < c.k(); ++r) {
        const uint32_t m = message[r];
        if (!m) continue;
        const uint32_t* row = c.row(r);
        for (uint32_t j = 0; j < c.n(); ++j) out[j] = f.add(out[j], f.mul(m, row[j]));
    }
    return out;
}

/// Is the word a codeword (a combination of the generator rows)?
inline bool is_codeword(const LinearCode& c, const std::vector<uint32_t>& word) {
    if (word.size() != c.n()) throw std::invalid_argument("word length != n");
    std::vector<const uint32_t*> rows(c.k());
    for (uint32_t r = 0; r < c.k(); ++r) rows[r] = c.row(r);
    return linalg::in_span(c.field(), rows, word.data(), c.n()).has_value();
}

// ---------------------------------------------------------------------------
// enumeration kernels
// ---------------------------------------------------------------------------

namespace enumdetail {

inline uint32_t words_needed(uint32_t n) { return (n + 63) / 64; }

struct RepGF2 {
    uint32_t n = 0, k = 0, W = 0;
    std::vector<uint64_t> rows;  // k * W
    std::vector<uint64_t> state;

    void load(const LinearCode& c) {
        n = c.n();
        k = c.k();
        W = words_needed(n);
        rows.assign(static_cast<size_t>(k) * W, 0);
        for (uint32_t r = 0; r < k; ++r)
            for (uint32_t j = 0; j < n; ++j)
                if (c.at(r, j)) rows[static_cast<size_t>(r) * W + j / 64] |= 1ull << (j % 64);
        state.assign(W, 0);
    }
    void start(const std::vector<uint32_t>& gray) {
        state.assign(W, 0);
        for (uint32_t r = 0; r < k; ++r)
            if (gray[r])
                for (uint32_t w = 0; w < W; ++w) state[w] ^= rows[static_cast<size_t>(r) * W + w];
    }
    void step(uint32_t r, uint32_t /*oldv*/) {
        const uint64_t* row = rows.data() + static_cast<size_t>(r) * W;
        for (uint32_t w = 0; w < W; ++w) state[w] ^= row[w];
    }
    uint32_t weight() const {
        uint32_t s = 0;
        for (uint32_t w = 0; w < W; ++w) s += static_cast<uint32_t>(std::popcount(state[w]));
        return s;
    }
    void nonzero_mask(uint64_t* out) const {
        for (uint32_t w = 0; w < W; ++w) out[w] = state[w];
    }
};

// GF(3) bit-sliced planes: value 1 -> lo bit, value 2 -> hi bit.
struct RepGF3 {
    uint32_t n = 0, k = 0, W = 0;
    std::vector<uint64_t> rlo, rhi;  // per-row +1*row slices
    std::vector<uint64_t> lo, hi;

    void load(const LinearCode& c) {
        n = c.n();
        k = c.k();
        W = words_needed(n);
        rlo.assign(static_cast<size_t>(k) * W, 0);
        rhi.assign(static_cast<size_t>(k) * W, 0);
        for (uint32_t r = 0; r < k; ++r)
            for (uint32_t j = 0; j < n; ++j) {
                const uint32_t v = c.at(r, j);
                if (v == 1) rlo[static_cast<size_t>(r) * W + j / 64] |= 1ull << (j % 64);
                if (v == 2) rhi[static_cast<size_t>(r) * W + j / 64] |= 1ull << (j % 64);
            }
        lo.assign(W, 0);
        hi.assign(W, 0);
    }
    void add_row(uint32_t r) {
        const uint64_t* bl = rlo.data() + static_cast<size_t>(r) * W;
        const uint64_t* bh = rhi.data() + static_cast<size_t>(r) * W;
        for (uint32_t w = 0; w < W; ++w) {
            const uint64_t al = lo[w], ah = hi[w];
            const uint64_t t = (al | bh[w]) ^ (ah | bl[w]);
            lo[w] = t ^ (ah | bh[w]);
            hi[w] = t ^ (al | bl[w]);
        }
    }
    void start(const std::vector<uint32_t>& gray) {
        lo.assign(W, 0);
        hi.assign(W, 0);
        for (uint32_t r = 0; r < k; ++r)
            for (uint32_t times = 0; times < gray[r]; ++times) add_row(r);
    }
    // digit changes by +1 mod 3, so the field delta is always +row
    void step(uint32_t r, uint32_t /*oldv*/) { add_row(r); }
    uint32_t weight() const {
        uint32_t s = 0;
        for (uint32_t w = 0; w < W; ++w) s += static_cast<uint32_t>(std::popcount(lo[w] | hi[w]));
        return s;
    }
    void nonzero_mask(uint64_t* out) const {
        for (uint32_t w = 0; w < W; ++w) out[w] = lo[w] | hi[w];
    }
};

// GF(4) planes: element index bits; addition is plane-wise XOR.
struct RepGF4 {
    uint32_t n = 0, k = 0, W = 0;
    // rows scaled by every nonzero field element, packed as (b0, b1)
    std::vector<uint64_t> r0[4], r1[4];
    std::vector<uint64_t> b0, b1;

    void load(const LinearCode& c) {
        const Field& f = c.field();
        n = c.n();
        k = c.k();
        W = words_needed(n);
        for (uint32_t mu = 1; mu < 4; ++mu) {
            r0[mu].assign(static_cast<size_t>(k) * W, 0);
            r1[mu].assign(static_cast<size_t>(k) * W, 0);
            for (uint32_t r = 0; r < k; ++r)
                for (uint32_t j = 0; j < n; ++j) {
                    const uint32_t v = f.mul(mu, c.at(r, j));
                    if (v & 1) r0[mu][static_cast<size_t>(r) * W + j / 64] |= 1ull << (j % 64);
                    if (v & 2) r1[mu][static_cast<size_t>(r) * W + j / 64] |= 1ull << (j % 64);
                }
        }
        b0.assign(W, 0);
        b1.assign(W, 0);
    }
    void xor_scaled(uint32_t r, uint32_t mu) {
        const uint64_t* s0 = r0[mu].data() + static_cast<size_t>(r) * W;
        const uint64_t* s1 = r1[mu].data() + static_cast<size_t>(r) * W;
        for (uint32_t w = 0; w < W; ++w) {
            b0[w] ^= s0[w];
            b1[w] ^= s1[w];
        }
    }
    void start(const std::vector<uint32_t>& gray) {
        b0.assign(W, 0);
        b1.assign(W, 0);
        for (uint32_t r = 0; r < k; ++r)
            if (gray[r]) xor_scaled(r, gray[r]);
    }
    void step(uint32_t r, uint32_t oldv) {
        const uint32_t delta = ((oldv + 1) & 3u) ^ oldv;  // element index difference, char 2
        xor_scaled(r, delta);
    }
    uint32_t weight() const {
        uint32_t s = 0;
        for (uint32_t w = 0; w < W; ++w) s += static_cast<uint32_t>(std::popcount(b0[w] | b1[w]));
        return s;
    }
    void nonzero_mask(uint64_t* out) const {
        for (uint32_t w = 0; w < W; ++w) out[w] = b0[w] | b1[w];
    }
};

// Fallback for any small field: byte state plus an addition table.
struct RepGeneric {
    uint32_t n = 0, k = 0, q = 0;
    std::vector<uint8_t> state;
    std::vector<uint8_t> addtab;            // q*q
    std::vector<std::vector<uint8_t>> rows; // [k][q][n] flattened: row r scaled by every value
    const Field* f = nullptr;

    void load(const LinearCode& c) {
        f = &c.field();
        n = c.n();
        k = c.k();
        q = f->order();
        if (q > 256) throw std::invalid_argument("generic enumeration supports q <= 256");
        addtab.assign(static_cast<size_t>(q) * q, 0);
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = 0; b < q; ++b) addtab[static_cast<size_t>(a) * q + b] = static_cast<uint8_t>(f->add(a, b));
        rows.assign(k, {});
        for (uint32_t r = 0; r < k; ++r) {
            rows[r].assign(static_cast<size_t>(q) * n, 0);
            for (uint32_t mu = 0; mu < q; ++mu)
                for (uint32_t j = 0; j < n; ++j)
                    rows[r][static_cast<size_t>(mu) * n + j] = static_cast<uint8_t>(f->mul(mu, c.at(r, j)));
        }
        state.assign(n, 0);
    }
    void add_scaled(uint32_t r, uint32_t mu) {
        if (!mu) return;
        const uint8_t* src = rows[r].data() + static_cast<size_t>(mu) * n;
        for (uint32_t j = 0; j < n; ++j) state[j] = addtab[static_cast<size_t>(state[j]) * q + src[j]];
    }
    void start(const std::vector<uint32_t>& gray) {
        state.assign(n, 0);
        for (uint32_t r = 0; r < k; ++r) add_scaled(r, gray[r]);
    }
    void step(uint32_t r, uint32_t oldv) {
        const uint32_t newv = (oldv + 1 == q) ? 0 : oldv + 1;
        add_scaled(r, f->sub(newv, oldv));
    }
    uint32_t weight() const {
        uint32_t s = 0;
        for (uint32_t j = 0; j < n; ++j) s += state[j] != 0;
        return s;
    }
    void nonzero_mask(uint64_t* out) const {
        const uint32_t W = words_needed(n);
        for (uint32_t w = 0; w < W; ++w) out[w] = 0;
        for (uint32_t j = 0; j < n; ++j)
            if (state[j]) out[j / 64] |= 1ull << (j % 64);
    }
};

/// Walk messages s in [s0, s1) of the modular q-ary Gray sequence; the word
/// at position s has digits (b_j - b_{j+1}) mod q of the base-q digits b of
/// s, and each step changes exactly one digit by +1 mod q.
template <class Rep, class Visitor>
void enumerate_messages(const LinearCode& c, uint64_t s0, uint64_t s1, Rep& rep, Visitor&& visit) {
    const uint32_t q = c.field().order();
    const uint32_t k = c.k();
    std::vector<uint32_t> cnt(k, 0), gray(k, 0);
    uint64_t s = s0;
    for (uint32_t j = 0; j < k; ++j, s /= q) cnt[j] = static_cast<uint32_t>(s % q);
    for (uint32_t j = 0; j < k; ++j) {
        const uint32_t hi = (j + 1 < k) ? cnt[j + 1] : 0;
        gray[j] = (cnt[j] + q - hi) % q;
    }
    rep.start(gray);
    visit(rep);
    for (uint64_t t = s0 + 1; t < s1; ++t) {
        uint32_t d = 0;
        while (cnt[d] == q - 1) {
            cnt[d] = 0;
            ++d;
        }
        ++cnt[d];
        const uint32_t oldv = gray[d];
        gray[d] = (oldv + 1 == q) ? 0 : oldv + 1;
        rep.step(d, oldv);
        visit(rep);
    }
}

inline std::vector<std::pair<uint64_t, uint64_t>> split_ranges(uint64_t total, unsigned jobs) {
    unsigned j = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
    j = static_cast<unsigned>(std::min<uint64_t>(j, std::max<uint64_t>(1, total / 4096)));
    if (j < 1) j = 1;
    std::vector<std::pair<uint64_t, uint64_t>> out;
    for (unsigned i = 0; i < j; ++i) {
        const uint64_t a = total / j * i + std::min<uint64_t>(i, total % j);
        const uint64_t b = total / j * (i + 1) + std::min<uint64_t>(i + 1, total % j);
        if (a < b) out.emplace_back(a, b);
    }
    return out;
}

template <class Rep>
std::vector<uint64_t> weight_histogram(const LinearCode& c, uint64_t total, unsigned jobs) {
    const auto ranges = split_ranges(total, jobs);
    std::vector<std::vector<uint64_t>> hists(ranges.size(), std::vector<uint64_t>(c.n() + 1, 0));
    std::vector<std::thread> threads;
    for (size_t i = 0; i < ranges.size(); ++i) {
        threads.emplace_back([&, i] {
            Rep rep;
            rep.load(c);
            auto& h = hists[i];
            enumerate_messages(c, ranges[i].first, ranges[i].second, rep,
                               [&](const Rep& r) { ++h[r.weight()]; });
        });
    }
    for (auto& t : threads) t.join();
    std::vector<uint64_t> hist(c.n() + 1, 0);
    for (const auto& h : hists)
        for (size_t w = 0; w < hist.size(); ++w) hist[w] += h[w];
    return hist;
}

struct BlockMasks {
    std::vector<std::vector<uint64_t>> masks;  // per block, full word width
    uint32_t W = 0;
};

inline BlockMasks make_block_masks(uint32_t n, const std::vector<std::vector<uint32_t>>& blocks) {
    BlockMasks bm;
    bm.W = words_needed(n);
    bm.masks.reserve(blocks.size());
    for (const auto& b : blocks) {
        std::vector<uint64_t> m(bm.W, 0);
        for (uint32_t i : b) {
            if (i >= n) throw std::invalid_argument("block coordinate out of range");
            m[i / 64] |= 1ull << (i % 64);
        }
        bm.masks.push_back(std::move(m));
    }
    return bm;
}

template <class Rep>
uint32_t min_block_weight(const LinearCode& c, const BlockMasks& bm, uint64_t total, unsigned jobs) {
    const auto ranges = split_ranges(total, jobs);
    std::vector<uint32_t> mins(ranges.size(), UINT32_MAX);
    std::vector<std::thread> threads;
    for (size_t i = 0; i < ranges.size(); ++i) {
        threads.emplace_back([&, i] {
            Rep rep;
            rep.load(c);
            std::vector<uint64_t> nz(bm.W);
            uint32_t best = UINT32_MAX;
            enumerate_messages(c, ranges[i].first, ranges[i].second, rep, [&](const Rep& r) {
                r.nonzero_mask(nz.data());
                uint32_t cnt = 0;
                for (const auto& mask : bm.masks) {
                    uint64_t any = 0;
                    for (uint32_t w = 0; w < bm.W; ++w) any |= nz[w] & mask[w];
                    cnt += any != 0;
                }
                if (cnt > 0 && cnt < best) best = cnt;
            });
            mins[i] = best;
        });
    }
    for (auto& t : threads) t.join();
    uint32_t best = UINT32_MAX;
    for (uint32_t m : mins) best = std::min(best, m);
    return best;
}

}  // namespace enumdetail

/// Exact minimum distance, full weight histogram and the maximum nonzero
/// codeword weight, by enumerating all q^k codewords.
struct WeightReport {
    uint32_t d = 0;
    uint32_t omega = 0;
    uint64_t total = 0;
    std::vector<uint64_t> histogram;  // index = weight
};

inline WeightReport weight_report(const LinearCode& c, uint64_t budget = kDefaultBudget, unsigned jobs = 0) {
    const auto total = checked_pow(c.field().order(), c.k(), budget);
    if (!total)
        throw EnumerationInfeasible("enumeration infeasible: q^k exceeds budget " + std::to_string(budget));
    const uint32_t q = c.field().order();
    std::vector<uint64_t> hist;
    if (q == 2)
        hist = enumdetail::weight_histogram<enumdetail::RepGF2>(c, *total, jobs);
    else if (q == 3)
        hist = enumdetail::weight_histogram<enumdetail::RepGF3>(c, *total, jobs);
    else if (q == 4)
        hist = enumdetail::weight_histogram<enumdetail::RepGF4>(c, *total, jobs);
    else
        hist = enumdetail::weight_histogram<enumdetail::RepGeneric>(c, *total, jobs);

    WeightReport rep;
    rep.total = *total;
    rep.histogram = std::move(hist);
    if (rep.histogram[0] != 1) throw std::logic_error("weight histogram: zero word count != 1");
    for (uint32_t w = 1; w <= c.n(); ++w)
        if (rep.histogram[w]) {
            rep.d = w;
            break;
        }
    for (uint32_t w = c.n(); w >= 1; --w)
        if (rep.histogram[w]) {
            rep.omega = w;
            break;
        }
    return rep;
}

/// Minimum number of nonzero blocks over all nonzero codewords (the
/// projected distance of the block-to-symbol map).
inline uint32_t min_nonzero_blocks(const LinearCode& c, const std::vector<std::vector<uint32_t>>& blocks,
                                   uint64_t budget = kDefaultBudget, unsigned jobs = 0) {
    const auto total = checked_pow(c.field().order(), c.k(), budget);
    if (!total)
        throw EnumerationInfeasible("enumeration infeasible: q^k exceeds budget " + std::to_string(budget));
    const auto bm = enumdetail::make_block_masks(c.n(), blocks);
    const uint32_t q = c.field().order();
    if (q == 2) return enumdetail::min_block_weight<enumdetail::RepGF2>(c, bm, *total, jobs);
    if (q == 3) return enumdetail::min_block_weight<enumdetail::RepGF3>(c, bm, *total, jobs);
    if (q == 4) return enumdetail::min_block_weight<enumdetail::RepGF4>(c, bm, *total, jobs);
    return enumdetail::min_block_weight<enumdetail::RepGeneric>(c, bm, *total, jobs);
}

// ---------------------------------------------------------------------------
// derived codes
// ---------------------------------------------------------------------------

/// Restriction of the code to a coordinate set, reduced to a row basis.
inline LinearCode puncture_to_block(const LinearCode& c, const std::vector<uint32_t>& coords) {
    if (coords.empty()) throw std::invalid_argument("puncture onto empty coordinate set");
    const Field& f = c.field();
    const uint32_t cols = static_cast<uint32_t>(coords.size());
    std::vector<uint32_t> m(static_cast<size_t>(c.k()) * cols);
    for (uint32_t r = 0; r < c.k(); ++r)
        for (uint32_t j = 0; j < cols; ++j) {
            if (coords[j] >= c.n()) throw std::invalid_argument("puncture coordinate out of range");
            m[static_cast<size_t>(r) * cols + j] = c.at(r, coords[j]);
        }
    const auto pivots = linalg::rref(f, m, c.k(), cols);
    const uint32_t kk = static_cast<uint32_t>(pivots.size());
    if (kk == 0) throw std::invalid_argument("punctured code is the zero code");
    m.resize(static_cast<size_t>(kk) * cols);
    return LinearCode(f, cols, kk, std::move(m), "puncture(" + c.provenance() + ")");
}

/// Concatenation: outer code over GF(p^r) composed with an inner [n_i, r]
/// code over the prime field GF(p) through the polynomial-basis bijection.
inline LinearCode concatenate(const LinearCode& outer, const LinearCode& inner) {
    const Field& fo = outer.field();
    const Field& fi = inner.field();
    if (fi.extension_degree() != 1)
        throw std::invalid_argument("field-tower mismatch: inner code must live over a prime field");
    if (fo.characteristic() != fi.characteristic() || fo.extension_degree() != inner.k())
        throw std::invalid_argument(
            "field-tower mismatch: inner dimension must equal the outer field's extension degree");
    const uint32_t p = fi.order();
    const uint32_t r = inner.k();
    const uint32_t n = outer.n() * inner.n();
    const uint32_t k = outer.k() * r;
    std::vector<uint32_t> g(static_cast<size_t>(k) * n, 0);
    std::vector<uint32_t> digits(r);
    uint32_t row_index = 0;
    for (uint32_t j = 0; j < outer.k(); ++j) {
        for (uint32_t b = 0; b < r; ++b, ++row_index) {
            uint32_t beta = 1;
            for (uint32_t t = 0; t < b; ++t) beta *= p;  // polynomial-basis element X^b
            for (uint32_t col = 0; col < outer.n(); ++col) {
                const uint32_t sym = fo.mul(beta, outer.at(j, col));
                uint32_t rem = sym;
                for (uint32_t t = 0; t < r; ++t, rem /= p) digits[t] = rem % p;
                const auto block = encode(inner, digits);
                for (uint32_t t = 0; t < inner.n(); ++t)
                    g[static_cast<size_t>(row_index) * n + col * inner.n() + t] = block[t];
            }
        }
    }
    return LinearCode(fi, n, k,
                      std::move(g), "concat(" + outer.provenance() + "," + inner.provenance() + ")");
}

/// The [ (q^m'-1)/(q-1), n - m', 3 ] Hamming code over GF(q): parity-check
/// columns are one representative per projective point, the representative
/// normalized so its lowest-index nonzero coordinate is 1, listed ascending.
inline LinearCode hamming_code(const Field& f, uint32_t mprime) {
    if (mprime < 2) throw std::invalid_argument("hamming redundancy must be >= 2");
    const uint32_t q = f.order();
    const auto space = checked_pow(q, mprime, 1u << 24);
    if (!space) throw std::invalid_argument("hamming code too large");
    std::vector<std::vector<uint32_t>> cols;
    for (uint64_t v = 1; v < *space; ++v) {
        std::vector<uint32_t> col(mprime);
        uint64_t rem = v;
        for (uint32_t i = 0; i < mprime; ++i, rem /= q) col[i] = static_cast<uint32_t>(rem % q);
        uint32_t first = 0;
        while (col[first] == 0) ++first;
        if (col[first] != 1) continue;
        cols.push_back(std::move(col));
    }
    const uint32_t n = static_cast<uint32_t>(cols.size());
    const uint32_t k = n - mprime;
    std::vector<uint32_t> h(static_cast<size_t>(mprime) * n);
    for (uint32_t r = 0; r < mprime; ++r)
        for (uint32_t c = 0; c < n; ++c) h[static_cast<size_t>(r) * n + c] = cols[c][r];
    // generator = reduced null-space basis of H
    const auto pivots = linalg::rref(f, h, mprime, n);
    std::vector<char> is_pivot(n, 0);
    for (uint32_t p : pivots) is_pivot[p] = 1;
    std::vector<uint32_t> g(static_cast<size_t>(k) * n, 0);
    uint32_t row = 0;
    for (uint32_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        g[static_cast<size_t>(row) * n + c] = 1;
        for (uint32_t r = 0; r < pivots.size(); ++r)
            g[static_cast<size_t>(row) * n + pivots[r]] = f.neg(h[static_cast<size_t>(r) * n + c]);
        ++row;
    }
    return LinearCode(f, n, k, std::move(g),
                      "hamming(q=" + std::to_string(q) + ",m'=" + std::to_string(mprime) + ")");
}

}  // namespace lrc
