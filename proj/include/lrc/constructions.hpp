#pragma once

/// Parameterized factories for the locally repairable code families handled
/// by this library, each returning the realized code together with its
/// locality code, block layout and predicted parameters for verification.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/cyclic.hpp"
#include "lrc/linear.hpp"
#include "lrc/locality.hpp"

namespace lrc {

struct Predicted {
    uint32_t k = 0;
    uint32_t d_lb = 0;   // claimed lower bound on the distance
    uint32_t r = 0;      // claimed locality
    uint32_t delta = 0;  // claimed per-block erasure tolerance
    uint32_t t = 0;      // claimed availability (lower bound)
};

enum class BlockLayout { strided, contiguous };

inline const char* to_string(BlockLayout l) { return l == BlockLayout::strided ? "strided" : "contiguous"; }

struct ConstructionResult {
    std::string name;
    std::map<std::string, int64_t> params;
    LinearCode code;
    LinearCode locality_code;
    std::optional<CyclicCode> cyclic;
    std::optional<CyclicCode> locality_cyclic;
    BlockLayout layout = BlockLayout::strided;
    uint32_t block_perm = 1;  // in-block coordinate multiplier (strided layout)
    Predicted predicted;
    bool extra_residues_autoclosed = false;

    ConstructionResult(LinearCode c, LinearCode l) : code(std::move(c)), locality_code(std::move(l)) {}

    std::vector<std::vector<uint32_t>> blocks() const {
        return layout == BlockLayout::strided
                   ? strided_blocks(code.n(), locality_code.n(), block_perm)
                   : contiguous_blocks(code.n(), locality_code.n());
    }
};

/// The in-block coordinate order that aligns the strided blocks of the big
/// cyclic code with the locality code: the smallest unit u mod n_l such
/// that restricting every generator row to positions
/// {c + (n/n_l)(u t mod n_l)} yields codewords of L.  Such a u exists
/// because the restriction to a residue-class block is the length-n_l
/// cyclic code with defining set D_L taken at the root alpha^{n/n_l}, which
/// is L up to a decimation of the coordinate index.
inline uint32_t block_root_multiplier(const CyclicCode& big, const CyclicCode& l) {
    const uint32_t n_l = l.n();
    if (n_l == 1) return 1;
    LinearCode biglin(big.field(), big.n(), big.k(), big.generator_matrix());
    LinearCode llin(l.field(), n_l, l.k(), l.generator_matrix());
    std::vector<const uint32_t*> lrows(llin.k());
    for (uint32_t r = 0; r < llin.k(); ++r) lrows[r] = llin.row(r);
    std::vector<uint32_t> word(n_l);
    for (uint32_t u = 1; u < n_l; ++u) {
        if (std::gcd(u, n_l) != 1u) continue;
        const auto blocks = strided_blocks(big.n(), n_l, u);
        bool ok = true;
        for (const auto& block : blocks) {
            for (uint32_t r = 0; r < biglin.k() && ok; ++r) {
                for (uint32_t t = 0; t < n_l; ++t) word[t] = biglin.at(r, block[t]);
                if (!linalg::in_span(llin.field(), lrows, word.data(), n_l)) ok = false;
            }
            if (!ok) break;
        }
        if (ok) return u;
    }
    throw std::logic_error("no block coordinate order embeds the locality code");
}

namespace consdetail {

inline void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

inline void invariant(bool cond, const std::string& what) {
    if (!cond) throw std::logic_error("construction invariant violated: " + what);
}

inline uint64_t ipow(uint64_t b, uint32_t e) {
    uint64_t v = 1;
    while (e--) v *= b;
    return v;
}

// {i in [0, n) : i mod n_l in D_L}
inline std::vector<int64_t> replicate_defset(const DefiningSet& dl, uint32_t n) {
    std::vector<int64_t> out;
    out.reserve(static_cast<size_t>(n) / dl.n * dl.residues.size());
    for (uint32_t i = 0; i < n; ++i)
        if (dl.contains(i % dl.n)) out.push_back(i);
    return out;
}

// Predicted locality parameters read off the locality code itself.
inline void fill_from_locality_code(Predicted& p, const LinearCode& l, uint64_t budget = kDefaultBudget) {
    const auto wl = weight_report(l, budget);
    p.delta = wl.d;
    const uint32_t rmax = std::min<uint32_t>(l.k(), 5);
    const auto prof = locality_availability_profile(l, rmax);
    if (prof.all_confirmed) {
        p.r = prof.r;
        p.t = prof.t;
    } else {
        p.r = l.k();
        p.t = 1;
    }
}

}  // namespace consdetail

/// Block-replicated cyclic code: defining set {i : i mod n_l in D_L} plus
/// optional extra residues (closed up if needed).  With no extra residues
/// the result is the full product with the trivial code: k = n k_l / n_l and
/// d = d_l, which meets the generalized Singleton bound with equality.
inline ConstructionResult product_lrc(const CyclicCode& l, uint32_t n, const std::vector<int64_t>& extra = {}) {
    using namespace consdetail;
    const uint32_t n_l = l.n();
    const uint32_t q = l.field().order();
    require(n_l != 0 && n % n_l == 0, "locality-code length must divide n");
    require(std::gcd<uint64_t>(n, q) == 1, "gcd(n, q) must be 1");

    auto resid = replicate_defset(l.defining_set(), n);
    bool autoclosed = false;
    if (!extra.empty()) {
        const auto norm = normalize_defset(n, q, extra);
        autoclosed = !norm.was_closed;
        for (uint32_t r : norm.ds.residues) resid.push_back(r);
    }
    const auto ds = normalize_defset(n, q, resid).ds;
    CyclicCode big(l.field(), ds);
    LinearCode code(l.field(), n, big.k(), big.generator_matrix(), "product");

    ConstructionResult res(std::move(code), LinearCode(l.field(), n_l, l.k(), l.generator_matrix(), "locality"));
    res.name = "product";
    res.params = {{"n", n}, {"n_l", n_l}, {"q", q}, {"extra", static_cast<int64_t>(extra.size())}};
    res.cyclic = std::move(big);
    res.locality_cyclic = l;
    res.layout = BlockLayout::strided;
    res.block_perm = block_root_multiplier(*res.cyclic, *res.locality_cyclic);
    res.extra_residues_autoclosed = autoclosed;
    consdetail::fill_from_locality_code(res.predicted, res.locality_code);
    res.predicted.k = extra.empty() ? n / n_l * l.k() : res.cyclic->k();
    res.predicted.d_lb = std::max(bch_bound(ds), res.predicted.delta);
    invariant(res.cyclic->k() == res.predicted.k, "dimension formula");
    return res;
}

/// Binary 2-local cyclic codes of length n = 2^m + 1 (m odd): defining set
/// = multiples of three together with the reversible coset of 1; dimension
/// (2/3)(2^m+1) - 2m, distance at least 10 by the BCH run -4..4.
inline ConstructionResult reversible_binary(uint32_t m) {
    using namespace consdetail;
    require(m % 2 == 1, "m must be odd (3 divides 2^m+1)");
    require(m >= 3, "m too small");
    const Field& f2 = Field::get(2, 1);
    const uint32_t n = static_cast<uint32_t>(ipow(2, m) + 1);

    std::vector<int64_t> resid;
    for (uint32_t i = 0; i < n; i += 3) resid.push_back(i);
    for (uint32_t c : cyclotomic_coset(1, n, 2)) resid.push_back(c);
    const auto norm = normalize_defset(n, 2, resid);
    invariant(norm.was_closed, "defining set closed under doubling");
    const uint32_t k_formula_num = 2 * n;  // (2/3) n - 2m, n divisible by 3
    invariant(k_formula_num % 3 == 0, "3 | n");
    const int64_t k_formula = static_cast<int64_t>(k_formula_num / 3) - 2 * static_cast<int64_t>(m);
    require(k_formula > 0, "degenerate parameters: dimension would be zero");

    CyclicCode big(f2, norm.ds);
    invariant(big.k() == static_cast<uint32_t>(k_formula), "k = (2/3)(2^m+1) - 2m");

    CyclicCode spc(f2, DefiningSet{3, 2, {0}});
    ConstructionResult res(LinearCode(f2, n, big.k(), big.generator_matrix(), "reversible"),
                           LinearCode(f2, 3, 2, spc.generator_matrix(), "spc3"));
    res.name = "reversible";
    res.params = {{"m", m}, {"n", n}};
    res.cyclic = std::move(big);
    res.locality_cyclic = std::move(spc);
    res.layout = BlockLayout::strided;
    res.block_perm = block_root_multiplier(*res.cyclic, *res.locality_cyclic);
    res.predicted = Predicted{static_cast<uint32_t>(k_formula), 10, 2, 2, 1};
    return res;
}

/// Binary cyclic codes of length 2^m - 1 whose locality comes from the
/// [2^a-1, a, 2^{a-1}] cyclic Simplex code; availability 2^{a-1}-1.
/// Defining set = block-replicated complement of C_1^(2^a-1) plus C_1^(n);
/// the BCH run -(2^{a-1}-2) .. 2^a gives d >= 2^a + 2^{a-1}.
inline ConstructionResult simplex_lrc(uint32_t a, uint32_t m) {
    using namespace consdetail;
    require(a >= 2, "a must be at least 2");
    require(m % a == 0 && m > a, "a must divide m, m > a");
    const Field& f2 = Field::get(2, 1);
    const uint32_t n = static_cast<uint32_t>(ipow(2, m) - 1);
    const uint32_t n_l = static_cast<uint32_t>(ipow(2, a) - 1);

    const auto c1l = cyclotomic_coset(1, n_l, 2);
    std::vector<int64_t> dl;
    for (uint32_t i = 0; i < n_l; ++i)
        if (!std::binary_search(c1l.begin(), c1l.end(), i)) dl.push_back(i);
    const auto dlnorm = normalize_defset(n_l, 2, dl);
    invariant(dlnorm.was_closed, "Simplex defining set closed");
    CyclicCode simplex(f2, dlnorm.ds);
    invariant(simplex.k() == a, "Simplex dimension a");

    auto resid = replicate_defset(dlnorm.ds, n);
    for (uint32_t c : cyclotomic_coset(1, n, 2)) resid.push_back(c);
    const auto norm = normalize_defset(n, 2, resid);
    invariant(norm.was_closed, "defining set closed under doubling");
    CyclicCode big(f2, norm.ds);
    const int64_t k_formula = static_cast<int64_t>(a) * n / n_l - m;
    require(k_formula > 0, "degenerate parameters: dimension would be zero");
    invariant(big.k() == static_cast<uint32_t>(k_formula), "k = a n/(2^a-1) - m");

    ConstructionResult res(LinearCode(f2, n, big.k(), big.generator_matrix(), "simplex_lrc"),
                           LinearCode(f2, n_l, a, simplex.generator_matrix(), "simplex"));
    res.name = "simplex";
    res.params = {{"a", a}, {"m", m}, {"n", n}};
    res.cyclic = std::move(big);
    res.locality_cyclic = std::move(simplex);
    res.layout = BlockLayout::strided;
    res.block_perm = block_root_multiplier(*res.cyclic, *res.locality_cyclic);
    res.predicted = Predicted{static_cast<uint32_t>(k_formula),
                              static_cast<uint32_t>(ipow(2, a) + ipow(2, a - 1)), 2, 2,
                              static_cast<uint32_t>(ipow(2, a - 1) - 1)};
    return res;
}

/// q-ary cyclic codes (q > 2, prime powers included) of length q^m - 1 whose
/// locality code is the [q^2-1, 2, q^2-q] cyclic shortened first-order
/// Reed-Muller code with dual defining set {1, q}.  BCH run
/// -(q^2-q-2) .. (q^2+q-2) gives d >= 2q^2 - 2; blocks carry
/// (r = 2, delta = q^2-q) protection.
inline ConstructionResult rm_qary(uint32_t q, uint32_t m) {
    using namespace consdetail;
    require(q > 2, "q must exceed 2");
    require(m % 2 == 0 && m > 2, "m must be even and greater than 2");
    // factor q as a prime power
    uint32_t p = 0;
    for (uint32_t d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    uint32_t e = 0;
    {
        uint32_t v = q;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        require(v == 1, "q must be a prime power");
    }
    const Field& base = Field::get(p, e);

    const uint64_t nbig = ipow(q, m) - 1;
    require(nbig <= 0xFFFF, "length exceeds supported range");
    const uint32_t n = static_cast<uint32_t>(nbig);
    const uint32_t n_l = q * q - 1;
    invariant(n % n_l == 0, "(q^2-1) | (q^m-1) for even m");

    std::vector<int64_t> dl;
    for (uint32_t i = 0; i < n_l; ++i)
        if (i != 1 && i != q) dl.push_back(i);
    const auto dlnorm = normalize_defset(n_l, q, dl);
    invariant(dlnorm.was_closed, "RM defining set closed");
    CyclicCode rm(base, dlnorm.ds);
    invariant(rm.k() == 2, "RM locality-code dimension 2");

    auto resid = replicate_defset(dlnorm.ds, n);
    for (uint32_t c : cyclotomic_coset(1, n, q)) resid.push_back(c);
    const auto norm = normalize_defset(n, q, resid);
    invariant(norm.was_closed, "defining set closed under multiplication by q");
    CyclicCode big(base, norm.ds);
    const int64_t k_formula = 2 * static_cast<int64_t>(n) / n_l - m;
    require(k_formula > 0, "degenerate parameters: dimension would be zero");
    invariant(big.k() == static_cast<uint32_t>(k_formula), "k = 2n/(q^2-1) - m");

    ConstructionResult res(LinearCode(base, n, big.k(), big.generator_matrix(), "rm_lrc"),
                           LinearCode(base, n_l, 2, rm.generator_matrix(), "rm"));
    res.name = "rm";
    res.params = {{"q", q}, {"m", m}, {"n", n}};
    res.cyclic = std::move(big);
    res.locality_cyclic = std::move(rm);
    res.layout = BlockLayout::strided;
    res.block_perm = block_root_multiplier(*res.cyclic, *res.locality_cyclic);
    res.predicted = Predicted{static_cast<uint32_t>(k_formula), 2 * q * q - 2, 2, q * q - q, 1};
    return res;
}

/// Concatenated r-local binary codes: outer [2^r+1, 2^r-1, 3] Hamming code
/// over GF(2^r), inner [r+1, r, 2] single-parity-check code, giving a
/// [(2^r+1)(r+1), (2^r-1) r, >=6] r-local linear code.
inline ConstructionResult concatenated_rlocal(uint32_t r) {
    using namespace consdetail;
    require(r >= 2 && r <= 8, "r must lie in [2, 8]");
    const Field& f2 = Field::get(2, 1);
    const Field& fext = Field::get(2, r);
    LinearCode outer = hamming_code(fext, 2);
    invariant(outer.n() == ipow(2, r) + 1 && outer.k() == ipow(2, r) - 1, "Hamming outer parameters");

    // [r+1, r, 2] single parity check: identity block plus an all-ones column
    std::vector<uint32_t> g(static_cast<size_t>(r) * (r + 1), 0);
    for (uint32_t i = 0; i < r; ++i) {
        g[static_cast<size_t>(i) * (r + 1) + i] = 1;
        g[static_cast<size_t>(i) * (r + 1) + r] = 1;
    }
    LinearCode inner(f2, r + 1, r, std::move(g), "spc");

    LinearCode code = concatenate(outer, inner);
    ConstructionResult res(std::move(code), std::move(inner));
    res.name = "concat";
    res.params = {{"r", r}, {"n", static_cast<int64_t>((ipow(2, r) + 1) * (r + 1))}};
    res.layout = BlockLayout::contiguous;
    res.predicted = Predicted{static_cast<uint32_t>((ipow(2, r) - 1) * r), 6, r, 2, 1};
    invariant(res.code.k() == res.predicted.k, "k = (2^r-1) r");
    return res;
}

}  // namespace lrc
