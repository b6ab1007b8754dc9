#pragma once

/// First-principles verification of (r, delta)-locality, availability,
/// local erasure repair, and the projection onto an additive code over
/// GF(q^{k_l}).
///
/// Locality is decided without enumerating the dual code: a weight-(r+1)
/// parity check through coordinate i with support S exists iff column g_i of
/// the generator matrix lies in the span of the columns indexed by S \ {i}.
/// The search cost is O(n^r) per coordinate, exact and feasible for r <= 5.
///
/// Block decompositions are explicit coordinate lists.  The cyclic
/// block-replicated codes place the locality code along the residue classes
/// {c + t*(n/n_l)}; concatenated codes use contiguous runs.

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "lrc/linear.hpp"

namespace lrc {

/// A parity check through one coordinate: support plus the dual-vector
/// coefficients on it (normalized to 1 at the anchored coordinate).
struct LocalCheck {
    std::vector<uint32_t> support;  // sorted, includes the anchor
    std::vector<uint32_t> coeffs;   // parallel to support, all nonzero
};

/// All minimal supports S with i in S, |S| <= rmax+1, carrying a dual
/// codeword with nonzero coefficient at i.
inline std::vector<LocalCheck> local_checks_at(const LinearCode& c, uint32_t i, uint32_t rmax) {
    if (rmax + 1 > 6) throw std::invalid_argument("rmax exceeds the combinatorial search cap (r+1 <= 6)");
    if (i >= c.n()) throw std::invalid_argument("coordinate out of range");
    const Field& f = c.field();
    const uint32_t n = c.n(), k = c.k();

    std::vector<std::vector<uint32_t>> cols(n);
    for (uint32_t j = 0; j < n; ++j) cols[j] = c.column(j);

    std::vector<LocalCheck> found;

    auto verify_and_push = [&](const std::vector<uint32_t>& others, const std::vector<uint32_t>& lambda) {
        LocalCheck chk;
        chk.support.reserve(others.size() + 1);
        chk.coeffs.reserve(others.size() + 1);
        for (size_t t = 0; t < others.size(); ++t) {
            chk.support.push_back(others[t]);
            chk.coeffs.push_back(f.neg(lambda[t]));
        }
        chk.support.push_back(i);
        chk.coeffs.push_back(1);
        // sort by support index
        std::vector<size_t> order(chk.support.size());
        for (size_t t = 0; t < order.size(); ++t) order[t] = t;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return chk.support[a] < chk.support[b]; });
        LocalCheck sorted;
        for (size_t t : order) {
            sorted.support.push_back(chk.support[t]);
            sorted.coeffs.push_back(chk.coeffs[t]);
        }
        // the dual vector must annihilate every generator row, and a zero
        // coefficient would mean a smaller support that the minimality
        // pruning should have caught first
        for (uint32_t co : sorted.coeffs)
            if (co == 0) throw std::logic_error("dual vector support is not minimal");
        for (uint32_t r = 0; r < k; ++r) {
            uint32_t acc = 0;
            for (size_t t = 0; t < sorted.support.size(); ++t)
                acc = f.add(acc, f.mul(sorted.coeffs[t], c.at(r, sorted.support[t])));
            if (acc != 0) throw std::logic_error("recovered dual vector fails to annihilate the code");
        }
        found.push_back(std::move(sorted));
    };

    // zero column: the coordinate is identically zero, weight-1 check
    bool zero_col = true;
    for (uint32_t r = 0; r < k; ++r)
        if (cols[i][r]) {
            zero_col = false;
            break;
        }
    if (zero_col) {
        found.push_back(LocalCheck{{i}, {1}});
        return found;
    }

    // packed GF(2) fast path: columns as k-bit words, dependency by a tiny
    // elimination basis with combination masks for coefficient recovery
    const bool packed = f.order() == 2 && k <= 64;
    std::vector<uint64_t> colbits;
    if (packed) {
        colbits.assign(n, 0);
        for (uint32_t j = 0; j < n; ++j)
            for (uint32_t r = 0; r < k; ++r)
                if (cols[j][r]) colbits[j] |= 1ull << r;
    }

    std::vector<std::vector<uint32_t>> recorded;  // supports minus the anchor
    std::vector<const uint32_t*> vecs;
    for (uint32_t len = 1; len <= rmax && len <= n - 1; ++len) {
        // combination positions over [0, n) \ {i}
        std::vector<uint32_t> pool;
        pool.reserve(n - 1);
        for (uint32_t j = 0; j < n; ++j)
            if (j != i) pool.push_back(j);
        std::vector<uint32_t> comb(len);
        for (uint32_t t = 0; t < len; ++t) comb[t] = t;
        std::vector<uint32_t> others(len);
        while (true) {
            for (uint32_t t = 0; t < len; ++t) others[t] = pool[comb[t]];
            bool dominated = false;
            for (const auto& rec : recorded) {
                if (rec.size() >= others.size()) continue;
                bool subset = true;
                for (uint32_t v : rec)
                    if (!std::binary_search(others.begin(), others.end(), v)) {
                        subset = false;
                        break;
                    }
                if (subset) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) {
                if (packed) {
                    uint64_t basis[6], combo[6];
                    uint32_t nb = 0;
                    for (uint32_t t = 0; t < len; ++t) {
                        uint64_t v = colbits[others[t]], cm = 1ull << t;
                        for (uint32_t b = 0; b < nb; ++b) {
                            const uint64_t pivot = basis[b] & (~basis[b] + 1);
                            if (v & pivot) {
                                v ^= basis[b];
                                cm ^= combo[b];
                            }
                        }
                        if (v) {
                            basis[nb] = v;
                            combo[nb] = cm;
                            ++nb;
                        }
                    }
                    uint64_t v = colbits[i], cm = 0;
                    for (uint32_t b = 0; b < nb; ++b) {
                        const uint64_t pivot = basis[b] & (~basis[b] + 1);
                        if (v & pivot) {
                            v ^= basis[b];
                            cm ^= combo[b];
                        }
                    }
                    if (v == 0) {
                        recorded.push_back(others);
                        std::vector<uint32_t> lambda(len, 0);
                        for (uint32_t t = 0; t < len; ++t)
                            if (cm & (1ull << t)) lambda[t] = 1;
                        verify_and_push(others, lambda);
                    }
                } else {
                    vecs.clear();
                    for (uint32_t v : others) vecs.push_back(cols[v].data());
                    const auto lambda = linalg::in_span(f, vecs, cols[i].data(), k);
                    if (lambda) {
                        recorded.push_back(others);
                        verify_and_push(others, *lambda);
                    }
                }
            }
            // next combination
            int t = static_cast<int>(len) - 1;
            while (t >= 0 && comb[t] == pool.size() - len + t) --t;
            if (t < 0) break;
            ++comb[t];
            for (uint32_t u = t + 1; u < len; ++u) comb[u] = comb[u - 1] + 1;
        }
    }
    return found;
}

namespace localdetail {

inline bool intersect_only_anchor(const LocalCheck& a, const LocalCheck& b, uint32_t anchor) {
    size_t x = 0, y = 0;
    while (x < a.support.size() && y < b.support.size()) {
        if (a.support[x] == b.support[y]) {
            if (a.support[x] != anchor) return false;
            ++x;
            ++y;
        } else if (a.support[x] < b.support[y]) {
            ++x;
        } else {
            ++y;
        }
    }
    return true;
}

inline uint32_t max_clique(const std::vector<uint64_t>& adj) {
    const uint32_t n = static_cast<uint32_t>(adj.size());
    uint32_t best = 0;
    std::function<void(uint64_t, uint32_t)> extend = [&](uint64_t cand, uint32_t size) {
        if (size + static_cast<uint32_t>(std::popcount(cand)) <= best) return;
        if (!cand) {
            best = std::max(best, size);
            return;
        }
        while (cand) {
            if (size + static_cast<uint32_t>(std::popcount(cand)) <= best) return;
            const uint32_t v = static_cast<uint32_t>(std::countr_zero(cand));
            cand &= cand - 1;
            extend(cand & adj[v], size + 1);
        }
    };
    extend((n >= 64 ? ~0ull : (1ull << n) - 1), 0);
    return best;
}

}  // namespace localdetail

/// Largest family of checks through the anchor that pairwise intersect in
/// (and only in) the anchor.
inline uint32_t max_pairwise_family(const std::vector<LocalCheck>& checks, uint32_t anchor) {
    if (checks.size() > 64) throw std::invalid_argument("availability search supports at most 64 candidate checks");
    std::vector<uint64_t> adj(checks.size(), 0);
    for (size_t a = 0; a < checks.size(); ++a)
        for (size_t b = a + 1; b < checks.size(); ++b)
            if (localdetail::intersect_only_anchor(checks[a], checks[b], anchor)) {
                adj[a] |= 1ull << b;
                adj[b] |= 1ull << a;
            }
    return localdetail::max_clique(adj);
}

struct CoordinateLocality {
    uint32_t index = 0;
    std::optional<uint32_t> r_i;  // min support size - 1; empty = refuted at rmax
    uint32_t t_i = 0;
    std::vector<LocalCheck> checks;
};

struct LocalityProfile {
    uint32_t rmax = 0;
    bool all_confirmed = false;
    uint32_t r = 0;  // max r_i over coordinates (valid when all_confirmed)
    uint32_t t = 0;  // min t_i
    std::vector<CoordinateLocality> coords;
};

/// Per-coordinate locality r_i and availability t_i with search radius r.
/// Coordinates are independent, so the search fans out across threads; the
/// result does not depend on the worker count.
inline LocalityProfile locality_availability_profile(const LinearCode& c, uint32_t r, unsigned jobs = 0) {
    LocalityProfile prof;
    prof.rmax = r;
    prof.coords.assign(c.n(), CoordinateLocality{});

    unsigned workers = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, c.n());
    std::atomic<uint32_t> next{0};
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
            for (uint32_t i = next.fetch_add(1); i < c.n(); i = next.fetch_add(1)) {
                CoordinateLocality cl;
                cl.index = i;
                cl.checks = local_checks_at(c, i, r);
                if (cl.checks.empty()) {
                    cl.t_i = 0;
                } else {
                    uint32_t mins = UINT32_MAX;
                    for (const auto& chk : cl.checks)
                        mins = std::min<uint32_t>(mins, static_cast<uint32_t>(chk.support.size()));
                    cl.r_i = mins - 1;
                    cl.t_i = max_pairwise_family(cl.checks, i);
                }
                prof.coords[i] = std::move(cl);
            }
        });
    }
    for (auto& t : threads) t.join();

    prof.all_confirmed = true;
    uint32_t rworst = 0, tbest = UINT32_MAX;
    for (const auto& cl : prof.coords) {
        if (!cl.r_i) {
            prof.all_confirmed = false;
        } else {
            rworst = std::max(rworst, *cl.r_i);
        }
        tbest = std::min(tbest, cl.t_i);
    }
    prof.r = prof.all_confirmed ? rworst : 0;
    prof.t = (tbest == UINT32_MAX) ? 0 : tbest;
    return prof;
}

// ---------------------------------------------------------------------------
// block structure
// ---------------------------------------------------------------------------

/// Residue-class blocks {c + (perm t mod n_l)*(n/n_l) : t in [0, n_l)} for
/// c in [0, n/n_l).  This is the decomposition along which block-replicated
/// cyclic codes carry their locality code; perm aligns the in-block
/// coordinate order with the locality code's root of unity.
inline std::vector<std::vector<uint32_t>> strided_blocks(uint32_t n, uint32_t n_l, uint32_t perm = 1) {
    if (n_l == 0 || n % n_l != 0) throw std::invalid_argument("block length must divide n");
    if (std::gcd(perm, n_l) != 1u) throw std::invalid_argument("block permutation must be a unit mod n_l");
    const uint32_t stride = n / n_l;
    std::vector<std::vector<uint32_t>> blocks(stride);
    for (uint32_t c = 0; c < stride; ++c) {
        blocks[c].reserve(n_l);
        for (uint32_t t = 0; t < n_l; ++t)
            blocks[c].push_back(c + static_cast<uint32_t>((static_cast<uint64_t>(perm) * t) % n_l) * stride);
    }
    return blocks;
}

/// Contiguous runs of n_l coordinates (concatenated-code layout).
inline std::vector<std::vector<uint32_t>> contiguous_blocks(uint32_t n, uint32_t n_l) {
    if (n_l == 0 || n % n_l != 0) throw std::invalid_argument("block length must divide n");
    std::vector<std::vector<uint32_t>> blocks(n / n_l);
    for (uint32_t b = 0; b < blocks.size(); ++b) {
        blocks[b].reserve(n_l);
        for (uint32_t t = 0; t < n_l; ++t) blocks[b].push_back(b * n_l + t);
    }
    return blocks;
}

struct BlockCertificate {
    uint32_t index = 0;
    std::vector<uint32_t> support;
    uint32_t dim = 0;
    uint32_t distance = 0;  // UINT32_MAX when the block restriction is the zero code
    bool inside_locality_code = false;
};

struct StructuralReport {
    bool verified = false;
    uint32_t r = 0;      // locality-code dimension
    uint32_t delta = 0;  // locality-code distance
    bool meets_length_bound = false;  // n_l <= r + delta - 1
    std::vector<BlockCertificate> blocks;
};

/// Verify that every block's punctured code is a subcode of L with distance
/// at least delta = d(L).  The certificate records per-block dimension and
/// exact distance; meets_length_bound reports whether the block length also
/// satisfies the bound n_l <= r + delta - 1 (true for MDS locality codes).
inline StructuralReport structural_rdelta_verify(const LinearCode& c, const LinearCode& l,
                                                 const std::vector<std::vector<uint32_t>>& blocks) {
    // the locality code and the per-block restrictions have at most q^{k_l}
    // words, so their enumerations run under a fixed internal budget
    constexpr uint64_t kSmall = 1u << 16;
    StructuralReport rep;
    const auto wl = weight_report(l, kSmall);
    rep.r = l.k();
    rep.delta = wl.d;
    rep.meets_length_bound = l.n() <= rep.r + rep.delta - 1;
    rep.verified = true;
    std::vector<const uint32_t*> lrows(l.k());
    for (uint32_t r = 0; r < l.k(); ++r) lrows[r] = l.row(r);
    for (uint32_t b = 0; b < blocks.size(); ++b) {
        const auto& support = blocks[b];
        if (support.size() != l.n()) throw std::invalid_argument("block size differs from locality-code length");
        BlockCertificate cert;
        cert.index = b;
        cert.support = support;
        // restricted generator rows must be codewords of L
        cert.inside_locality_code = true;
        std::vector<uint32_t> word(l.n());
        for (uint32_t r = 0; r < c.k(); ++r) {
            for (uint32_t t = 0; t < l.n(); ++t) word[t] = c.at(r, support[t]);
            if (!linalg::in_span(c.field(), lrows, word.data(), l.n())) {
                cert.inside_locality_code = false;
                break;
            }
        }
        // dimension and exact distance of the block restriction
        std::vector<uint32_t> m(static_cast<size_t>(c.k()) * l.n());
        for (uint32_t r = 0; r < c.k(); ++r)
            for (uint32_t t = 0; t < l.n(); ++t) m[static_cast<size_t>(r) * l.n() + t] = c.at(r, support[t]);
        cert.dim = linalg::rank(c.field(), m, c.k(), l.n());
        if (cert.dim == 0) {
            cert.distance = UINT32_MAX;
        } else {
            const auto sub = puncture_to_block(c, support);
            cert.distance = weight_report(sub, kSmall).d;
        }
        if (!cert.inside_locality_code || cert.distance < rep.delta) rep.verified = false;
        rep.blocks.push_back(std::move(cert));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// additive projection
// ---------------------------------------------------------------------------

struct AdditiveProjection {
    uint32_t n_l = 0;
    uint32_t k_l = 0;
    uint32_t n_prime = 0;
    uint64_t alphabet = 0;  // q^{k_l}
    uint32_t omega = 0;     // max weight of a locality codeword
    std::vector<uint32_t> info_set;  // lexicographically first information set of L
    std::optional<uint32_t> k_prime;  // k/k_l when integral
    uint32_t d_prime_lower = 0;       // ceil(d_ref / omega); 0 when no reference distance
    std::optional<uint32_t> d_prime;  // exact projected distance, when enumerated
    bool bound_only = false;
};

/// Lexicographically first information set (pivot columns of the rref).
inline std::vector<uint32_t> first_information_set(const LinearCode& c) {
    std::vector<uint32_t> m = c.matrix();
    return linalg::rref(c.field(), m, c.k(), c.n());
}

/// Project a word block-by-block to the information symbols of L, encoded as
/// an index in [0, q^{k_l}).
inline std::vector<uint64_t> project_word(const std::vector<uint32_t>& word, const LinearCode& l,
                                          const std::vector<std::vector<uint32_t>>& blocks,
                                          const std::vector<uint32_t>& info_set) {
    const uint32_t q = l.field().order();
    std::vector<uint64_t> out;
    out.reserve(blocks.size());
    for (const auto& b : blocks) {
        uint64_t sym = 0, scale = 1;
        for (uint32_t pos : info_set) {
            sym += static_cast<uint64_t>(word.at(b.at(pos))) * scale;
            scale *= q;
        }
        out.push_back(sym);
    }
    return out;
}

/// Map each block to one symbol over GF(q^{k_l}) and measure the projected
/// distance exactly (within budget) or report the ceil(d/omega) bound only.
/// A block is nonzero iff its projected symbol is nonzero, because the block
/// word lies in L and is determined by the information set.
inline AdditiveProjection project_additive(const LinearCode& c, const LinearCode& l,
                                           const std::vector<std::vector<uint32_t>>& blocks,
                                           uint64_t budget = kDefaultBudget, unsigned jobs = 0,
                                           std::optional<uint32_t> d_reference = std::nullopt) {
    AdditiveProjection proj;
    proj.n_l = l.n();
    proj.k_l = l.k();
    proj.n_prime = static_cast<uint32_t>(blocks.size());
    if (static_cast<uint64_t>(proj.n_prime) * proj.n_l != c.n())
        throw std::invalid_argument("blocks do not partition the code length");

    // blocks must restrict into L
    std::vector<const uint32_t*> lrows(l.k());
    for (uint32_t r = 0; r < l.k(); ++r) lrows[r] = l.row(r);
    std::vector<uint32_t> word(l.n());
    for (const auto& b : blocks) {
        if (b.size() != l.n()) throw std::invalid_argument("block size differs from locality-code length");
        for (uint32_t r = 0; r < c.k(); ++r) {
            for (uint32_t t = 0; t < l.n(); ++t) word[t] = c.at(r, b[t]);
            if (!linalg::in_span(c.field(), lrows, word.data(), l.n()))
                throw std::invalid_argument("blocks not inside the locality code");
        }
    }

    const auto wl = weight_report(l, 1u << 16);
    proj.omega = wl.omega;
    proj.info_set = first_information_set(l);
    const auto alphabet = checked_pow(c.field().order(), l.k(), UINT64_MAX / 2);
    proj.alphabet = alphabet ? *alphabet : 0;
    if (c.k() % l.k() == 0) proj.k_prime = c.k() / l.k();
    if (d_reference) proj.d_prime_lower = (*d_reference + proj.omega - 1) / proj.omega;

    try {
        proj.d_prime = min_nonzero_blocks(c, blocks, budget, jobs);
        proj.bound_only = false;
        if (d_reference && *proj.d_prime < proj.d_prime_lower)
            throw std::logic_error("projected distance fell below ceil(d/omega)");
    } catch (const EnumerationInfeasible&) {
        proj.bound_only = true;
    }
    return proj;
}

// ---------------------------------------------------------------------------
// local erasure repair
// ---------------------------------------------------------------------------

struct RepairOutcome {
    std::vector<uint32_t> word;
    std::vector<uint32_t> residual;                    // still-erased positions
    std::vector<std::pair<uint32_t, uint32_t>> reads;  // repaired position -> symbols read
};

/// Greedy fixpoint repair: for every erased position with a check whose
/// other symbols are intact, solve the single parity relation.  Returns the
/// residual erasure set instead of throwing on unrepairable patterns.
inline RepairOutcome local_repair(const LinearCode& c, std::vector<uint32_t> word,
                                  const std::vector<uint32_t>& erasures, const LocalityProfile& prof) {
    if (word.size() != c.n()) throw std::invalid_argument("word length != n");
    if (prof.coords.size() != c.n()) throw std::invalid_argument("profile does not match the code");
    const Field& f = c.field();
    std::set<uint32_t> erased;
    for (uint32_t e : erasures) {
        if (e >= c.n()) throw std::invalid_argument("erasure index out of range");
        erased.insert(e);
    }
    RepairOutcome out;
    bool progress = true;
    while (progress && !erased.empty()) {
        progress = false;
        for (auto it = erased.begin(); it != erased.end();) {
            const uint32_t i = *it;
            bool repaired = false;
            for (const auto& chk : prof.coords[i].checks) {
                bool clean = true;
                for (uint32_t s : chk.support)
                    if (s != i && erased.count(s)) {
                        clean = false;
                        break;
                    }
                if (!clean) continue;
                // sum coeff_j * w_j = 0  =>  w_i = -(sum_{j != i}) / coeff_i
                uint32_t acc = 0, ci = 1;
                for (size_t t = 0; t < chk.support.size(); ++t) {
                    if (chk.support[t] == i) {
                        ci = chk.coeffs[t];
                        continue;
                    }
                    acc = f.add(acc, f.mul(chk.coeffs[t], word[chk.support[t]]));
                }
                word[i] = f.div(f.neg(acc), ci);
                out.reads.emplace_back(i, static_cast<uint32_t>(chk.support.size()) - 1);
                repaired = true;
                break;
            }
            if (repaired) {
                it = erased.erase(it);
                progress = true;
            } else {
                ++it;
            }
        }
    }
    out.word = std::move(word);
    out.residual.assign(erased.begin(), erased.end());
    return out;
}

}  // namespace lrc
