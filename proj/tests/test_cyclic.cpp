#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "lrc/cyclic.hpp"

using lrc::CyclicCode;
using lrc::cyclotomic_coset;
using lrc::DefiningSet;
using lrc::Field;
using lrc::normalize_defset;
using lrc::Poly;

namespace {

// the defining set of the length-n code replicated from D_L plus extra cosets
DefiningSet replicated(uint32_t n, uint32_t q, const std::vector<uint32_t>& dl, uint32_t n_l,
                       const std::vector<uint32_t>& extra) {
    std::vector<int64_t> raw;
    for (uint32_t i = 0; i < n; ++i)
        if (std::find(dl.begin(), dl.end(), i % n_l) != dl.end()) raw.push_back(i);
    for (uint32_t e : extra) raw.push_back(e);
    return normalize_defset(n, q, raw).ds;
}

}  // namespace

TEST_CASE("cyclotomic coset examples") {
    CHECK(cyclotomic_coset(0, 15, 2) == std::vector<uint32_t>{0});
    CHECK(cyclotomic_coset(1, 63, 2) == std::vector<uint32_t>{1, 2, 4, 8, 16, 32});
    // iterating *2 mod 33: 1,2,4,8,16,32,31,29,25,17
    CHECK(cyclotomic_coset(1, 33, 2) == std::vector<uint32_t>{1, 2, 4, 8, 16, 17, 25, 29, 31, 32});
    CHECK(cyclotomic_coset(1, 33, 2).size() == 10);
    CHECK_THROWS_AS(cyclotomic_coset(1, 6, 2), std::invalid_argument);
}

TEST_CASE("cosets partition Z_n for every n coprime to q") {
    for (uint32_t q : {2u, 3u, 4u, 5u}) {
        for (uint32_t n = 1; n <= 255; ++n) {
            if (std::gcd(n, q) != 1) continue;
            std::vector<char> seen(n, 0);
            uint64_t total = 0;
            for (uint32_t i = 0; i < n; ++i) {
                if (seen[i]) continue;
                const auto coset = cyclotomic_coset(i, n, q);
                for (uint32_t c : coset) {
                    REQUIRE(!seen[c]);
                    seen[c] = 1;
                }
                total += coset.size();
                // closed under multiplication by q
                for (uint32_t c : coset)
                    REQUIRE(std::binary_search(coset.begin(), coset.end(),
                                               static_cast<uint32_t>((static_cast<uint64_t>(c) * q) % n)));
            }
            REQUIRE(total == n);
        }
    }
}

TEST_CASE("normalize_defset closes inputs and reports closure") {
    auto r1 = normalize_defset(3, 2, {0});
    CHECK(r1.was_closed);
    CHECK(r1.ds.residues == std::vector<uint32_t>{0});

    auto r2 = normalize_defset(7, 2, {1});
    CHECK(!r2.was_closed);
    CHECK(r2.ds.residues == std::vector<uint32_t>{1, 2, 4});

    // multiples of three together with the coset of 1 are closed mod 33
    std::vector<int64_t> raw;
    for (int64_t i = 0; i < 33; i += 3) raw.push_back(i);
    for (uint32_t c : cyclotomic_coset(1, 33, 2)) raw.push_back(c);
    auto r3 = normalize_defset(33, 2, raw);
    CHECK(r3.was_closed);
    CHECK(r3.ds.residues.size() == 21);

    // negative residues reduce mod n
    auto r4 = normalize_defset(33, 2, {-3});
    CHECK(r4.ds.contains(30));

    // shift helper
    DefiningSet d{7, 2, {1, 2, 4}};
    CHECK(d.shifted(1).residues == std::vector<uint32_t>{2, 3, 5});
    CHECK(d.shifted(-1).residues == std::vector<uint32_t>{0, 1, 3});
    CHECK(d.shifted(7).residues == d.residues);
}

TEST_CASE("the coset of 1 is reversible for lengths 2^m + 1") {
    for (uint32_t m : {3u, 5u, 7u}) {
        const uint32_t n = (1u << m) + 1;
        const auto c1 = cyclotomic_coset(1, n, 2);
        CHECK(c1.size() == 2 * m);
        for (uint32_t c : c1) REQUIRE(std::binary_search(c1.begin(), c1.end(), (n - c) % n));
    }
}

TEST_CASE("generator polynomial of the single parity check code") {
    const Field& f2 = Field::get(2, 1);
    CyclicCode spc(f2, DefiningSet{3, 2, {0}});
    CHECK(spc.k() == 2);
    CHECK(spc.generator().coeffs() == std::vector<uint32_t>{1, 1});
}

TEST_CASE("generator polynomials divide X^n - 1 and vanish exactly on the set") {
    const Field& f2 = Field::get(2, 1);
    const Field& f3 = Field::get(3, 1);

    std::vector<CyclicCode> codes;
    // length 33, multiples of three plus the coset of 1
    codes.emplace_back(f2, replicated(33, 2, {0}, 3, cyclotomic_coset(1, 33, 2)));
    // length 63, Simplex pattern {0,3,5,6} plus the coset of 1
    codes.emplace_back(f2, replicated(63, 2, {0, 3, 5, 6}, 7, cyclotomic_coset(1, 63, 2)));
    // length 15, plain product of the parity-check pattern
    codes.emplace_back(f2, replicated(15, 2, {0}, 3, {}));
    // ternary length 80 pattern
    codes.emplace_back(f3, replicated(80, 3, {0, 2, 4, 5, 6, 7}, 8, cyclotomic_coset(1, 80, 3)));

    CHECK(codes[0].k() == 12);
    CHECK(codes[1].k() == 21);
    CHECK(codes[2].k() == 10);
    CHECK(codes[3].k() == 16);

    for (const auto& c : codes) {
        const auto divided = Poly::xn_minus_1(c.field(), c.n()).divmod(c.generator());
        REQUIRE(divided.second.is_zero());
        for (uint32_t i = 0; i < c.n(); ++i)
            REQUIRE((c.generator_root_value(i) == 0) == c.defining_set().contains(i));
    }
}

TEST_CASE("minimal polynomials assemble the generator") {
    const Field& f2 = Field::get(2, 1);
    CyclicCode hamming(f2, DefiningSet{7, 2, {1, 2, 4}});
    CHECK(hamming.minimal_polynomial(1).coeffs() == std::vector<uint32_t>{1, 1, 0, 1});
    CHECK(hamming.generator() == hamming.minimal_polynomial(1));

    CyclicCode spc_sim(f2, DefiningSet{7, 2, {0, 3, 5, 6}});
    CHECK(spc_sim.generator() == spc_sim.minimal_polynomial(0) * spc_sim.minimal_polynomial(3));
}

TEST_CASE("cyclic code construction rejects bad defining sets") {
    const Field& f2 = Field::get(2, 1);
    CHECK_THROWS_AS(CyclicCode(f2, DefiningSet{7, 2, {1}}), std::invalid_argument);  // not closed
    CHECK_THROWS_AS(CyclicCode(f2, DefiningSet{3, 2, {0, 1, 2}}), std::invalid_argument);  // zero code
    CHECK_THROWS_AS(CyclicCode(Field::get(3, 1), DefiningSet{7, 2, {0}}), std::invalid_argument);  // wrong q
}

TEST_CASE("generator matrix rows are the shifts of g") {
    const Field& f2 = Field::get(2, 1);
    CyclicCode spc(f2, DefiningSet{3, 2, {0}});
    const auto g = spc.generator_matrix();
    CHECK(g == std::vector<uint32_t>{1, 1, 0, 0, 1, 1});
}

TEST_CASE("BCH bound from the longest run") {
    // length 33: run -4..4 gives 10
    const auto d33 = replicated(33, 2, {0}, 3, cyclotomic_coset(1, 33, 2));
    CHECK(lrc::bch_bound(d33) == 10);

    // length 63: run 61,62,0..8 gives 12
    const auto d63 = replicated(63, 2, {0, 3, 5, 6}, 7, cyclotomic_coset(1, 63, 2));
    CHECK(lrc::bch_bound(d63) == 12);

    // ternary length 80: run -4..10 gives 16
    const auto d80 = replicated(80, 3, {0, 2, 4, 5, 6, 7}, 8, cyclotomic_coset(1, 80, 3));
    CHECK(lrc::bch_bound(d80) == 16);

    CHECK(lrc::bch_bound(DefiningSet{3, 2, {0}}) == 2);
    CHECK(lrc::bch_bound(DefiningSet{5, 2, {}}) == 1);

    // step search picks up strided runs: {0,2,4} mod 5 is an arithmetic
    // progression with step 2 (plain runs top out at the wraparound pair 4,0)
    DefiningSet strided{5, 2, {0, 2, 4}};
    CHECK(lrc::bch_bound(strided, false) == 3);
    CHECK(lrc::bch_bound(strided, true) == 4);
}
