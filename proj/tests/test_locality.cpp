#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "lrc/constructions.hpp"
#include "lrc/locality.hpp"
#include "oracles.hpp"

using lrc::CyclicCode;
using lrc::DefiningSet;
using lrc::Field;
using lrc::LinearCode;

namespace {

LinearCode spc3() {
    const Field& f2 = Field::get(2, 1);
    return LinearCode(f2, 3, 2, {1, 1, 0, 0, 1, 1}, "spc3");
}

LinearCode simplex7() {
    const Field& f2 = Field::get(2, 1);
    CyclicCode c(f2, DefiningSet{7, 2, {0, 3, 5, 6}});
    return LinearCode(f2, 7, 3, c.generator_matrix(), "simplex7");
}

}  // namespace

TEST_CASE("local checks of the single parity check code") {
    const auto code = spc3();
    const auto checks = lrc::local_checks_at(code, 0, 2);
    REQUIRE(checks.size() == 1);
    CHECK(checks[0].support == std::vector<uint32_t>{0, 1, 2});
    CHECK(checks[0].coeffs == std::vector<uint32_t>{1, 1, 1});
}

TEST_CASE("local checks of the Simplex code come from the Fano lines") {
    const auto code = simplex7();
    for (uint32_t i = 0; i < 7; ++i) {
        const auto checks = lrc::local_checks_at(code, i, 2);
        REQUIRE(checks.size() == 3);
        for (const auto& chk : checks) REQUIRE(chk.support.size() == 3);
        CHECK(lrc::max_pairwise_family(checks, i) == 3);
    }
}

TEST_CASE("the Hamming code has weight-4 checks and availability 1") {
    // dual of [7,4,3] is the constant-weight-4 Simplex code, so there are no
    // weight-3 checks; the four weight-4 supports through a point pairwise
    // meet in two points
    const auto code = lrc::hamming_code(Field::get(2, 1), 3);
    CHECK(lrc::local_checks_at(code, 0, 2).empty());
    const auto checks = lrc::local_checks_at(code, 0, 3);
    REQUIRE(checks.size() == 4);
    for (const auto& chk : checks) REQUIRE(chk.support.size() == 4);
    CHECK(lrc::max_pairwise_family(checks, 0) == 1);
}

TEST_CASE("the full space has no local checks") {
    const Field& f2 = Field::get(2, 1);
    LinearCode full(f2, 4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}, "full");
    CHECK(lrc::local_checks_at(full, 0, 3).empty());
    const auto prof = lrc::locality_availability_profile(full, 3);
    CHECK(!prof.all_confirmed);
    CHECK(prof.t == 0);
}

TEST_CASE("search cap is enforced") {
    const auto code = spc3();
    CHECK_THROWS_AS(lrc::local_checks_at(code, 0, 6), std::invalid_argument);
    CHECK_NOTHROW(lrc::local_checks_at(code, 0, 5));
}

TEST_CASE("minimal supports exclude supersets") {
    // with a weight-2 relation present, larger supports through the same
    // coordinate must not be reported
    const Field& f2 = Field::get(2, 1);
    LinearCode rep(f2, 4, 2, {1, 1, 0, 0, 0, 0, 1, 1}, "pairs");
    const auto checks = lrc::local_checks_at(rep, 0, 3);
    REQUIRE(checks.size() == 1);
    CHECK(checks[0].support == std::vector<uint32_t>{0, 1});
}

TEST_CASE("block decompositions") {
    const auto strided = lrc::strided_blocks(15, 3);
    REQUIRE(strided.size() == 5);
    CHECK(strided[0] == std::vector<uint32_t>{0, 5, 10});
    CHECK(strided[4] == std::vector<uint32_t>{4, 9, 14});

    const auto permuted = lrc::strided_blocks(63, 7, 3);
    CHECK(permuted[0] == std::vector<uint32_t>{0, 27, 54, 18, 45, 9, 36});

    const auto contiguous = lrc::contiguous_blocks(12, 4);
    REQUIRE(contiguous.size() == 3);
    CHECK(contiguous[1] == std::vector<uint32_t>{4, 5, 6, 7});

    CHECK_THROWS_AS(lrc::strided_blocks(10, 3), std::invalid_argument);
    CHECK_THROWS_AS(lrc::strided_blocks(12, 4, 2), std::invalid_argument);  // gcd(2,4) != 1
}

TEST_CASE("structural verification of the plain product code") {
    const auto prod = lrc::product_lrc(CyclicCode(Field::get(2, 1), DefiningSet{3, 2, {0}}), 15);
    const auto rep = lrc::structural_rdelta_verify(prod.code, prod.locality_code, prod.blocks());
    CHECK(rep.verified);
    CHECK(rep.r == 2);
    CHECK(rep.delta == 2);
    CHECK(rep.meets_length_bound);
    for (const auto& b : rep.blocks) {
        CHECK(b.inside_locality_code);
        CHECK(b.distance >= 2);
    }
    CHECK_THROWS_AS(lrc::structural_rdelta_verify(prod.code, prod.locality_code, lrc::strided_blocks(15, 5)),
                    std::invalid_argument);
}

TEST_CASE("projection of the plain product code") {
    const auto prod = lrc::product_lrc(CyclicCode(Field::get(2, 1), DefiningSet{3, 2, {0}}), 15);
    const auto wr = lrc::weight_report(prod.code);
    const auto proj = lrc::project_additive(prod.code, prod.locality_code, prod.blocks(),
                                            lrc::kDefaultBudget, 0, wr.d);
    CHECK(proj.n_prime == 5);
    CHECK(proj.alphabet == 4);
    CHECK(proj.omega == 2);
    CHECK(proj.info_set == std::vector<uint32_t>{0, 1});
    REQUIRE(proj.d_prime.has_value());
    CHECK(*proj.d_prime == 1);  // the weight-2 word X^5+1 lives in one block
    CHECK(proj.d_prime_lower == 1);
    CHECK(proj.k_prime == 5);

    // blocks from the wrong decomposition are rejected
    CHECK_THROWS_AS(lrc::project_additive(prod.code, prod.locality_code, lrc::contiguous_blocks(15, 3),
                                          lrc::kDefaultBudget, 0, wr.d),
                    std::invalid_argument);
}

TEST_CASE("projected symbols are nonzero exactly on nonzero blocks") {
    std::mt19937_64 rng(31);
    const auto prod = lrc::product_lrc(CyclicCode(Field::get(2, 1), DefiningSet{3, 2, {0}}), 15);
    const auto blocks = prod.blocks();
    const auto info = lrc::first_information_set(prod.locality_code);
    for (int t = 0; t < 200; ++t) {
        std::vector<uint32_t> msg(prod.code.k());
        for (auto& m : msg) m = static_cast<uint32_t>(rng() % 2);
        const auto word = lrc::encode(prod.code, msg);
        const auto symbols = lrc::project_word(word, prod.locality_code, blocks, info);
        for (size_t b = 0; b < blocks.size(); ++b) {
            bool nz = false;
            for (uint32_t i : blocks[b]) nz |= word[i] != 0;
            REQUIRE((symbols[b] != 0) == nz);
        }
    }
}

TEST_CASE("local repair solves single erasures and reports reads") {
    const auto code = spc3();
    const auto prof = lrc::locality_availability_profile(code, 2);
    const auto word = lrc::encode(code, {1, 1});
    auto broken = word;
    broken[1] = 0;  // value ignored, position erased
    const auto fixed = lrc::local_repair(code, broken, {1}, prof);
    CHECK(fixed.residual.empty());
    CHECK(fixed.word == word);
    REQUIRE(fixed.reads.size() == 1);
    CHECK(fixed.reads[0] == std::pair<uint32_t, uint32_t>{1, 2});
}

TEST_CASE("erasing a whole block leaves a residual") {
    const auto prod = lrc::product_lrc(CyclicCode(Field::get(2, 1), DefiningSet{3, 2, {0}}), 15);
    const auto prof = lrc::locality_availability_profile(prod.code, 2);
    const auto word = lrc::encode(prod.code, std::vector<uint32_t>(prod.code.k(), 1));
    const auto block = prod.blocks()[0];
    const auto out = lrc::local_repair(prod.code, word, block, prof);
    CHECK(out.residual == block);
}

TEST_CASE("repair of one erasure reads only within its block") {
    std::mt19937_64 rng(41);
    const auto prod = lrc::product_lrc(CyclicCode(Field::get(2, 1), DefiningSet{3, 2, {0}}), 15);
    const auto prof = lrc::locality_availability_profile(prod.code, 2);
    const auto blocks = prod.blocks();
    auto block_of = [&](uint32_t i) {
        for (const auto& b : blocks)
            if (std::find(b.begin(), b.end(), i) != b.end()) return b;
        return std::vector<uint32_t>{};
    };
    for (int t = 0; t < 100; ++t) {
        std::vector<uint32_t> msg(prod.code.k());
        for (auto& m : msg) m = static_cast<uint32_t>(rng() % 2);
        const auto word = lrc::encode(prod.code, msg);
        const uint32_t e = static_cast<uint32_t>(rng() % prod.code.n());
        auto broken = word;
        broken[e] ^= 1;
        const auto fixed = lrc::local_repair(prod.code, broken, {e}, prof);
        REQUIRE(fixed.residual.empty());
        REQUIRE(fixed.word == word);
        const auto blk = block_of(e);
        for (const auto& chk : prof.coords[e].checks)
            if (chk.support.size() == 3)
                for (uint32_t s : chk.support) REQUIRE(std::find(blk.begin(), blk.end(), s) != blk.end());
    }
}

TEST_CASE("availability three repairs two erasures in one block") {
    std::mt19937_64 rng(53);
    const auto res = lrc::simplex_lrc(3, 6);
    const auto prof = lrc::locality_availability_profile(res.code, 2);
    const auto blocks = res.blocks();
    for (int t = 0; t < 100; ++t) {
        std::vector<uint32_t> msg(res.code.k());
        for (auto& m : msg) m = static_cast<uint32_t>(rng() % 2);
        const auto word = lrc::encode(res.code, msg);
        const auto& blk = blocks[rng() % blocks.size()];
        uint32_t a = blk[rng() % blk.size()], b = blk[rng() % blk.size()];
        if (a == b) b = blk[(std::find(blk.begin(), blk.end(), b) - blk.begin() + 1) % blk.size()];
        const auto fixed = lrc::local_repair(res.code, word, {a, b}, prof);
        REQUIRE(fixed.residual.empty());
        REQUIRE(fixed.word == word);
    }
}

TEST_CASE("repair validates its inputs") {
    const auto code = spc3();
    const auto prof = lrc::locality_availability_profile(code, 2);
    CHECK_THROWS_AS(lrc::local_repair(code, {0, 0}, {0}, prof), std::invalid_argument);
    CHECK_THROWS_AS(lrc::local_repair(code, {0, 0, 0}, {7}, prof), std::invalid_argument);
}
