#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lrc/cyclic.hpp"
#include "lrc/linear.hpp"
#include "oracles.hpp"

using lrc::CyclicCode;
using lrc::DefiningSet;
using lrc::Field;
using lrc::LinearCode;

namespace {

LinearCode from_cyclic(const CyclicCode& c, const char* tag = "") {
    return LinearCode(c.field(), c.n(), c.k(), c.generator_matrix(), tag);
}

LinearCode spc(const Field& f2, uint32_t r) {
    std::vector<uint32_t> g(static_cast<size_t>(r) * (r + 1), 0);
    for (uint32_t i = 0; i < r; ++i) {
        g[static_cast<size_t>(i) * (r + 1) + i] = 1;
        g[static_cast<size_t>(i) * (r + 1) + r] = 1;
    }
    return LinearCode(f2, r + 1, r, std::move(g), "spc");
}

void compare_with_oracle(const LinearCode& c) {
    const auto got = lrc::weight_report(c);
    const auto want = oracle::naive_weight_report(c);
    REQUIRE(got.d == want.d);
    REQUIRE(got.omega == want.omega);
    REQUIRE(got.histogram == want.histogram);
    uint64_t sum = 0;
    for (uint64_t h : got.histogram) sum += h;
    REQUIRE(sum == got.total);
    REQUIRE(got.histogram[0] == 1);
    REQUIRE(got.d <= c.n() - c.k() + 1);  // Singleton sanity
    // a sampling pass never finds anything lighter
    REQUIRE(oracle::sampled_min_weight(c, 2000, 99) >= got.d);
}

}  // namespace

TEST_CASE("encode basics") {
    const Field& f2 = Field::get(2, 1);
    auto c = spc(f2, 2);
    CHECK(lrc::encode(c, {0, 0}) == std::vector<uint32_t>{0, 0, 0});
    // every parity-check codeword has even weight
    for (uint32_t m = 1; m < 4; ++m) {
        const auto w = lrc::encode(c, {m & 1, (m >> 1) & 1});
        uint32_t weight = 0;
        for (uint32_t v : w) weight += v != 0;
        CHECK(weight % 2 == 0);
    }
    CHECK_THROWS_AS(lrc::encode(c, {1}), std::invalid_argument);

    CHECK(lrc::is_codeword(c, lrc::encode(c, {1, 0})));
    CHECK(!lrc::is_codeword(c, {1, 0, 0}));  // odd weight
    CHECK_THROWS_AS(lrc::is_codeword(c, {1, 0}), std::invalid_argument);
}

TEST_CASE("the Simplex code is constant weight") {
    const Field& f2 = Field::get(2, 1);
    CyclicCode sim(f2, DefiningSet{7, 2, {0, 3, 5, 6}});
    auto code = from_cyclic(sim, "simplex");
    for (uint32_t m = 1; m < 8; ++m) {
        const auto w = lrc::encode(code, {m & 1, (m >> 1) & 1, (m >> 2) & 1});
        uint32_t weight = 0;
        for (uint32_t v : w) weight += v != 0;
        CHECK(weight == 4);
    }
    const auto rep = lrc::weight_report(code);
    CHECK(rep.d == 4);
    CHECK(rep.omega == 4);
    CHECK(rep.histogram[4] == 7);
}

TEST_CASE("weight_report agrees with the naive oracle on known codes") {
    const Field& f2 = Field::get(2, 1);
    const Field& f3 = Field::get(3, 1);

    compare_with_oracle(spc(f2, 2));                                            // [3,2,2]
    compare_with_oracle(from_cyclic(CyclicCode(f2, DefiningSet{7, 2, {0, 3, 5, 6}})));  // [7,3,4]
    compare_with_oracle(lrc::hamming_code(f2, 3));                              // [7,4,3]
    compare_with_oracle(lrc::hamming_code(Field::get(2, 2), 2));                // [5,3,3] over GF(4)
    compare_with_oracle(from_cyclic(CyclicCode(f3, DefiningSet{8, 3, {0, 2, 4, 5, 6, 7}})));  // [8,2,6]

    const auto h = lrc::weight_report(lrc::hamming_code(f2, 3));
    CHECK(h.d == 3);
    const auto h9 = lrc::weight_report(lrc::hamming_code(Field::get(2, 3), 2));  // [9,7,3] over GF(8)
    CHECK(h9.d == 3);
}

TEST_CASE("weight_report agrees with the naive oracle on random codes") {
    std::mt19937_64 rng(2024);
    for (uint32_t q : {2u, 3u, 4u, 5u}) {
        const Field& f = q == 4 ? Field::get(2, 2) : Field::get(q, 1);
        for (int t = 0; t < 10; ++t) {
            const uint32_t n = 6 + rng() % 9;
            const uint32_t k = 1 + rng() % std::min(n - 1, 6u);
            compare_with_oracle(oracle::random_code(f, n, k, rng));
        }
    }
}

TEST_CASE("enumeration is independent of the worker count") {
    std::mt19937_64 rng(5);
    const auto c = oracle::random_code(Field::get(2, 1), 40, 14, rng);
    const auto r1 = lrc::weight_report(c, lrc::kDefaultBudget, 1);
    const auto r3 = lrc::weight_report(c, lrc::kDefaultBudget, 3);
    const auto r7 = lrc::weight_report(c, lrc::kDefaultBudget, 7);
    CHECK(r1.histogram == r3.histogram);
    CHECK(r1.histogram == r7.histogram);

    const auto t = oracle::random_code(Field::get(3, 1), 30, 9, rng);
    CHECK(lrc::weight_report(t, lrc::kDefaultBudget, 1).histogram ==
          lrc::weight_report(t, lrc::kDefaultBudget, 5).histogram);
}

TEST_CASE("enumeration rejects budgets it cannot honor") {
    std::mt19937_64 rng(6);
    const auto c = oracle::random_code(Field::get(2, 1), 40, 30, rng);
    CHECK_THROWS_AS(lrc::weight_report(c, 1u << 20), lrc::EnumerationInfeasible);
    CHECK_THROWS_AS(lrc::weight_report(c, 0), lrc::EnumerationInfeasible);
}

TEST_CASE("min_nonzero_blocks matches a naive recount") {
    std::mt19937_64 rng(77);
    for (uint32_t q : {2u, 3u, 4u}) {
        const Field& f = q == 4 ? Field::get(2, 2) : Field::get(q, 1);
        // length 72 spreads blocks across two packed words
        const uint32_t n = 72, n_l = 8, k = 6;
        const auto c = oracle::random_code(f, n, k, rng);
        std::vector<std::vector<uint32_t>> blocks;
        for (uint32_t b = 0; b < n / n_l; ++b) {
            std::vector<uint32_t> blk;
            for (uint32_t t = 0; t < n_l; ++t) blk.push_back(b * n_l + t);
            blocks.push_back(blk);
        }
        const uint32_t got = lrc::min_nonzero_blocks(c, blocks);

        // odometer + naive encode
        const oracle::RefField ref(c.field());
        uint64_t total = 1;
        for (uint32_t i = 0; i < k; ++i) total *= q;
        uint32_t want = UINT32_MAX;
        std::vector<uint32_t> msg(k, 0);
        for (uint64_t s = 1; s < total; ++s) {
            for (uint32_t r = 0; r < k; ++r) {
                if (++msg[r] < q) break;
                msg[r] = 0;
            }
            std::vector<uint32_t> word(n, 0);
            for (uint32_t r = 0; r < k; ++r)
                if (msg[r])
                    for (uint32_t j = 0; j < n; ++j) word[j] = ref.add(word[j], ref.mul(msg[r], c.at(r, j)));
            uint32_t cnt = 0;
            for (const auto& blk : blocks) {
                bool nz = false;
                for (uint32_t i : blk) nz |= word[i] != 0;
                cnt += nz;
            }
            if (cnt) want = std::min(want, cnt);
        }
        REQUIRE(got == want);
    }
}

TEST_CASE("puncture_to_block restricts and rebases") {
    const Field& f2 = Field::get(2, 1);
    CyclicCode sim(f2, DefiningSet{7, 2, {0, 3, 5, 6}});
    auto code = from_cyclic(sim);

    std::vector<uint32_t> all(7);
    for (uint32_t i = 0; i < 7; ++i) all[i] = i;
    const auto same = lrc::puncture_to_block(code, all);
    CHECK(same.k() == code.k());
    // identical row space
    std::vector<const uint32_t*> rows(code.k());
    for (uint32_t r = 0; r < code.k(); ++r) rows[r] = code.row(r);
    for (uint32_t r = 0; r < same.k(); ++r)
        CHECK(lrc::linalg::in_span(f2, rows, same.row(r), 7).has_value());

    const auto sub = lrc::puncture_to_block(code, {0, 1, 2});
    CHECK(sub.n() == 3);
    CHECK(sub.k() <= 3);

    CHECK_THROWS_AS(lrc::puncture_to_block(code, {}), std::invalid_argument);
    CHECK_THROWS_AS(lrc::puncture_to_block(code, {9}), std::invalid_argument);
}

TEST_CASE("hamming_code families") {
    CHECK_THROWS_AS(lrc::hamming_code(Field::get(2, 1), 1), std::invalid_argument);

    const auto h7 = lrc::hamming_code(Field::get(2, 1), 3);
    CHECK(h7.n() == 7);
    CHECK(h7.k() == 4);

    const auto h9 = lrc::hamming_code(Field::get(2, 3), 2);
    CHECK(h9.n() == 9);
    CHECK(h9.k() == 7);

    const auto h5 = lrc::hamming_code(Field::get(2, 2), 2);
    CHECK(h5.n() == 5);
    CHECK(h5.k() == 3);
    CHECK(oracle::naive_weight_report(h5).d == 3);
}

TEST_CASE("concatenate composes outer and inner codes") {
    const Field& f2 = Field::get(2, 1);
    const auto outer5 = lrc::hamming_code(Field::get(2, 2), 2);  // [5,3,3] over GF(4)
    const auto inner3 = spc(f2, 2);                              // [3,2,2]
    const auto c15 = lrc::concatenate(outer5, inner3);
    CHECK(c15.n() == 15);
    CHECK(c15.k() == 6);
    const auto rep = lrc::weight_report(c15);
    CHECK(rep.d == 6);
    CHECK(rep.d >= 3 * 2);
    CHECK(oracle::naive_weight_report(c15).d == rep.d);

    // the identity-map inner code preserves the outer distance here: some
    // minimum-weight outer codeword has all nonzero symbols equal to 1
    std::vector<uint32_t> gid = {1, 0, 0, 1};
    const auto c10 = lrc::concatenate(outer5, LinearCode(f2, 2, 2, gid, "identity"));
    CHECK(c10.n() == 10);
    CHECK(c10.k() == 6);
    CHECK(lrc::weight_report(c10).d == 3);

    // field-tower mismatches
    CHECK_THROWS_AS(lrc::concatenate(outer5, spc(f2, 3)), std::invalid_argument);  // inner k != degree
    CHECK_THROWS_AS(lrc::concatenate(outer5, lrc::hamming_code(Field::get(2, 2), 2)),
                    std::invalid_argument);  // inner field not prime
    CHECK_THROWS_AS(lrc::concatenate(lrc::hamming_code(Field::get(3, 1), 2), spc(f2, 2)),
                    std::invalid_argument);  // characteristic mismatch
}

TEST_CASE("concatenated distance dominates the product of distances") {
    const auto outer9 = lrc::hamming_code(Field::get(2, 3), 2);  // [9,7,3] over GF(8)
    const auto inner4 = spc(Field::get(2, 1), 3);                // [4,3,2]
    const auto c36 = lrc::concatenate(outer9, inner4);
    CHECK(c36.n() == 36);
    CHECK(c36.k() == 21);
    CHECK(lrc::weight_report(c36).d >= 6);
}

TEST_CASE("generator matrices must be full rank") {
    const Field& f2 = Field::get(2, 1);
    CHECK_THROWS_AS(LinearCode(f2, 4, 2, {1, 1, 0, 0, 1, 1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(LinearCode(f2, 4, 2, {1, 1, 0, 0, 0, 0, 1, 1, 0}), std::invalid_argument);  // size
    CHECK_THROWS_AS(LinearCode(f2, 4, 2, {1, 1, 0, 0, 0, 0, 1, 2}), std::invalid_argument);     // range
}
