#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "burau/braid.hpp"
#include "corpus.hpp"

using namespace burau;

namespace {

std::vector<int> compose(const std::vector<int>& first, const std::vector<int>& second) {
    std::vector<int> out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i)
        out[i] = second[static_cast<std::size_t>(first[i])];
    return out;
}

}  // namespace

TEST_CASE("parsing signed generator words") {
    const BraidWord w = parse_braid_word("1 -2", 3);
    CHECK(w.strings == 3);
    CHECK(w.letters == std::vector<int>{1, -2});

    const BraidWord id = parse_braid_word("", 4);
    CHECK(id.letters.empty());

    // lossless: no free reduction at parse time
    CHECK(parse_braid_word("1 -1", 3).letters == std::vector<int>{1, -1});
}

TEST_CASE("parsing block terms") {
    const BraidWord b3 = parse_braid_word("b[1,3,3] b[4,3,3]^-1", 9);
    const std::vector<int> expected{3, 4, 5, 2, 3, 4, 1, 2, 3, -6, -5, -4, -7, -6, -5, -8, -7, -6};
    CHECK(b3.letters == expected);
    CHECK(b3.letters.size() == 18);
    CHECK(exponent_sum(b3) == 0);

    CHECK(parse_braid_word("b[1,1,1]", 3).letters == std::vector<int>{1});
    CHECK(parse_braid_word("b[1,2,2]^2", 6).letters == std::vector<int>{2, 3, 1, 2, 2, 3, 1, 2});
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_braid_word("1 x", 3), ParseError);
    CHECK_THROWS_AS(parse_braid_word("0", 3), ParseError);       // INT may not start with 0
    CHECK_THROWS_AS(parse_braid_word("b[1,2]", 6), ParseError);  // three fields required
    CHECK_THROWS_AS(parse_braid_word("b[1,1,1]^0", 3), ParseError);
    CHECK_THROWS_AS(parse_braid_word("3", 3), std::out_of_range);
    CHECK_THROWS_AS(parse_braid_word("-5", 4), std::out_of_range);
    CHECK_THROWS_AS(parse_braid_word("b[4,3,3]", 8), std::out_of_range);

    try {
        parse_braid_word("1 junk", 3);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
        CHECK(std::string(e.what()).find("position 3") != std::string::npos);
    }
}

TEST_CASE("block expansion matches the crossing product") {
    CHECK(expand_block({1, 2, 2, 1}, 4).letters == std::vector<int>{2, 3, 1, 2});
    CHECK(expand_block({1, 3, 3, 1}, 9).letters == std::vector<int>{3, 4, 5, 2, 3, 4, 1, 2, 3});

    // every single-string block is a bare generator
    for (int n = 2; n <= 8; ++n)
        for (int i = 1; i <= n - 1; ++i)
            CHECK(expand_block({i, 1, 1, 1}, n).letters == std::vector<int>{i});

    // negative power: reversed, inverted expansion
    const BraidWord pos = expand_block({1, 3, 3, 1}, 9);
    const BraidWord neg = expand_block({1, 3, 3, -1}, 9);
    CHECK(neg == inverse(pos));
    CHECK(neg.letters == std::vector<int>{-3, -2, -1, -4, -3, -2, -5, -4, -3});

    CHECK_THROWS_AS(expand_block({4, 3, 3, 1}, 8), std::out_of_range);
}

TEST_CASE("concat and inverse") {
    const BraidWord a{3, {1}};
    const BraidWord b{3, {-1}};
    CHECK(concat(a, b).letters == std::vector<int>{1, -1});
    CHECK(concat(BraidWord{3, {}}, a) == a);
    CHECK(concat(BraidWord{3, {1, 2}}, BraidWord{3, {2, 1}}).letters == std::vector<int>{1, 2, 2, 1});
    CHECK_THROWS_AS(concat(a, BraidWord{4, {}}), std::invalid_argument);

    testing::WordGen gen(11);
    for (int trial = 0; trial < 50; ++trial) {
        const BraidWord x = gen.word(3, 7, 12);
        const BraidWord y = gen.word(x.strings, x.strings, 12);
        const BraidWord z = gen.word(x.strings, x.strings, 12);
        CHECK(concat(concat(x, y), z) == concat(x, concat(y, z)));
        CHECK(free_reduce(concat(x, inverse(x))).letters.empty());
    }
}

TEST_CASE("exponent sums") {
    CHECK(exponent_sum(parse_braid_word("1 -2", 3)) == 0);
    CHECK(exponent_sum(parse_braid_word("1 1 2", 3)) == 3);
    CHECK(exponent_sum(parse_braid_word("b[1,3,3] b[4,3,3]^-1", 9)) == 0);
}

TEST_CASE("induced permutations") {
    CHECK(induced_permutation(parse_braid_word("1", 3)) == std::vector<int>{1, 0, 2});
    CHECK(induced_permutation(parse_braid_word("", 3)) == std::vector<int>{0, 1, 2});
    // sigma_1 sigma_2^{-1} cycles all three strings
    CHECK(induced_permutation(parse_braid_word("1 -2", 3)) == std::vector<int>{2, 0, 1});

    testing::WordGen gen(12);
    for (int trial = 0; trial < 50; ++trial) {
        const BraidWord a = gen.word(3, 7, 15);
        const BraidWord b = gen.word(a.strings, a.strings, 15);
        CHECK(induced_permutation(concat(a, b)) ==
              compose(induced_permutation(a), induced_permutation(b)));
    }
}

TEST_CASE("print round-trips canonical words") {
    CHECK(to_string(BraidWord{3, {1, -2}}) == "1 -2");
    testing::WordGen gen(13);
    for (int trial = 0; trial < 50; ++trial) {
        const BraidWord w = gen.word(2, 9, 20);
        CHECK(parse_braid_word(to_string(w), w.strings) == w);
    }
}

TEST_CASE("free reduction cancels adjacent inverse pairs") {
    CHECK(free_reduce(BraidWord{3, {1, -1}}).letters.empty());
    CHECK(free_reduce(BraidWord{3, {1, 2, -2, -1}}).letters.empty());
    CHECK(free_reduce(BraidWord{3, {1, 2, 1}}).letters == std::vector<int>{1, 2, 1});
}
