#include <random>
#include <set>

#include "doctest.h"
#include "pairmds/code.hpp"

using namespace pairmds;

TEST_CASE("from_parity basics") {
    auto f7 = field_new(7, 1);
    LinearCode sum_zero = from_parity(Matrix::from_rows(f7, {{1, 1, 1, 1}}));
    CHECK(sum_zero.n == 4);
    CHECK(sum_zero.k == 3);

    LinearCode full = from_parity(Matrix(f7, 0, 5));
    CHECK(full.k == 5);
    CHECK(min_hamming_distance(full).distance == 1);

    LinearCode c = from_parity(vandermonde(f7, std::vector<int>{0, 1, 2, 3}, 2));
    CHECK(c.n == 4);
    CHECK(c.k == 2);
    CHECK(min_hamming_distance(c).distance == 3);

    // duplicate rows make the parity rank deficient
    try {
        from_parity(Matrix::from_rows(f7, {{1, 1, 1, 1}, {1, 1, 1, 1}}));
        FAIL("expected RankDeficientParity");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::RankDeficientParity);
    }
}

TEST_CASE("grs parameters and errors") {
    auto f7 = field_new(7, 1);
    std::vector<int> pts{0, 1, 2, 3};
    LinearCode c = grs(f7, pts, 3);
    CHECK(c.n == 4);
    CHECK(c.k == 1);
    CHECK(min_hamming_distance(c).distance == 4);

    auto f9 = field_new(3, 2);
    std::vector<int> pts9{0, 1, 2, 3, 4, 5};
    LinearCode c9 = grs(f9, pts9, 4);
    CHECK(c9.n == 6);
    CHECK(c9.k == 2);
    CHECK(min_hamming_distance(c9).distance == 5);

    LinearCode c1 = grs(f7, pts, 1);
    CHECK(min_hamming_distance(c1).distance == 2);

    std::vector<int> dup{0, 1, 1, 3};
    CHECK_THROWS_AS(grs(f7, dup, 2), Error);
    CHECK_THROWS_AS(grs(f7, pts, 0), Error);
    CHECK_THROWS_AS(grs(f7, pts, 4), Error);
}

TEST_CASE("grs codes are MDS and nested") {
    for (int q : {5, 7, 9, 13}) {
        auto f = field_of_order(q);
        int n = std::min(q, 8);
        std::vector<int> pts(n);
        for (int i = 0; i < n; ++i) pts[i] = i;
        for (int i = 1; i < n; ++i) {
            LinearCode c = grs(f, pts, i);
            CHECK(min_hamming_distance(c, Strategy::Support).distance == i + 1);
        }
    }
    // nesting: every codeword of grs(a, j) satisfies the syndrome of grs(a, i), i < j
    auto f5 = field_new(5, 1);
    std::vector<int> pts{0, 1, 2, 3, 4};
    LinearCode inner = grs(f5, pts, 3);
    LinearCode outer = grs(f5, pts, 2);
    for_each_codeword(inner, [&](std::span<const int> cw) { CHECK(is_codeword(outer, cw)); });
}

TEST_CASE("dual relationships") {
    auto f5 = field_new(5, 1);
    LinearCode full = from_parity(Matrix(f5, 0, 4));
    LinearCode zero = dual(full);
    CHECK(zero.k == 0);
    CHECK(dual(zero).k == 4);

    LinearCode sum_zero = from_parity(Matrix::from_rows(f5, {{1, 1, 1, 1}}));
    LinearCode rep = dual(sum_zero);
    CHECK(rep.n == 4);
    CHECK(rep.k == 1);
    CHECK(min_hamming_distance(rep).distance == 4);

    // dual(dual(C)) = C as codeword sets: unique RREF of the generator
    LinearCode c = grs(f5, std::vector<int>{0, 1, 2, 3}, 2);
    CHECK(rref(dual(dual(c)).G).first == rref(c.G).first);
    CHECK(dual(c).k == 2);
}

TEST_CASE("encode and enumerate") {
    auto f7 = field_new(7, 1);
    LinearCode c = grs(f7, std::vector<int>{0, 1, 2, 3}, 2);
    std::vector<int> zero_msg(c.k, 0);
    CHECK(encode(c, zero_msg) == std::vector<int>(c.n, 0));
    for (int j = 0; j < c.k; ++j) {
        std::vector<int> e(c.k, 0);
        e[j] = 1;
        auto row = c.G.row(j);
        CHECK(encode(c, e) == std::vector<int>(row.begin(), row.end()));
    }
    auto words = enumerate_codewords(c);
    CHECK(words.size() == 49);
    std::set<std::vector<int>> uniq(words.begin(), words.end());
    CHECK(uniq.size() == 49);
    CHECK_THROWS_AS(enumerate_codewords(c, 10), Error);
    try {
        enumerate_codewords(c, 10);
        FAIL("unreachable");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::EnumerationTooLarge);
    }
}

TEST_CASE("minimum distance: message and support strategies agree") {
    std::mt19937 rng(99);
    int tested = 0;
    while (tested < 12) {
        int qs[] = {2, 3, 4, 5, 7};
        auto f = field_of_order(qs[rng() % 5]);
        int n = 3 + static_cast<int>(rng() % 6);
        int k = 1 + static_cast<int>(rng() % std::min(n, 4));
        Matrix G(f, k, n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) G.set(i, j, static_cast<int>(rng() % f->q()));
        if (rank(G) != k) continue;
        LinearCode c = make_linear_code(f, G, std::nullopt);
        auto m = min_hamming_distance(c, Strategy::Message);
        auto s = min_hamming_distance(c, Strategy::Support);
        CHECK(m.distance == s.distance);
        CHECK(m.witness == s.witness);  // deterministic witness across strategies
        CHECK(is_codeword(c, m.witness));
        ++tested;
    }
}

TEST_CASE("minimum distance edge cases") {
    auto f5 = field_new(5, 1);
    LinearCode zero = dual(from_parity(Matrix(f5, 0, 4)));
    try {
        min_hamming_distance(zero);
        FAIL("expected ZeroCode");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ZeroCode);
    }
    // explicit message strategy over the cap
    LinearCode big = from_parity(Matrix::from_rows(f5, {{1, 1, 1, 1}}));
    CHECK_THROWS_AS(min_hamming_distance(big, Strategy::Message, 5), Error);
}
