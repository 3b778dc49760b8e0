#include <random>

#include "doctest.h"
#include "pairmds/construct.hpp"
#include "pairmds/sympair.hpp"

using namespace pairmds;

TEST_CASE("pair read vector") {
    std::vector<int> ab{3, 5};
    auto pairs = pair_read(ab);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0] == std::array<int, 2>{3, 5});
    CHECK(pairs[1] == std::array<int, 2>{5, 3});

    std::vector<int> zeros(6, 0);
    for (auto& pr : pair_read(zeros)) CHECK(pr == std::array<int, 2>{0, 0});

    std::vector<int> v{1, 0, 1, 0, 0, 1, 1, 0};
    auto pv = pair_read(v);
    CHECK(pv.size() == 8);
    int nonzero = 0;
    for (auto& pr : pv) nonzero += (pr[0] != 0 || pr[1] != 0) ? 1 : 0;
    CHECK(nonzero == 7);

    std::vector<int> tiny{1};
    CHECK_THROWS_AS(pair_read(tiny), Error);
}

TEST_CASE("pair weight") {
    std::vector<int> zeros(5, 0);
    CHECK(pair_weight(zeros) == 0);
    std::vector<int> single{0, 0, 2, 0, 0};
    CHECK(pair_weight(single) == 2);
    std::vector<int> v{1, 0, 1, 0, 0, 1, 1, 0};
    CHECK(hamming_weight(v) == 4);
    CHECK(pair_weight(v) == 7);
    std::vector<int> tiny{1};
    CHECK_THROWS_AS(pair_weight(tiny), Error);
}

TEST_CASE("pair weight invariances and bounds") {
    std::mt19937 rng(1234);
    for (int q : {4, 5, 7, 9, 13}) {
        auto f = field_of_order(q);
        for (int t = 0; t < 200; ++t) {
            int n = 2 + static_cast<int>(rng() % 20);
            std::vector<int> u(n);
            for (auto& x : u) x = static_cast<int>(rng() % q);
            int wp = pair_weight(u);
            int wh = hamming_weight(u);
            if (wh == 0) {
                CHECK(wp == 0);
                continue;
            }
            if (wh == n) CHECK(wp == n);
            if (0 < wh && wh < n) {
                CHECK(wh + 1 <= wp);
                CHECK(wp <= std::min(2 * wh, n));
            }
            // scalar invariance over every nonzero scalar
            for (int s = 1; s < q; ++s) {
                std::vector<int> su(n);
                for (int i = 0; i < n; ++i) su[i] = f->mul(s, u[i]);
                CHECK(pair_weight(su) == wp);
            }
            // cyclic shift invariance over every shift
            for (int sh = 0; sh < n; ++sh) {
                std::vector<int> ru(n);
                for (int i = 0; i < n; ++i) ru[(i + sh) % n] = u[i];
                CHECK(pair_weight(ru) == wp);
            }
        }
    }
}

TEST_CASE("classification against the pair Singleton bound") {
    CHECK(classify(12, 6, 8, 4) == PairClass::MDS);
    CHECK(classify(24, 18, 7, 9) == PairClass::AMDS);
    CHECK(classify(6, 6, 2, 5) == PairClass::MDS);  // full space
    CHECK(classify(10, 3, 6, 5) == PairClass::NONE);
    try {
        classify(12, 7, 8, 4);  // k above the bound signals a computation bug
        FAIL("expected BoundViolation");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BoundViolation);
    }
    CHECK_THROWS_AS(classify(5, 1, 1, 5), Error);
}

TEST_CASE("minimum pair distance on known codes") {
    auto f5 = field_new(5, 1);
    std::vector<int> pts{0, 1, 2, 3};
    // [4,1,4] repetition-like code: full-weight codewords only
    LinearCode rep = grs(f5, pts, 3);
    CHECK(min_pair_distance(rep).distance == 4);
    // [4,3,2] sum-zero code
    LinearCode sz = grs(f5, pts, 1);
    auto r = min_pair_distance(sz);
    CHECK(r.distance == 3);
    CHECK(r.witness == std::vector<int>{1, 4, 0, 0});
    // full space
    LinearCode full = from_parity(Matrix(f5, 0, 4));
    PairAnalysisReport rep_full = analyze(full);
    CHECK(rep_full.d_H == 1);
    CHECK(rep_full.d_sp == 2);
    CHECK(rep_full.classification == PairClass::MDS);
}

TEST_CASE("strategies agree on distance and witness") {
    std::mt19937 rng(4321);
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
        auto m = min_pair_distance(c, Strategy::Message);
        auto s = min_pair_distance(c, Strategy::Support);
        CHECK(m.distance == s.distance);
        CHECK(m.witness == s.witness);
        CHECK(pair_weight(m.witness) == m.distance);
        ++tested;
    }
}

TEST_CASE("analyze populates a coherent report") {
    Construction con = build_construction(TheoremId::T3_4, 5, 5);
    PairAnalysisReport rep = analyze(con.permuted);
    CHECK(rep.n == 20);
    CHECK(rep.k == 16);
    CHECK(rep.d_H == 3);
    CHECK(rep.d_sp == 6);
    CHECK(rep.classification == PairClass::MDS);
    CHECK(rep.strategy == Strategy::Support);  // 5^16 is far beyond the cap
    CHECK(rep.work.supports_examined > 0);
    CHECK(report_line(rep) == "n=20 k=16 q=5 d_H=3 d_sp=6 class=MDS");
    CHECK(is_codeword(con.permuted, rep.witness_sp));

    Construction con33 = build_construction(TheoremId::T3_3, 7, 5);
    PairAnalysisReport rep33 = analyze(con33.permuted);
    CHECK(rep33.d_H == 5);
    CHECK(rep33.d_sp == 10);
    CHECK(rep33.classification == PairClass::MDS);
}

TEST_CASE("pair distance rejects degenerate inputs") {
    auto f5 = field_new(5, 1);
    LinearCode zero = dual(from_parity(Matrix(f5, 0, 4)));
    CHECK_THROWS_AS(min_pair_distance(zero), Error);
    LinearCode n1 = full_space(f5, 1);
    try {
        min_pair_distance(n1);
        FAIL("expected TooShort");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TooShort);
    }
}

TEST_CASE("pair weight bounds hold on every codeword of an enumerable code") {
    Construction con = build_construction(TheoremId::T3_1, 4, 4);
    for_each_codeword(con.permuted, [&](std::span<const int> cw) {
        int wh = hamming_weight(cw);
        if (wh == 0) return;
        int wp = pair_weight(cw);
        int n = static_cast<int>(cw.size());
        if (wh == n) {
            CHECK(wp == n);
        } else {
            CHECK(wh + 1 <= wp);
            CHECK(wp <= std::min(2 * wh, n));
        }
    });
}
