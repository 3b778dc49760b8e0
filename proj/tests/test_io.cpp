#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "pairmds/construct.hpp"
#include "pairmds/io.hpp"
#include "pairmds/sympair.hpp"

using namespace pairmds;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("pairmds_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("code file round trip preserves the analysis") {
    Construction con = build_construction(TheoremId::T3_2, 7, 4);
    TempFile tmp("roundtrip.json");
    write_code_file(tmp.path, con.permuted);
    LinearCode back = read_code_file(tmp.path);
    CHECK(back.n == con.permuted.n);
    CHECK(back.k == con.permuted.k);
    CHECK(back.G == con.permuted.G);
    REQUIRE(back.H.has_value());
    CHECK(*back.H == *con.permuted.H);
    CHECK(back.provenance.at("theorem") == "3.2");
    CHECK(report_line(analyze(back)) == report_line(analyze(con.permuted)));
}

TEST_CASE("a hand-written code file parses to the expected code") {
    TempFile tmp("handwritten.json");
    {
        std::ofstream out(tmp.path);
        out << R"({
          "field": {"p": 7, "m": 1, "modulus": [0, 1]},
          "n": 4, "k": 3,
          "generator": [[1,0,0,6],[0,1,0,6],[0,0,1,6]],
          "parity": [[1,1,1,1]],
          "provenance": {"kind": "sum_zero"}
        })";
    }
    LinearCode c = read_code_file(tmp.path);
    CHECK(c.n == 4);
    CHECK(c.k == 3);
    PairAnalysisReport rep = analyze(c);
    CHECK(rep.d_H == 2);
    CHECK(rep.d_sp == 3);
}

TEST_CASE("malformed files are rejected with MalformedFile") {
    auto expect_malformed = [](const std::string& body) {
        TempFile tmp("malformed.json");
        {
            std::ofstream out(tmp.path);
            out << body;
        }
        try {
            read_code_file(tmp.path);
            FAIL("expected MalformedFile for: ", body);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::MalformedFile);
        }
    };
    expect_malformed("not json at all {{{");
    // p not prime
    expect_malformed(R"({"field":{"p":6,"m":1,"modulus":[0,1]},"n":2,"k":1,
                         "generator":[[1,1]]})");
    // reducible modulus
    expect_malformed(R"({"field":{"p":2,"m":2,"modulus":[1,0,1]},"n":2,"k":1,
                         "generator":[[1,1]]})");
    // rank-deficient generator
    expect_malformed(R"({"field":{"p":5,"m":1,"modulus":[0,1]},"n":3,"k":2,
                         "generator":[[1,2,3],[2,4,1]]})");
    // k inconsistent with the generator
    expect_malformed(R"({"field":{"p":5,"m":1,"modulus":[0,1]},"n":3,"k":1,
                         "generator":[[1,2,3],[0,1,4]]})");
    // generator and parity not orthogonal
    expect_malformed(R"({"field":{"p":5,"m":1,"modulus":[0,1]},"n":3,"k":1,
                         "generator":[[1,2,3]],"parity":[[1,0,0],[0,1,0]]})");
    // entry out of the field
    expect_malformed(R"({"field":{"p":5,"m":1,"modulus":[0,1]},"n":2,"k":1,
                         "generator":[[1,7]]})");
    // missing generator
    expect_malformed(R"({"field":{"p":5,"m":1,"modulus":[0,1]},"n":2,"k":1})");
    CHECK_THROWS_AS(read_code_file("does_not_exist_2819.json"), Error);
}

TEST_CASE("element wire encoding is the decimal canonical index") {
    Construction con = build_construction(TheoremId::T3_5, 9, 6);
    nlohmann::json j = code_to_json(con.permuted);
    CHECK(j["field"]["p"] == 3);
    CHECK(j["field"]["m"] == 2);
    CHECK(j["field"]["modulus"] == nlohmann::json({1, 0, 1}));
    // omega = xi^2 = 2*alpha has canonical index 6
    CHECK(j["provenance"]["omega"] == 6);
    for (const auto& row : j["generator"])
        for (const auto& v : row) {
            CHECK(v.is_number_integer());
            CHECK(v.get<int>() >= 0);
            CHECK(v.get<int>() < 9);
        }
}
