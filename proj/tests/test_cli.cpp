// Drives the installed CLI binary end to end. The binary path arrives via the
// PAIRMDS_CLI environment variable (set by ctest); the exit-code contract is
// 0 = verified, 1 = verification mismatch, 2 = invalid input.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

std::string cli_path() {
    const char* p = std::getenv("PAIRMDS_CLI");
    REQUIRE_MESSAGE(p != nullptr,
                    "PAIRMDS_CLI must point at the pairmds binary (ctest sets it)");
    return p;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string out_file = "pairmds_cli_out.txt";
    std::string cmd = env_prefix + "\"" + cli_path() + "\" " + args + " > " + out_file + " 2>&1";
    int rc = std::system(cmd.c_str());
    int exit_code = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(out_file.c_str());
    return {exit_code, ss.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli: construct then analyze round trip") {
    std::string file = "pairmds_cli_code.json";
    auto c = run_cli("construct --theorem 3.2 --q 7 --n 4 --out " + file);
    CHECK(c.exit_code == 0);
    CHECK(contains(c.output, "n=12 k=7 q=7"));
    CHECK(contains(c.output, "theorem=3.2"));

    auto a = run_cli("analyze " + file);
    CHECK(a.exit_code == 0);
    CHECK(contains(a.output, "n=12 k=7 q=7 d_H=4 d_sp=7 class=MDS"));
    CHECK(contains(a.output, "witness_H="));
    CHECK(contains(a.output, "witness_sp="));

    auto s = run_cli("analyze " + file + " --strategy support");
    CHECK(s.exit_code == 0);
    CHECK(contains(s.output, "d_H=4 d_sp=7 class=MDS"));
    std::remove(file.c_str());

    // an explicit field modulus is accepted and threads into the file
    auto m = run_cli("construct --theorem 3.5 --q 9 --n 6 --modulus 2,2,1 --out " + file);
    CHECK(m.exit_code == 0);
    CHECK(contains(m.output, "n=24 k=18 q=9"));
    auto ma = run_cli("analyze " + file);
    CHECK(ma.exit_code == 0);
    CHECK(contains(ma.output, "n=24 k=18 q=9 d_H=4 d_sp=7 class=AMDS"));
    std::remove(file.c_str());
}

TEST_CASE("cli: analyze writes an optional json report") {
    std::string file = "pairmds_cli_code34.json";
    std::string rep = "pairmds_cli_report.json";
    CHECK(run_cli("construct --theorem 3.4 --q 5 --n 5 --out " + file).exit_code == 0);
    auto a = run_cli("analyze " + file + " --json-out " + rep);
    CHECK(a.exit_code == 0);
    CHECK(contains(a.output, "n=20 k=16 q=5 d_H=3 d_sp=6 class=MDS"));
    std::ifstream in(rep);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(contains(ss.str(), "\"class\": \"MDS\""));
    CHECK(contains(ss.str(), "\"strategy\": \"support\""));
    std::remove(file.c_str());
    std::remove(rep.c_str());
}

TEST_CASE("cli: invalid parameters exit 2 with the violated condition") {
    auto r = run_cli("construct --theorem 3.1 --q 6 --n 4 --out nowhere.json");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "prime power"));

    auto r2 = run_cli("construct --theorem 3.2 --q 4 --n 4 --out nowhere.json");
    CHECK(r2.exit_code == 2);
    CHECK(contains(r2.output, "odd"));

    auto r3 = run_cli("analyze no_such_file_xyz.json");
    CHECK(r3.exit_code == 2);

    auto r4 = run_cli("sweep --theorem 9.9 --q 7");
    CHECK(r4.exit_code == 2);

    auto r5 = run_cli("analyze");  // missing required positional
    CHECK(r5.exit_code == 2);
}

TEST_CASE("cli: malformed and degenerate files exit 2") {
    std::string file = "pairmds_cli_bad.json";
    {
        std::ofstream out(file);
        out << R"({"field":{"p":5,"m":1,"modulus":[0,1]},"n":3,"k":0,"generator":[]})";
    }
    auto r = run_cli("analyze " + file);
    CHECK(r.exit_code == 2);  // zero-dimension code
    {
        std::ofstream out(file);
        out << "{broken";
    }
    CHECK(run_cli("analyze " + file).exit_code == 2);
    std::remove(file.c_str());
}

TEST_CASE("cli: enumeration cap is enforced for the message strategy") {
    std::string file = "pairmds_cli_big.json";
    CHECK(run_cli("construct --theorem 3.4 --q 5 --n 5 --out " + file).exit_code == 0);
    auto r = run_cli("analyze " + file + " --strategy message");  // 5^16 >> 2^22
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "EnumerationTooLarge"));
    std::remove(file.c_str());
}

TEST_CASE("cli: PAIRMDS_CAP environment variable overrides the cap") {
    std::string file = "pairmds_cli_small.json";
    auto c = run_cli("construct --theorem 3.1 --q 4 --n 4 --out " + file);
    CHECK(c.exit_code == 0);
    CHECK(contains(c.output, "n=12 k=6 q=4"));
    // 4^6 = 4096 codewords: refused under a tiny env cap, fine under a big one
    auto small_cap = run_cli("analyze " + file + " --strategy message", "PAIRMDS_CAP=100 ");
    CHECK(small_cap.exit_code == 2);
    CHECK(contains(small_cap.output, "EnumerationTooLarge"));
    auto big_cap = run_cli("analyze " + file + " --strategy message", "PAIRMDS_CAP=100000 ");
    CHECK(big_cap.exit_code == 0);
    CHECK(contains(big_cap.output, "d_H=4 d_sp=8 class=MDS"));
    std::remove(file.c_str());
}

TEST_CASE("cli: worked examples all verify") {
    for (const char* id : {"3.1", "3.2", "3.3", "3.4", "3.5"}) {
        auto r = run_cli(std::string("example --id ") + id);
        CAPTURE(id);
        CHECK(r.exit_code == 0);
        CHECK(contains(r.output, "PASS example"));
        CHECK(!contains(r.output, "FAIL "));
    }
}

TEST_CASE("cli: sweep verdicts and exit codes") {
    auto s = run_cli("sweep --theorem 3.2 --q 7");
    CHECK(s.exit_code == 0);
    CHECK(contains(s.output, "n=4 length=12 k=7 d_H=4 d_sp=7 class=MDS verdict=ok"));
    CHECK(contains(s.output, "n=7 length=21 k=16 d_H=4 d_sp=7 class=MDS verdict=ok"));
    CHECK(contains(s.output, "all 4 rows verified"));

    auto s2 = run_cli("sweep --theorem 3.3 --q 7 --n 5..6 --workers 2");
    CHECK(s2.exit_code == 0);
    CHECK(contains(s2.output, "all 2 rows verified"));

    // the d_sp=8 family misses its target at n=5: exit 1 and the failing row
    // is reported honestly and highlighted
    auto s3 = run_cli("sweep --theorem 3.1 --q 7");
    CHECK(s3.exit_code == 1);
    CHECK(contains(s3.output, "n=4 length=12 k=6 d_H=4 d_sp=8 class=MDS verdict=ok"));
    CHECK(contains(s3.output, "n=5 length=15 k=9 d_H=4 d_sp=7 class=AMDS verdict=FAIL"));
    CHECK(contains(s3.output, "FIRST FAILURE: n=5"));
}

TEST_CASE("cli: lemma censuses") {
    auto l = run_cli("lemma --id 3.1 --q 7 --n 4");
    CHECK(l.exit_code == 0);
    CHECK(contains(l.output, "PASS lemma 3.1"));
    CHECK(contains(l.output, "[2,2,2] x30"));

    auto l2 = run_cli("lemma --id 3.4 --q 5 --n 5");
    CHECK(l2.exit_code == 0);
    CHECK(contains(l2.output, "[1,1,1] x20"));
}
