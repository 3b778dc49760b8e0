// pairmds: construct the MDS/AMDS symbol-pair codes of the five matrix-product
// families, analyze code files exactly, reproduce the worked examples, and run
// theorem sweeps and lemma support censuses.
//
// exit codes: 0 success/verified, 1 verification mismatch, 2 invalid input

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pairmds/pairmds.hpp"

namespace {

using namespace pairmds;

std::uint64_t default_cap() {
    if (const char* env = std::getenv("PAIRMDS_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring unparsable PAIRMDS_CAP='" << env << "'\n";
    }
    return kDefaultEnumerationCap;
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

Strategy parse_strategy(const std::string& s) {
    if (s == "auto") return Strategy::Auto;
    if (s == "message") return Strategy::Message;
    if (s == "support") return Strategy::Support;
    raise(Errc::InadmissibleParameters, "unknown strategy '" + s + "'");
}

int cmd_construct(const std::string& theorem, int q, int n, const std::vector<int>& modulus,
                  const std::string& out_path) {
    TheoremId id = theorem_from_string(theorem);
    std::optional<std::vector<int>> mod;
    if (!modulus.empty()) mod = modulus;
    LinearCode D = build(id, q, n, mod);
    write_code_file(out_path, D);
    std::cout << "n=" << D.n << " k=" << D.k << " q=" << D.field->q() << "\n";
    std::cout << "provenance: theorem=" << theorem << " q=" << q << " n=" << n
              << " omega=" << D.provenance["omega"].get<int>() << " points=["
              << join(D.provenance["points"].get<std::vector<int>>()) << "]\n";
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int cmd_analyze(const std::string& path, const std::string& strategy, std::uint64_t cap,
                int workers, const std::string& json_out) {
    (void)workers;  // sweep rows fan out; a single analysis runs one engine
    LinearCode C = read_code_file(path);
    PairAnalysisReport rep = analyze(C, parse_strategy(strategy), cap);
    std::cout << report_line(rep) << "\n";
    std::cout << "witness_H=[" << join(rep.witness_H) << "]\n";
    std::cout << "witness_sp=[" << join(rep.witness_sp) << "]\n";
    std::cout << "strategy=" << to_string(rep.strategy)
              << " supports_examined=" << rep.work.supports_examined
              << " codewords_examined=" << rep.work.codewords_examined << "\n";
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        require(out.good(), Errc::MalformedFile, "cannot open '" + json_out + "' for writing");
        out << report_json(rep).dump(1) << "\n";
    }
    return 0;
}

int cmd_example(const std::string& id_str, std::uint64_t cap) {
    TheoremId id = theorem_from_string(id_str);
    const WorkedExample& ex = worked_example(id);
    Construction con = build_construction(id, ex.q, ex.n);
    PairAnalysisReport rep = analyze(con.permuted, Strategy::Auto, cap);
    std::vector<int> listing = destination_listing(con.sigma);

    int failures = 0;
    auto check = [&](const std::string& what, const std::string& got, const std::string& want) {
        bool ok = got == want;
        std::cout << (ok ? "PASS " : "FAIL ") << what << ": " << got;
        if (!ok) {
            std::cout << " (expected " << want << ")";
            ++failures;
        }
        std::cout << "\n";
    };
    check("n", std::to_string(rep.n), std::to_string(ex.N));
    check("k", std::to_string(rep.k), std::to_string(ex.k));
    check("d_H", std::to_string(rep.d_H), std::to_string(ex.d_H));
    check("d_sp", std::to_string(rep.d_sp), std::to_string(ex.d_sp));
    check("class", to_string(rep.classification), to_string(ex.cls));
    check("permutation", "(" + join(listing) + ")", "(" + join(ex.listing) + ")");
    std::cout << (failures == 0 ? "PASS" : "FAIL") << " example " << id_str << " over GF("
              << ex.q << "), [" << ex.N << "," << ex.k << "]\n";
    return failures == 0 ? 0 : 1;
}

int cmd_sweep(const std::string& theorem, int q, const std::string& n_range,
              const std::string& strategy, std::uint64_t cap, int workers) {
    TheoremId id = theorem_from_string(theorem);
    auto [lo, hi] = full_n_range(id, q);
    if (!n_range.empty()) {
        auto dots = n_range.find("..");
        try {
            if (dots == std::string::npos) {
                lo = hi = std::stoi(n_range);
            } else {
                lo = std::stoi(n_range.substr(0, dots));
                hi = std::stoi(n_range.substr(dots + 2));
            }
        } catch (const std::exception&) {
            raise(Errc::InadmissibleParameters, "bad --n range '" + n_range + "' (want a or a..b)");
        }
        require(lo <= hi, Errc::InadmissibleParameters,
                "empty --n range '" + n_range + "'");
    }
    // fail fast with the violated condition named
    check_admissible(id, q, lo);
    check_admissible(id, q, hi);
    std::vector<SweepRow> rows = run_sweep(id, q, lo, hi, parse_strategy(strategy), cap, workers);
    int failures = 0;
    for (const auto& row : rows) {
        std::cout << sweep_row_line(row) << "\n";
        failures += row.pass ? 0 : 1;
    }
    if (failures) {
        for (const auto& row : rows)
            if (!row.pass) {
                std::cout << "FIRST FAILURE: " << sweep_row_line(row) << "\n";
                break;
            }
        return 1;
    }
    std::cout << "all " << rows.size() << " rows verified (theorem " << theorem << ", q=" << q
              << ")\n";
    return 0;
}

int cmd_lemma(const std::string& id_str, int q, int n) {
    TheoremId id = theorem_from_string(id_str);
    LemmaReport rep = lemma_census(id, q, n);
    for (const auto& wr : rep.weights) {
        std::cout << "w=" << wr.weight << ": ";
        if (wr.census.patterns.empty()) {
            std::cout << "no codewords\n";
        } else {
            std::cout << "\n";
            for (const auto& line : wr.notes) std::cout << "  " << line << "\n";
        }
        for (const auto& v : wr.violations) std::cout << "  VIOLATION: " << v << "\n";
    }
    std::cout << (rep.pass ? "PASS" : "FAIL") << " lemma " << id_str << " census at q=" << q
              << " n=" << n << "\n";
    return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbol-pair codes from matrix-product codes: construct, analyze, verify"};
    app.require_subcommand(1);
    std::uint64_t cap = default_cap();

    std::string theorem, out_path, n_range, file_path, json_out, id_str;
    std::string strategy = "auto";
    std::vector<int> modulus;
    int q = 0, n = 0, workers = 1;

    auto* c = app.add_subcommand("construct", "build a theorem instance and write a code file");
    c->add_option("--theorem", theorem, "theorem id (3.1..3.5)")->required();
    c->add_option("--q", q, "field order (prime power)")->required();
    c->add_option("--n", n, "constituent length")->required();
    c->add_option("--modulus", modulus, "field modulus coefficients c0,c1,... (monic, degree m)")
        ->delimiter(',');
    c->add_option("--out", out_path, "output code file")->required();

    auto* a = app.add_subcommand("analyze", "exact d_H / d_sp / MDS-AMDS report for a code file");
    a->add_option("file", file_path, "code file (JSON)")->required();
    a->add_option("--strategy", strategy, "auto|message|support")->default_str("auto");
    a->add_option("--cap", cap, "message-enumeration cap (default 2^22, env PAIRMDS_CAP)");
    a->add_option("--workers", workers, "worker threads");
    a->add_option("--json-out", json_out, "also write the report as JSON");

    auto* e = app.add_subcommand("example", "reproduce a worked example and check every value");
    e->add_option("--id", id_str, "example id (3.1..3.5)")->required();

    auto* s = app.add_subcommand("sweep", "verify a theorem over a range of n");
    s->add_option("--theorem", theorem, "theorem id (3.1..3.5)")->required();
    s->add_option("--q", q, "field order (prime power)")->required();
    s->add_option("--n", n_range, "n or a..b (default: the theorem's full range)");
    s->add_option("--strategy", strategy, "auto|message|support")->default_str("auto");
    s->add_option("--cap", cap, "message-enumeration cap");
    s->add_option("--workers", workers, "worker threads for sweep rows");

    auto* l = app.add_subcommand("lemma", "support census of the lemma behind one family");
    l->add_option("--id", id_str, "lemma id (3.1..3.5)")->required();
    l->add_option("--q", q, "field order (prime power)")->required();
    l->add_option("--n", n, "constituent length")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;
    }

    try {
        if (*c) return cmd_construct(theorem, q, n, modulus, out_path);
        if (*a) return cmd_analyze(file_path, strategy, cap, workers, json_out);
        if (*e) return cmd_example(id_str, cap);
        if (*s) return cmd_sweep(theorem, q, n_range, strategy, cap, workers);
        if (*l) return cmd_lemma(id_str, q, n);
    } catch (const pairmds::Error& err) {
        if (err.code() == pairmds::Errc::VerificationFailed) {
            std::cerr << "error: " << err.what() << "\n";
            return 1;
        }
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
