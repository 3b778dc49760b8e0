#pragma once

#include <future>
#include <thread>
#include <vector>

#include "pairmds/construct.hpp"

namespace pairmds {

struct SweepRow {
    int n = 0;
    int length = 0;
    int k = 0;
    int d_H = 0;
    int d_sp = 0;
    PairClass cls = PairClass::NONE;
    bool pass = false;
    std::string note;
};

inline std::pair<int, int> full_n_range(TheoremId id, int q) {
    return {traits(id).min_n, q};
}

/// Verifies every n in [n_lo, n_hi]; rows are computed independently (workers
/// fan them out) and merged in input order, so output does not depend on the
/// worker count. A failing row records its mismatch instead of aborting.
inline std::vector<SweepRow> run_sweep(TheoremId id, int q, int n_lo, int n_hi,
                                       Strategy strategy = Strategy::Auto,
                                       std::uint64_t cap = kDefaultEnumerationCap, int workers = 1) {
    std::vector<int> ns;
    for (int n = n_lo; n <= n_hi; ++n) ns.push_back(n);
    std::vector<SweepRow> rows(ns.size());
    auto run_one = [&](size_t idx) {
        int n = ns[idx];
        SweepRow row;
        row.n = n;
        try {
            VerifyOutcome out = verify(id, q, n, strategy, cap);
            row.length = out.report.n;
            row.k = out.report.k;
            row.d_H = out.report.d_H;
            row.d_sp = out.report.d_sp;
            row.cls = out.report.classification;
            row.pass = out.pass;
            row.note = out.mismatch;
        } catch (const std::exception& e) {
            row.pass = false;
            row.note = e.what();
        }
        rows[idx] = std::move(row);
    };
    if (workers <= 1 || ns.size() <= 1) {
        for (size_t i = 0; i < ns.size(); ++i) run_one(i);
        return rows;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < ns.size(); i = next.fetch_add(1)) run_one(i);
    };
    int w = std::min<int>(workers, static_cast<int>(ns.size()));
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (int i = 0; i < w; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return rows;
}

inline std::string sweep_row_line(const SweepRow& r) {
    std::string s = "n=" + std::to_string(r.n) + " length=" + std::to_string(r.length) +
                    " k=" + std::to_string(r.k) + " d_H=" + std::to_string(r.d_H) +
                    " d_sp=" + std::to_string(r.d_sp) + " class=" + to_string(r.cls) +
                    " verdict=" + (r.pass ? "ok" : "FAIL");
    if (!r.note.empty()) s += " (" + r.note + ")";
    return s;
}

}  // namespace pairmds
