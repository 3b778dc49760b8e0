#pragma once

#include <array>
#include <string>
#include <vector>

#include "pairmds/code.hpp"

namespace pairmds {

/// cyclic symbol-pair read vector ((u_0,u_1),...,(u_{n-1},u_0))
inline std::vector<std::array<int, 2>> pair_read(std::span<const int> u) {
    int n = static_cast<int>(u.size());
    require(n >= 2, Errc::TooShort, "pair read needs length >= 2");
    std::vector<std::array<int, 2>> out(n);
    for (int i = 0; i < n; ++i) out[i] = {u[i], u[(i + 1) % n]};
    return out;
}

/// number of cyclically adjacent pairs different from (0,0)
inline int pair_weight(std::span<const int> u) {
    int n = static_cast<int>(u.size());
    require(n >= 2, Errc::TooShort, "pair weight needs length >= 2");
    int w = 0;
    for (int i = 0; i < n; ++i) w += (u[i] != 0 || u[(i + 1) % n] != 0) ? 1 : 0;
    return w;
}

inline int hamming_weight(std::span<const int> u) {
    int w = 0;
    for (int x : u) w += x != 0;
    return w;
}

enum class PairClass { MDS, AMDS, NONE };

inline const char* to_string(PairClass c) {
    switch (c) {
        case PairClass::MDS: return "MDS";
        case PairClass::AMDS: return "AMDS";
        case PairClass::NONE: return "NONE";
    }
    return "?";
}

/// Singleton classification for a linear (n, q^k, d_sp) symbol-pair code:
/// MDS at k = n - d_sp + 2, AMDS one below.
inline PairClass classify(int n, int k, int d_sp, int q) {
    (void)q;
    require(2 <= d_sp && d_sp <= n, Errc::BoundViolation, "d_sp must lie in [2, n]");
    require(k <= n - d_sp + 2, Errc::BoundViolation,
            "k exceeds the pair Singleton bound; upstream computation is wrong");
    if (k == n - d_sp + 2) return PairClass::MDS;
    if (k == n - d_sp + 1) return PairClass::AMDS;
    return PairClass::NONE;
}

namespace detail {

struct PairCandidate {
    int pair_w = -1;
    int hamming_w = -1;
    WitnessCandidate wit;
    bool better_than(const PairCandidate& o) const {
        if (o.pair_w < 0) return true;
        if (pair_w != o.pair_w) return pair_w < o.pair_w;
        if (hamming_w != o.hamming_w) return hamming_w < o.hamming_w;
        return wit.better_than(o.wit);
    }
};

}  // namespace detail

/// Exact minimum symbol-pair distance over nonzero codewords.
///
/// Support strategy: ascending Hamming weight w starting at d_H; every size-w
/// column subset of H whose kernel has a full-support solution is a codeword
/// support with pair weight |S u (S-1)|. Terminates once w + 1 >= B for the
/// best B seen, exact because w_sp >= w_H + 1 below full weight and w_sp = n
/// at full weight. Message strategy: brute force over q^k - 1 codewords.
inline DistanceResult min_pair_distance(const LinearCode& C, Strategy strategy = Strategy::Auto,
                                        std::uint64_t cap = kDefaultEnumerationCap,
                                        int known_d_h = 0) {
    require(C.k >= 1, Errc::ZeroCode, "pair distance of the zero code is undefined");
    require(C.n >= 2, Errc::TooShort, "pair metric needs length >= 2");
    Strategy used = detail::resolve_strategy(C, strategy, cap);
    const Field& f = *C.field;
    DistanceResult res;
    res.strategy_used = used;

    if (used == Strategy::Message) {
        require(detail::pow_within(f.q(), C.k, cap).has_value(), Errc::EnumerationTooLarge,
                "q^k exceeds the enumeration cap of " + std::to_string(cap));
        detail::PairCandidate best;
        for_each_codeword(C, [&](std::span<const int> cw) {
            res.work.codewords_examined++;
            int wh = hamming_weight(cw);
            if (wh == 0) return;
            int wp = pair_weight(cw);
            if (best.pair_w >= 0 && wp > best.pair_w) return;
            detail::PairCandidate cand{wp, wh, {detail::support_of(cw), {cw.begin(), cw.end()}}};
            detail::normalize_leading(f, cand.wit.codeword);
            if (cand.better_than(best)) best = std::move(cand);
        });
        res.distance = best.pair_w;
        res.witness = std::move(best.wit.codeword);
        return res;
    }

    int start_w = known_d_h;
    if (start_w <= 0) {
        DistanceResult dh = min_hamming_distance(C, Strategy::Support, cap);
        res.work = dh.work;
        start_w = dh.distance;
    }
    Matrix H = parity_matrix(C);
    detail::ColumnKernel solver(H);
    std::vector<int> scratch;
    detail::PairCandidate best;
    for (int w = start_w; w <= C.n; ++w) {
        if (best.pair_w >= 0 && w + 1 >= best.pair_w) break;
        for (detail::CombinationGen gen(C.n, w); gen.valid(); gen.next()) {
            auto S = gen.get();
            res.work.supports_examined++;
            int pw = detail::support_pair_weight(S, C.n);
            // supports with pair weight beyond the current best cannot win
            if (best.pair_w >= 0 && pw > best.pair_w) continue;
            if (solver.solve(S) == 0) continue;
            std::vector<int> best_vals;
            detail::for_each_projective_solution(f, solver, w, scratch,
                                                 [&](std::span<const int> vals) {
                                                     res.work.codewords_examined++;
                                                     for (int x : vals)
                                                         if (x == 0) return;
                                                     std::vector<int> v(vals.begin(), vals.end());
                                                     detail::normalize_leading(f, v);
                                                     if (best_vals.empty() || v < best_vals)
                                                         best_vals = std::move(v);
                                                 });
            if (best_vals.empty()) continue;  // no codeword with support exactly S
            detail::PairCandidate cand;
            cand.pair_w = pw;
            cand.hamming_w = w;
            cand.wit.support.assign(S.begin(), S.end());
            cand.wit.codeword.assign(C.n, 0);
            for (int j = 0; j < w; ++j) cand.wit.codeword[S[j]] = best_vals[j];
            if (cand.better_than(best)) best = std::move(cand);
        }
    }
    require(best.pair_w >= 0, Errc::ZeroCode, "no nonzero codeword found");
    res.distance = best.pair_w;
    res.witness = std::move(best.wit.codeword);
    return res;
}

/// full report: exact d_H and d_sp with witnesses, classification, work counters
struct PairAnalysisReport {
    int n = 0, k = 0, q = 0;
    int d_H = 0;
    int d_sp = 0;
    PairClass classification = PairClass::NONE;
    std::vector<int> witness_H;
    std::vector<int> witness_sp;
    Strategy strategy = Strategy::Auto;
    WorkCounters work;
};

inline PairAnalysisReport analyze(const LinearCode& C, Strategy strategy = Strategy::Auto,
                                  std::uint64_t cap = kDefaultEnumerationCap) {
    require(C.k >= 1, Errc::ZeroCode, "cannot analyze the zero code");
    require(C.n >= 2, Errc::TooShort, "pair metric needs length >= 2");
    PairAnalysisReport rep;
    rep.n = C.n;
    rep.k = C.k;
    rep.q = C.field->q();
    DistanceResult dh = min_hamming_distance(C, strategy, cap);
    DistanceResult dsp = min_pair_distance(C, strategy, cap, dh.distance);
    rep.d_H = dh.distance;
    rep.d_sp = dsp.distance;
    rep.witness_H = std::move(dh.witness);
    rep.witness_sp = std::move(dsp.witness);
    rep.strategy = dsp.strategy_used;
    rep.work.supports_examined = dh.work.supports_examined + dsp.work.supports_examined;
    rep.work.codewords_examined = dh.work.codewords_examined + dsp.work.codewords_examined;
    rep.classification = classify(rep.n, rep.k, rep.d_sp, rep.q);
    // witnesses must verify by re-evaluation
    require(is_codeword(C, rep.witness_H) && hamming_weight(rep.witness_H) == rep.d_H,
            Errc::VerificationFailed, "Hamming witness failed re-evaluation");
    require(is_codeword(C, rep.witness_sp) && pair_weight(rep.witness_sp) == rep.d_sp,
            Errc::VerificationFailed, "pair witness failed re-evaluation");
    return rep;
}

/// stable single-line report grammar used by the CLI and tests
inline std::string report_line(const PairAnalysisReport& r) {
    return "n=" + std::to_string(r.n) + " k=" + std::to_string(r.k) + " q=" + std::to_string(r.q) +
           " d_H=" + std::to_string(r.d_H) + " d_sp=" + std::to_string(r.d_sp) +
           " class=" + to_string(r.classification);
}

inline nlohmann::json report_json(const PairAnalysisReport& r) {
    return {{"n", r.n},
            {"k", r.k},
            {"q", r.q},
            {"d_H", r.d_H},
            {"d_sp", r.d_sp},
            {"class", to_string(r.classification)},
            {"witness_H", r.witness_H},
            {"witness_sp", r.witness_sp},
            {"strategy", to_string(r.strategy)},
            {"work",
             {{"supports_examined", r.work.supports_examined},
              {"codewords_examined", r.work.codewords_examined}}}};
}

}  // namespace pairmds
