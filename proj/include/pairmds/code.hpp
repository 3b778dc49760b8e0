#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pairmds/detail/search.hpp"
#include "pairmds/linalg.hpp"

namespace pairmds {

constexpr std::uint64_t kDefaultEnumerationCap = 1ull << 22;

enum class Strategy { Auto, Message, Support };

inline const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::Auto: return "auto";
        case Strategy::Message: return "message";
        case Strategy::Support: return "support";
    }
    return "?";
}

struct WorkCounters {
    std::uint64_t supports_examined = 0;
    std::uint64_t codewords_examined = 0;
};

/// [n,k] linear code over GF(q): full-rank generator, optional parity-check
/// matrix, free-form provenance describing how it was built.
struct LinearCode {
    FieldPtr field;
    int n = 0;
    int k = 0;
    Matrix G;
    std::optional<Matrix> H;
    nlohmann::json provenance;
};

inline LinearCode make_linear_code(FieldPtr field, Matrix G, std::optional<Matrix> H,
                                   nlohmann::json provenance = {}) {
    int n = G.cols(), k = G.rows();
    require(n >= 1, Errc::DimensionMismatch, "code length must be >= 1");
    require(G.field()->same(*field), Errc::FieldMismatch, "generator field differs");
    require(rank(G) == k, Errc::DimensionMismatch, "generator matrix is not full row rank");
    if (H) {
        require(H->field()->same(*field), Errc::FieldMismatch, "parity field differs");
        require(H->cols() == n, Errc::DimensionMismatch, "parity width differs from code length");
        require(H->rows() == n - k, Errc::DimensionMismatch, "parity must have n-k rows");
        require(rank(*H) == n - k, Errc::RankDeficientParity, "parity matrix is rank deficient");
        require(mat_mul(G, H->transpose()).is_zero(), Errc::DimensionMismatch,
                "generator and parity are not orthogonal (G*H^T != 0)");
    }
    return LinearCode{std::move(field), n, k, std::move(G), std::move(H), std::move(provenance)};
}

/// code {x : H x^T = 0}; H empty (0 rows) yields the full space [n,n,1]
inline LinearCode from_parity(const Matrix& H) {
    require(H.cols() >= 1, Errc::DimensionMismatch, "parity matrix needs at least one column");
    require(H.rows() < H.cols() || H.rows() == 0, Errc::RankDeficientParity,
            "parity must have fewer rows than columns");
    require(rank(H) == H.rows(), Errc::RankDeficientParity, "parity matrix is rank deficient");
    Matrix G = kernel(H);
    return make_linear_code(H.field(), std::move(G), H, {{"kind", "from_parity"}});
}

inline LinearCode full_space(const FieldPtr& f, int n) {
    require(n >= 1, Errc::DimensionMismatch, "code length must be >= 1");
    return make_linear_code(f, Matrix::identity(f, n), Matrix(f, 0, n), {{"kind", "full_space"}});
}

/// GRS code with all-ones column multipliers: parameters [n, n-i, i+1], parity
/// check the i-row Vandermonde at the evaluation points.
inline LinearCode grs(const FieldPtr& f, std::span<const int> points, int redundancy) {
    int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            require(points[i] != points[j], Errc::DuplicatePoints, "evaluation points must be distinct");
    require(1 <= redundancy && redundancy < n, Errc::BadRedundancy,
            "redundancy must lie in [1, n)");
    Matrix H = vandermonde(f, points, redundancy);
    LinearCode C = from_parity(H);
    C.provenance = {{"kind", "grs"},
                    {"points", std::vector<int>(points.begin(), points.end())},
                    {"redundancy", redundancy}};
    return C;
}

/// stored parity if present, else the kernel of G
inline Matrix parity_matrix(const LinearCode& C) {
    if (C.H) return *C.H;
    return kernel(C.G);
}

inline LinearCode dual(const LinearCode& C) {
    nlohmann::json prov = {{"kind", "dual"}};
    if (C.k == 0) return make_linear_code(C.field, Matrix::identity(C.field, C.n),
                                          Matrix(C.field, 0, C.n), prov);
    if (C.k == C.n)
        return LinearCode{C.field, C.n, 0, Matrix(C.field, 0, C.n), Matrix::identity(C.field, C.n), prov};
    Matrix Gd = parity_matrix(C);
    return make_linear_code(C.field, std::move(Gd), C.G, prov);
}

inline std::vector<int> encode(const LinearCode& C, std::span<const int> msg) {
    require(static_cast<int>(msg.size()) == C.k, Errc::DimensionMismatch,
            "message length must equal code dimension");
    const Field& f = *C.field;
    std::vector<int> cw(C.n, 0);
    for (int i = 0; i < C.k; ++i) {
        int m = msg[i];
        if (m == 0) continue;
        auto row = C.G.row(i);
        for (int j = 0; j < C.n; ++j) cw[j] = f.add(cw[j], f.mul(m, row[j]));
    }
    return cw;
}

inline bool is_codeword(const LinearCode& C, std::span<const int> v) {
    if (static_cast<int>(v.size()) != C.n) return false;
    Matrix H = parity_matrix(C);
    const Field& f = *C.field;
    for (int r = 0; r < H.rows(); ++r) {
        int s = 0;
        auto row = H.row(r);
        for (int j = 0; j < C.n; ++j) s = f.add(s, f.mul(row[j], v[j]));
        if (s != 0) return false;
    }
    return true;
}

/// Visits all q^k codewords exactly once (zero first), amortized O(n) each via
/// a base-q odometer over the message space: stepping digit i from element d
/// to the next index adds (next - d) * G_i to the running codeword.
template <class Fn>
void for_each_codeword(const LinearCode& C, Fn&& fn) {
    const Field& f = *C.field;
    const int q = f.q();
    auto total = detail::pow_within(q, C.k, UINT64_MAX >> 1);
    require(total.has_value(), Errc::EnumerationTooLarge, "q^k does not fit in 64 bits");
    std::vector<int> delta(q);  // delta[d] = (d+1 mod q) - d as field elements
    for (int d = 0; d < q; ++d) delta[d] = f.sub(d == q - 1 ? 0 : d + 1, d);
    std::vector<int> msg(C.k, 0), cw(C.n, 0);
    fn(std::span<const int>(cw));
    const int* add = f.add_table();
    const int* mul = f.mul_table();
    for (std::uint64_t step = 1; step < *total; ++step) {
        int i = 0;
        for (;;) {
            auto row = C.G.row(i);
            const int* scale = mul + static_cast<size_t>(delta[msg[i]]) * q;
            for (int j = 0; j < C.n; ++j) cw[j] = add[cw[j] * q + scale[row[j]]];
            if (msg[i] == q - 1) {
                msg[i] = 0;
                ++i;
            } else {
                ++msg[i];
                break;
            }
        }
        fn(std::span<const int>(cw));
    }
}

inline std::vector<std::vector<int>> enumerate_codewords(const LinearCode& C,
                                                         std::uint64_t cap = kDefaultEnumerationCap) {
    auto total = detail::pow_within(C.field->q(), C.k, cap);
    require(total.has_value(), Errc::EnumerationTooLarge,
            "q^k exceeds the enumeration cap of " + std::to_string(cap));
    std::vector<std::vector<int>> out;
    out.reserve(*total);
    for_each_codeword(C, [&](std::span<const int> cw) { out.emplace_back(cw.begin(), cw.end()); });
    return out;
}

struct DistanceResult {
    int distance = 0;
    std::vector<int> witness;
    Strategy strategy_used = Strategy::Message;
    WorkCounters work;
};

namespace detail {

// witness ordering: support set lexicographically, then entries normalized to
// leading coefficient 1
struct WitnessCandidate {
    std::vector<int> support;
    std::vector<int> codeword;  // normalized, full length
    bool better_than(const WitnessCandidate& o) const {
        if (support != o.support) return support < o.support;
        return codeword < o.codeword;
    }
};

inline std::vector<int> support_of(std::span<const int> v) {
    std::vector<int> s;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i] != 0) s.push_back(i);
    return s;
}

inline Strategy resolve_strategy(const LinearCode& C, Strategy s, std::uint64_t cap) {
    if (s != Strategy::Auto) return s;
    return detail::pow_within(C.field->q(), C.k, cap) ? Strategy::Message : Strategy::Support;
}

}  // namespace detail

/// Exact minimum Hamming distance. Support strategy: ascending-weight column
/// subsets of H until the first linearly dependent subset. Message strategy:
/// brute force over all q^k codewords (requires q^k <= cap).
inline DistanceResult min_hamming_distance(const LinearCode& C, Strategy strategy = Strategy::Auto,
                                           std::uint64_t cap = kDefaultEnumerationCap) {
    require(C.k >= 1, Errc::ZeroCode, "minimum distance of the zero code is undefined");
    Strategy used = detail::resolve_strategy(C, strategy, cap);
    const Field& f = *C.field;
    DistanceResult res;
    res.strategy_used = used;

    if (used == Strategy::Message) {
        require(detail::pow_within(f.q(), C.k, cap).has_value(), Errc::EnumerationTooLarge,
                "q^k exceeds the enumeration cap of " + std::to_string(cap));
        int best_w = C.n + 1;
        detail::WitnessCandidate best;
        for_each_codeword(C, [&](std::span<const int> cw) {
            res.work.codewords_examined++;
            int w = 0;
            for (int x : cw) w += x != 0;
            if (w == 0 || w > best_w) return;
            detail::WitnessCandidate cand{detail::support_of(cw), {cw.begin(), cw.end()}};
            detail::normalize_leading(f, cand.codeword);
            if (w < best_w || cand.better_than(best)) {
                best_w = w;
                best = std::move(cand);
            }
        });
        res.distance = best_w;
        res.witness = std::move(best.codeword);
        return res;
    }

    Matrix H = parity_matrix(C);
    detail::ColumnKernel solver(H);
    std::vector<int> scratch;
    for (int w = 1; w <= C.n; ++w) {
        for (detail::CombinationGen gen(C.n, w); gen.valid(); gen.next()) {
            auto S = gen.get();
            res.work.supports_examined++;
            if (solver.solve(S) == 0) continue;
            // first dependent subset in (weight, support-lex) order: every
            // kernel vector has full support, else an earlier weight had hit
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
            if (best_vals.empty()) continue;
            res.distance = w;
            res.witness.assign(C.n, 0);
            for (int j = 0; j < w; ++j) res.witness[S[j]] = best_vals[j];
            return res;
        }
    }
    raise(Errc::ZeroCode, "no nonzero codeword found");  // unreachable for k >= 1
}

}  // namespace pairmds
