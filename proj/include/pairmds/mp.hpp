#pragma once

#include <vector>

#include "pairmds/code.hpp"

namespace pairmds {

/// Matrix-product code ingredients: M constituent codes of one length over one
/// field, and a full-row-rank M x N matrix A.
struct MpSpec {
    FieldPtr field;
    std::vector<LinearCode> constituents;
    Matrix A;
};

inline void validate_mp_spec(const MpSpec& spec) {
    int M = static_cast<int>(spec.constituents.size());
    require(M >= 1, Errc::ShapeError, "matrix-product code needs at least one constituent");
    require(spec.A.rows() == M, Errc::ShapeError, "A must have one row per constituent");
    require(spec.A.rows() <= spec.A.cols(), Errc::ShapeError, "A must satisfy M <= N");
    require(rank(spec.A) == M, Errc::RankDeficientA, "A must have full row rank");
    for (const auto& C : spec.constituents) {
        require(C.field->same(*spec.field), Errc::FieldMismatch, "constituent field differs");
        require(C.n == spec.constituents[0].n, Errc::DimensionMismatch,
                "constituent lengths differ");
    }
}

/// non-singular by columns: every t x t minor taken from the first t rows is
/// invertible, for every t in [1, M]
inline bool is_nsc(const Matrix& A) {
    require(A.rows() <= A.cols(), Errc::ShapeError, "NSC check requires M <= N");
    for (int t = 1; t <= A.rows(); ++t) {
        std::vector<int> rows_sel(t);
        for (int i = 0; i < t; ++i) rows_sel[i] = i;
        for (detail::CombinationGen gen(A.cols(), t); gen.valid(); gen.next()) {
            auto cols_sel = gen.get();
            if (rank(submatrix(A, rows_sel, cols_sel)) < t) return false;
        }
    }
    return true;
}

inline nlohmann::json mp_provenance(const MpSpec& spec) {
    nlohmann::json consts = nlohmann::json::array();
    for (const auto& C : spec.constituents) {
        nlohmann::json d = {{"n", C.n}, {"k", C.k}};
        if (C.provenance.contains("kind")) d["kind"] = C.provenance["kind"];
        if (C.provenance.contains("redundancy")) d["redundancy"] = C.provenance["redundancy"];
        consts.push_back(std::move(d));
    }
    nlohmann::json a_rows = nlohmann::json::array();
    for (int i = 0; i < spec.A.rows(); ++i) {
        auto row = spec.A.row(i);
        a_rows.push_back(std::vector<int>(row.begin(), row.end()));
    }
    return {{"kind", "matrix_product"}, {"constituents", std::move(consts)}, {"A", std::move(a_rows)}};
}

/// [nN, sum k_i] code with the block generator (a_ij G_i)
inline LinearCode mp_generator(const MpSpec& spec) {
    validate_mp_spec(spec);
    const Field& f = *spec.field;
    int M = static_cast<int>(spec.constituents.size());
    int N = spec.A.cols();
    int n = spec.constituents[0].n;
    int ksum = 0;
    for (const auto& C : spec.constituents) ksum += C.k;
    Matrix G(spec.field, ksum, n * N);
    int r = 0;
    for (int i = 0; i < M; ++i) {
        const Matrix& Gi = spec.constituents[i].G;
        for (int gi = 0; gi < Gi.rows(); ++gi) {
            for (int j = 0; j < N; ++j) {
                int a = spec.A.get(i, j);
                if (a == 0) continue;
                for (int c = 0; c < n; ++c) G.set(r, j * n + c, f.mul(a, Gi.get(gi, c)));
            }
            ++r;
        }
    }
    return make_linear_code(spec.field, std::move(G), std::nullopt, mp_provenance(spec));
}

/// Parity-check matrix assembled from the constituents' parity blocks with the
/// coefficients of M * A^{-1}; the global 1/M factor is dropped (row scaling
/// keeps the null space), leaving the block coefficients at plain omega powers.
inline Matrix mp_parity(const MpSpec& spec) {
    validate_mp_spec(spec);
    require(spec.A.rows() == spec.A.cols(), Errc::NonSquareA,
            "parity construction requires a square A");
    const Field& f = *spec.field;
    int M = spec.A.rows();
    int n = spec.constituents[0].n;
    Matrix B = [&] {
        try {
            return inverse(spec.A);
        } catch (const Error& e) {
            if (e.code() == Errc::SingularMatrix) raise(Errc::SingularA, "A is singular");
            throw;
        }
    }();
    int m_scalar = 0;
    for (int i = 0; i < M; ++i) m_scalar = f.add(m_scalar, 1);
    require(m_scalar != 0, Errc::SingularA, "block count vanishes in the field characteristic");
    B = B.scaled(m_scalar);
    int hsum = 0;
    for (const auto& C : spec.constituents) {
        require(C.H.has_value(), Errc::MissingConstituentParity,
                "constituent carries no parity-check matrix");
        hsum += C.H->rows();
    }
    Matrix H(spec.field, hsum, n * M);
    int r = 0;
    for (int i = 0; i < M; ++i) {
        const Matrix& Hi = *spec.constituents[i].H;
        for (int hi = 0; hi < Hi.rows(); ++hi) {
            for (int j = 0; j < M; ++j) {
                int b = B.get(j, i);  // block (i,j) carries (A^{-1})_{ji}
                if (b == 0) continue;
                for (int c = 0; c < n; ++c) H.set(r, j * n + c, f.mul(b, Hi.get(hi, c)));
            }
            ++r;
        }
    }
    return H;
}

inline LinearCode mp_code(const MpSpec& spec) {
    LinearCode C = mp_generator(spec);
    C = make_linear_code(C.field, C.G, mp_parity(spec), C.provenance);
    return C;
}

/// dual of the MP code as the MP code of the dual constituents with (A^{-1})^T
inline LinearCode mp_dual(const MpSpec& spec) {
    validate_mp_spec(spec);
    require(spec.A.rows() == spec.A.cols(), Errc::NonSquareA, "dual requires a square A");
    Matrix Binv = [&] {
        try {
            return inverse(spec.A);
        } catch (const Error& e) {
            if (e.code() == Errc::SingularMatrix) raise(Errc::SingularA, "A is singular");
            throw;
        }
    }();
    MpSpec dual_spec{spec.field, {}, Binv.transpose()};
    dual_spec.constituents.reserve(spec.constituents.size());
    for (const auto& C : spec.constituents) dual_spec.constituents.push_back(dual(C));
    return mp_generator(dual_spec);
}

/// Lemma bound min_i d_H(C_i) * (M - i + 1) for NSC A (1-based i)
inline int lemma21_bound(const MpSpec& spec) {
    validate_mp_spec(spec);
    require(is_nsc(spec.A), Errc::NotNsc, "bound requires an NSC matrix");
    int M = static_cast<int>(spec.constituents.size());
    int best = -1;
    for (int i = 0; i < M; ++i) {
        int d = min_hamming_distance(spec.constituents[i], Strategy::Support).distance;
        int v = d * (M - i);
        if (best < 0 || v < best) best = v;
    }
    return best;
}

}  // namespace pairmds
