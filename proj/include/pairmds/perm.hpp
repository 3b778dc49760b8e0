#pragma once

#include <numeric>
#include <vector>

#include "pairmds/code.hpp"

namespace pairmds {

/// Bijection on [0, n); map[l] is the destination of source coordinate l, so
/// applying pi to a vector u yields v with v[map[l]] = u[l].
struct PermutationMap {
    int n = 0;
    std::vector<int> map;
};

inline PermutationMap make_permutation(std::vector<int> map) {
    int n = static_cast<int>(map.size());
    std::vector<bool> seen(n, false);
    for (int v : map) {
        require(0 <= v && v < n && !seen[v], Errc::IndexOutOfRange, "not a bijection on [0,n)");
        seen[v] = true;
    }
    return {n, std::move(map)};
}

inline PermutationMap identity_perm(int n) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    return {n, std::move(m)};
}

/// Block interleaver on M blocks of length n: source in+j goes to i+M*j.
/// Used with M = 3 for the length-3n families and M = 4 for the length-4n ones.
inline PermutationMap rho(int nblocks, int n) {
    std::vector<int> m(static_cast<size_t>(nblocks) * n);
    for (int i = 0; i < nblocks; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<size_t>(i) * n + j] = i + nblocks * j;
    return {nblocks * n, std::move(m)};
}

/// On 3n interleaved coordinates i+3j: fixes residues 0 and 2, rotates the
/// middle residue class by one block (j -> j-1 mod n); compose(phi, rho(3,n))
/// reproduces the worked examples' destination listings.
inline PermutationMap phi(int n) {
    std::vector<int> m(static_cast<size_t>(3) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < 3; ++i) {
            int t = i + 3 * j;
            m[t] = (i == 1) ? 1 + 3 * ((j + n - 1) % n) : t;
        }
    return {3 * n, std::move(m)};
}

/// order-4 shift permutation used by the d_sp = 6 family: residue 0 shifts by
/// two blocks, residue 2 by one, residues 1 and 3 are fixed
inline PermutationMap tau_v1(int n) {
    std::vector<int> m(static_cast<size_t>(4) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < 4; ++i) {
            int t = i + 4 * j;
            if (i == 0)
                m[t] = 4 * ((j + n - 2) % n);
            else if (i == 2)
                m[t] = 2 + 4 * ((j + n - 1) % n);
            else
                m[t] = t;
        }
    return {4 * n, std::move(m)};
}

/// order-4 swap-and-shift permutation used by the AMDS d_sp = 7 family:
/// residues 0 and 3 fixed, residue 1 -> residue 2 with j-1, residue 2 ->
/// residue 1 with j+1
inline PermutationMap tau_v2(int n) {
    std::vector<int> m(static_cast<size_t>(4) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < 4; ++i) {
            int t = i + 4 * j;
            if (i == 1)
                m[t] = 2 + 4 * ((j + n - 1) % n);
            else if (i == 2)
                m[t] = 1 + 4 * ((j + 1) % n);
            else
                m[t] = t;
        }
    return {4 * n, std::move(m)};
}

/// apply `first`, then `second`
inline PermutationMap compose(const PermutationMap& second, const PermutationMap& first) {
    require(second.n == first.n, Errc::SizeMismatch, "permutation sizes differ");
    std::vector<int> m(first.n);
    for (int l = 0; l < first.n; ++l) m[l] = second.map[first.map[l]];
    return {first.n, std::move(m)};
}

inline PermutationMap invert(const PermutationMap& p) {
    std::vector<int> m(p.n);
    for (int l = 0; l < p.n; ++l) m[p.map[l]] = l;
    return {p.n, std::move(m)};
}

/// 1-indexed "source occupying each destination slot" display, the form the
/// worked examples print for their interleavers
inline std::vector<int> destination_listing(const PermutationMap& p) {
    PermutationMap inv = invert(p);
    std::vector<int> out(p.n);
    for (int t = 0; t < p.n; ++t) out[t] = inv.map[t] + 1;
    return out;
}

inline std::vector<int> permute(const PermutationMap& p, std::span<const int> u) {
    require(p.n == static_cast<int>(u.size()), Errc::SizeMismatch,
            "permutation size differs from vector length");
    std::vector<int> v(p.n);
    for (int l = 0; l < p.n; ++l) v[p.map[l]] = u[l];
    return v;
}

/// permutes generator (and parity, if present) columns; preserves n, k, d_H
inline LinearCode apply(const LinearCode& C, const PermutationMap& p) {
    require(p.n == C.n, Errc::SizeMismatch, "permutation size differs from code length");
    auto permute_cols = [&](const Matrix& M) {
        Matrix out(M.field(), M.rows(), M.cols());
        for (int r = 0; r < M.rows(); ++r)
            for (int c = 0; c < M.cols(); ++c) out.set(r, p.map[c], M.get(r, c));
        return out;
    };
    std::optional<Matrix> H;
    if (C.H) H = permute_cols(*C.H);
    nlohmann::json prov = C.provenance;
    prov["permutation"] = p.map;
    return make_linear_code(C.field, permute_cols(C.G), std::move(H), std::move(prov));
}

}  // namespace pairmds
