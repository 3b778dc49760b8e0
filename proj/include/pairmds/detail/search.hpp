#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pairmds/linalg.hpp"

namespace pairmds::detail {

inline std::optional<std::uint64_t> pow_within(std::uint64_t base, int exp, std::uint64_t cap) {
    std::uint64_t t = 1;
    for (int i = 0; i < exp; ++i) {
        if (t > cap / base) return std::nullopt;
        t *= base;
    }
    return t;
}

/// lexicographic w-combinations of [0, n)
class CombinationGen {
   public:
    CombinationGen(int n, int w) : n_(n), w_(w), idx_(w) {
        for (int i = 0; i < w; ++i) idx_[i] = i;
        valid_ = w >= 0 && w <= n;
    }
    bool valid() const noexcept { return valid_; }
    std::span<const int> get() const noexcept { return idx_; }
    void next() noexcept {
        int i = w_ - 1;
        while (i >= 0 && idx_[i] == n_ - w_ + i) --i;
        if (i < 0) {
            valid_ = false;
            return;
        }
        ++idx_[i];
        for (int j = i + 1; j < w_; ++j) idx_[j] = idx_[j - 1] + 1;
    }

   private:
    int n_, w_;
    std::vector<int> idx_;
    bool valid_;
};

/// Kernel solver for column subsets of a fixed parity matrix. Reuses internal
/// buffers across calls; basis rows come out in canonical RREF form.
class ColumnKernel {
   public:
    explicit ColumnKernel(const Matrix& H) : H_(&H), f_(H.field().get()), rows_(H.rows()) {}

    /// kernel dimension of H restricted to the selected columns
    int solve(std::span<const int> sel) {
        int w = static_cast<int>(sel.size());
        mat_.assign(static_cast<size_t>(rows_) * w, 0);
        for (int r = 0; r < rows_; ++r) {
            auto row = H_->row(r);
            for (int j = 0; j < w; ++j) mat_[static_cast<size_t>(r) * w + j] = row[sel[j]];
        }
        piv_.clear();
        int r = 0;
        for (int c = 0; c < w && r < rows_; ++c) {
            int pr = -1;
            for (int i = r; i < rows_; ++i)
                if (mat_[static_cast<size_t>(i) * w + c] != 0) {
                    pr = i;
                    break;
                }
            if (pr < 0) continue;
            if (pr != r)
                for (int j = 0; j < w; ++j)
                    std::swap(mat_[static_cast<size_t>(r) * w + j], mat_[static_cast<size_t>(pr) * w + j]);
            int iv = f_->inv(mat_[static_cast<size_t>(r) * w + c]);
            for (int j = c; j < w; ++j)
                mat_[static_cast<size_t>(r) * w + j] = f_->mul(mat_[static_cast<size_t>(r) * w + j], iv);
            for (int i = 0; i < rows_; ++i) {
                if (i == r) continue;
                int s = mat_[static_cast<size_t>(i) * w + c];
                if (s == 0) continue;
                for (int j = c; j < w; ++j)
                    mat_[static_cast<size_t>(i) * w + j] =
                        f_->sub(mat_[static_cast<size_t>(i) * w + j],
                                f_->mul(s, mat_[static_cast<size_t>(r) * w + j]));
            }
            piv_.push_back(c);
            ++r;
        }
        dim_ = w - static_cast<int>(piv_.size());
        width_ = w;
        build_basis();
        return dim_;
    }

    int dim() const noexcept { return dim_; }
    std::span<const int> basis_row(int i) const {
        return {basis_.data() + static_cast<size_t>(i) * width_, static_cast<size_t>(width_)};
    }

   private:
    void build_basis() {
        basis_.assign(static_cast<size_t>(dim_) * width_, 0);
        if (dim_ == 0) return;
        is_piv_.assign(width_, false);
        for (int c : piv_) is_piv_[c] = true;
        int br = 0;
        for (int c = 0; c < width_; ++c) {
            if (is_piv_[c]) continue;
            int* out = basis_.data() + static_cast<size_t>(br) * width_;
            out[c] = 1;
            for (size_t i = 0; i < piv_.size(); ++i)
                out[piv_[i]] = f_->neg(mat_[i * width_ + c]);
            ++br;
        }
        // canonicalize: RREF of the basis itself (basis rows are independent)
        int r = 0;
        for (int c = 0; c < width_ && r < dim_; ++c) {
            int pr = -1;
            for (int i = r; i < dim_; ++i)
                if (basis_[static_cast<size_t>(i) * width_ + c] != 0) {
                    pr = i;
                    break;
                }
            if (pr < 0) continue;
            if (pr != r)
                for (int j = 0; j < width_; ++j)
                    std::swap(basis_[static_cast<size_t>(r) * width_ + j],
                              basis_[static_cast<size_t>(pr) * width_ + j]);
            int iv = f_->inv(basis_[static_cast<size_t>(r) * width_ + c]);
            for (int j = 0; j < width_; ++j)
                basis_[static_cast<size_t>(r) * width_ + j] =
                    f_->mul(basis_[static_cast<size_t>(r) * width_ + j], iv);
            for (int i = 0; i < dim_; ++i) {
                if (i == r) continue;
                int s = basis_[static_cast<size_t>(i) * width_ + c];
                if (s == 0) continue;
                for (int j = 0; j < width_; ++j)
                    basis_[static_cast<size_t>(i) * width_ + j] =
                        f_->sub(basis_[static_cast<size_t>(i) * width_ + j],
                                f_->mul(s, basis_[static_cast<size_t>(r) * width_ + j]));
            }
            ++r;
        }
    }

    const Matrix* H_;
    const Field* f_;
    int rows_;
    int dim_ = 0, width_ = 0;
    std::vector<int> mat_, basis_;
    std::vector<int> piv_;
    std::vector<bool> is_piv_;
};

/// Visits one representative of every 1-dimensional subspace of the row space
/// of `solver`'s kernel basis (leading combination coefficient fixed to 1).
template <class Fn>
void for_each_projective_solution(const Field& f, const ColumnKernel& solver, int width,
                                  std::vector<int>& scratch, Fn&& fn) {
    int dim = solver.dim();
    scratch.assign(width, 0);
    std::vector<int> lambda(dim, 0);
    for (int lead = 0; lead < dim; ++lead) {
        // lambda[lead] = 1, lambda[<lead] = 0, lambda[>lead] free
        std::fill(lambda.begin(), lambda.end(), 0);
        lambda[lead] = 1;
        while (true) {
            for (int j = 0; j < width; ++j) scratch[j] = 0;
            for (int d = lead; d < dim; ++d) {
                int l = lambda[d];
                if (l == 0) continue;
                auto row = solver.basis_row(d);
                for (int j = 0; j < width; ++j) scratch[j] = f.add(scratch[j], f.mul(l, row[j]));
            }
            fn(std::span<const int>(scratch));
            int i = dim - 1;
            while (i > lead && lambda[i] == f.q() - 1) lambda[i--] = 0;
            if (i == lead) break;
            ++lambda[i];
        }
    }
}

/// scale so the first nonzero entry becomes 1
inline void normalize_leading(const Field& f, std::vector<int>& v) {
    for (int x : v)
        if (x != 0) {
            if (x != 1) {
                int iv = f.inv(x);
                for (auto& y : v) y = f.mul(y, iv);
            }
            return;
        }
}

/// |S u (S-1 mod n)| for a sorted support S; equals w + number of cyclic runs,
/// capped at n for the full support
inline int support_pair_weight(std::span<const int> S, int n) {
    int w = static_cast<int>(S.size());
    if (w == 0) return 0;
    if (w == n) return n;
    int runs = 0;
    for (int i = 0; i < w; ++i) {
        int pred = (S[i] + n - 1) % n;
        bool in = false;
        for (int j = 0; j < w; ++j)
            if (S[j] == pred) {
                in = true;
                break;
            }
        runs += in ? 0 : 1;
    }
    return w + runs;
}

}  // namespace pairmds::detail
