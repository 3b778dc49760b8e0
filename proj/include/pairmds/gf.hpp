#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pairmds/errors.hpp"

namespace pairmds {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^m) with full add/mul/neg/inv lookup tables. Elements are canonical
/// indices in [0,q): index = sum coeffs[i] * p^i for the polynomial-basis
/// coefficient vector. Index 0 is the additive, index 1 the multiplicative
/// identity. Immutable once built; fields beyond q = 128 are rejected.
class Field {
   public:
    static FieldPtr make(int p, int m, std::optional<std::vector<int>> modulus = std::nullopt) {
        require(p >= 2 && is_prime(p), Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
        require(m >= 1, Errc::DegreeMismatch, "extension degree must be >= 1");
        long q = 1;
        for (int i = 0; i < m; ++i) {
            q *= p;
            require(q <= 128, Errc::FieldTooLarge, "q = p^m exceeds 128, out of desk scope");
        }
        std::vector<int> mod;
        if (modulus) {
            mod = *modulus;
            require(static_cast<int>(mod.size()) == m + 1, Errc::DegreeMismatch,
                    "modulus must have degree m = " + std::to_string(m));
            require(mod.back() == 1, Errc::DegreeMismatch, "modulus must be monic");
            for (int c : mod)
                require(0 <= c && c < p, Errc::DegreeMismatch, "modulus coefficients must lie in [0,p)");
            if (m >= 2)
                require(poly_irreducible(p, mod), Errc::ReducibleModulus,
                        "modulus is reducible over GF(" + std::to_string(p) + ")");
        } else {
            mod = default_modulus(p, m);
        }
        return FieldPtr(new Field(p, m, static_cast<int>(q), std::move(mod)));
    }

    int p() const noexcept { return p_; }
    int m() const noexcept { return m_; }
    int q() const noexcept { return q_; }
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    int add(int a, int b) const noexcept { return add_[a * q_ + b]; }
    int sub(int a, int b) const noexcept { return add_[a * q_ + neg_[b]]; }
    int neg(int a) const noexcept { return neg_[a]; }
    int mul(int a, int b) const noexcept { return mul_[a * q_ + b]; }
    int inv(int a) const {
        require(a != 0, Errc::DivisionByZero, "inverse of zero");
        return inv_[a];
    }
    int div(int a, int b) const { return mul(a, inv(b)); }

    int pow(int a, long e) const {
        if (e < 0) {
            a = inv(a);
            e = -e;
        }
        int r = 1;
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// multiplicative order; a must be nonzero
    int element_order(int a) const {
        require(a != 0, Errc::DivisionByZero, "order of zero");
        int o = 1, x = a;
        while (x != 1) {
            x = mul(x, a);
            ++o;
        }
        return o;
    }

    std::vector<int> coeffs(int a) const {
        std::vector<int> c(m_);
        for (int i = 0; i < m_; ++i) {
            c[i] = a % p_;
            a /= p_;
        }
        return c;
    }

    int from_coeffs(const std::vector<int>& c) const {
        require(static_cast<int>(c.size()) == m_, Errc::DegreeMismatch, "coefficient vector length");
        int v = 0;
        for (int i = m_ - 1; i >= 0; --i) {
            require(0 <= c[i] && c[i] < p_, Errc::IndexOutOfRange, "coefficient out of [0,p)");
            v = v * p_ + c[i];
        }
        return v;
    }

    bool same(const Field& other) const noexcept {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

    std::string name() const {
        return "GF(" + std::to_string(q_) + ")";
    }

    // raw table access for enumeration-heavy callers
    const int* add_table() const noexcept { return add_.data(); }
    const int* mul_table() const noexcept { return mul_.data(); }

    static bool is_prime(int n) {
        if (n < 2) return false;
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    /// factor a prime power; raises NotPrime when q is not one
    static std::pair<int, int> factor_prime_power(int q) {
        require(q >= 2, Errc::NotPrime, "q must be >= 2");
        int p = 0;
        for (int d = 2; d <= q; ++d)
            if (q % d == 0) {
                p = d;
                break;
            }
        int m = 0, r = q;
        while (r % p == 0) {
            r /= p;
            ++m;
        }
        require(r == 1, Errc::NotPrime, "q = " + std::to_string(q) + " is not a prime power");
        return {p, m};
    }

   private:
    Field(int p, int m, int q, std::vector<int> mod)
        : p_(p), m_(m), q_(q), modulus_(std::move(mod)) {
        build_tables();
    }

    static std::vector<int> default_modulus(int p, int m) {
        if (m == 1) return {0, 1};
        // lexicographically smallest monic irreducible by (c0,...,c_{m-1});
        // pins GF(4) to x^2+x+1 and GF(9) to x^2+1
        std::vector<int> c(m, 0);
        while (true) {
            std::vector<int> mod = c;
            mod.push_back(1);
            if (poly_irreducible(p, mod)) return mod;
            int i = m - 1;  // c0 is the most significant digit of the lex order
            while (i >= 0 && c[i] == p - 1) c[i--] = 0;
            require(i >= 0, Errc::ReducibleModulus, "no irreducible polynomial found");
            ++c[i];
        }
    }

    static int poly_eval(const std::vector<int>& poly, int x, int p) {
        long v = 0;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = (v * x + *it) % p;
        return static_cast<int>(v);
    }

    // root search plus trial division by monic polynomials of degree <= deg/2
    static bool poly_irreducible(int p, const std::vector<int>& mod) {
        int deg = static_cast<int>(mod.size()) - 1;
        for (int x = 0; x < p; ++x)
            if (poly_eval(mod, x, p) == 0) return false;
        for (int d = 2; d <= deg / 2; ++d) {
            std::vector<int> b(d + 1, 0);
            b[d] = 1;
            while (true) {
                if (poly_divides(p, b, mod)) return false;
                int i = 0;
                while (i < d && b[i] == p - 1) b[i++] = 0;
                if (i == d) break;
                ++b[i];
            }
        }
        return true;
    }

    static bool poly_divides(int p, const std::vector<int>& b, std::vector<int> a) {
        int db = static_cast<int>(b.size()) - 1;
        for (int da = static_cast<int>(a.size()) - 1; da >= db; --da) {
            if (a[da] == 0) continue;
            int c = a[da];  // b is monic
            for (int i = 0; i <= db; ++i)
                a[da - db + i] = ((a[da - db + i] - c * b[i]) % p + p) % p;
        }
        for (int x : a)
            if (x != 0) return false;
        return true;
    }

    void build_tables() {
        add_.resize(static_cast<size_t>(q_) * q_);
        mul_.resize(static_cast<size_t>(q_) * q_);
        neg_.resize(q_);
        inv_.assign(q_, 0);
        for (int a = 0; a < q_; ++a) {
            neg_[a] = poly_neg(a);
            for (int b = 0; b < q_; ++b) {
                add_[a * q_ + b] = poly_add(a, b);
                mul_[a * q_ + b] = poly_mul(a, b);
            }
        }
        for (int a = 1; a < q_; ++a)
            for (int b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) {
                    inv_[a] = b;
                    break;
                }
    }

    int poly_add(int a, int b) const {
        int v = 0, pw = 1;
        for (int i = 0; i < m_; ++i) {
            v += ((a % p_ + b % p_) % p_) * pw;
            a /= p_;
            b /= p_;
            pw *= p_;
        }
        return v;
    }

    int poly_neg(int a) const {
        int v = 0, pw = 1;
        for (int i = 0; i < m_; ++i) {
            v += ((p_ - a % p_) % p_) * pw;
            a /= p_;
            pw *= p_;
        }
        return v;
    }

    int poly_mul(int a, int b) const {
        std::vector<int> prod(2 * m_ - 1, 0);
        std::vector<int> da(m_), db(m_);
        for (int i = 0; i < m_; ++i) {
            da[i] = a % p_;
            a /= p_;
            db[i] = b % p_;
            b /= p_;
        }
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        // reduce: x^m = -(c0 + c1 x + ... + c_{m-1} x^{m-1})
        for (int i = 2 * m_ - 2; i >= m_; --i) {
            int c = prod[i];
            if (c == 0) continue;
            for (int j = 0; j < m_; ++j)
                prod[i - m_ + j] = ((prod[i - m_ + j] - c * modulus_[j]) % p_ + p_) % p_;
            prod[i] = 0;
        }
        int v = 0, pw = 1;
        for (int i = 0; i < m_; ++i) {
            v += prod[i] * pw;
            pw *= p_;
        }
        return v;
    }

    int p_, m_, q_;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_, neg_, inv_;
};

inline void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    require(a && b && a->same(*b), Errc::FieldMismatch, "operands belong to different fields");
}

/// An element bound to its field; thin value wrapper over the canonical index.
class FieldElement {
   public:
    FieldElement(FieldPtr field, int index) : field_(std::move(field)), idx_(index) {
        require(0 <= idx_ && idx_ < field_->q(), Errc::IndexOutOfRange,
                "element index out of [0,q)");
    }

    int index() const noexcept { return idx_; }
    const FieldPtr& field() const noexcept { return field_; }
    std::vector<int> coeffs() const { return field_->coeffs(idx_); }
    bool is_zero() const noexcept { return idx_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.field_, b.field_);
        return {a.field_, a.field_->add(a.idx_, b.idx_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.field_, b.field_);
        return {a.field_, a.field_->sub(a.idx_, b.idx_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.field_, b.field_);
        return {a.field_, a.field_->mul(a.idx_, b.idx_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.field_, b.field_);
        return {a.field_, a.field_->div(a.idx_, b.idx_)};
    }
    FieldElement operator-() const { return {field_, field_->neg(idx_)}; }
    FieldElement inverse() const { return {field_, field_->inv(idx_)}; }
    FieldElement pow(long e) const { return {field_, field_->pow(idx_, e)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_->same(*b.field_) && a.idx_ == b.idx_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

   private:
    FieldPtr field_;
    int idx_;
};

inline FieldPtr field_new(int p, int m, std::optional<std::vector<int>> modulus = std::nullopt) {
    return Field::make(p, m, std::move(modulus));
}

/// field from a prime-power order, optional explicit modulus
inline FieldPtr field_of_order(int q, std::optional<std::vector<int>> modulus = std::nullopt) {
    auto [p, m] = Field::factor_prime_power(q);
    return Field::make(p, m, std::move(modulus));
}

/// Primitive r-th root of unity, deterministic choice: g^((q-1)/r) for the
/// smallest-index generator g of the multiplicative group. Reproduces omega = 2
/// over GF(5)/GF(7) and omega = 2*alpha over GF(9) with modulus x^2+1.
inline FieldElement root_of_unity(const FieldPtr& f, int r) {
    require(r >= 1, Errc::NoSuchRoot, "order must be positive");
    require((f->q() - 1) % r == 0, Errc::NoSuchRoot,
            "no primitive " + std::to_string(r) + "-th root of unity in " + f->name() +
                " (r does not divide q-1)");
    int g = 0;
    for (int a = 1; a < f->q(); ++a)
        if (f->element_order(a) == f->q() - 1) {
            g = a;
            break;
        }
    return {f, f->pow(g, (f->q() - 1) / r)};
}

/// all q elements in canonical index order 0..q-1
inline std::vector<FieldElement> all_elements(const FieldPtr& f) {
    std::vector<FieldElement> out;
    out.reserve(f->q());
    for (int a = 0; a < f->q(); ++a) out.emplace_back(f, a);
    return out;
}

}  // namespace pairmds
