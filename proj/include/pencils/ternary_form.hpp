#pragma once

#include <string>
#include <vector>

#include "pencils/binary_form.hpp"
#include "pencils/ring.hpp"
#include "pencils/sym_matrix.hpp"

namespace pencils {

/*
 * Homogeneous ternary form of declared degree d in (u0, u1, u2), stored
 * densely over the (d+1)(d+2)/2 monomials u0^i u1^j u2^(d-i-j). Ring
 * coefficients; same zero-adoption rule in sums as BinaryForm.
 */
template <ring_element K>
class TernaryForm {
public:
    static TernaryForm zero(int degree, const K& like) {
        if (degree < 0) throw std::invalid_argument("TernaryForm: negative degree");
        return TernaryForm(degree, std::vector<K>(size_of(degree), like.from_int(0)));
    }
    static TernaryForm constant(const K& value) { return TernaryForm(0, {value}); }

    TernaryForm(int degree, std::vector<K> coefficients) : d_(degree), c_(std::move(coefficients)) {
        if (d_ < 0) throw std::invalid_argument("TernaryForm: negative degree");
        if (c_.size() != size_of(d_))
            throw std::invalid_argument("TernaryForm: wrong coefficient count");
    }

    [[nodiscard]] int degree() const { return d_; }

    [[nodiscard]] const K& coefficient(int i, int j) const { return c_[index(i, j)]; }
    void set_coefficient(int i, int j, const K& v) { c_[index(i, j)] = v; }

    [[nodiscard]] bool is_zero() const {
        for (const K& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    [[nodiscard]] TernaryForm from_int(long long n) const { return constant(c_[0].from_int(n)); }

    TernaryForm operator-() const {
        std::vector<K> r;
        r.reserve(c_.size());
        for (const K& x : c_) r.push_back(-x);
        return TernaryForm(d_, std::move(r));
    }

    friend TernaryForm operator+(const TernaryForm& a, const TernaryForm& b) {
        if (a.is_zero() && a.d_ != b.d_) return b;
        if (b.is_zero() && a.d_ != b.d_) return a;
        if (a.d_ != b.d_)
            throw std::invalid_argument("TernaryForm: degree mismatch in sum of nonzero forms");
        std::vector<K> r;
        r.reserve(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.push_back(a.c_[i] + b.c_[i]);
        return TernaryForm(a.d_, std::move(r));
    }
    friend TernaryForm operator-(const TernaryForm& a, const TernaryForm& b) { return a + (-b); }

    friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
        TernaryForm r = zero(a.d_ + b.d_, a.c_[0]);
        for (int i1 = 0; i1 <= a.d_; ++i1)
            for (int j1 = 0; i1 + j1 <= a.d_; ++j1) {
                const K& x = a.coefficient(i1, j1);
                if (x.is_zero()) continue;
                for (int i2 = 0; i2 <= b.d_; ++i2)
                    for (int j2 = 0; i2 + j2 <= b.d_; ++j2) {
                        const K& y = b.coefficient(i2, j2);
                        if (y.is_zero()) continue;
                        r.set_coefficient(i1 + i2, j1 + j2,
                                          r.coefficient(i1 + i2, j1 + j2) + x * y);
                    }
            }
        return r;
    }

    friend bool operator==(const TernaryForm& a, const TernaryForm& b) {
        if (a.is_zero() && b.is_zero()) return true;
        if (a.d_ != b.d_) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const TernaryForm& a, const TernaryForm& b) { return !(a == b); }

    /// Second partial derivative with respect to variables v1, v2 in {0,1,2}.
    [[nodiscard]] TernaryForm second_partial(int v1, int v2) const {
        if (d_ < 2) throw std::invalid_argument("TernaryForm: second partial needs degree >= 2");
        TernaryForm r = zero(d_ - 2, c_[0]);
        for (int i = 0; i <= d_; ++i)
            for (int j = 0; i + j <= d_; ++j) {
                const K& x = coefficient(i, j);
                if (x.is_zero()) continue;
                int e[3] = {i, j, d_ - i - j};
                long long factor = e[v1];
                e[v1] -= 1;
                if (factor <= 0) continue;
                factor *= e[v2];
                e[v2] -= 1;
                if (factor <= 0) continue;
                r.set_coefficient(e[0], e[1],
                                  r.coefficient(e[0], e[1]) + x * x.from_int(factor));
            }
        return r;
    }

    /// Coefficients as a polynomial in u2: entry m is the coefficient of
    /// u2^m, a binary form of degree d - m in (u0, u1) mapped to (s, t).
    [[nodiscard]] std::vector<BinaryForm<K>> u2_coefficients() const {
        std::vector<BinaryForm<K>> out;
        out.reserve(d_ + 1);
        for (int m = 0; m <= d_; ++m) {
            const int deg = d_ - m;
            std::vector<K> c(deg + 1, c_[0].from_int(0));
            // s^(deg - j) t^j picks up u0^(deg - j) u1^j u2^m
            for (int j = 0; j <= deg; ++j) c[j] = coefficient(deg - j, j);
            out.emplace_back(deg, std::move(c));
        }
        return out;
    }

    [[nodiscard]] std::string str() const;

private:
    static std::size_t size_of(int d) {
        return static_cast<std::size_t>((d + 1) * (d + 2) / 2);
    }
    [[nodiscard]] std::size_t index(int i, int j) const {
        if (i < 0 || j < 0 || i + j > d_) throw std::invalid_argument("TernaryForm: bad exponents");
        // Rows by i: row i holds j = 0 .. d - i.
        const int before = i * (d_ + 1) - i * (i - 1) / 2;
        return static_cast<std::size_t>(before + j);
    }

    int d_;
    std::vector<K> c_;
};

/// Determinant of the matrix of second partials; for a cubic this is the
/// Hessian cubic whose intersection with the curve marks the flexes.
template <ring_element K>
TernaryForm<K> hessian(const TernaryForm<K>& f) {
    const SymMatrix3<TernaryForm<K>> m(f.second_partial(0, 0), f.second_partial(1, 1),
                                       f.second_partial(2, 2), f.second_partial(0, 1),
                                       f.second_partial(0, 2), f.second_partial(1, 2));
    return m.det();
}

template <ring_element K>
std::string TernaryForm<K>::str() const {
    if (is_zero()) return "0";
    std::string out;
    const char* names[3] = {"u0", "u1", "u2"};
    for (int i = 0; i <= d_; ++i)
        for (int j = 0; i + j <= d_; ++j) {
            const K& x = coefficient(i, j);
            if (x.is_zero()) continue;
            if (!out.empty()) out += " + ";
            if constexpr (requires(const K k) { k.str(); })
                out += "(" + x.str() + ")";
            else
                out += "(?)";
            const int e[3] = {i, j, d_ - i - j};
            for (int v = 0; v < 3; ++v) {
                if (e[v] == 0) continue;
                out += "*";
                out += names[v];
                if (e[v] > 1) out += "^" + std::to_string(e[v]);
            }
        }
    return out;
}

}  // namespace pencils
