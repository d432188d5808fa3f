#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pencils/ring.hpp"

namespace pencils {

/*
 * Homogeneous binary form of declared degree d in (s, t). Coefficient i
 * multiplies s^(d-i) t^i. The zero form is representable at any declared
 * degree; addition lets a zero operand adopt the other side's degree, while
 * adding two nonzero forms of different declared degrees throws. Coefficients
 * live in any commutative ring R, so forms nest (forms whose coefficients are
 * forms in another variable pair), which is how mixed-grading determinants
 * are computed exactly.
 */
template <ring_element R>
class BinaryForm {
public:
    BinaryForm(int degree, std::vector<R> coefficients) : d_(degree), c_(std::move(coefficients)) {
        if (d_ < 0) throw std::invalid_argument("BinaryForm: negative degree");
        if (static_cast<int>(c_.size()) != d_ + 1)
            throw std::invalid_argument("BinaryForm: expected degree+1 coefficients");
    }

    static BinaryForm zero(int degree, const R& like) {
        return BinaryForm(degree, std::vector<R>(degree + 1, like.from_int(0)));
    }
    static BinaryForm constant(const R& value) { return BinaryForm(0, {value}); }

    [[nodiscard]] int degree() const { return d_; }
    [[nodiscard]] const R& coefficient(int i) const { return c_.at(i); }
    [[nodiscard]] const std::vector<R>& coefficients() const { return c_; }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const R& x) { return x.is_zero(); });
    }

    /// Ring-element interface: a degree-0 constant in the same coefficient ring.
    [[nodiscard]] BinaryForm from_int(long long n) const { return constant(c_[0].from_int(n)); }

    /// Index of the highest s-power with nonzero coefficient, -1 for zero.
    [[nodiscard]] int leading_index() const {
        for (int i = 0; i <= d_; ++i)
            if (!c_[i].is_zero()) return i;
        return -1;
    }

    BinaryForm operator-() const {
        std::vector<R> r;
        r.reserve(c_.size());
        for (const R& x : c_) r.push_back(-x);
        return BinaryForm(d_, std::move(r));
    }

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
        if (a.is_zero() && a.d_ != b.d_) return b;
        if (b.is_zero() && a.d_ != b.d_) return a;
        if (a.d_ != b.d_)
            throw std::invalid_argument("BinaryForm: degree mismatch in sum of nonzero forms");
        std::vector<R> r;
        r.reserve(a.c_.size());
        for (int i = 0; i <= a.d_; ++i) r.push_back(a.c_[i] + b.c_[i]);
        return BinaryForm(a.d_, std::move(r));
    }
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + (-b); }

    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        const R z = a.c_[0].from_int(0);
        std::vector<R> r(a.d_ + b.d_ + 1, z);
        for (int i = 0; i <= a.d_; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; j <= b.d_; ++j) {
                if (b.c_[j].is_zero()) continue;
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return BinaryForm(a.d_ + b.d_, std::move(r));
    }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        if (a.is_zero() && b.is_zero()) return true;
        if (a.d_ != b.d_) return false;
        for (int i = 0; i <= a.d_; ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

    [[nodiscard]] R evaluate(const R& s0, const R& t0) const {
        R acc = c_[0].from_int(0);
        R spow = c_[0].from_int(1);
        std::vector<R> spows;
        spows.reserve(d_ + 1);
        for (int i = 0; i <= d_; ++i) {
            spows.push_back(spow);
            spow = spow * s0;
        }
        R tpow = c_[0].from_int(1);
        for (int i = 0; i <= d_; ++i) {
            acc = acc + c_[i] * spows[d_ - i] * tpow;
            tpow = tpow * t0;
        }
        return acc;
    }

    [[nodiscard]] BinaryForm derivative_s() const {
        if (d_ == 0) throw std::invalid_argument("BinaryForm: derivative of a constant form");
        std::vector<R> r;
        r.reserve(d_);
        for (int i = 0; i < d_; ++i) r.push_back(c_[i] * c_[0].from_int(d_ - i));
        return BinaryForm(d_ - 1, std::move(r));
    }
    [[nodiscard]] BinaryForm derivative_t() const {
        if (d_ == 0) throw std::invalid_argument("BinaryForm: derivative of a constant form");
        std::vector<R> r;
        r.reserve(d_);
        for (int i = 0; i < d_; ++i) r.push_back(c_[i + 1] * c_[0].from_int(i + 1));
        return BinaryForm(d_ - 1, std::move(r));
    }

    /// Human-readable rendering, mainly for diagnostics.
    [[nodiscard]] std::string str(const char* s = "s", const char* t = "t") const;

private:
    int d_;
    std::vector<R> c_;
};

template <ring_element R>
BinaryForm<R> pow(const BinaryForm<R>& f, int e) {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    BinaryForm<R> acc = f.from_int(1);
    for (int i = 0; i < e; ++i) acc = acc * f;
    return acc;
}

namespace detail {

/// Determinant of a dense matrix over a commutative ring, by Laplace
/// expansion memoised on column subsets. Exponential in n but exact and
/// cheap for the n <= 16 sizes used here.
template <ring_element R>
R det_dense(const std::vector<std::vector<R>>& m, const R& one) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return one;
    const R zero = one.from_int(0);
    std::vector<std::optional<R>> memo(std::size_t(1) << n);
    memo[0] = one;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        const int row = __builtin_popcount(mask) - 1;
        R acc = zero;
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (std::uint32_t(1) << j))) continue;
            const R& entry = m[row][j];
            if (!entry.is_zero()) {
                const R& sub = *memo[mask ^ (std::uint32_t(1) << j)];
                if (!sub.is_zero()) {
                    R term = entry * sub;
                    acc = ((row + pos) % 2 == 0) ? acc + term : acc - term;
                }
            }
            ++pos;
        }
        memo[mask] = acc;
    }
    return *memo[(std::size_t(1) << n) - 1];
}

/// Sylvester resultant for coefficient sequences in leading-first order
/// (f[0] is the coefficient of the highest power). Declared degrees are
/// the sequence lengths minus one, so vanishing leading coefficients keep
/// the homogeneous convention: the result vanishes iff the two binary
/// forms share a projective root.
template <ring_element R>
R sylvester_resultant(const std::vector<R>& f, const std::vector<R>& g, const R& one) {
    const int m = static_cast<int>(f.size()) - 1;
    const int n = static_cast<int>(g.size()) - 1;
    if (m < 0 || n < 0) throw std::invalid_argument("sylvester_resultant: empty sequence");
    const int size = m + n;
    if (size == 0) return one;
    const R zero = one.from_int(0);
    std::vector<std::vector<R>> mat(size, std::vector<R>(size, zero));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) mat[i][i + j] = f[j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) mat[n + i][i + j] = g[j];
    return det_dense(mat, one);
}

template <field_element K>
using UniPoly = std::vector<K>;  // c[i] multiplies x^i; no trailing zeros

template <field_element K>
void uni_trim(UniPoly<K>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <field_element K>
int uni_degree(const UniPoly<K>& p) {
    return static_cast<int>(p.size()) - 1;  // -1 for the zero polynomial
}

template <field_element K>
UniPoly<K> uni_derivative(const UniPoly<K>& p) {
    UniPoly<K> r;
    for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * p[i].from_int(static_cast<long long>(i)));
    uni_trim(r);
    return r;
}

template <field_element K>
UniPoly<K> uni_mul(const UniPoly<K>& a, const UniPoly<K>& b, const K& zero) {
    if (a.empty() || b.empty()) return {};
    UniPoly<K> r(a.size() + b.size() - 1, zero);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    uni_trim(r);
    return r;
}

template <field_element K>
UniPoly<K> uni_sub(UniPoly<K> a, const UniPoly<K>& b, const K& zero) {
    if (a.size() < b.size()) a.resize(b.size(), zero);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
    uni_trim(a);
    return a;
}

/// Quotient of exact long division; throws internal_error if the division
/// is not exact and exactness was demanded.
template <field_element K>
std::pair<UniPoly<K>, UniPoly<K>> uni_divmod(UniPoly<K> f, const UniPoly<K>& g) {
    if (g.empty()) throw std::invalid_argument("uni_divmod: division by zero polynomial");
    const K zero = g[0].from_int(0);
    const K lcinv = g.back().inv();
    if (uni_degree(f) < uni_degree(g)) return {{}, std::move(f)};
    UniPoly<K> q(f.size() - g.size() + 1, zero);
    while (uni_degree(f) >= uni_degree(g)) {
        const int shift = uni_degree(f) - uni_degree(g);
        const K factor = f.back() * lcinv;
        q[shift] = q[shift] + factor;
        for (std::size_t i = 0; i < g.size(); ++i)
            f[shift + i] = f[shift + i] - factor * g[i];
        uni_trim(f);
        if (f.empty()) break;
    }
    uni_trim(q);
    return {std::move(q), std::move(f)};
}

template <field_element K>
UniPoly<K> uni_div_exact(const UniPoly<K>& f, const UniPoly<K>& g) {
    auto [q, r] = uni_divmod(f, g);
    if (!r.empty()) throw internal_error("uni_div_exact: division was not exact");
    return q;
}

template <field_element K>
UniPoly<K> uni_monic(UniPoly<K> p) {
    if (p.empty()) return p;
    const K lcinv = p.back().inv();
    for (K& c : p) c = c * lcinv;
    return p;
}

template <field_element K>
UniPoly<K> uni_gcd(UniPoly<K> f, UniPoly<K> g) {
    uni_trim(f);
    uni_trim(g);
    while (!g.empty()) {
        auto [q, r] = uni_divmod(std::move(f), g);
        (void)q;
        f = std::move(g);
        g = std::move(r);
    }
    return uni_monic(std::move(f));
}

/// Yun's squarefree decomposition. Requires characteristic 0 or larger
/// than deg(p). Returns (multiplicity, monic factor) pairs, multiplicities
/// ascending, factors of positive degree only.
template <field_element K>
std::vector<std::pair<int, UniPoly<K>>> uni_squarefree(const UniPoly<K>& p0) {
    std::vector<std::pair<int, UniPoly<K>>> out;
    UniPoly<K> f = uni_monic(p0);
    if (uni_degree(f) < 1) return out;
    const K zero = f[0].from_int(0);
    UniPoly<K> fp = uni_derivative(f);
    UniPoly<K> a = uni_gcd(f, fp);
    UniPoly<K> b = uni_div_exact(f, a);
    UniPoly<K> c = uni_div_exact(fp, a);
    UniPoly<K> d = uni_sub(c, uni_derivative(b), zero);
    int i = 1;
    while (uni_degree(b) > 0) {
        UniPoly<K> part = uni_gcd(b, d);
        if (uni_degree(part) > 0) out.emplace_back(i, part);
        b = uni_div_exact(b, part);
        c = uni_div_exact(d, part);
        d = uni_sub(c, uni_derivative(b), zero);
        ++i;
    }
    return out;
}

}  // namespace detail

/// Dehomogenisation f(1, u): coefficient i of the result multiplies u^i.
template <ring_element R>
std::vector<R> dehomogenized(const BinaryForm<R>& f) {
    std::vector<R> p(f.coefficients());
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

/// Scales so the coefficient of the highest occurring s-power is 1.
template <field_element K>
BinaryForm<K> leading_normalized(const BinaryForm<K>& f) {
    const int li = f.leading_index();
    if (li < 0) return f;
    const K inv = f.coefficient(li).inv();
    std::vector<K> c;
    c.reserve(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) c.push_back(f.coefficient(i) * inv);
    return BinaryForm<K>(f.degree(), std::move(c));
}

/// Homogeneous gcd: the gcd of the dehomogenisations with the common power
/// of s restored, normalised so its highest s-power coefficient is 1.
/// Requires at least one argument nonzero.
template <field_element K>
BinaryForm<K> gcd(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("gcd: both forms are zero");
    if (f.is_zero()) return leading_normalized(g);
    if (g.is_zero()) return leading_normalized(f);
    auto pf = dehomogenized(f);
    auto pg = dehomogenized(g);
    const int sf = f.degree() - detail::uni_degree(pf);
    const int sg = g.degree() - detail::uni_degree(pg);
    auto h = detail::uni_gcd(pf, pg);
    const int k = std::min(sf, sg);
    const int deg = detail::uni_degree(h) + k;
    std::vector<K> c(deg + 1, f.coefficient(0).from_int(0));
    for (int j = 0; j <= detail::uni_degree(h); ++j) c[j] = h[j];
    return leading_normalized(BinaryForm<K>(deg, std::move(c)));
}

/// Squarefree decomposition into (multiplicity, cluster) pairs: cluster m is
/// the normalised product of the distinct projective linear factors occurring
/// with multiplicity exactly m (the root at [0:1] included). Multiplicities
/// ascending. Requires f nonzero and characteristic 0 or > deg f.
template <field_element K>
std::vector<std::pair<int, BinaryForm<K>>> squarefree_decompose(const BinaryForm<K>& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_decompose: zero form");
    const K zero = f.coefficient(0).from_int(0);
    const K one = f.coefficient(0).from_int(1);
    auto p = dehomogenized(f);
    const int spower = f.degree() - detail::uni_degree(p);
    auto uni = detail::uni_squarefree(p);

    std::vector<std::pair<int, BinaryForm<K>>> out;
    for (auto& [mult, poly] : uni) {
        const int deg = detail::uni_degree(poly);
        std::vector<K> c(deg + 1, zero);
        for (int j = 0; j <= deg; ++j) c[j] = poly[j];
        out.emplace_back(mult, leading_normalized(BinaryForm<K>(deg, std::move(c))));
    }
    if (spower > 0) {
        const BinaryForm<K> s_factor(1, {one, zero});
        bool merged = false;
        for (auto& [mult, cluster] : out) {
            if (mult == spower) {
                cluster = cluster * s_factor;
                merged = true;
                break;
            }
        }
        if (!merged) out.emplace_back(spower, s_factor);
        std::sort(out.begin(), out.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
    }

    // The decomposition is only trusted if it reproduces f up to a scalar.
    BinaryForm<K> recon = f.from_int(1);
    for (const auto& [mult, cluster] : out) recon = recon * pow(cluster, mult);
    const int fi = f.leading_index();
    const int ri = recon.leading_index();
    bool ok = (ri >= 0) && (recon.degree() == f.degree()) && (ri == fi);
    if (ok) {
        const K scale = f.coefficient(fi) * recon.coefficient(ri).inv();
        ok = (recon * BinaryForm<K>::constant(scale) == f);
    }
    if (!ok) throw internal_error("squarefree_decompose: reconstruction check failed");
    return out;
}

/// Multiset of (multiplicity, cluster degree) pairs, multiplicities ascending.
template <field_element K>
std::vector<std::pair<int, int>> squarefree_pattern(const BinaryForm<K>& f) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [mult, cluster] : squarefree_decompose(f))
        out.emplace_back(mult, cluster.degree());
    return out;
}

namespace detail {

/// Resultant of two scalar coefficient sequences (leading-first, declared
/// degrees = length - 1) over a field, via a Euclidean remainder sequence.
/// Equals the Sylvester determinant of the padded sequences exactly.
template <field_element K>
K resultant_prs(std::vector<K> f, std::vector<K> g) {
    const K one = f.at(0).from_int(1);
    const K zero = one.from_int(0);
    K acc = one;
    // Peel declared-degree padding. Expanding the Sylvester determinant down
    // its first column gives, per vanishing leading coefficient:
    //   Res_{m,n}(f, g) = (-1)^n * g0 * Res_{m-1,n}(f', g)   (f0 = 0, f' = f shifted)
    //   Res_{m,n}(f, g) = f0 * Res_{m,n-1}(f, g')            (f0 != 0, g0 = 0)
    // and if both leading coefficients vanish the forms share the root [1:0].
    while (!f.empty() && f.front().is_zero()) {
        if (g.front().is_zero()) return zero;
        const int n = static_cast<int>(g.size()) - 1;
        K factor = g.front();
        if (n % 2 != 0) factor = -factor;
        acc = acc * factor;
        f.erase(f.begin());
    }
    while (!g.empty() && g.front().is_zero()) {
        acc = acc * f.front();
        g.erase(g.begin());
    }
    if (f.empty() || g.empty()) throw std::invalid_argument("resultant: zero form");

    // Convert to ascending univariate layout p(x) = f(x, 1).
    auto to_uni = [](const std::vector<K>& a) {
        UniPoly<K> p(a.rbegin(), a.rend());
        uni_trim(p);
        return p;
    };
    UniPoly<K> p = to_uni(f);
    UniPoly<K> q = to_uni(g);
    // The strip above removed leading-zero padding only; the trailing end
    // (low powers) may still carry declared-vs-actual degree differences.
    // Here both are genuine: declared degree == actual degree by layout.
    while (true) {
        if (q.empty()) return zero;
        const int m = uni_degree(p);
        const int n = uni_degree(q);
        if (n == 0) {
            K r = one;
            for (int i = 0; i < m; ++i) r = r * q[0];
            return acc * r;
        }
        auto [quo, rem] = uni_divmod(p, q);
        (void)quo;
        const int k = uni_degree(rem);
        if ((m % 2) && (n % 2)) acc = -acc;
        K lcpow = one;
        for (int i = 0; i < m - k; ++i) lcpow = lcpow * q.back();
        acc = acc * lcpow;
        p = std::move(q);
        q = std::move(rem);
    }
}

}  // namespace detail

/// Resultant of two nonzero binary forms at their declared degrees (the
/// Sylvester determinant in the s-leading convention). Vanishes iff the
/// forms share a projective root, the root at [1:0] included.
template <ring_element R>
R resultant(const BinaryForm<R>& f, const BinaryForm<R>& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero form");
    const R one = f.coefficient(0).from_int(1);
    if constexpr (field_element<R>) {
        return detail::resultant_prs<R>(f.coefficients(), g.coefficients());
    } else {
        return detail::sylvester_resultant<R>(f.coefficients(), g.coefficients(), one);
    }
}

/// Discriminant up to a fixed degree-dependent integer scalar: the resultant
/// of the two partial derivatives at declared degree d-1. Zero iff f has a
/// repeated root over the algebraic closure (projectively, so a root at
/// [1:0] or [0:1] counts). On cubics this equals -3 times the five-term
/// cubic discriminant. Degree-1 forms return 1. Requires characteristic 0
/// or > deg f.
template <ring_element R>
R discriminant(const BinaryForm<R>& f) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("discriminant: need a nonzero form of positive degree");
    const R one = f.coefficient(0).from_int(1);
    if (f.degree() == 1) return one;
    const BinaryForm<R> fs = f.derivative_s();
    const BinaryForm<R> ft = f.derivative_t();
    if (fs.is_zero() || ft.is_zero()) return one.from_int(0);  // c*s^d or c*t^d, d >= 2
    return resultant(fs, ft);
}

/// Discriminant of a cubic with coefficients c0..c3 (c0 the s^3 coefficient)
/// in any commutative ring:
///   18 c0 c1 c2 c3 - 4 c1^3 c3 + c1^2 c2^2 - 4 c0 c2^3 - 27 c0^2 c3^2.
template <ring_element R>
R cubic_discriminant(const R& c0, const R& c1, const R& c2, const R& c3) {
    auto k = [&](long long n) { return c0.from_int(n); };
    return k(18) * c0 * c1 * c2 * c3 - k(4) * c1 * c1 * c1 * c3 + c1 * c1 * c2 * c2 -
           k(4) * c0 * c2 * c2 * c2 - k(27) * c0 * c0 * c3 * c3;
}

template <ring_element R>
std::string BinaryForm<R>::str(const char* s, const char* t) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= d_; ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(";
        if constexpr (requires(const R r) { r.str(); })
            os << c_[i].str();
        else
            os << "?";
        os << ")";
        const int se = d_ - i;
        if (se > 0) os << "*" << s << (se > 1 ? "^" + std::to_string(se) : "");
        if (i > 0) os << "*" << t << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

}  // namespace pencils
