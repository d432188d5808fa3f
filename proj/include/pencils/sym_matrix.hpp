#pragma once

#include <array>
#include <stdexcept>

#include "pencils/ring.hpp"

namespace pencils {

/*
 * Symmetric 3x3 matrix
 *
 *   [ a h e ]
 *   [ h b f ]
 *   [ e f c ]
 *
 * over a commutative ring. The entry order (a, b, c, h, e, f) matches the
 * conic convention a x^2 + 2h xy + b y^2 + 2e xz + 2f yz + c z^2.
 */
template <ring_element R>
struct SymMatrix3 {
    R a, b, c, h, e, f;

    SymMatrix3(R a_, R b_, R c_, R h_, R e_, R f_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)),
          h(std::move(h_)), e(std::move(e_)), f(std::move(f_)) {}

    [[nodiscard]] R det() const {
        const R two = a.from_int(2);
        return a * b * c + two * h * e * f - a * f * f - b * e * e - c * h * h;
    }

    /// The six distinct 2x2 minors of a symmetric 3x3 matrix.
    [[nodiscard]] std::array<R, 6> minors2() const {
        return {b * c - f * f, a * c - e * e, a * b - h * h,
                a * f - e * h, h * f - b * e, h * c - e * f};
    }

    [[nodiscard]] bool is_zero() const {
        return a.is_zero() && b.is_zero() && c.is_zero() && h.is_zero() && e.is_zero() &&
               f.is_zero();
    }

    /// Rank over an integral domain, decided by exact zero tests on minors.
    [[nodiscard]] int rank() const {
        if (!det().is_zero()) return 3;
        for (const R& m : minors2())
            if (!m.is_zero()) return 2;
        return is_zero() ? 0 : 1;
    }

    [[nodiscard]] std::array<std::array<R, 3>, 3> full() const {
        return {{{a, h, e}, {h, b, f}, {e, f, c}}};
    }

    /// Congruence transform: returns T^t M T for an arbitrary 3x3 matrix T.
    [[nodiscard]] SymMatrix3 congruence(const std::array<std::array<R, 3>, 3>& t) const {
        const auto m = full();
        std::array<std::array<R, 3>, 3> mt{};
        const R zero = a.from_int(0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                R acc = zero;
                for (int k = 0; k < 3; ++k) acc = acc + m[i][k] * t[k][j];
                mt[i][j] = acc;
            }
        std::array<std::array<R, 3>, 3> r{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                R acc = zero;
                for (int k = 0; k < 3; ++k) acc = acc + t[k][i] * mt[k][j];
                r[i][j] = acc;
            }
        return SymMatrix3(r[0][0], r[1][1], r[2][2], r[0][1], r[0][2], r[1][2]);
    }

    friend SymMatrix3 operator+(const SymMatrix3& x, const SymMatrix3& y) {
        return SymMatrix3(x.a + y.a, x.b + y.b, x.c + y.c, x.h + y.h, x.e + y.e, x.f + y.f);
    }

    friend SymMatrix3 operator*(const R& s, const SymMatrix3& m) {
        return SymMatrix3(s * m.a, s * m.b, s * m.c, s * m.h, s * m.e, s * m.f);
    }

    friend bool operator==(const SymMatrix3& x, const SymMatrix3& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.h == y.h && x.e == y.e && x.f == y.f;
    }
};

}  // namespace pencils
