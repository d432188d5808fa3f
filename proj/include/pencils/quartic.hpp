#pragma once

#include <stdexcept>

#include "pencils/binary_form.hpp"
#include "pencils/ring.hpp"
#include "pencils/sym_matrix.hpp"

namespace pencils {

/*
 * Classical invariants of a binary quartic
 *
 *   f = a0 s^4 + a1 s^3 t + a2 s^2 t^2 + a3 s t^3 + a4 t^4,
 *
 * normalized so both are integral in the plain (non-binomial) coefficients:
 * I is 12x and J is 432x the binomial-convention classics. J vanishes
 * exactly when the four roots form an equianharmonic set (j = 0).
 */

template <ring_element R>
R quartic_I(const BinaryForm<R>& f) {
    if (f.degree() != 4) throw std::invalid_argument("quartic_I: degree must be 4");
    const auto& a = f.coefficients();
    const R k12 = a[0].from_int(12);
    const R k3 = a[0].from_int(3);
    return k12 * a[0] * a[4] - k3 * a[1] * a[3] + a[2] * a[2];
}

template <ring_element R>
R quartic_J(const BinaryForm<R>& f) {
    if (f.degree() != 4) throw std::invalid_argument("quartic_J: degree must be 4");
    const auto& a = f.coefficients();
    const auto k = [&](long long n) { return a[0].from_int(n); };
    return k(72) * a[0] * a[2] * a[4] - k(27) * a[0] * a[3] * a[3] -
           k(27) * a[1] * a[1] * a[4] + k(9) * a[1] * a[2] * a[3] - k(2) * a[2] * a[2] * a[2];
}

/// J computed as 1/4 of the catalecticant determinant; equals quartic_J.
template <field_element K>
K quartic_J_catalecticant(const BinaryForm<K>& f) {
    if (f.degree() != 4) throw std::invalid_argument("quartic_J_catalecticant: degree must be 4");
    const auto& a = f.coefficients();
    const auto k = [&](long long n) { return a[0].from_int(n); };
    const SymMatrix3<K> hankel(k(12) * a[0], k(2) * a[2], k(12) * a[4],
                               k(3) * a[1], k(2) * a[2], k(3) * a[3]);
    return hankel.det() / k(4);
}

/// j-invariant of four distinct points on P^1 with cross ratio lambda:
/// j = 256 (1 - lambda + lambda^2)^3 / (lambda^2 (1 - lambda)^2).
template <field_element K>
K j_of_cross_ratio(const K& lambda) {
    const auto k = [&](long long n) { return lambda.from_int(n); };
    const K one = k(1);
    const K num_base = one - lambda + lambda * lambda;
    const K den_base = lambda * (one - lambda);
    if (den_base.is_zero())
        throw std::domain_error("j_of_cross_ratio: lambda must avoid 0 and 1");
    return k(256) * num_base * num_base * num_base / (den_base * den_base);
}

}  // namespace pencils
