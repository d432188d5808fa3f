#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pencils/binary_form.hpp"
#include "pencils/ring.hpp"
#include "pencils/rng.hpp"
#include "pencils/sym_matrix.hpp"

namespace pencils {

/*
 * Classification of pencils of plane conics into the eight PGL3 orbits.
 *
 * A pencil is spanned by symmetric matrices Q, Q'; the decision procedure
 * runs on f(s,t) = det(sQ + tQ'):
 *
 *   f != 0: the multiplicity pattern of f plus the rank of the member at a
 *           multiple root separate O1..O5;
 *   f == 0: every member is singular; the gcd g of the six 2x2 minors cuts
 *           out the rank-1 members, and deg g with squarefree-ness of g
 *           separates O6, O7, O8.
 *
 * Every intermediate is recorded in a Certificate. Configurations the
 * classification theorem excludes raise internal_error instead of being
 * assigned an orbit.
 */

enum class Orbit : int { O1 = 1, O2, O3, O4, O5, O6, O7, O8 };

/// "O1" .. "O8".
std::string orbit_code(Orbit o);
/// Geometric name, e.g. "simply tangent" for O2.
std::string orbit_name(Orbit o);
/// Base locus descriptor, e.g. "(2,1,1)" for O2.
std::string base_locus_descriptor(Orbit o);
/// Codimension of the orbit closure in G(1,5).
int orbit_codim(Orbit o);
std::optional<Orbit> orbit_from_code(const std::string& code);
constexpr std::array<Orbit, 8> all_orbits{Orbit::O1, Orbit::O2, Orbit::O3, Orbit::O4,
                                          Orbit::O5, Orbit::O6, Orbit::O7, Orbit::O8};

template <field_element K>
struct Pencil {
    SymMatrix3<K> q;
    SymMatrix3<K> qp;
};

template <field_element K>
bool proportional(const SymMatrix3<K>& x, const SymMatrix3<K>& y) {
    const std::array<K, 6> u{x.a, x.b, x.c, x.h, x.e, x.f};
    const std::array<K, 6> v{y.a, y.b, y.c, y.h, y.e, y.f};
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (!(u[i] * v[j] - u[j] * v[i]).is_zero()) return false;
    return true;
}

template <field_element K>
Pencil<K> make_pencil(SymMatrix3<K> q, SymMatrix3<K> qp) {
    if (proportional(q, qp))
        throw std::invalid_argument("not a pencil: the two members are linearly dependent");
    return Pencil<K>{std::move(q), std::move(qp)};
}

/// det(sQ + tQ') as a binary cubic in (s, t); identically zero exactly when
/// every member of the pencil is singular.
template <field_element K>
BinaryForm<K> det_form(const Pencil<K>& p) {
    const K zero = p.q.a.from_int(0);
    const auto lin = [&](const K& cq, const K& cqp) {
        return BinaryForm<K>(1, {cq, cqp});
    };
    const SymMatrix3<BinaryForm<K>> m(lin(p.q.a, p.qp.a), lin(p.q.b, p.qp.b),
                                      lin(p.q.c, p.qp.c), lin(p.q.h, p.qp.h),
                                      lin(p.q.e, p.qp.e), lin(p.q.f, p.qp.f));
    BinaryForm<K> d = m.det();
    if (d.is_zero()) return BinaryForm<K>::zero(3, zero);
    if (d.degree() != 3) throw internal_error("det_form: degree is not 3");
    return d;
}

template <field_element K>
SymMatrix3<K> member_at(const Pencil<K>& p, const K& s0, const K& t0) {
    return SymMatrix3<K>(s0 * p.q.a + t0 * p.qp.a, s0 * p.q.b + t0 * p.qp.b,
                         s0 * p.q.c + t0 * p.qp.c, s0 * p.q.h + t0 * p.qp.h,
                         s0 * p.q.e + t0 * p.qp.e, s0 * p.q.f + t0 * p.qp.f);
}

template <field_element K>
struct Certificate {
    BinaryForm<K> det_cubic;
    std::optional<std::vector<std::pair<int, int>>> pattern;
    std::optional<std::pair<K, K>> multiple_root;
    std::optional<int> rank_at_multiple_root;
    std::optional<BinaryForm<K>> rank1_locus;
};

template <field_element K>
struct Classification {
    Orbit orbit;
    Certificate<K> certificate;
};

namespace detail {

/// Root [s0 : t0] of a linear form c0 s + c1 t, normalized so the first
/// nonzero coordinate is 1.
template <field_element K>
std::pair<K, K> root_of_linear(const BinaryForm<K>& linear) {
    if (linear.degree() != 1 || linear.is_zero())
        throw internal_error("root_of_linear: not a nonzero linear form");
    K s0 = -linear.coefficient(1);
    K t0 = linear.coefficient(0);
    const K scale = s0.is_zero() ? t0.inv() : s0.inv();
    return {scale * s0, scale * t0};
}

}  // namespace detail

template <field_element K>
Classification<K> classify(const Pencil<K>& p) {
    const K kzero = p.q.a.from_int(0);
    const K kone = p.q.a.from_int(1);
    Certificate<K> cert{BinaryForm<K>::zero(3, kzero), std::nullopt, std::nullopt,
                        std::nullopt, std::nullopt};

    const BinaryForm<K> f = det_form(p);
    cert.det_cubic = f;

    if (!f.is_zero()) {
        const auto clusters = squarefree_decompose(f);
        std::vector<std::pair<int, int>> pattern;
        pattern.reserve(clusters.size());
        for (const auto& [mult, cluster] : clusters)
            pattern.emplace_back(mult, cluster.degree());
        cert.pattern = pattern;

        // Any simple root that is rational must carry a rank-2 member: a
        // line through a singular point of the determinant cubic surface
        // meets it with multiplicity >= 2 there.
        for (const auto& [mult, cluster] : clusters) {
            if (mult != 1 || cluster.degree() != 1) continue;
            const auto [s0, t0] = detail::root_of_linear(cluster);
            if (member_at(p, s0, t0).rank() != 2)
                throw internal_error("classification theorem violated: simple root rank");
        }

        if (pattern == std::vector<std::pair<int, int>>{{1, 3}})
            return {Orbit::O1, std::move(cert)};

        const auto classify_at = [&](const BinaryForm<K>& cluster, Orbit rank2_orbit,
                                     Orbit rank1_orbit) {
            const auto [s0, t0] = detail::root_of_linear(cluster);
            const int rank = member_at(p, s0, t0).rank();
            cert.multiple_root = std::make_pair(s0, t0);
            cert.rank_at_multiple_root = rank;
            if (rank == 2) return rank2_orbit;
            if (rank == 1) return rank1_orbit;
            throw internal_error("classification theorem violated: multiple root rank");
        };

        if (pattern == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
            const Orbit o = classify_at(clusters[1].second, Orbit::O2, Orbit::O3);
            return {o, std::move(cert)};
        }
        if (pattern == std::vector<std::pair<int, int>>{{3, 1}}) {
            const Orbit o = classify_at(clusters[0].second, Orbit::O4, Orbit::O5);
            return {o, std::move(cert)};
        }
        throw internal_error("classification theorem violated: impossible pattern");
    }

    // Degenerate case: every member singular. The six 2x2 minors of
    // sQ + tQ' are binary quadratics cutting out the rank-1 members.
    const auto lin = [&](const K& cq, const K& cqp) { return BinaryForm<K>(1, {cq, cqp}); };
    const SymMatrix3<BinaryForm<K>> m(lin(p.q.a, p.qp.a), lin(p.q.b, p.qp.b),
                                      lin(p.q.c, p.qp.c), lin(p.q.h, p.qp.h),
                                      lin(p.q.e, p.qp.e), lin(p.q.f, p.qp.f));
    std::optional<BinaryForm<K>> g;
    for (const BinaryForm<K>& minor : m.minors2()) {
        if (minor.is_zero()) continue;
        g = g ? gcd(*g, minor) : leading_normalized(minor);
    }
    if (!g) throw internal_error("classification theorem violated: pencil of rank <= 1");
    cert.rank1_locus = *g;

    const auto check_rank1_roots = [&]() {
        for (const auto& [mult, cluster] : squarefree_decompose(*g)) {
            if (cluster.degree() != 1) continue;
            const auto [s0, t0] = detail::root_of_linear(cluster);
            if (member_at(p, s0, t0).rank() != 1)
                throw internal_error("classification theorem violated: rank-1 locus rank");
        }
    };

    if (g->degree() == 2) {
        check_rank1_roots();
        const K disc = discriminant(*g);
        return {disc.is_zero() ? Orbit::O8 : Orbit::O6, std::move(cert)};
    }
    if (g->degree() == 0) {
        // No rank-1 member: the classification theorem forces every member
        // to have rank exactly 2; spot-check three members.
        const std::array<std::pair<K, K>, 3> samples{
            std::make_pair(kone, kzero), std::make_pair(kzero, kone), std::make_pair(kone, kone)};
        for (const auto& [s0, t0] : samples)
            if (member_at(p, s0, t0).rank() != 2)
                throw internal_error("classification theorem violated: rank jump without minors");
        return {Orbit::O7, std::move(cert)};
    }
    throw internal_error("classification theorem violated: rank-1 locus of degree 1");
}

/// The standard representative pencil of each orbit. Conic polynomials use
/// the 2exz convention, so the monomial xz is encoded with entry 1/2; over
/// a prime field this needs p > 2.
template <field_element K>
Pencil<K> canonical_representative(Orbit o, const K& like) {
    const K z = like.from_int(0);
    const K u = like.from_int(1);
    const K h = u / like.from_int(2);
    const auto mat = [&](K a, K b, K c, K hh, K e, K f) {
        return SymMatrix3<K>(std::move(a), std::move(b), std::move(c), std::move(hh),
                             std::move(e), std::move(f));
    };
    switch (o) {
        case Orbit::O1:  // <x^2+y^2, x^2+z^2>
            return make_pencil(mat(u, u, z, z, z, z), mat(u, z, u, z, z, z));
        case Orbit::O2:  // <x^2+y^2, xz>
            return make_pencil(mat(u, u, z, z, z, z), mat(z, z, z, z, h, z));
        case Orbit::O3:  // <x^2, yz>
            return make_pencil(mat(u, z, z, z, z, z), mat(z, z, z, z, z, h));
        case Orbit::O4:  // <x^2+yz, xz>
            return make_pencil(mat(u, z, z, z, z, h), mat(z, z, z, z, h, z));
        case Orbit::O5:  // <x^2, y^2+xz>
            return make_pencil(mat(u, z, z, z, z, z), mat(z, u, z, z, h, z));
        case Orbit::O6:  // <x^2, y^2>
            return make_pencil(mat(u, z, z, z, z, z), mat(z, u, z, z, z, z));
        case Orbit::O7:  // <xy, xz>
            return make_pencil(mat(z, z, z, h, z, z), mat(z, z, z, z, h, z));
        case Orbit::O8:  // <x^2, xy>
            return make_pencil(mat(u, z, z, z, z, z), mat(z, z, z, h, z, z));
    }
    throw std::invalid_argument("canonical_representative: bad orbit");
}

/// Random pencil with entries drawn by `draw`; re-drawn (at most 100 times)
/// until the two matrices span a pencil.
template <field_element K, class Draw>
Pencil<K> random_pencil(Draw&& draw) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        SymMatrix3<K> q(draw(), draw(), draw(), draw(), draw(), draw());
        SymMatrix3<K> qp(draw(), draw(), draw(), draw(), draw(), draw());
        if (!proportional(q, qp)) return Pencil<K>{std::move(q), std::move(qp)};
    }
    throw std::runtime_error("random_pencil: no pencil after 100 draws");
}

}  // namespace pencils
