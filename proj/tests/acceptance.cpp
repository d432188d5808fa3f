// Acceptance suite: one PASS/FAIL line per criterion, exit code = number of
// failed criteria. Each criterion is independent and hermetic; any exception
// escaping a criterion body counts as its failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pencils/classifier.hpp"
#include "pencils/flag_chern.hpp"
#include "pencils/harness.hpp"
#include "pencils/quartic.hpp"
#include "pencils/rational.hpp"
#include "pencils/rng.hpp"
#include "pencils/schubert.hpp"
#include "schur_oracle.hpp"

using namespace pencils;

namespace {

int g_failures = 0;

void run(int num, const std::string& what, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" [exception: ") + e.what() + "]";
    }
    std::printf("%s criterion %d: %s%s\n", ok ? "PASS" : "FAIL", num, what.c_str(),
                note.c_str());
    if (!ok) ++g_failures;
}

std::vector<Partition2> box_partitions(int n) {
    std::vector<Partition2> out;
    for (int a = 0; a <= n - 1; ++a)
        for (int b = 0; b <= a; ++b) out.push_back({a, b});
    return out;
}

ChowElement sig(int a, int b) { return ChowElement::basis({a, b}, 5); }

bool criterion_degrees() {
    const std::vector<std::pair<Partition2, long long>> table{
        {{0, 0}, 14}, {{1, 0}, 14}, {{2, 0}, 9}, {{1, 1}, 5}, {{3, 0}, 4},
        {{2, 1}, 5},  {{3, 1}, 3},  {{2, 2}, 2}, {{4, 1}, 1}, {{3, 2}, 2}};
    for (const auto& [p, want] : table)
        if (schubert_degree(p.a, p.b, 5) != want) return false;
    return true;
}

bool criterion_table() {
    const auto report = verify_table();
    if (!report.all_ok() || report.rows.size() != 8) return false;
    const long long degrees[] = {14, 84, 36, 99, 56, 21, 24, 18};
    const bool computed[] = {false, true, false, true, false, false, true, false};
    for (int i = 0; i < 8; ++i) {
        const auto& row = report.rows[i];
        if (row.orbit != all_orbits[i]) return false;
        if (row.degree != degrees[i] || row.expected_degree != degrees[i]) return false;
        if (row.computed != computed[i]) return false;
        if (plucker_degree(row.cls) != row.degree) return false;
    }
    if (to_text(report.rows[1].cls, false) != "6*s[1]") return false;
    if (to_text(report.rows[3].cls, false) != "6*s[2] + 9*s[1,1]") return false;
    if (to_text(report.rows[6].cls, false) != "6*s[3,1] + 3*s[2,2]") return false;
    if (!report.fano_zeta_part_zero || !report.fano_routes_agree) return false;
    if (report.fano_principal_parts != report.fano_sym3) return false;
    if (to_text(report.fano_sym3, false) != "18*s[3,1] + 27*s[2,2]") return false;
    return report.fano_degree == 108;
}

bool criterion_chern() {
    if (to_text(chern_top_principal_parts(1), false) != "3*z") return false;
    if (to_text(chern_top_principal_parts(2), false) != "6*s[1]*z - 3*s[1,1]") return false;
    if (to_text(chern_top_principal_parts(3), false) != "6*s[2]*z + 9*s[1,1]*z")
        return false;
    if (to_text(chern_top_principal_parts(4), false) != "18*s[3,1] + 27*s[2,2]")
        return false;

    if (pushforward(chern_top_principal_parts(2)) != 6 * sig(1, 0)) return false;
    if (pushforward(chern_top_principal_parts(3)) != 6 * sig(2, 0) + 9 * sig(1, 1))
        return false;

    const auto c4 = chern_top_principal_parts(4);
    if (!c4.alpha().is_zero()) return false;
    if (c4.beta() != chern_top_sym3_dual()) return false;

    const std::map<std::pair<int, int>, long long> elem{{{2, 1}, 18}, {{0, 2}, 9}};
    return sym3_dual_elementary() == elem;
}

bool criterion_classifier() {
    for (const Orbit o : all_orbits)
        if (classify(canonical_representative(o, Rational(0))).orbit != o) return false;

    using QMat = SymMatrix3<Rational>;
    const auto mk = [](long long a, long long b, long long c, long long h, long long e,
                       long long f) {
        return QMat(Rational(a), Rational(b), Rational(c), Rational(h), Rational(e),
                    Rational(f));
    };

    // <x^2, y^2 + t*xz>: O6 at t = 0, O5 for t != 0.
    if (classify(make_pencil(mk(1, 0, 0, 0, 0, 0), mk(0, 1, 0, 0, 0, 0))).orbit != Orbit::O6)
        return false;
    for (const Rational tv : {Rational(1), Rational(3), Rational(-2), Rational(2, 7)}) {
        const QMat qp(Rational(0), Rational(1), Rational(0), Rational(0), tv / Rational(2),
                      Rational(0));
        if (classify(make_pencil(mk(1, 0, 0, 0, 0, 0), qp)).orbit != Orbit::O5) return false;
    }

    // <xz, yz + t*x^2>: O7 at t = 0, O4 for t != 0.
    if (classify(make_pencil(mk(0, 0, 0, 0, 1, 0), mk(0, 0, 0, 0, 0, 1))).orbit != Orbit::O7)
        return false;
    for (const Rational tv : {Rational(1), Rational(-1), Rational(5), Rational(-3, 4)}) {
        const QMat qp(tv, Rational(0), Rational(0), Rational(0), Rational(0), Rational(1));
        if (classify(make_pencil(mk(0, 0, 0, 0, 1, 0), qp)).orbit != Orbit::O4) return false;
    }

    const auto det3 = [](const std::array<std::array<Rational, 3>, 3>& m) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };

    SplitRng rng(20240);
    for (const Orbit o : all_orbits) {
        const auto p = canonical_representative(o, Rational(0));
        for (int round = 0; round < 100; ++round) {
            long long a, b, c, d;
            do {
                a = rng.between(-9, 9);
                b = rng.between(-9, 9);
                c = rng.between(-9, 9);
                d = rng.between(-9, 9);
            } while (a * d - b * c == 0);
            const auto q = Rational(a) * p.q + Rational(b) * p.qp;
            const auto qp = Rational(c) * p.q + Rational(d) * p.qp;
            if (classify(make_pencil(q, qp)).orbit != o) return false;
        }
        for (int round = 0; round < 100; ++round) {
            std::array<std::array<Rational, 3>, 3> tr{};
            do {
                for (auto& row : tr)
                    for (auto& entry : row) entry = Rational(rng.between(-5, 5));
            } while (det3(tr).is_zero());
            const auto moved = make_pencil(p.q.congruence(tr), p.qp.congruence(tr));
            if (classify(moved).orbit != o) return false;
        }
    }
    return true;
}

bool criterion_randomized() {
    const auto start = std::chrono::steady_clock::now();
    const auto tangent = verify_tangent_sextic(kDefaultTangentTrials, 42);
    const auto flex = verify_flex_count(kDefaultFlexTrials, 42);
    const auto generic = verify_generic_line(kDefaultGenericTrials, 42);
    const auto secant = verify_secant_J(kDefaultSecantTrials, 42);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (tangent.success_rate() < kTangentThreshold) return false;
    if (flex.success_rate() < kFlexThreshold) return false;
    if (generic.success_rate() < kGenericThreshold) return false;
    if (secant.success_rate() < kSecantThreshold) return false;
    return elapsed < 120.0;
}

bool criterion_secant_invariant() {
    if (verify_secant_J(200, 7).successes != 200) return false;

    SplitRng rng(11);
    for (int round = 0; round < 200; ++round) {
        std::vector<Rational> c;
        for (int i = 0; i < 5; ++i) c.emplace_back(rng.between(-30, 30));
        const BinaryForm<Rational> f(4, c);
        if (quartic_J(f) != quartic_J_catalecticant(f)) return false;
    }

    return j_of_cross_ratio(Rational(-1)) == Rational(1728) &&
           j_of_cross_ratio(Rational(2)) == Rational(1728);
}

bool criterion_schubert_oracle() {
    const auto parts = box_partitions(5);
    for (const auto x : parts)
        for (const auto y : parts) {
            const auto got = multiply(ChowElement::basis(x, 5), ChowElement::basis(y, 5));
            ChowElement want = ChowElement::zero(5);
            for (const auto& [p, c] : schur_oracle::product(x, y, 5))
                want = want + c * ChowElement::basis(p, 5);
            if (got != want) return false;
        }

    for (const auto x : parts)
        for (const auto y : parts) {
            if (x.codim() + y.codim() != 8) continue;
            const long long pairing =
                integral(multiply(ChowElement::basis(x, 5), ChowElement::basis(y, 5)));
            if (pairing != (y == dual_partition(x, 5) ? 1 : 0)) return false;
        }
    return true;
}

}  // namespace

int main() {
    run(1, "Pluecker degrees of the ten Schubert cycles in the table", criterion_degrees);
    run(2, "orbit-closure table reassembles with matching degrees", criterion_table);
    run(3, "Chern classes of the principal-part bundles and their pushforwards",
        criterion_chern);
    run(4, "classifier fixes all representatives, degenerations, and symmetries",
        criterion_classifier);
    run(5, "randomized battery meets its thresholds within the time budget",
        criterion_randomized);
    run(6, "secant J-invariant identities", criterion_secant_invariant);
    run(7, "Schubert products match the independent Schur oracle with Poincare duality",
        criterion_schubert_oracle);

    if (g_failures == 0)
        std::printf("acceptance: all 7 criteria passed\n");
    else
        std::printf("acceptance: %d criteria failed\n", g_failures);
    return g_failures;
}
