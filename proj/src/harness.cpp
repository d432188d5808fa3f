#include "pencils/harness.hpp"

#include <array>
#include <chrono>

#include "pencils/flag_chern.hpp"
#include "pencils/prime_field.hpp"
#include "pencils/quartic.hpp"
#include "pencils/rational.hpp"
#include "pencils/rng.hpp"
#include "pencils/ternary_form.hpp"

namespace pencils {

namespace {

using Clock = std::chrono::steady_clock;
using QForm = BinaryForm<Rational>;

constexpr long long kBox = 10;
constexpr long long kGenericPrime = 10007;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Runs `body(trial_rng) -> optional<reason>` per trial and folds results.
template <class Body>
TrialReport run_trials(std::string check, int trials, std::uint64_t seed, Body&& body) {
    if (trials < 1) throw std::invalid_argument("run_trials: need trials >= 1");
    const auto start = Clock::now();
    TrialReport report;
    report.check = std::move(check);
    report.trials = trials;
    for (int k = 0; k < trials; ++k) {
        const std::uint64_t trial_seed = SplitRng::derive(seed, static_cast<std::uint64_t>(k));
        SplitRng rng(trial_seed);
        if (auto reason = body(k, rng))
            report.failures.push_back({k, trial_seed, std::move(*reason)});
        else
            ++report.successes;
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

SymMatrix3<Rational> random_symmetric(SplitRng& rng) {
    const auto draw = [&rng] { return Rational(rng.between(-kBox, kBox)); };
    return SymMatrix3<Rational>(draw(), draw(), draw(), draw(), draw(), draw());
}

std::array<Rational, 6> slots(const SymMatrix3<Rational>& m) {
    return {m.a, m.b, m.c, m.h, m.e, m.f};
}

int rank_3x6(const std::array<std::array<Rational, 6>, 3>& rows_in) {
    auto rows = rows_in;
    int rank = 0;
    for (int col = 0; col < 6 && rank < 3; ++col) {
        int pivot = -1;
        for (int r = rank; r < 3; ++r)
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        const Rational inv = rows[rank][col].inv();
        for (int r = rank + 1; r < 3; ++r) {
            const Rational factor = rows[r][col] * inv;
            for (int c = col; c < 6; ++c) rows[r][c] = rows[r][c] - factor * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

ChowElement sigma(int a, int b) { return ChowElement::basis({a, b}, 5); }

}  // namespace

TrialReport verify_tangent_sextic(int trials, std::uint64_t seed) {
    return run_trials("tangent", trials, seed, [](int, SplitRng& rng) -> std::optional<std::string> {
        const auto q = slots(random_symmetric(rng));
        const auto qp = slots(random_symmetric(rng));
        const auto qpp = slots(random_symmetric(rng));

        // det(sQ + t(lambda Q' + mu Q'')): outer in (s,t), inner in
        // (lambda, mu).
        std::array<BinaryForm<QForm>, 6> entries{
            BinaryForm<QForm>(1, {QForm(0, {q[0]}), QForm(1, {qp[0], qpp[0]})}),
            BinaryForm<QForm>(1, {QForm(0, {q[1]}), QForm(1, {qp[1], qpp[1]})}),
            BinaryForm<QForm>(1, {QForm(0, {q[2]}), QForm(1, {qp[2], qpp[2]})}),
            BinaryForm<QForm>(1, {QForm(0, {q[3]}), QForm(1, {qp[3], qpp[3]})}),
            BinaryForm<QForm>(1, {QForm(0, {q[4]}), QForm(1, {qp[4], qpp[4]})}),
            BinaryForm<QForm>(1, {QForm(0, {q[5]}), QForm(1, {qp[5], qpp[5]})})};
        const SymMatrix3<BinaryForm<QForm>> m(entries[0], entries[1], entries[2], entries[3],
                                              entries[4], entries[5]);
        const BinaryForm<QForm> det = m.det();
        if (det.is_zero()) return "determinant family vanishes identically";

        const QForm q6 = cubic_discriminant(det.coefficient(0), det.coefficient(1),
                                            det.coefficient(2), det.coefficient(3));
        if (q6.is_zero()) return "q6 vanishes identically";
        if (q6.degree() != 6) throw internal_error("verify_tangent_sextic: q6 degree");
        if (discriminant(q6).is_zero()) return "q6 has a repeated root";
        return std::nullopt;
    });
}

TrialReport verify_flex_count(int trials, std::uint64_t seed) {
    return run_trials("flex", trials, seed, [](int, SplitRng& rng) -> std::optional<std::string> {
        std::array<std::array<Rational, 6>, 3> pts{};
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 100) throw std::runtime_error("verify_flex_count: no spanning draw");
            for (auto& row : pts) row = slots(random_symmetric(rng));
            if (rank_3x6(pts) == 3) break;
        }

        // Restrict the determinant cubic to the plane u0 P0 + u1 P1 + u2 P2.
        using TForm = TernaryForm<Rational>;
        const Rational rzero(0);
        const auto lin = [&](int slot) {
            TForm t = TForm::zero(1, rzero);
            t.set_coefficient(1, 0, pts[0][slot]);
            t.set_coefficient(0, 1, pts[1][slot]);
            t.set_coefficient(0, 0, pts[2][slot]);
            return t;
        };
        const SymMatrix3<TForm> m(lin(0), lin(1), lin(2), lin(3), lin(4), lin(5));
        const TForm cubic = m.det();
        if (cubic.is_zero()) return "plane section of the determinant cubic vanishes";
        const TForm hess = hessian(cubic);
        if (hess.is_zero()) return "hessian vanishes identically";

        const BinaryForm<QForm> fpoly(3, cubic.u2_coefficients());
        const BinaryForm<QForm> hpoly(3, hess.u2_coefficients());
        const QForm eliminant = resultant(fpoly, hpoly);
        if (eliminant.is_zero()) return "flex eliminant vanishes identically";
        if (eliminant.degree() != 9) throw internal_error("verify_flex_count: eliminant degree");
        if (discriminant(eliminant).is_zero()) return "flex eliminant has a repeated root";
        return std::nullopt;
    });
}

TrialReport verify_generic_line(int trials, std::uint64_t seed) {
    return run_trials("generic", trials, seed,
                      [](int, SplitRng& rng) -> std::optional<std::string> {
                          const auto draw = [&rng] {
                              return Fp(rng.between(0, kGenericPrime - 1), kGenericPrime);
                          };
                          const Pencil<Fp> pencil = random_pencil<Fp>(draw);
                          const Classification<Fp> result = classify(pencil);
                          if (result.orbit == Orbit::O1) return std::nullopt;
                          return "classified as " + orbit_code(result.orbit);
                      });
}

TrialReport verify_secant_J(int trials, std::uint64_t seed) {
    return run_trials("secantJ", trials, seed,
                      [](int trial, SplitRng& rng) -> std::optional<std::string> {
                          const auto draw = [&rng] { return Rational(rng.between(-kBox, kBox)); };
                          QForm l1(1, {draw(), draw()});
                          QForm l2(1, {draw(), draw()});
                          for (int attempt = 0; attempt < 100; ++attempt) {
                              if (!l1.is_zero() && !l2.is_zero() &&
                                  !(l1.coefficient(0) * l2.coefficient(1) -
                                    l1.coefficient(1) * l2.coefficient(0))
                                       .is_zero())
                                  break;
                              l1 = QForm(1, {draw(), draw()});
                              l2 = QForm(1, {draw(), draw()});
                          }
                          Rational lambda = draw();
                          while (lambda.is_zero()) lambda = draw();

                          const QForm quartic =
                              pow(l1, 4) + QForm::constant(lambda) * pow(l2, 4);
                          if (!quartic_J(quartic).is_zero()) return "secant point has J != 0";

                          if (trial < 20) {
                              // Sample the line of quartics joining s^4 - t^4
                              // and st(s^2 + t^2): (1, mu, 0, mu, -1).
                              const Rational mu(rng.between(-50, 50));
                              const QForm point(
                                  4, {Rational(1), mu, Rational(0), mu, Rational(-1)});
                              if (!quartic_J(point).is_zero())
                                  return "secant-line sample has J != 0";
                          }
                          return std::nullopt;
                      });
}

Table1Report verify_table() {
    Table1Report report;

    const FlagElement c2 = chern_top_principal_parts(2);
    const FlagElement c3 = chern_top_principal_parts(3);
    const FlagElement c4 = chern_top_principal_parts(4);

    report.fano_principal_parts = c4.beta();
    report.fano_sym3 = chern_top_sym3_dual();
    report.fano_zeta_part_zero = c4.alpha().is_zero();
    report.fano_routes_agree = report.fano_principal_parts == report.fano_sym3;
    report.fano_degree = plucker_degree(report.fano_principal_parts);

    const ChowElement o6 = 3 * sigma(3, 1) + 6 * sigma(2, 2);
    const auto add_row = [&report](Orbit o, ChowElement cls, bool computed, long long expected) {
        report.rows.push_back(Table1Row{o, base_locus_descriptor(o), orbit_codim(o), cls,
                                        computed, plucker_degree(cls), expected});
    };
    add_row(Orbit::O1, sigma(0, 0), false, 14);
    add_row(Orbit::O2, pushforward(c2), true, 84);
    add_row(Orbit::O3, 4 * sigma(2, 0), false, 36);
    add_row(Orbit::O4, pushforward(c3), true, 99);
    add_row(Orbit::O5, 4 * sigma(3, 0) + 8 * sigma(2, 1), false, 56);
    add_row(Orbit::O6, o6, false, 21);
    add_row(Orbit::O7, orbit7_class(report.fano_principal_parts, o6), true, 24);
    add_row(Orbit::O8, 6 * sigma(4, 1) + 6 * sigma(3, 2), false, 18);
    return report;
}

}  // namespace pencils
