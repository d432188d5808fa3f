#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <utility>

#include "pencils/flag_chern.hpp"
#include "pencils/schubert.hpp"

using namespace pencils;

namespace {

ChowElement sig(int a, int b) { return ChowElement::basis({a, b}, 5); }

}  // namespace

TEST_CASE("flag elements keep the grading invariant") {
    CHECK_NOTHROW(FlagElement(sig(1, 0), sig(2, 0)));
    CHECK_NOTHROW(FlagElement(ChowElement::zero(5), sig(2, 0)));
    CHECK_NOTHROW(FlagElement(sig(1, 0), ChowElement::zero(5)));
    CHECK_THROWS_AS(FlagElement(sig(1, 0), sig(1, 0)), std::invalid_argument);
    CHECK_THROWS_AS(FlagElement(sig(1, 0), sig(3, 0)), std::invalid_argument);
    CHECK_THROWS_AS(FlagElement(ChowElement::basis({1, 0}, 4), sig(2, 0)),
                    std::invalid_argument);

    CHECK(FlagElement::zero(5).is_zero());
    CHECK(FlagElement::zeta(5).alpha() == ChowElement::one(5));
    CHECK(FlagElement::from_chow(sig(2, 1)).alpha().is_zero());
}

TEST_CASE("zeta satisfies its defining quadratic relation") {
    const auto zeta = FlagElement::zeta(5);
    const auto zeta2 = flag_multiply(zeta, zeta);
    CHECK(zeta2 == FlagElement(sig(1, 0), -sig(1, 1)));
}

TEST_CASE("flag ring structure") {
    const auto zeta = FlagElement::zeta(5);
    const auto x = FlagElement(3 * sig(1, 0), 2 * sig(2, 0) - sig(1, 1));
    const auto y = FlagElement(-sig(2, 0), 5 * sig(3, 0));
    const auto w = FlagElement::from_chow(sig(1, 0));

    CHECK(flag_multiply(x, y) == flag_multiply(y, x));
    CHECK(flag_multiply(flag_multiply(x, y), w) == flag_multiply(x, flag_multiply(y, w)));
    CHECK(flag_multiply(x, FlagElement::from_chow(ChowElement::one(5))) == x);
    CHECK(flag_multiply(x, FlagElement::zero(5)).is_zero());
    const auto y2 = FlagElement(4 * sig(2, 0), sig(3, 0));
    CHECK(flag_multiply(x, y + y2) == flag_multiply(x, y) + flag_multiply(x, y2));

    SUBCASE("the Chow ring embeds multiplicatively") {
        const auto a = sig(2, 0), b = sig(1, 1);
        CHECK(flag_multiply(FlagElement::from_chow(a), FlagElement::from_chow(b)) ==
              FlagElement::from_chow(multiply(a, b)));
    }

    SUBCASE("pushforward is the zeta coefficient and satisfies the projection formula") {
        CHECK(pushforward(zeta) == ChowElement::one(5));
        CHECK(pushforward(FlagElement::from_chow(sig(2, 0))).is_zero());
        const auto w = FlagElement(sig(2, 0), sig(3, 0));
        CHECK(pushforward(flag_multiply(FlagElement::from_chow(sig(1, 1)), w)) ==
              multiply(sig(1, 1), pushforward(w)));
    }
}

TEST_CASE("chern classes of the principal-part bundles") {
    CHECK(chern_top_principal_parts(1) == FlagElement(3 * ChowElement::one(5),
                                                      ChowElement::zero(5)));
    CHECK(chern_top_principal_parts(2) == FlagElement(6 * sig(1, 0), -3 * sig(1, 1)));
    CHECK(chern_top_principal_parts(3) ==
          FlagElement(6 * sig(2, 0) + 9 * sig(1, 1), ChowElement::zero(5)));

    const auto c4 = chern_top_principal_parts(4);
    CHECK(c4.alpha().is_zero());
    CHECK(c4.beta() == 18 * sig(3, 1) + 27 * sig(2, 2));

    CHECK(pushforward(chern_top_principal_parts(2)) == 6 * sig(1, 0));
    CHECK(pushforward(chern_top_principal_parts(3)) == 6 * sig(2, 0) + 9 * sig(1, 1));

    CHECK_THROWS_AS(chern_top_principal_parts(0), std::invalid_argument);
    CHECK_THROWS_AS(chern_top_principal_parts(5), std::invalid_argument);

    SUBCASE("graded components multiply out to the top class") {
        for (int r = 1; r <= 4; ++r) {
            const auto comps = chern_polynomial_principal_parts(r);
            REQUIRE(static_cast<int>(comps.size()) == r + 1);
            CHECK(comps[0] == FlagElement::from_chow(ChowElement::one(5)));
            CHECK(comps[r] == chern_top_principal_parts(r));
        }
        const auto c2 = chern_polynomial_principal_parts(2);
        CHECK(c2[1] == FlagElement(4 * ChowElement::one(5), sig(1, 0)));
    }

    SUBCASE("the Whitney recursion holds degree by degree") {
        // c(E^r) = c(E^{r-1}) * (1 + jet twist), checked for r = 4 against r = 3.
        const auto c3 = chern_polynomial_principal_parts(3);
        const auto c4all = chern_polynomial_principal_parts(4);
        const auto jet = FlagElement(-3 * ChowElement::one(5), 3 * sig(1, 0));
        for (int k = 1; k <= 4; ++k) {
            const auto prev = k <= 3 ? c3[k] : FlagElement::zero(5);
            const auto lower = flag_multiply(c3[k - 1], jet);
            CHECK(c4all[k] == prev + lower);
        }
    }
}

TEST_CASE("sym cube of the dual tautological bundle") {
    const auto elem = sym3_dual_elementary();
    const std::map<std::pair<int, int>, long long> expected{{{2, 1}, 18}, {{0, 2}, 9}};
    CHECK(elem == expected);

    const auto evaluated = chern_top_sym3_dual();
    CHECK(evaluated == 18 * sig(3, 1) + 27 * sig(2, 2));
    CHECK(evaluated == chern_top_principal_parts(4).beta());
}

TEST_CASE("orbit seven from the Fano class") {
    const auto fano = chern_top_sym3_dual();
    const auto o6 = 3 * sig(3, 1) + 6 * sig(2, 2);
    CHECK(orbit7_class(fano, o6) == 6 * sig(3, 1) + 3 * sig(2, 2));
    CHECK_THROWS_AS(orbit7_class(fano, sig(1, 0)), std::invalid_argument);
    CHECK_THROWS_AS(orbit7_class(sig(1, 0), sig(1, 0)), std::invalid_argument);
}

TEST_CASE("flag text form round-trips") {
    const auto c2 = chern_top_principal_parts(2);
    CHECK(to_text(c2) == "6*s[1]*z - 3*s[1,1] @ N=5");
    CHECK(to_text(c2, false) == "6*s[1]*z - 3*s[1,1]");
    CHECK(to_text(FlagElement::zeta(5), false) == "z");
    CHECK(to_text(FlagElement::zero(5)) == "0");
    CHECK(to_text(FlagElement::from_chow(ChowElement::one(5)), false) == "s[0]");
    CHECK(to_text(-FlagElement::zeta(5), false) == "-z");
    CHECK(to_text(FlagElement(sig(1, 0), ChowElement::zero(5)), false) == "s[1]*z");

    for (const auto& text : {"6*s[1]*z - 3*s[1,1]", "z", "s[0]", "-z", "s[1]*z",
                             "6*s[2]*z + 9*s[1,1]*z", "18*s[3,1] + 27*s[2,2]"}) {
        const auto parsed = parse_class(text, 5);
        CHECK(to_text(parsed.value, false) == text);
    }

    SUBCASE("parser handles zeta products and context suffixes") {
        CHECK(parse_class("z*z", 5).value == flag_multiply(FlagElement::zeta(5),
                                                           FlagElement::zeta(5)));
        CHECK(parse_class("3*z @ N=4", 7).value.context() == 4);
        CHECK(parse_class("3*z", 7).value.context() == 7);
        CHECK(parse_class("(1 + 2)*z", 5).value == 3 * FlagElement::zeta(5));
        CHECK_THROWS_AS(parse_class("z + s[2]", 5), std::invalid_argument);
        CHECK_THROWS_AS(parse_class("z @ N=oops", 5), std::invalid_argument);
    }
}
