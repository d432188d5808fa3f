#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "pencils/flag_chern.hpp"
#include "pencils/schubert.hpp"
#include "schur_oracle.hpp"

using namespace pencils;

namespace {

std::vector<Partition2> box_partitions(int n) {
    std::vector<Partition2> out;
    for (int a = 0; a <= n - 1; ++a)
        for (int b = 0; b <= a; ++b) out.push_back({a, b});
    return out;
}

}  // namespace

TEST_CASE("partition basics") {
    CHECK(Partition2{3, 1}.codim() == 4);
    CHECK(Partition2{4, 4}.fits_box(5));
    CHECK(!Partition2{5, 0}.fits_box(5));
    CHECK(!Partition2{1, 2}.fits_box(5));
    CHECK(Partition2{1, 1} < Partition2{2, 0});

    CHECK(dual_partition({0, 0}, 5) == Partition2{4, 4});
    CHECK(dual_partition({3, 1}, 5) == Partition2{3, 1});
    CHECK(dual_partition({2, 0}, 5) == Partition2{4, 2});
    for (const auto p : box_partitions(5)) {
        CHECK(dual_partition(dual_partition(p, 5), 5) == p);
        CHECK(p.codim() + dual_partition(p, 5).codim() == 8);
    }
}

TEST_CASE("chow elements are graded") {
    const auto s1 = ChowElement::basis({1, 0}, 5);
    const auto s2 = ChowElement::basis({2, 0}, 5);
    const auto s11 = ChowElement::basis({1, 1}, 5);

    CHECK((s2 + s11).codim() == 2);
    CHECK_THROWS_AS(s1 + s2, std::invalid_argument);
    CHECK_THROWS_AS(s1 - s11, std::invalid_argument);
    CHECK((s1 + ChowElement::zero(5)) == s1);
    CHECK((0 * s1).is_zero());
    CHECK(!ChowElement::zero(5).codim().has_value());
    CHECK(ChowElement::one(5).codim() == 0);
    CHECK((s2 + s11).coefficient({1, 1}) == 1);
    CHECK((s2 + s11).coefficient({4, 4}) == 0);

    CHECK_THROWS_AS(ChowElement::basis({9, 0}, 5), std::invalid_argument);
    CHECK_THROWS_AS(ChowElement::basis({1, 0}, 5) + ChowElement::basis({1, 0}, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(multiply(ChowElement::one(5), ChowElement::one(4)),
                    std::invalid_argument);
}

TEST_CASE("pieri rule on known strips") {
    const auto s1 = ChowElement::basis({1, 0}, 5);
    CHECK(pieri(s1, 1) == ChowElement::basis({2, 0}, 5) + ChowElement::basis({1, 1}, 5));
    CHECK(pieri(ChowElement::basis({4, 0}, 5), 1) == ChowElement::basis({4, 1}, 5));
    CHECK(pieri(ChowElement::basis({4, 4}, 5), 1).is_zero());
    CHECK(pieri(ChowElement::basis({2, 1}, 5), 0) == ChowElement::basis({2, 1}, 5));
    CHECK(pieri(ChowElement::basis({4, 2}, 5), 2) ==
          ChowElement::basis({4, 4}, 5));  // only one strip stays in the box
    CHECK(pieri(ChowElement::basis({2, 2}, 5), 3).is_zero());  // strip leaves the box
    CHECK(pieri(ChowElement::zero(5), 2).is_zero());
}

TEST_CASE("multiplication matches the two-variable Schur oracle") {
    for (const int n : {3, 4, 5}) {
        const auto parts = box_partitions(n);
        for (const auto x : parts)
            for (const auto y : parts) {
                const auto got = multiply(ChowElement::basis(x, n), ChowElement::basis(y, n));
                const auto want = schur_oracle::product(x, y, n);
                ChowElement expected = ChowElement::zero(n);
                for (const auto& [p, c] : want)
                    expected = expected + c * ChowElement::basis(p, n);
                CHECK(got == expected);
            }
    }
}

TEST_CASE("multiplication is commutative and associative") {
    const auto a = ChowElement::basis({2, 1}, 5);
    const auto b = 2 * ChowElement::basis({2, 0}, 5) + ChowElement::basis({1, 1}, 5);
    const auto c = ChowElement::basis({1, 1}, 5);
    CHECK(multiply(a, c) == multiply(c, a));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, ChowElement::one(5)) == a);
}

TEST_CASE("integral picks the point class") {
    CHECK(integral(ChowElement::basis({4, 4}, 5)) == 1);
    CHECK(integral(ChowElement::basis({4, 3}, 5)) == 0);
    CHECK(integral(ChowElement::zero(5)) == 0);
    CHECK(integral(7 * ChowElement::basis({4, 4}, 5)) == 7);
}

TEST_CASE("poincare duality pairing") {
    const auto parts = box_partitions(5);
    for (const auto x : parts)
        for (const auto y : parts) {
            if (x.codim() + y.codim() != 8) continue;
            const long long pairing =
                integral(multiply(ChowElement::basis(x, 5), ChowElement::basis(y, 5)));
            CHECK(pairing == (y == dual_partition(x, 5) ? 1 : 0));
        }
}

TEST_CASE("pluecker degrees of Schubert cycles in G(1,5)") {
    CHECK(schubert_degree(0, 0, 5) == 14);
    CHECK(schubert_degree(1, 0, 5) == 14);
    CHECK(schubert_degree(2, 0, 5) == 9);
    CHECK(schubert_degree(1, 1, 5) == 5);
    CHECK(schubert_degree(3, 0, 5) == 4);
    CHECK(schubert_degree(2, 1, 5) == 5);
    CHECK(schubert_degree(3, 1, 5) == 3);
    CHECK(schubert_degree(2, 2, 5) == 2);
    CHECK(schubert_degree(4, 1, 5) == 1);
    CHECK(schubert_degree(3, 2, 5) == 2);
    CHECK(schubert_degree(4, 4, 5) == 1);  // a point
    CHECK_THROWS_AS(schubert_degree(5, 0, 5), std::invalid_argument);

    SUBCASE("degree equals the self-intersection count with hyperplane classes") {
        // deg Sigma_{a,b} = integral of sigma_{a,b} * sigma_1^(8 - a - b).
        for (const auto p : box_partitions(5)) {
            ChowElement x = ChowElement::basis(p, 5);
            for (int i = 0; i < 8 - p.codim(); ++i) x = pieri(x, 1);
            CHECK(integral(x) == schubert_degree(p.a, p.b, 5));
        }
    }
}

TEST_CASE("pluecker degree extends linearly") {
    const auto cls = 6 * ChowElement::basis({3, 1}, 5) + 3 * ChowElement::basis({2, 2}, 5);
    CHECK(plucker_degree(cls) == 6 * 3 + 3 * 2);
    CHECK(plucker_degree(ChowElement::zero(5)) == 0);
    CHECK(plucker_degree(ChowElement::one(5)) == 14);
}

TEST_CASE("text form round-trips") {
    const auto e = 6 * ChowElement::basis({2, 0}, 5) + 9 * ChowElement::basis({1, 1}, 5);
    CHECK(to_text(e) == "6*s[2] + 9*s[1,1] @ N=5");
    CHECK(to_text(e, false) == "6*s[2] + 9*s[1,1]");
    CHECK(to_text(ChowElement::one(5)) == "s[0] @ N=5");
    CHECK(to_text(-ChowElement::basis({1, 0}, 5), false) == "-s[1]");
    CHECK(to_text(ChowElement::basis({2, 0}, 5) - ChowElement::basis({1, 1}, 5), false) ==
          "s[2] - s[1,1]");
    CHECK(to_text(ChowElement::zero(5)) == "0");

    for (const auto& text : {"6*s[2] + 9*s[1,1] @ N=5", "s[0] @ N=5", "-s[1] @ N=5",
                             "s[4,4] @ N=5", "-7*s[4,1] + 2*s[3,2] @ N=5"}) {
        const auto parsed = parse_class(text, 5);
        CHECK(parsed.declared_n == 5);
        CHECK(parsed.value.alpha().is_zero());
        CHECK(to_text(parsed.value.beta()) == text);
    }
}

TEST_CASE("class expression parser") {
    const auto p = parse_class("9*s[1,1]*(2*s[1]*s[1] + s[1,1])", 5);
    CHECK(!p.declared_n.has_value());
    CHECK(to_text(p.value.beta(), false) == "18*s[3,1] + 27*s[2,2]");

    CHECK(to_text(parse_class("s[1] * s[1] @ N=3", 5).value.beta()) ==
          "s[2] + s[1,1] @ N=3");
    CHECK(parse_class("-3", 5).value.beta() == -3 * ChowElement::one(5));
    CHECK(parse_class("s[2] - s[2]", 5).value.is_zero());

    CHECK_THROWS_AS(parse_class("s[5] @ N=5", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("s[1,2]", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("1 +", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("s[", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("s[1] garbage", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("s[1] @ N=1", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("s[1] + s[2]", 5), std::invalid_argument);
}
