#include <doctest.h>

#include <numeric>

#include "dwind/errors.hpp"
#include "dwind/semigroup.hpp"
#include "oracles.hpp"

using namespace dwind;

TEST_CASE("semigroup of (2,3)") {
    NumericalSemigroup s(2, 3);
    CHECK(s.contains(0));
    CHECK_FALSE(s.contains(1));
    CHECK(s.contains(2));
    CHECK(s.contains(3));
    CHECK(s.conductor() == 2);
    CHECK(s.gaps() == std::vector<std::int64_t>{1});
}

TEST_CASE("membership matches double-loop enumeration") {
    for (int p = 2; p <= 12; ++p)
        for (int q = p + 1; q <= 15; ++q) {
            if (std::gcd(p, q) != 1) continue;
            NumericalSemigroup s(p, q);
            const std::int64_t limit = s.conductor() + 5;
            const auto members = oracle::semigroup_members(p, q, limit);
            for (std::int64_t x = 0; x < limit; ++x) REQUIRE(s.contains(x) == (members.count(x) == 1));
            CHECK(s.gap_count() == static_cast<std::int64_t>(p - 1) * (q - 1) / 2);
            CHECK(s.conductor() == static_cast<std::int64_t>(p - 1) * (q - 1));
        }
}

TEST_CASE("count_below") {
    CHECK(count_below(semigroup_from_pair(2, 3), 1) == 1);
    CHECK(count_below(semigroup_from_pair(4, 5), 6) == 3);
    CHECK(count_below(semigroup_from_pair(6, 7), 15) == 6);
    CHECK(count_below(semigroup_from_pair(4, 5), 0) == 0);
    CHECK(count_below(semigroup_from_pair(2, 3), 10) == 9);
    CHECK_THROWS_AS(count_below(semigroup_from_pair(2, 3), -1), ValidationError);
}

TEST_CASE("count_below agrees with the ceiling sum") {
    for (int p = 2; p <= 10; ++p)
        for (int q = p + 1; q <= 13; ++q) {
            if (std::gcd(p, q) != 1) continue;
            NumericalSemigroup s(p, q);
            for (std::int64_t t = 0; t <= static_cast<std::int64_t>(p) * q; ++t)
                REQUIRE(s.count_below(t) == oracle::ceiling_sum_count(p, q, t));
        }
}

TEST_CASE("torus knot V-sequences") {
    CHECK(v_sequence_torus(TorusKnot(2, 3)).values() == std::vector<std::int64_t>{1, 0});
    CHECK(v_sequence_torus(TorusKnot(4, 5)).values() == std::vector<std::int64_t>{3, 2, 1, 1, 1, 1, 0});
    CHECK(v_sequence_torus(TorusKnot(2, 9)).at(0) == 2);
    CHECK(v_sequence_torus(TorusKnot(2, 3)).at(7) == 0);
    for (int p = 2; p <= 9; ++p)
        for (int q = p + 1; q <= 14; ++q) {
            if (std::gcd(p, q) != 1) continue;
            REQUIRE(v_sequence_torus(TorusKnot(p, q)).values() == oracle::torus_v_enumerated(p, q));
        }
}

TEST_CASE("VSequence validation") {
    CHECK_NOTHROW(VSequence({2, 1, 1, 0}));
    CHECK_THROWS_AS(VSequence({2, 0}), InternalError);
    CHECK_THROWS_AS(VSequence({1, 2}), InternalError);
    CHECK_THROWS_AS(VSequence({-1}), InternalError);
    CHECK(VSequence({1, 0}) == VSequence({1, 0, 0, 0}));
    CHECK(VSequence({3, 2, 1, 1, 0}).support() == 4);
}

TEST_CASE("V0 closed-form families") {
    CHECK(v0_closed_form(V0Family::I, 2) == 3);
    CHECK(v0_closed_form(V0Family::II, 1) == 2);
    CHECK(v0_closed_form(V0Family::III, 1) == 4);
    CHECK(v0_family_knot(V0Family::I, 2) == TorusKnot(4, 5));
    CHECK(v0_family_knot(V0Family::II, 1) == TorusKnot(2, 9));
    CHECK(v0_family_knot(V0Family::III, 1) == TorusKnot(3, 13));
    CHECK(parse_v0_family("II") == V0Family::II);
    CHECK_THROWS_AS(parse_v0_family("IV"), ValidationError);
    for (auto f : {V0Family::I, V0Family::II, V0Family::III})
        for (int n = 1; n <= 12; ++n) {
            const auto k = v0_family_knot(f, n);
            REQUIRE(oracle::ceiling_sum_count(k.p(), k.q(), k.genus()) == v0_closed_form(f, n));
        }
}

TEST_CASE("multiplicity sequences") {
    CHECK(multiplicity_sequence(TorusKnot(3, 7)).entries() == std::vector<int>{3, 3});
    CHECK(multiplicity_sequence(TorusKnot(2, 3)).entries() == std::vector<int>{2});
    CHECK(multiplicity_sequence(TorusKnot(3, 13)).entries() == std::vector<int>{3, 3, 3, 3});
    CHECK(multiplicity_sequence(TorusKnot(3, 5)).entries() == std::vector<int>{3, 2});
    // the genus is the sum of m(m-1)/2
    for (int p = 2; p <= 12; ++p)
        for (int q = p + 1; q <= 20; ++q) {
            if (std::gcd(p, q) != 1) continue;
            int total = 0;
            const auto seq = multiplicity_sequence(TorusKnot(p, q));
            for (int m : seq.entries()) total += m * (m - 1) / 2;
            REQUIRE(total == TorusKnot(p, q).genus());
        }
}

TEST_CASE("diamond reduction") {
    using S = std::vector<Summand>;
    CHECK(diamond_reduce(KnotExpression(S{{TorusKnot(3, 7), false}, {TorusKnot(3, 7), false}})) == TorusKnot(3, 13));
    CHECK(diamond_reduce(KnotExpression(TorusKnot(2, 3))) == TorusKnot(2, 3));
    CHECK(diamond_reduce(KnotExpression(S{{TorusKnot(2, 3), false}, {TorusKnot(2, 5), false}})) == TorusKnot(2, 7));
    CHECK_FALSE(diamond_reduce(KnotExpression(S{{TorusKnot(2, 3), false}, {TorusKnot(3, 4), false}})));
    CHECK_FALSE(diamond_reduce(KnotExpression(S{{TorusKnot(2, 3), true}, {TorusKnot(2, 3), false}})));
    CHECK_FALSE(diamond_reduce(KnotExpression::unknot()));
}

TEST_CASE("diamond reduction preserves V-sequences") {
    // (a+b)n+1 <= 21 keeps the oracle cheap.
    for (int n = 2; n <= 5; ++n)
        for (int a = 1; (a + 1) * n + 1 <= 21; ++a)
            for (int b = 1; (a + b) * n + 1 <= 21; ++b) {
                const TorusKnot ka(n, a * n + 1), kb(n, b * n + 1);
                const auto reduced = diamond_reduce(KnotExpression(std::vector<Summand>{{ka, false}, {kb, false}}));
                REQUIRE(reduced);
                CHECK(*reduced == TorusKnot(n, (a + b) * n + 1));
                CHECK(v_sequence_torus(*reduced).values() == oracle::h_convolution_v({ka, kb}));
            }
}
