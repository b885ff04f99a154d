#include <doctest.h>

#include "dwind/bounds.hpp"
#include "dwind/errors.hpp"

using namespace dwind;
using S = std::vector<Summand>;

namespace {

CorrectionTable single(Rational d) { return CorrectionTable(1, {d}); }

}  // namespace

TEST_CASE("winding bound through 0-surgery") {
    const auto w = winding_bound_via_zero_surgery(KnotExpression(TorusKnot(2, 3)));
    CHECK(w.value == Rational(1));
    CHECK(w.induced_minimum == 2);
    CHECK(w.well_formed());

    const auto u = winding_bound_via_zero_surgery(KnotExpression::unknot());
    CHECK(u.value == Rational(0));
    CHECK(u.induced_minimum == 0);

    const auto t25 = winding_bound_via_zero_surgery(KnotExpression(TorusKnot(2, 5)));
    CHECK(t25.value == Rational(1));
    CHECK(t25.induced_minimum == 2);

    const auto mixed = winding_bound_via_zero_surgery(KnotExpression(S{{TorusKnot(2, 3), false}, {TorusKnot(2, 5), true}}));
    CHECK_FALSE(mixed.notes.empty());
}

TEST_CASE("smallest even g with ceil(g/4) >= rhs") {
    CHECK(min_even_with_quarter_ceiling(Rational(0)) == 0);
    CHECK(min_even_with_quarter_ceiling(Rational(-3)) == 0);
    CHECK(min_even_with_quarter_ceiling(Rational(1)) == 2);
    CHECK(min_even_with_quarter_ceiling(Rational(2)) == 6);
    CHECK(min_even_with_quarter_ceiling(Rational(3, 2)) == 6);
    for (int b = 1; b <= 40; ++b) {
        const auto g = min_even_with_quarter_ceiling(Rational(b));
        CHECK(g % 2 == 0);
        CHECK((g + 3) / 4 >= b);
        CHECK((g - 2 + 3) / 4 < b);
    }
}

TEST_CASE("table combinators") {
    CHECK(correction_rhs(single(Rational(-1, 2)), single(Rational(3, 2))) == Rational(1));
    CHECK(correction_rhs(single(Rational(-1, 2)), single(Rational(-1, 2))) == Rational(0));
    CHECK(correction_rhs(single(Rational(7, 4)), single(Rational(5, 4))) == Rational(2));
    CHECK_THROWS_AS(correction_rhs(single(Rational(0)), CorrectionTable(2, {Rational(0), Rational(0)})),
                    ValidationError);

    const auto w = winding_bound_from_tables(single(Rational(-1, 2)), single(Rational(3, 2)));
    CHECK(w.value == Rational(1));
    CHECK(w.induced_minimum == 2);

    const auto x = thurston_bound_from_tables(single(Rational(7, 4)), single(Rational(5, 4)));
    CHECK(x.value == Rational(2));
    CHECK(x.induced_minimum == 4);
}

TEST_CASE("multi-sphere bound") {
    const auto w = multi_sphere_bound(single(Rational(-1, 2)), single(Rational(3, 2)), 1);
    CHECK(w.value == Rational(2));
    CHECK(multi_sphere_bound(single(Rational(-1)), single(Rational(-1)), 1).value == Rational(0));
    CHECK(multi_sphere_bound(single(Rational(7, 4)), single(Rational(5, 4)), 2).value == Rational(4));
    CHECK_THROWS_AS(multi_sphere_bound(single(Rational(0)), single(Rational(0)), 0), ValidationError);
}

TEST_CASE("essential bound") {
    CHECK(essential_bound(EssentialInput(2, {Rational(1), Rational(1), Rational(1), Rational(1)})) == Rational(0));
    CHECK(essential_bound(EssentialInput(2, {Rational(1), Rational(0), Rational(0), Rational(0)})) == Rational(2));
    const std::vector<Rational> t{Rational(1, 2), Rational(-1, 4), Rational(1, 2), Rational(-1, 4)};
    CHECK(essential_bound(EssentialInput(2, t)) == Rational(0));
    CHECK(essential_report(EssentialInput(2, {Rational(1), Rational(0), Rational(0), Rational(0)})).induced_minimum == 2);
    CHECK_THROWS_AS(EssentialInput(3, std::vector<Rational>(9, Rational(0))), ValidationError);
    CHECK_THROWS_AS(EssentialInput(2, std::vector<Rational>(3, Rational(0))), ValidationError);
    CHECK_THROWS_AS(EssentialInput(0, {}), ValidationError);
}

TEST_CASE("shake genus bound") {
    CHECK(shake_bound(KnotExpression(TorusKnot(2, 3))).value == Rational(1));
    CHECK(shake_bound(KnotExpression(TorusKnot(2, 3)).mirror()).value == Rational(1));
    CHECK(shake_bound(KnotExpression::unknot()).value == Rational(0));
    CHECK(shake_bound(KnotExpression(TorusKnot(2, 9))).value == Rational(3));
}

TEST_CASE("K_n chain") {
    const auto r1 = reproduce_kn(1);
    CHECK(r1.trail.front().value == Rational(6));
    CHECK(r1.value == Rational(4));
    CHECK(r1.induced_minimum == 6);
    CHECK(r1.sharp == true);
    CHECK(r1.trail.back().name == "2n+2");
    CHECK(r1.well_formed());

    const auto r2 = reproduce_kn(2, KnOptions{true});
    CHECK(r2.trail[0].value == Rational(15));
    CHECK(r2.trail[1].value == Rational(12));
    CHECK(r2.value == Rational(6));
    CHECK(r2.induced_minimum == 10);

    const auto r3 = reproduce_kn(3);
    CHECK(r3.trail[0].value == Rational(28));
    CHECK(r3.trail[1].value == Rational(24));
    CHECK(r3.value == Rational(8));

    CHECK_THROWS_AS(reproduce_kn(0), ValidationError);
}

TEST_CASE("knotified Hopf link") {
    const auto w = reproduce_whitehead();
    CHECK(w.value == Rational(1));
    CHECK(w.induced_minimum == 2);
    CHECK(w.upper_bound == 2);
    CHECK(w.sharp == true);
}

TEST_CASE("a dishonest V-source is caught") {
    struct Skewed : VSource {
        std::int64_t v0(const KnotExpression& e) const override { return v_zero(e) + (e.all_positive() ? 1 : 0); }
    } skewed;
    CHECK_THROWS_AS(reproduce_kn(1, {}, skewed), InternalError);
}
