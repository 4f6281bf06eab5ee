#include "doctest.h"

#include "jacobi/common.hpp"
#include "jacobi/integrals.hpp"
#include "support.hpp"

using namespace jacobi;

namespace {

const Color x = plain("x");
const Color y = plain("y");

DiagramSum one_color_gaussian(const Rational& l, int m) {
    const QuadraticForm lambda = QuadraticForm::build({x}, {{l}});
    return gaussian_part(lambda, 1, false, Truncation{std::nullopt, 2 * m});
}

} // namespace

TEST_CASE("circle reduction") {
    DiagramSum s;
    s.add(Diagram::circles_only(1), Rational(1));
    const DiagramSum r1 = o_reduce(s, 2);
    CHECK(r1.constant_term() == Rational(-4));
    CHECK(r1.size() == 1);

    DiagramSum cubes;
    cubes.add(Diagram::circles_only(3), Rational(5));
    CHECK(o_reduce(cubes, 2).constant_term() == Rational(-320));
    CHECK(o_reduce(cubes, 1).constant_term() == Rational(-40));

    DiagramSum mixed;
    mixed.add(disjoint_union(support::theta(), Diagram::circles_only(2)), Rational(1, 3));
    const DiagramSum rm = o_reduce(mixed, 1);
    CHECK(rm.coefficient(support::theta()) == Rational(4, 3));
    CHECK(rm.coefficient(disjoint_union(support::theta(), Diagram::circles_only(2))) ==
          Rational(0));
}

TEST_CASE("circle relation instances vanish after reduction") {
    for (int m : {1, 2}) {
        const DiagramSum inst =
            o_instance(disjoint_union(support::theta(), Diagram::circles_only(1)), m);
        CHECK(o_reduce(inst, m).empty());
    }
}

TEST_CASE("one-color gaussian integrates to the determinant power") {
    for (const Rational& l : {Rational(1), Rational(3), Rational(-2), Rational(1, 2)}) {
        for (int m : {1, 2}) {
            for (NdRoute route : {NdRoute::Direct, NdRoute::ViaPairing}) {
                const DiagramSum got =
                    nd_integrate(one_color_gaussian(l, m), {x}, m, true, route);
                const Rational want = pow(Rational(-1), m) * pow(l, m);
                CHECK(got.constant_term() == want);
                CHECK(got.size() == (want == Rational(0) ? 0u : 1u));
            }
        }
    }
}

TEST_CASE("two-color pure strut gaussian") {
    const QuadraticForm lambda = QuadraticForm::build(
        {x, y}, {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
    const DiagramSum g = gaussian_part(lambda, 1, false, Truncation{std::nullopt, 2});
    for (NdRoute route : {NdRoute::Direct, NdRoute::ViaPairing}) {
        const DiagramSum got = nd_integrate(g, {x, y}, 1, true, route);
        CHECK(got.constant_term() == Rational(-1));
    }
}

TEST_CASE("integration projects away wrong censuses") {
    DiagramSum s;
    s.add(strut(x, x), Rational(1));
    s.add(disjoint_union(strut(x, x), strut(x, x)), Rational(7));
    const DiagramSum got = nd_integrate(s, {x}, 1, false);
    REQUIRE(got.size() == 1);
    CHECK(got.coefficient(Diagram::circles_only(1)) == Rational(1));

    CHECK(nd_integrate(DiagramSum::unit(), {x}, 1, false).empty());
    CHECK(nd_integrate(DiagramSum::unit(), {}, 1, false).constant_term() == Rational(1));
}

TEST_CASE("integration colors must be plain and distinct") {
    const DiagramSum s = DiagramSum::single(strut(x, x));
    CHECK_THROWS_AS(nd_integrate(s, {dual_of(x)}, 1, false), InputError);
    CHECK_THROWS_AS(nd_integrate(s, {x, x}, 1, false), InputError);
    CHECK_THROWS_AS(nd_integrate(s, {x}, 0, false), InputError);
}

TEST_CASE("both integration routes agree on vertex diagrams") {
    DiagramSum s;
    s.add(support::four_cycle(x, y), Rational(1, 2));
    s.add(disjoint_union(strut(x, x), strut(y, y)), Rational(2));
    s.add(disjoint_union(support::two_leg_ladder(x), strut(y, y)), Rational(-1, 3));
    const DiagramSum direct = nd_integrate(s, {x, y}, 1, false, NdRoute::Direct);
    const DiagramSum paired = nd_integrate(s, {x, y}, 1, false, NdRoute::ViaPairing);
    CHECK(direct == paired);
    CHECK_FALSE(direct.empty());
}

TEST_CASE("formal gaussian integral of the one-variable example") {
    for (const Rational& c : {Rational(1), Rational(-2), Rational(3, 2)}) {
        const QuadraticForm lambda = QuadraticForm::build({x}, {{Rational(1)}});
        DiagramSum pert = DiagramSum::unit();
        pert.add(support::two_leg_ladder(x), c);
        const PerturbedGaussian g = PerturbedGaussian::build(lambda, pert);
        const DiagramSum got = fg_integrate(g, {x}, 1);
        CHECK(got.constant_term() == Rational(1));
        CHECK(got.coefficient(support::theta()) == -c);
        CHECK(got.size() == (c == Rational(0) ? 1u : 2u));
    }
}

TEST_CASE("formal gaussian integral needs an invertible form") {
    const PerturbedGaussian g =
        PerturbedGaussian::build(QuadraticForm::zero({x}), DiagramSum::unit());
    CHECK_THROWS_AS(fg_integrate(g, {x}, 1), SingularMatrixError);
}

TEST_CASE("span reduction") {
    DiagramSum g1;
    g1.add(support::theta(), Rational(1));
    g1.add(Diagram::circles_only(1), Rational(2));
    DiagramSum g2;
    g2.add(Diagram::circles_only(1), Rational(1));
    g2.add(Diagram::circles_only(2), Rational(-1));

    DiagramSum target = combine(Rational(2), g1, Rational(3), g2);
    const SpanReduction hit = reduce_mod_span(target, std::vector<DiagramSum>{g1, g2});
    CHECK(hit.member);
    CHECK(hit.residual.empty());

    DiagramSum off = target;
    off.add(strut(x, x), Rational(1));
    const SpanReduction miss = reduce_mod_span(off, std::vector<DiagramSum>{g1, g2});
    CHECK_FALSE(miss.member);
    CHECK(miss.residual.coefficient(strut(x, x)) == Rational(1));

    const SpanReduction trivial = reduce_mod_span(DiagramSum(), std::vector<DiagramSum>{g1});
    CHECK(trivial.member);

    const SpanReduction nogen = reduce_mod_span(g1, std::vector<DiagramSum>{});
    CHECK_FALSE(nogen.member);
}

TEST_CASE("span reduction respects the basis bound") {
    const int saved = Limits::span_basis_bound();
    Limits::span_basis_bound() = 2;
    DiagramSum wide;
    wide.add(Diagram::circles_only(1), Rational(1));
    wide.add(Diagram::circles_only(2), Rational(1));
    wide.add(Diagram::circles_only(3), Rational(1));
    CHECK_THROWS_AS(reduce_mod_span(wide, std::vector<DiagramSum>{}), BoundError);
    Limits::span_basis_bound() = saved;
}

TEST_CASE("diagrammatic determinant") {
    const QuadraticForm l5 = QuadraticForm::build({x}, {{Rational(5)}});
    CHECK(diagrammatic_det(l5, 1) == Rational(-5));
    CHECK(diagrammatic_det(l5, 2) == Rational(25));

    const QuadraticForm coupled = QuadraticForm::build(
        {x, y}, {{Rational(0), Rational(1)}, {Rational(1), Rational(1)}});
    CHECK(diagrammatic_det(coupled, 1) == Rational(-1));
    CHECK(diagrammatic_det(coupled, 2) == Rational(1));

    const QuadraticForm id2 = QuadraticForm::build(
        {x, y}, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    CHECK(diagrammatic_det(id2, 2) == Rational(1));

    const QuadraticForm big = QuadraticForm::zero(
        {x, y, plain("z"), plain("w"), plain("v")});
    CHECK_THROWS_AS(diagrammatic_det(big, 2), BoundError);
}

TEST_CASE("gaussian identity check") {
    const QuadraticForm coupled = QuadraticForm::build(
        {x, y}, {{Rational(0), Rational(1)}, {Rational(1), Rational(1)}});
    for (int m : {1, 2}) {
        const CheckReport rep = check_gaussian_identity(coupled, m);
        CHECK(rep.pass);
        CHECK(rep.mode == "literal");
        CHECK(rep.residual.empty());
    }
    const CheckReport zero = check_gaussian_identity(QuadraticForm::zero({x, y}), 1);
    CHECK(zero.pass);
    CHECK(zero.lhs.empty());
}

TEST_CASE("translation invariance in the literal regime") {
    const CheckReport rep = check_translation_invariance(strut(x, x), {x}, 1);
    CHECK(rep.pass);
    CHECK(rep.mode == "literal");

    const CheckReport low = check_translation_invariance(support::y_diagram(x, y, plain("z")),
                                                         {x, y, plain("z")}, 1);
    CHECK(low.pass);
    CHECK(low.mode == "literal");
}

TEST_CASE("translation invariance with one excess leg needs the quotient") {
    const Diagram d = disjoint_union(support::y_diagram(x, y, plain("z")), strut(x, x));
    REQUIRE_FALSE(canonicalize(d).zero);
    const CheckReport rep = check_translation_invariance(d, {x}, 1);
    CHECK(rep.pass);
    CHECK(rep.mode == "quotient");
    CHECK_FALSE(rep.rhs.empty());
    CHECK(rep.lhs.empty());
}

TEST_CASE("translation invariance with two excess legs needs the quotient") {
    const Diagram d = disjoint_union(strut(x, x), strut(x, x));
    const CheckReport rep = check_translation_invariance(d, {x}, 1);
    CHECK(rep.pass);
    CHECK(rep.mode == "quotient");
}

TEST_CASE("translation certificate validates the census") {
    CHECK(translation_certificate(strut(x, x), {x}, 1).empty());
    CHECK_THROWS_AS(translation_certificate(strut(x, x), {x}, 2), InputError);
    const Diagram d = disjoint_union(strut(x, x), disjoint_union(strut(x, x), strut(x, x)));
    CHECK_THROWS_AS(translation_certificate(d, {x}, 1), InputError);
}

TEST_CASE("main comparison on the one-variable example") {
    for (const Rational& c : {Rational(1), Rational(-2), Rational(3, 2)}) {
        const QuadraticForm lambda = QuadraticForm::build({x}, {{Rational(1)}});
        DiagramSum pert = DiagramSum::unit();
        pert.add(support::two_leg_ladder(x), c);
        const PerturbedGaussian g = PerturbedGaussian::build(lambda, pert);
        const CheckReport rep = check_comparison(g, {x}, 1);
        CHECK(rep.pass);
        CHECK(rep.mode == "literal");
        CHECK(rep.lhs.constant_term() == Rational(-1));
        CHECK(rep.lhs.coefficient(support::theta()) == c);
        CHECK(rep.lhs == rep.rhs);
    }
}

TEST_CASE("main comparison rejects singular forms and foreign colors") {
    const PerturbedGaussian g =
        PerturbedGaussian::build(QuadraticForm::zero({x}), DiagramSum::unit());
    CHECK_THROWS_AS(check_comparison(g, {x}, 1), SingularMatrixError);

    const PerturbedGaussian ok = PerturbedGaussian::build(
        QuadraticForm::build({x}, {{Rational(1)}}), DiagramSum::unit());
    CHECK_THROWS_AS(check_comparison(ok, {x, y}, 1), InputError);
}

TEST_CASE("coupled worked example at level two") {
    const QuadraticForm lambda = QuadraticForm::build(
        {x, y}, {{Rational(0), Rational(1)}, {Rational(1), Rational(1)}});
    const DiagramSum p = DiagramSum::single(support::four_cycle(x, y));
    const DiagramSum big_p = exp_truncate(p, Truncation{std::nullopt, 4});
    const PerturbedGaussian g = PerturbedGaussian::build(lambda, big_p);

    const CheckReport rep = check_comparison(g, {x, y}, 2);
    CHECK(rep.pass);
    CHECK(rep.mode == "literal");
    CHECK(rep.lhs.constant_term() == Rational(1));
    CHECK(rep.rhs.constant_term() == Rational(1));
    CHECK(rep.lhs == rep.rhs);
    CHECK(rep.lhs.size() > 1);
}
