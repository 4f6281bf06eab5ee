#include "doctest.h"

#include "jacobi/common.hpp"
#include "jacobi/gluing.hpp"
#include "support.hpp"

using namespace jacobi;

TEST_CASE("perfect matching enumeration") {
    int count = 0;
    for_each_perfect_matching({0, 1, 2, 3}, [&](const auto& pairs) {
        CHECK(pairs.size() == 2);
        ++count;
    });
    CHECK(count == 3);

    count = 0;
    for_each_perfect_matching({}, [&](const auto&) { ++count; });
    CHECK(count == 1);

    count = 0;
    for_each_perfect_matching({5, 9, 2, 7, 1, 4}, [&](const auto&) { ++count; });
    CHECK(count == 15);

    CHECK_THROWS_AS(for_each_perfect_matching({1, 2, 3}, [](const auto&) {}), InputError);
}

TEST_CASE("fusing the two legs of a strut yields a circle") {
    const Diagram s = strut(plain("x"), plain("x"));
    const Diagram fused = fuse_legs(s, {{0, 1}});
    CHECK(fused.legs().empty());
    CHECK(fused.circles() == 1);
    CHECK(fused.edges().empty());
}

TEST_CASE("fusing struts end to end collapses the chain") {
    const Diagram two = disjoint_union(strut(plain("x"), plain("y")), strut(plain("y"), plain("z")));
    const Diagram fused = fuse_legs(two, {{1, 2}});
    REQUIRE(fused.legs().size() == 2);
    CHECK(fused.legs_of_color(plain("x")) == 1);
    CHECK(fused.legs_of_color(plain("z")) == 1);
    CHECK(fused.edges().size() == 1);

    const Diagram closed = fuse_legs(two, {{1, 2}, {0, 3}});
    CHECK(closed.circles() == 1);
    CHECK(closed.legs().empty());
}

TEST_CASE("fusing legs on a vertex diagram") {
    const Diagram ladder = support::two_leg_ladder(plain("x"));
    const Diagram closed = fuse_legs(ladder, {{0, 1}});
    CHECK(closed.legs().empty());
    CHECK(closed.vertices().size() == 2);
    CHECK(closed.edges().size() == 3);
    CHECK(canonicalize(closed).key == canonicalize(support::theta()).key);
}

TEST_CASE("fuse validation") {
    const Diagram s = strut(plain("x"), plain("x"));
    CHECK_THROWS_AS(fuse_legs(s, {{0, 0}}), InputError);
    CHECK_THROWS_AS(fuse_legs(s, {{0, 2}}), InputError);
    const Diagram four =
        disjoint_union(strut(plain("x"), plain("x")), strut(plain("x"), plain("x")));
    CHECK_THROWS_AS(fuse_legs(four, {{0, 1}, {1, 2}}), InputError);
}

TEST_CASE("tracked fusion remaps surviving legs") {
    const Diagram four =
        disjoint_union(strut(plain("x"), plain("y")), strut(plain("x"), plain("y")));
    const FusedDiagram fd = fuse_legs_tracked(four, {{1, 3}}, {0, 2});
    CHECK(fd.diagram.legs().size() == 2);
    REQUIRE(fd.tracked.size() == 2);
    CHECK(fd.diagram.legs()[fd.tracked[0]].color == plain("x"));
    CHECK(fd.diagram.legs()[fd.tracked[1]].color == plain("x"));
    CHECK(fd.tracked[0] != fd.tracked[1]);
}

TEST_CASE("glue assignment checks colors") {
    const Diagram left = strut(dual_of(plain("x")), dual_of(plain("x")));
    const Diagram right = strut(plain("x"), plain("x"));
    const Diagram glued = glue_assignment(left, right, {{0, 0}, {1, 1}});
    CHECK(glued.circles() == 1);
    CHECK(glued.legs().empty());

    CHECK_THROWS_AS(glue_assignment(left, strut(plain("y"), plain("y")), {{0, 0}, {1, 1}}),
                    InputError);
    CHECK_THROWS_AS(glue_assignment(left, right, {{0, 0}, {1, 0}}), InputError);
    CHECK_THROWS_AS(glue_assignment(left, right, {{0, 5}}), InputError);
}

TEST_CASE("pairing dual struts against struts") {
    const DiagramSum left = DiagramSum::single(strut(dual_of(plain("x")), dual_of(plain("x"))));
    const DiagramSum right = DiagramSum::single(strut(plain("x"), plain("x")));
    const DiagramSum got = pairing(left, right, {plain("x")});
    REQUIRE(got.size() == 1);
    CHECK(got.coefficient(Diagram::circles_only(1)) == Rational(2));
}

TEST_CASE("pairing is unit on empty arguments and kills census mismatches") {
    const DiagramSum unit = DiagramSum::unit();
    CHECK(pairing(unit, unit, {plain("x")}).constant_term() == Rational(1));

    const DiagramSum left = DiagramSum::single(strut(dual_of(plain("x")), dual_of(plain("x"))));
    const DiagramSum right = DiagramSum::single(support::y_diagram(plain("x"), plain("y"),
                                                                   plain("z")));
    CHECK(pairing(left, right, {plain("x")}).empty());
}

TEST_CASE("pairing keeps spectator colors") {
    const DiagramSum left = DiagramSum::single(strut(dual_of(plain("x")), dual_of(plain("x"))));
    const Diagram y = support::y_diagram(plain("x"), plain("x"), plain("z"));
    // Two x-legs on a zero diagram: the pairing of a zero class is empty.
    CHECK(canonicalize(y).zero);
    const Diagram ladder_xz = Diagram::build(
        {Leg{0, plain("x")}, Leg{1, plain("z")}},
        {TrivalentVertex{{2, 3, 4}}, TrivalentVertex{{5, 6, 7}}},
        {{0, 2}, {1, 5}, {3, 6}, {4, 7}}, 0);
    const DiagramSum right =
        DiagramSum::single(disjoint_union(ladder_xz, strut(plain("x"), plain("z"))));
    const DiagramSum got = pairing(left, right, {plain("x")});
    REQUIRE(got.size() == 1);
    for (const auto& [key, term] : got.terms()) {
        CHECK(term.representative.legs_of_color(plain("z")) == 2);
        CHECK(term.representative.legs_of_color(plain("x")) == 0);
        CHECK(term.coeff == Rational(2));
    }
}

TEST_CASE("pairing result is independent of the thread count") {
    DiagramSum left, right;
    for (int k = 0; k < 3; ++k) {
        left.add(disjoint_union(strut(dual_of(plain("x")), dual_of(plain("x"))),
                                Diagram::circles_only(k)),
                 Rational(k + 1, 3));
        right.add(disjoint_union(strut(plain("x"), plain("x")), Diagram::circles_only(k)),
                  Rational(1, k + 2));
    }
    const int saved = Limits::pairing_threads();
    Limits::pairing_threads() = 1;
    const DiagramSum seq = pairing(left, right, {plain("x")});
    Limits::pairing_threads() = 5;
    const DiagramSum par = pairing(left, right, {plain("x")});
    Limits::pairing_threads() = saved;
    CHECK(seq == par);
    CHECK_FALSE(seq.empty());
}

TEST_CASE("translation expands each leg independently") {
    const Color x = plain("x");
    const DiagramSum s = DiagramSum::single(strut(x, x));
    const TranslationRule rule{x, {{bar_of(x), Rational(1)}}};
    const DiagramSum got = translate(s, {rule});

    DiagramSum want;
    want.add(strut(x, x), Rational(1));
    want.add(strut(x, bar_of(x)), Rational(2));
    want.add(strut(bar_of(x), bar_of(x)), Rational(1));
    CHECK(got == want);
}

TEST_CASE("translation with coefficients and two colors") {
    const Color x = plain("x");
    const Color y = plain("y");
    const DiagramSum s = DiagramSum::single(strut(x, y));
    const DiagramSum got = translate(
        s, {TranslationRule{x, {{bar_of(x), Rational(1, 2)}}},
            TranslationRule{y, {{bar_of(y), Rational(-3)}}}});

    DiagramSum want;
    want.add(strut(x, y), Rational(1));
    want.add(strut(bar_of(x), y), Rational(1, 2));
    want.add(strut(x, bar_of(y)), Rational(-3));
    want.add(strut(bar_of(x), bar_of(y)), Rational(-3, 2));
    CHECK(got == want);
}

TEST_CASE("translation validation") {
    const Color x = plain("x");
    const DiagramSum s = DiagramSum::single(strut(x, x));
    CHECK_THROWS_AS(translate(s, {TranslationRule{x, {{x, Rational(1)}}}}), InputError);
    CHECK_THROWS_AS(
        translate(s, {TranslationRule{x, {{bar_of(x), Rational(1)}}},
                      TranslationRule{bar_of(x), {{bar_of(plain("q")), Rational(1)}}}}),
        InputError);
}
