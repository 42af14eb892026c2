#include <catch2/catch_amalgamated.hpp>

#include "gca/exterior.hpp"
#include "gca/rng.hpp"

using namespace gca;

namespace {

HomogeneousPoint random_point(Rng& rng, long long bound) {
    while (true) {
        HomogeneousPoint p =
            make_point(rng.uniform(-bound, bound), rng.uniform(-bound, bound), rng.uniform(-bound, bound));
        if (!(p.x[0].is_zero() && p.x[1].is_zero() && p.x[2].is_zero())) return p;
    }
}

PluckerLine negate(const PluckerLine& l) { return PluckerLine{{-l.p[0], -l.p[1], -l.p[2]}}; }

} // namespace

TEST_CASE("join of two points") {
    SECTION("basis wedge") {
        const auto line = join_pp(make_point(1, 0, 0), make_point(0, 1, 0));
        REQUIRE(line.has_value());
        CHECK(*line == PluckerLine{{Rational(1), Rational(0), Rational(0)}}); // e0^e1
    }
    SECTION("self join is the zero extensor") {
        const HomogeneousPoint p = make_point(3, -5, 7);
        CHECK_FALSE(join_pp(p, p).has_value());
        CHECK_FALSE(join_pp(p, scale(p, Rational(-4))).has_value()); // projectively equal
    }
    SECTION("hand-expanded minors") {
        const auto line = join_pp(make_point(0, 0, 1), make_point(1, 0, 1));
        REQUIRE(line.has_value());
        CHECK(*line == PluckerLine{{Rational(0), Rational(-1), Rational(0)}});
    }
}

TEST_CASE("bracket is the coordinate determinant") {
    CHECK(bracket(make_point(1, 0, 0), make_point(0, 1, 0), make_point(0, 0, 1)) == 1);
    const HomogeneousPoint p = make_point(2, 3, 4), q = make_point(-1, 5, 9);
    CHECK(bracket(p, p, q) == 0);
    CHECK(bracket(p, q, q) == 0);
    CHECK(bracket(q, p, q) == 0);
    // a=(0,0,1), b=(1,0,1), c'=(5,1,1): det = 1.
    CHECK(bracket(make_point(0, 0, 1), make_point(1, 0, 1), make_point(5, 1, 1)) == 1);
}

TEST_CASE("meet of two lines") {
    SECTION("axes through the affine origin") {
        const auto y_axis_line = join_pp(make_point(0, 0, 1), make_point(1, 0, 1)); // y = 0
        const auto x_axis_line = join_pp(make_point(0, 0, 1), make_point(0, 1, 1)); // x = 0
        REQUIRE(y_axis_line);
        REQUIRE(x_axis_line);
        const auto origin = meet_ll(*y_axis_line, *x_axis_line);
        REQUIRE(origin);
        CHECK(projectively_equal(*origin, make_point(0, 0, 1)));
    }
    SECTION("self meet is the zero extensor") {
        const auto line = join_pp(make_point(1, 2, 3), make_point(4, 5, 6));
        REQUIRE(line);
        CHECK_FALSE(meet_ll(*line, *line).has_value());
    }
    SECTION("two affine lines, y = x/2 and y = 1 - x") {
        const auto l = join_pp(make_point(0, 0, 1), make_point(2, 1, 1));
        const auto m = join_pp(make_point(0, 1, 1), make_point(1, 0, 1));
        REQUIRE(l);
        REQUIRE(m);
        const auto w = meet_ll(*l, *m);
        REQUIRE(w);
        CHECK(projectively_equal(*w, make_point(make_rational(2, 3), make_rational(1, 3), Rational(1))));
    }
}

TEST_CASE("meet of a line with a point") {
    const auto base = join_pp(make_point(0, 0, 1), make_point(1, 0, 1));
    REQUIRE(base);
    CHECK(meet_lp(*base, make_point(2, 0, 1)) == 0); // collinear
    CHECK(meet_lp(*base, make_point(make_rational(15, 8), make_rational(3, 8), Rational(1))) == make_rational(3, 8));

    // Unimodular frame: sign pinned by the bracket convention.
    const auto infinity_line = join_pp(make_point(1, 0, 0), make_point(0, 1, 0));
    REQUIRE(infinity_line);
    CHECK(meet_lp(*infinity_line, make_point(0, 0, 1)) == 1);
}

TEST_CASE("join antisymmetry on random points") {
    Rng rng(2024);
    for (int i = 0; i < 200; ++i) {
        const HomogeneousPoint p = random_point(rng, 50);
        const HomogeneousPoint q = random_point(rng, 50);
        const auto pq = join_pp(p, q);
        const auto qp = join_pp(q, p);
        if (!pq) {
            CHECK_FALSE(qp.has_value());
            continue;
        }
        REQUIRE(qp);
        CHECK(*qp == negate(*pq));
    }
}

TEST_CASE("bracket alternates and is multilinear") {
    Rng rng(77);
    for (int i = 0; i < 200; ++i) {
        const HomogeneousPoint p = random_point(rng, 30), q = random_point(rng, 30), r = random_point(rng, 30);
        const Rational d = bracket(p, q, r);
        CHECK(bracket(q, p, r) == -d);
        CHECK(bracket(p, r, q) == -d);
        CHECK(bracket(r, q, p) == -d);
        CHECK(bracket(q, r, p) == d);
        CHECK(bracket(r, p, q) == d);

        const Rational alpha = make_rational(rng.uniform(-20, 20), rng.uniform(1, 9));
        const Rational beta = make_rational(rng.uniform(-20, 20), rng.uniform(1, 9));
        const HomogeneousPoint p2 = random_point(rng, 30);
        const HomogeneousPoint mix = add(scale(p, alpha), scale(p2, beta));
        CHECK(bracket(mix, q, r) == alpha * bracket(p, q, r) + beta * bracket(p2, q, r));
    }
}

TEST_CASE("meet convention: [x y v]u - [x y u]v, coordinate-wise") {
    Rng rng(31337);
    int checked = 0;
    for (int i = 0; checked < 200 && i < 400; ++i) {
        const HomogeneousPoint x = random_point(rng, 40), y = random_point(rng, 40);
        const HomogeneousPoint u = random_point(rng, 40), v = random_point(rng, 40);
        const auto l = join_pp(x, y);
        const auto m = join_pp(u, v);
        if (!l || !m) continue;
        const HomogeneousPoint expected = add(scale(u, bracket(x, y, v)), scale(v, -bracket(x, y, u)));
        const auto got = meet_ll(*l, *m);
        if (got) {
            CHECK(*got == expected);
        } else {
            CHECK(expected == HomogeneousPoint{});
        }
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("meet incidence: the intersection lies on both lines") {
    Rng rng(555);
    int checked = 0;
    for (int i = 0; checked < 200 && i < 400; ++i) {
        const auto l = join_pp(random_point(rng, 25), random_point(rng, 25));
        const auto m = join_pp(random_point(rng, 25), random_point(rng, 25));
        if (!l || !m || projectively_equal(*l, *m)) continue;
        const auto w = meet_ll(*l, *m);
        REQUIRE(w);
        CHECK(meet_lp(*l, *w) == 0);
        CHECK(meet_lp(*m, *w) == 0);
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("meet_lp agrees with the generating bracket") {
    Rng rng(99);
    for (int i = 0; i < 100; ++i) {
        const HomogeneousPoint x = random_point(rng, 25), y = random_point(rng, 25), z = random_point(rng, 25);
        const auto l = join_pp(x, y);
        if (!l) continue;
        CHECK(meet_lp(*l, z) == bracket(x, y, z));
    }
}

TEST_CASE("display normalization") {
    CHECK(display_normalize(make_point(-2, -1, -3)) ==
          make_point(make_rational(2, 3), make_rational(1, 3), Rational(1)));
    CHECK(display_normalize(make_point(4, 2, 0)) == make_point(2, 1, 0));
    CHECK(to_string(display_normalize(make_point(15, 3, 8))) == "(15/8, 3/8, 1)");
}
