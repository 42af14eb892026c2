#include <catch2/catch_amalgamated.hpp>

#include "gca/dsl.hpp"
#include "gca/numeric_eval.hpp"
#include "gca/rng.hpp"
#include "gca/symbolic_eval.hpp"
#include "gca/verify.hpp"
#include "typed_expr_gen.hpp"

using namespace gca;

namespace {

const PointSet kPoints = PointSet::pappus_points();

/// The collinear fixture: a, b, c on y = 0 and a', b', c' on y = 1.
Assignment pappus_fixture() {
    Assignment out;
    out.emplace(kPoints.require("a"), make_point(0, 0, 1));
    out.emplace(kPoints.require("b"), make_point(1, 0, 1));
    out.emplace(kPoints.require("c"), make_point(3, 0, 1));
    out.emplace(kPoints.require("a'"), make_point(0, 1, 1));
    out.emplace(kPoints.require("b'"), make_point(2, 1, 1));
    out.emplace(kPoints.require("c'"), make_point(5, 1, 1));
    return out;
}

CayleyExpr typed_random_expr(Rng& rng, int step, int depth) {
    return gca_test::typed_random_expr(rng, kPoints, step, depth);
}

} // namespace

TEST_CASE("numeric evaluation of the hexagon product on the fixture") {
    const Assignment fixture = pappus_fixture();
    const NumericValue v = eval_numeric(pappus_lhs(), kPoints, fixture);
    CHECK(v == NumericValue(Top3<Rational>{Rational(0)}));
}

TEST_CASE("numeric evaluation basics on the fixture") {
    const Assignment fixture = pappus_fixture();
    SECTION("collinear triple joins to the zero top coefficient") {
        CHECK(eval_numeric(parse("abc"), kPoints, fixture) == NumericValue(Top3<Rational>{Rational(0)}));
    }
    SECTION("a pair joins to its line") {
        const NumericValue v = eval_numeric(parse("ab'"), kPoints, fixture);
        const auto expected = join_pp(fixture.at(kPoints.require("a")), fixture.at(kPoints.require("b'")));
        REQUIRE(expected);
        CHECK(v == NumericValue(*expected));
    }
    SECTION("self join is the tagged zero extensor") {
        CHECK(eval_numeric(parse("aa"), kPoints, fixture) == NumericValue(ZeroExtensor{2}));
        CHECK(eval_numeric(parse("aab"), kPoints, fixture) == NumericValue(Top3<Rational>{Rational(0)}));
    }
    SECTION("meet of a line with itself is the tagged zero extensor") {
        CHECK(eval_numeric(parse("ab ^ ab"), kPoints, fixture) == NumericValue(ZeroExtensor{1}));
        CHECK(eval_numeric(parse("ab ^ ac"), kPoints, fixture) ==
              NumericValue(ZeroExtensor{1})); // a, b, c collinear: the lines coincide
    }
    SECTION("scalar meets scale") {
        const NumericValue v = eval_numeric(parse("(ab ^ a') v b"), kPoints, fixture);
        const Rational s = bracket(fixture.at(kPoints.require("a")), fixture.at(kPoints.require("b")),
                                   fixture.at(kPoints.require("a'")));
        const HomogeneousPoint b = fixture.at(kPoints.require("b"));
        CHECK(v == NumericValue(scale(b, s)));
    }
}

TEST_CASE("numeric evaluation errors") {
    const Assignment fixture = pappus_fixture();
    CHECK_THROWS_AS(eval_numeric(parse("abca'"), kPoints, fixture), StepError);
    CHECK_THROWS_AS(eval_numeric(parse("a ^ b"), kPoints, fixture), StepError);
    CHECK_THROWS_AS(eval_numeric(parse("(abc) v a"), kPoints, fixture), StepError);
    CHECK_THROWS_AS(eval_numeric(parse("xy"), kPoints, fixture), UnknownPointError);

    Assignment partial = fixture;
    partial.erase(kPoints.require("c'"));
    CHECK_THROWS_AS(eval_numeric(parse("bc'"), kPoints, partial), UnassignedAtomError);
}

TEST_CASE("numeric evaluation matches substitution into the symbolic expansion") {
    Rng rng(4242);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        const int step = static_cast<int>(rng.uniform(0, 3));
        const CayleyExpr expr = typed_random_expr(rng, step, static_cast<int>(rng.uniform(1, 4)));
        const StepValue symbolic = eval_symbolic(expr, kPoints);
        REQUIRE(step_of(symbolic) == step);
        for (int j = 0; j < 5; ++j) {
            Rng trial = rng.split(static_cast<std::uint64_t>(i * 100 + j));
            const Configuration config = random_configuration(kPoints, trial, 50);
            const Assignment assignment = config.assignment(kPoints);
            const NumericValue direct = eval_numeric(expr, kPoints, assignment);
            const NumericValue through_symbolic = substitute(symbolic, assignment);
            CHECK(direct == through_symbolic);
            ++checked;
        }
    }
    CHECK(checked == 1000);
}
