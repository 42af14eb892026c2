#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gca/bracket_ring.hpp"
#include "gca/cayley_expr.hpp"
#include "gca/coordinate_poly.hpp"
#include "gca/errors.hpp"
#include "gca/formal_point.hpp"
#include "gca/step_value.hpp"

namespace gca {

/// Full multilinear expansion of a Cayley expression over formal points.
/// Join children fold left to right; all output is canonical.
inline StepValue eval_symbolic(const CayleyExpr& expr, const PointSet& points) {
    switch (expr.kind()) {
    case CayleyExpr::Kind::Atom: {
        Step1 s;
        s.coeffs.emplace(points.require(expr.name()), BracketPolynomial::one());
        return s;
    }
    case CayleyExpr::Kind::Join: {
        const auto kids = expr.children();
        StepValue acc = eval_symbolic(kids[0], points);
        for (std::size_t i = 1; i < kids.size(); ++i) acc = join(acc, eval_symbolic(kids[i], points));
        return acc;
    }
    case CayleyExpr::Kind::Meet:
        return meet(eval_symbolic(expr.left(), points), eval_symbolic(expr.right(), points));
    }
    throw Error("unreachable expression kind");
}

// ---------------------------------------------------------------------------
// Raw expansion: the distributed product before any bracket
// canonicalization or cross-term cancellation. Argument orders inside
// brackets are preserved exactly as the expansion produces them, and
// brackets with repeated points survive (they normalize to zero later).
// ---------------------------------------------------------------------------

/// A bracket as written, not canonicalized.
struct RawBracket {
    std::array<FormalPoint, 3> args;

    bool operator==(const RawBracket&) const = default;
};

/// One signed summand: scalar bracket factors in the order the expansion
/// created them, then the not-yet-bracketed extensor points (empty at
/// step 0 and 3, one point at step 1, two at step 2).
struct RawTerm {
    int sign = 1;
    std::vector<RawBracket> brackets;
    std::vector<FormalPoint> points;
};

struct RawValue {
    int step = 0;
    std::vector<RawTerm> terms;
};

namespace detail {

inline RawValue raw_join(const RawValue& a, const RawValue& b) {
    if (a.step + b.step > 3)
        throw StepError("join of steps " + std::to_string(a.step) + " and " + std::to_string(b.step) +
                        " exceeds step 3");
    RawValue out;
    out.step = a.step + b.step;
    for (const RawTerm& ta : a.terms)
        for (const RawTerm& tb : b.terms) {
            RawTerm t;
            t.sign = ta.sign * tb.sign;
            t.brackets = ta.brackets;
            t.brackets.insert(t.brackets.end(), tb.brackets.begin(), tb.brackets.end());
            t.points = ta.points;
            t.points.insert(t.points.end(), tb.points.begin(), tb.points.end());
            if (t.points.size() == 3) {
                t.brackets.push_back(RawBracket{{t.points[0], t.points[1], t.points[2]}});
                t.points.clear();
            }
            out.terms.push_back(std::move(t));
        }
    return out;
}

inline RawValue raw_meet(const RawValue& a, const RawValue& b) {
    if (a.step + b.step < 3)
        throw StepError("meet of steps " + std::to_string(a.step) + " and " + std::to_string(b.step) +
                        " drops below step 0");
    RawValue out;
    out.step = a.step + b.step - 3;
    const auto scale_terms = [&](const RawValue& scalar, const RawValue& other) {
        for (const RawTerm& ts : scalar.terms)
            for (const RawTerm& to : other.terms) {
                RawTerm t;
                t.sign = ts.sign * to.sign;
                t.brackets = ts.brackets;
                t.brackets.insert(t.brackets.end(), to.brackets.begin(), to.brackets.end());
                t.points = to.points;
                out.terms.push_back(std::move(t));
            }
    };
    if (a.step == 3) {
        scale_terms(a, b);
        return out;
    }
    if (b.step == 3) {
        // Keep the left factor's brackets first.
        for (const RawTerm& ta : a.terms)
            for (const RawTerm& tb : b.terms) {
                RawTerm t;
                t.sign = ta.sign * tb.sign;
                t.brackets = ta.brackets;
                t.brackets.insert(t.brackets.end(), tb.brackets.begin(), tb.brackets.end());
                t.points = ta.points;
                out.terms.push_back(std::move(t));
            }
        return out;
    }
    if (a.step == 2 && b.step == 2) {
        // (x v y) ^ (u v v) = [x y v]·u - [x y u]·v, term by term.
        for (const RawTerm& ta : a.terms)
            for (const RawTerm& tb : b.terms) {
                const FormalPoint x = ta.points[0], y = ta.points[1];
                const FormalPoint u = tb.points[0], v = tb.points[1];
                RawTerm plus;
                plus.sign = ta.sign * tb.sign;
                plus.brackets = ta.brackets;
                plus.brackets.insert(plus.brackets.end(), tb.brackets.begin(), tb.brackets.end());
                plus.brackets.push_back(RawBracket{{x, y, v}});
                plus.points = {u};
                RawTerm minus = plus;
                minus.sign = -plus.sign;
                minus.brackets.back() = RawBracket{{x, y, u}};
                minus.points = {v};
                out.terms.push_back(std::move(plus));
                out.terms.push_back(std::move(minus));
            }
        return out;
    }
    // Line ^ point (either order) collapses to the scalar [x y p].
    const RawValue& line = (a.step == 2) ? a : b;
    const RawValue& point = (a.step == 2) ? b : a;
    for (const RawTerm& tl : line.terms)
        for (const RawTerm& tp : point.terms) {
            RawTerm t;
            t.sign = tl.sign * tp.sign;
            t.brackets = tl.brackets;
            t.brackets.insert(t.brackets.end(), tp.brackets.begin(), tp.brackets.end());
            t.brackets.push_back(RawBracket{{tl.points[0], tl.points[1], tp.points[0]}});
            out.terms.push_back(std::move(t));
        }
    return out;
}

} // namespace detail

/// Distributes the whole expression without normalizing anything.
inline RawValue raw_eval(const CayleyExpr& expr, const PointSet& points) {
    switch (expr.kind()) {
    case CayleyExpr::Kind::Atom: {
        RawValue v;
        v.step = 1;
        v.terms.push_back(RawTerm{1, {}, {points.require(expr.name())}});
        return v;
    }
    case CayleyExpr::Kind::Join: {
        const auto kids = expr.children();
        RawValue acc = raw_eval(kids[0], points);
        for (std::size_t i = 1; i < kids.size(); ++i) acc = detail::raw_join(acc, raw_eval(kids[i], points));
        return acc;
    }
    case CayleyExpr::Kind::Meet:
        return detail::raw_meet(raw_eval(expr.left(), points), raw_eval(expr.right(), points));
    }
    throw Error("unreachable expression kind");
}

/// The pre-normalization term list of a step-3 expression.
inline std::vector<RawTerm> raw_expansion_terms(const CayleyExpr& expr, const PointSet& points) {
    RawValue v = raw_eval(expr, points);
    if (v.step != 3)
        throw StepError("raw expansion requires a step-3 expression, got step " + std::to_string(v.step));
    return std::move(v.terms);
}

/// Canonicalizes one raw term into a polynomial (possibly zero).
inline BracketPolynomial normalize_raw_term(const RawTerm& term) {
    BracketPolynomial p = BracketPolynomial::constant(Rational(term.sign));
    for (const RawBracket& b : term.brackets) p = p * BracketPolynomial::bracket(b.args[0], b.args[1], b.args[2]);
    return p;
}

inline std::string to_string(const RawBracket& b, const PointSet& points) {
    std::string out = "[";
    for (const FormalPoint p : b.args) out += points.name(p);
    out += ']';
    return out;
}

inline std::string to_string(const RawTerm& t, const PointSet& points) {
    std::string out = (t.sign < 0) ? "-" : "+";
    for (const RawBracket& b : t.brackets) out += to_string(b, points);
    if (!t.points.empty()) {
        out += '*';
        for (const FormalPoint p : t.points) out += points.name(p);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Permutation action on expressions.
// ---------------------------------------------------------------------------

/// Relabels every atom through sigma; the tree shape is unchanged.
inline CayleyExpr apply_permutation(const CayleyExpr& expr, const Permutation& sigma, const PointSet& points) {
    switch (expr.kind()) {
    case CayleyExpr::Kind::Atom:
        return CayleyExpr::atom(points.name(sigma(points.require(expr.name()))));
    case CayleyExpr::Kind::Join: {
        std::vector<CayleyExpr> kids;
        kids.reserve(expr.children().size());
        for (const CayleyExpr& k : expr.children()) kids.push_back(apply_permutation(k, sigma, points));
        return CayleyExpr::join(std::move(kids));
    }
    case CayleyExpr::Kind::Meet:
        return CayleyExpr::meet(apply_permutation(expr.left(), sigma, points),
                                apply_permutation(expr.right(), sigma, points));
    }
    throw Error("unreachable expression kind");
}

// ---------------------------------------------------------------------------
// Equality modulo syzygies for step values.
// ---------------------------------------------------------------------------

/// Step-1 and step-2 combinations are not uniquely represented (a Cramer
/// relation is a nonzero combination that is the zero function), so the
/// difference is saturated with fresh generic points up to step 3 before
/// expanding: V = 0 as a vector function iff V joined with fresh points
/// expands to the zero coordinate polynomial.
inline bool equal_mod_syzygies(const StepValue& a, const StepValue& b, int declared_points) {
    if (step_of(a) != step_of(b))
        throw StepMismatchError("comparing step " + std::to_string(step_of(a)) + " with step " +
                                std::to_string(step_of(b)));
    const FormalPoint fresh1{declared_points};
    const FormalPoint fresh2{declared_points + 1};
    switch (step_of(a)) {
    case 0:
        return equal_mod_syzygies(std::get<Step0>(a).value, std::get<Step0>(b).value);
    case 3:
        return equal_mod_syzygies(std::get<Step3>(a).value, std::get<Step3>(b).value);
    case 1: {
        BracketPolynomial diff;
        for (const auto& [p, c] : std::get<Step1>(a).coeffs) diff += c * BracketPolynomial::bracket(p, fresh1, fresh2);
        for (const auto& [p, c] : std::get<Step1>(b).coeffs) diff -= c * BracketPolynomial::bracket(p, fresh1, fresh2);
        return coordinate_expand(diff).is_zero();
    }
    default: {
        BracketPolynomial diff;
        for (const auto& [pq, c] : std::get<Step2>(a).coeffs)
            diff += c * BracketPolynomial::bracket(pq.first, pq.second, fresh1);
        for (const auto& [pq, c] : std::get<Step2>(b).coeffs)
            diff -= c * BracketPolynomial::bracket(pq.first, pq.second, fresh1);
        return coordinate_expand(diff).is_zero();
    }
    }
}

// ---------------------------------------------------------------------------
// Cramer relation generator.
// ---------------------------------------------------------------------------

/// The step-1 combination [q r s]·p - [p r s]·q + [p q s]·r - [p q r]·s,
/// identically zero as a function of generic points (Cramer's rule).
/// Joining it with two further points produces Grassmann-Plücker syzygies.
inline Step1 cramer_relation(FormalPoint p, FormalPoint q, FormalPoint r, FormalPoint s) {
    const std::array<FormalPoint, 4> pts{p, q, r, s};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (pts[i] == pts[j]) throw DuplicatePointError("cramer relation requires four distinct points");
    Step1 out;
    detail::add_coeff(out, p, BracketPolynomial::bracket(q, r, s));
    detail::add_coeff(out, q, -BracketPolynomial::bracket(p, r, s));
    detail::add_coeff(out, r, BracketPolynomial::bracket(p, q, s));
    detail::add_coeff(out, s, -BracketPolynomial::bracket(p, q, r));
    return out;
}

// ---------------------------------------------------------------------------
// Reduction demo: the symbolic steps that collapse one side of the hexagon
// identity once both point triples are collinear.
// ---------------------------------------------------------------------------

/// Report of the symbolic reduction checks. The adopted meet convention
/// puts coefficients on the second factor's points; the classical
/// reduction groups each meet on the first factor's points instead (the
/// two groupings differ by a Cramer relation, hence agree modulo
/// syzygies), because that grouping is the one whose coefficients vanish
/// under the collinearity hypotheses. `sign_vs_display_*` records the
/// sign relating the regrouped form to the display it is usually quoted
/// as; the vanishing conclusion is sign-independent.
struct ReductionDemoReport {
    bool zero_identity = false;    // (c'b ^ b'c) v c v b' evaluates to the zero step-3 polynomial
    bool regroup_ca_ab = false;    // ca' ^ ab  ==  [c a b]·a' - [a' a b]·c     (mod syzygies)
    bool regroup_ab_ac = false;    // ab' ^ a'c' == [a a' c']·b' - [b' a' c']·a (mod syzygies)
    int sign_vs_display_ca_ab = 0; // regrouped c-coefficient vs the quoted c[a'ab]
    int sign_vs_display_ab_ac = 0; // regrouped b'-coefficient vs the quoted -b'[aa'c']
    std::string detail;

    bool pass() const {
        return zero_identity && regroup_ca_ab && regroup_ab_ac && sign_vs_display_ca_ab != 0 &&
               sign_vs_display_ab_ac != 0;
    }
};

namespace detail {

inline int sign_between(const BracketPolynomial& p, const BracketPolynomial& q) {
    if (p == q) return 1;
    if (p == -q) return -1;
    return 0;
}

} // namespace detail

inline ReductionDemoReport collinearity_reduce_demo() {
    const PointSet points = PointSet::pappus_points();
    const auto at = [&](const char* n) { return CayleyExpr::atom(n); };
    const FormalPoint a = points.require("a"), b = points.require("b"), c = points.require("c");
    const FormalPoint a1 = points.require("a'"), b1 = points.require("b'"), c1 = points.require("c'");

    ReductionDemoReport report;

    // (c'b ^ b'c) v c v b' is the zero polynomial outright: every bracket
    // the join produces has a repeated point. No collinearity is needed.
    const CayleyExpr reduced = CayleyExpr::join(
        {CayleyExpr::meet(CayleyExpr::join(at("c'"), at("b")), CayleyExpr::join(at("b'"), at("c"))), at("c"),
         at("b'")});
    const StepValue reduced_value = eval_symbolic(reduced, points);
    report.zero_identity = std::get<Step3>(reduced_value).value.is_zero();

    // ca' ^ ab regrouped on its first factor: [c a b]·a' - [a' a b]·c.
    {
        const StepValue direct =
            eval_symbolic(CayleyExpr::meet(CayleyExpr::join(at("c"), at("a'")), CayleyExpr::join(at("a"), at("b"))),
                          points);
        Step1 regrouped;
        detail::add_coeff(regrouped, a1, BracketPolynomial::bracket(c, a, b));
        detail::add_coeff(regrouped, c, -BracketPolynomial::bracket(a1, a, b));
        report.regroup_ca_ab = equal_mod_syzygies(direct, StepValue(regrouped), points.size());
        report.sign_vs_display_ca_ab =
            detail::sign_between(regrouped.coeffs.at(c), BracketPolynomial::bracket(a1, a, b));
    }

    // ab' ^ a'c' regrouped on its first factor: [a a' c']·b' - [b' a' c']·a.
    {
        const StepValue direct = eval_symbolic(
            CayleyExpr::meet(CayleyExpr::join(at("a"), at("b'")), CayleyExpr::join(at("a'"), at("c'"))), points);
        Step1 regrouped;
        detail::add_coeff(regrouped, b1, BracketPolynomial::bracket(a, a1, c1));
        detail::add_coeff(regrouped, a, -BracketPolynomial::bracket(b1, a1, c1));
        report.regroup_ab_ac = equal_mod_syzygies(direct, StepValue(regrouped), points.size());
        report.sign_vs_display_ab_ac =
            detail::sign_between(regrouped.coeffs.at(b1), -BracketPolynomial::bracket(a, a1, c1));
    }

    report.detail = std::string("zero_identity=") + (report.zero_identity ? "yes" : "no") +
                    " regroup_ca_ab=" + (report.regroup_ca_ab ? "yes" : "no") +
                    " regroup_ab_ac=" + (report.regroup_ab_ac ? "yes" : "no") +
                    " sign_vs_display_ca_ab=" + std::to_string(report.sign_vs_display_ca_ab) +
                    " sign_vs_display_ab_ac=" + std::to_string(report.sign_vs_display_ab_ac);
    return report;
}

} // namespace gca
