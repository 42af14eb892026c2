#pragma once

#include <map>
#include <string>
#include <variant>

#include "gca/bracket_ring.hpp"
#include "gca/cayley_expr.hpp"
#include "gca/errors.hpp"
#include "gca/exterior.hpp"
#include "gca/formal_point.hpp"
#include "gca/step_value.hpp"

namespace gca {

template <class Scalar>
using AssignmentT = std::map<FormalPoint, PointT<Scalar>>;

using Assignment = AssignmentT<Rational>;

/// Step-0 scalar result.
template <class Scalar>
struct Scalar0 {
    Scalar value{};

    bool operator==(const Scalar0&) const = default;
};

/// Step-3 result: the coefficient of the unit 3-extensor e0^e1^e2.
template <class Scalar>
struct Top3 {
    Scalar value{};

    bool operator==(const Top3&) const = default;
};

/// The zero extensor of step 1 or 2. Kept as a distinct tagged value so a
/// degenerate join/meet is detected rather than propagated as an all-zero
/// coordinate triple. Step-0/step-3 zeros stay ordinary scalars.
struct ZeroExtensor {
    int step = 1;

    bool operator==(const ZeroExtensor&) const = default;
};

template <class Scalar>
using NumericValueT = std::variant<Scalar0<Scalar>, PointT<Scalar>, LineT<Scalar>, Top3<Scalar>, ZeroExtensor>;

using NumericValue = NumericValueT<Rational>;

template <class Scalar>
int step_of(const NumericValueT<Scalar>& v) {
    switch (v.index()) {
    case 0: return 0;
    case 1: return 1;
    case 2: return 2;
    case 3: return 3;
    default: return std::get<ZeroExtensor>(v).step;
    }
}

namespace detail {

template <class Scalar>
NumericValueT<Scalar> zero_of_step(int step) {
    switch (step) {
    case 0: return Scalar0<Scalar>{};
    case 3: return Top3<Scalar>{};
    default: return ZeroExtensor{step};
    }
}

template <class Scalar>
NumericValueT<Scalar> wrap_point(PointT<Scalar> p) {
    if (all_zero(p.x)) return ZeroExtensor{1};
    return p;
}

template <class Scalar>
NumericValueT<Scalar> wrap_line(LineT<Scalar> l) {
    if (all_zero(l.p)) return ZeroExtensor{2};
    return l;
}

template <class Scalar>
NumericValueT<Scalar> scale_value(const NumericValueT<Scalar>& v, const Scalar& s) {
    if (s.is_zero()) return zero_of_step<Scalar>(step_of(v));
    return std::visit(
        [&](const auto& x) -> NumericValueT<Scalar> {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Scalar0<Scalar>>) {
                return Scalar0<Scalar>{x.value * s};
            } else if constexpr (std::is_same_v<T, Top3<Scalar>>) {
                return Top3<Scalar>{x.value * s};
            } else if constexpr (std::is_same_v<T, PointT<Scalar>>) {
                return PointT<Scalar>{{x.x[0] * s, x.x[1] * s, x.x[2] * s}};
            } else if constexpr (std::is_same_v<T, LineT<Scalar>>) {
                return LineT<Scalar>{{x.p[0] * s, x.p[1] * s, x.p[2] * s}};
            } else {
                return x; // zero extensor stays zero
            }
        },
        v);
}

} // namespace detail

/// Numeric join: steps add; step-0 operands scale; joins past step 3 are
/// StepError. Zero extensors propagate as zeros of the summed step (which
/// at step 3 is the scalar 0, not a tagged zero).
template <class Scalar>
NumericValueT<Scalar> join(const NumericValueT<Scalar>& a, const NumericValueT<Scalar>& b) {
    const int sa = step_of(a);
    const int sb = step_of(b);
    if (sa == 0) return detail::scale_value(b, std::get<Scalar0<Scalar>>(a).value);
    if (sb == 0) return detail::scale_value(a, std::get<Scalar0<Scalar>>(b).value);
    if (sa + sb > 3)
        throw StepError("join of steps " + std::to_string(sa) + " and " + std::to_string(sb) + " exceeds step 3");
    if (std::holds_alternative<ZeroExtensor>(a) || std::holds_alternative<ZeroExtensor>(b))
        return detail::zero_of_step<Scalar>(sa + sb);
    if (sa == 1 && sb == 1) {
        auto line = join_pp(std::get<PointT<Scalar>>(a), std::get<PointT<Scalar>>(b));
        if (!line) return ZeroExtensor{2};
        return *line;
    }
    // Point and line in either order: p ∨ (x∨y) = (x∨y) ∨ p = [x y p].
    const auto& line = std::get<LineT<Scalar>>(sa == 2 ? a : b);
    const auto& point = std::get<PointT<Scalar>>(sa == 2 ? b : a);
    return Top3<Scalar>{meet_lp(line, point)};
}

/// Numeric meet: steps satisfy j + k - 3; a step-3 factor scales the
/// other side by its top coefficient.
template <class Scalar>
NumericValueT<Scalar> meet(const NumericValueT<Scalar>& a, const NumericValueT<Scalar>& b) {
    const int sa = step_of(a);
    const int sb = step_of(b);
    if (sa + sb < 3)
        throw StepError("meet of steps " + std::to_string(sa) + " and " + std::to_string(sb) + " drops below step 0");
    if (sa == 3) return detail::scale_value(b, std::get<Top3<Scalar>>(a).value);
    if (sb == 3) return detail::scale_value(a, std::get<Top3<Scalar>>(b).value);
    if (std::holds_alternative<ZeroExtensor>(a) || std::holds_alternative<ZeroExtensor>(b))
        return detail::zero_of_step<Scalar>(sa + sb - 3);
    if (sa == 2 && sb == 2) {
        auto point = meet_ll(std::get<LineT<Scalar>>(a), std::get<LineT<Scalar>>(b));
        if (!point) return ZeroExtensor{1};
        return *point;
    }
    // Line ^ point (either order): the scalar [x y p].
    const auto& line = std::get<LineT<Scalar>>(sa == 2 ? a : b);
    const auto& point = std::get<PointT<Scalar>>(sa == 2 ? b : a);
    return Scalar0<Scalar>{meet_lp(line, point)};
}

/// Evaluates a Cayley expression on concrete coordinates. Every atom must
/// be declared (UnknownPointError) and assigned (UnassignedAtomError).
template <class Scalar>
NumericValueT<Scalar> eval_numeric(const CayleyExpr& expr, const PointSet& points,
                                   const AssignmentT<Scalar>& assignment) {
    switch (expr.kind()) {
    case CayleyExpr::Kind::Atom: {
        const FormalPoint p = points.require(expr.name());
        const auto it = assignment.find(p);
        if (it == assignment.end()) throw UnassignedAtomError("point '" + expr.name() + "' has no coordinates");
        return it->second;
    }
    case CayleyExpr::Kind::Join: {
        const auto kids = expr.children();
        NumericValueT<Scalar> acc = eval_numeric(kids[0], points, assignment);
        for (std::size_t i = 1; i < kids.size(); ++i) acc = join(acc, eval_numeric(kids[i], points, assignment));
        return acc;
    }
    case CayleyExpr::Kind::Meet:
        return meet(eval_numeric(expr.left(), points, assignment), eval_numeric(expr.right(), points, assignment));
    }
    throw Error("unreachable expression kind");
}

/// Numeric value of a canonical bracket under an assignment.
template <class Scalar>
Scalar bracket_value(const Bracket& b, const AssignmentT<Scalar>& assignment) {
    return bracket(assignment.at(b.points[0]), assignment.at(b.points[1]), assignment.at(b.points[2]));
}

/// Numeric value of a bracket polynomial under an assignment.
template <class Scalar>
Scalar polynomial_value(const BracketPolynomial& poly, const AssignmentT<Scalar>& assignment) {
    Scalar total{};
    for (const auto& [monomial, coeff] : poly.terms()) {
        Scalar term(1);
        for (const Bracket& b : monomial.factors) term = Scalar(term * bracket_value(b, assignment));
        total += Scalar(term * Scalar(coeff));
    }
    return total;
}

/// Substitutes coordinates into a symbolic expansion. The result carries
/// the same tags eval_numeric would produce: a step-1/2 combination whose
/// coordinates all vanish becomes the tagged zero extensor.
template <class Scalar>
NumericValueT<Scalar> substitute(const StepValue& value, const AssignmentT<Scalar>& assignment) {
    return std::visit(
        [&](const auto& x) -> NumericValueT<Scalar> {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Step0>) {
                return Scalar0<Scalar>{polynomial_value(x.value, assignment)};
            } else if constexpr (std::is_same_v<T, Step3>) {
                return Top3<Scalar>{polynomial_value(x.value, assignment)};
            } else if constexpr (std::is_same_v<T, Step1>) {
                PointT<Scalar> acc{};
                for (const auto& [p, c] : x.coeffs)
                    acc = add(acc, scale(assignment.at(p), polynomial_value(c, assignment)));
                return detail::wrap_point(std::move(acc));
            } else {
                LineT<Scalar> acc{};
                for (const auto& [pq, c] : x.coeffs) {
                    const Scalar weight = polynomial_value(c, assignment);
                    const auto& p = assignment.at(pq.first);
                    const auto& q = assignment.at(pq.second);
                    acc.p[0] += Scalar((p.x[0] * q.x[1] - p.x[1] * q.x[0]) * weight);
                    acc.p[1] += Scalar((p.x[0] * q.x[2] - p.x[2] * q.x[0]) * weight);
                    acc.p[2] += Scalar((p.x[1] * q.x[2] - p.x[2] * q.x[1]) * weight);
                }
                return detail::wrap_line(std::move(acc));
            }
        },
        value);
}

inline std::string to_string(const NumericValue& v) {
    switch (v.index()) {
    case 0: return "scalar " + to_string(std::get<Scalar0<Rational>>(v).value);
    case 1: return "point " + to_string(std::get<PointT<Rational>>(v));
    case 2: return "line " + to_string(std::get<LineT<Rational>>(v));
    case 3: return "top " + to_string(std::get<Top3<Rational>>(v).value);
    default: return "zero (step " + std::to_string(std::get<ZeroExtensor>(v).step) + ")";
    }
}

} // namespace gca
