#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>

#include "gca/bracket_ring.hpp"
#include "gca/errors.hpp"
#include "gca/formal_point.hpp"

namespace gca {

/// Scalar result of a fully collapsed meet chain.
struct Step0 {
    BracketPolynomial value;

    bool operator==(const Step0&) const = default;
};

/// A formal combination of points with bracket-polynomial coefficients.
/// No zero-polynomial entries are stored.
struct Step1 {
    std::map<FormalPoint, BracketPolynomial> coeffs;

    bool operator==(const Step1&) const = default;
};

/// A formal combination of joined point pairs. Keys are strictly ordered
/// (p < q); the sign of reordering is absorbed into the coefficient.
struct Step2 {
    std::map<std::pair<FormalPoint, FormalPoint>, BracketPolynomial> coeffs;

    bool operator==(const Step2&) const = default;
};

/// A bracket polynomial, the coefficient of the unit 3-extensor. Kept as
/// a distinct tag from Step0 so malformed joins surface as StepError.
struct Step3 {
    BracketPolynomial value;

    bool operator==(const Step3&) const = default;
};

using StepValue = std::variant<Step0, Step1, Step2, Step3>;

inline int step_of(const StepValue& v) { return static_cast<int>(v.index()); }

namespace detail {

inline void add_coeff(Step1& s, FormalPoint p, const BracketPolynomial& inc) {
    auto it = s.coeffs.find(p);
    if (it == s.coeffs.end()) {
        if (!inc.is_zero()) s.coeffs.emplace(p, inc);
        return;
    }
    it->second += inc;
    if (it->second.is_zero()) s.coeffs.erase(it);
}

inline void add_coeff(Step2& s, FormalPoint p, FormalPoint q, BracketPolynomial inc) {
    if (p == q) return;
    if (q < p) {
        std::swap(p, q);
        inc = -inc;
    }
    const auto key = std::make_pair(p, q);
    auto it = s.coeffs.find(key);
    if (it == s.coeffs.end()) {
        if (!inc.is_zero()) s.coeffs.emplace(key, std::move(inc));
        return;
    }
    it->second += inc;
    if (it->second.is_zero()) s.coeffs.erase(it);
}

inline StepValue scale(const StepValue& v, const BracketPolynomial& s) {
    return std::visit(
        [&](const auto& x) -> StepValue {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Step0> || std::is_same_v<T, Step3>) {
                return T{x.value * s};
            } else if constexpr (std::is_same_v<T, Step1>) {
                Step1 out;
                for (const auto& [p, c] : x.coeffs) add_coeff(out, p, c * s);
                return out;
            } else {
                Step2 out;
                for (const auto& [pq, c] : x.coeffs) add_coeff(out, pq.first, pq.second, c * s);
                return out;
            }
        },
        v);
}

} // namespace detail

/// Join: steps add. Step-0 factors scale; a result past step 3 is a
/// StepError (never a silent zero).
inline StepValue join(const StepValue& a, const StepValue& b) {
    const int sa = step_of(a);
    const int sb = step_of(b);
    if (sa == 0) return detail::scale(b, std::get<Step0>(a).value);
    if (sb == 0) return detail::scale(a, std::get<Step0>(b).value);
    if (sa + sb > 3)
        throw StepError("join of steps " + std::to_string(sa) + " and " + std::to_string(sb) + " exceeds step 3");
    if (sa == 1 && sb == 1) {
        const auto& A = std::get<Step1>(a);
        const auto& B = std::get<Step1>(b);
        Step2 out;
        for (const auto& [p, f] : A.coeffs)
            for (const auto& [q, g] : B.coeffs) detail::add_coeff(out, p, q, f * g);
        return out;
    }
    if (sa == 1 && sb == 2) {
        const auto& A = std::get<Step1>(a);
        const auto& B = std::get<Step2>(b);
        Step3 out;
        for (const auto& [p, f] : A.coeffs)
            for (const auto& [xy, g] : B.coeffs)
                out.value += f * g * BracketPolynomial::bracket(p, xy.first, xy.second);
        return out;
    }
    // sa == 2 && sb == 1
    const auto& A = std::get<Step2>(a);
    const auto& B = std::get<Step1>(b);
    Step3 out;
    for (const auto& [xy, f] : A.coeffs)
        for (const auto& [p, g] : B.coeffs)
            out.value += f * g * BracketPolynomial::bracket(xy.first, xy.second, p);
    return out;
}

/// Meet: steps satisfy j + k - 3. The convention for two lines is
///   (x v y) ^ (u v v) = [x y v]·u - [x y u]·v
/// (coefficients land on the second factor's points), extended bilinearly.
/// A step-3 factor scales the other side by its coefficient.
inline StepValue meet(const StepValue& a, const StepValue& b) {
    const int sa = step_of(a);
    const int sb = step_of(b);
    if (sa + sb < 3)
        throw StepError("meet of steps " + std::to_string(sa) + " and " + std::to_string(sb) + " drops below step 0");
    if (sa == 3) return detail::scale(b, std::get<Step3>(a).value);
    if (sb == 3) return detail::scale(a, std::get<Step3>(b).value);
    if (sa == 2 && sb == 2) {
        const auto& A = std::get<Step2>(a);
        const auto& B = std::get<Step2>(b);
        Step1 out;
        for (const auto& [xy, f] : A.coeffs)
            for (const auto& [uv, g] : B.coeffs) {
                const auto fg = f * g;
                detail::add_coeff(out, uv.first, fg * BracketPolynomial::bracket(xy.first, xy.second, uv.second));
                detail::add_coeff(out, uv.second, -(fg * BracketPolynomial::bracket(xy.first, xy.second, uv.first)));
            }
        return out;
    }
    // Line ^ point (either order): the scalar [x y p].
    const auto& L = std::get<Step2>(sa == 2 ? a : b);
    const auto& P = std::get<Step1>(sa == 2 ? b : a);
    Step0 out;
    for (const auto& [xy, f] : L.coeffs)
        for (const auto& [p, g] : P.coeffs)
            out.value += f * g * BracketPolynomial::bracket(xy.first, xy.second, p);
    return out;
}

inline StepValue apply_permutation(const StepValue& v, const Permutation& sigma) {
    return std::visit(
        [&](const auto& x) -> StepValue {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Step0> || std::is_same_v<T, Step3>) {
                return T{apply_permutation(x.value, sigma)};
            } else if constexpr (std::is_same_v<T, Step1>) {
                Step1 out;
                for (const auto& [p, c] : x.coeffs) detail::add_coeff(out, sigma(p), apply_permutation(c, sigma));
                return out;
            } else {
                Step2 out;
                for (const auto& [pq, c] : x.coeffs)
                    detail::add_coeff(out, sigma(pq.first), sigma(pq.second), apply_permutation(c, sigma));
                return out;
            }
        },
        v);
}

/// Rendering: a scalar or top value prints as its polynomial; step-1 and
/// step-2 combinations distribute the coefficient terms over each carrier,
/// e.g. "+[bb'c']*c -[bcc']*b'". Zero values print as "0".
inline std::string to_string(const StepValue& v, const PointSet& points) {
    const auto poly_times = [&](const BracketPolynomial& poly, const std::string& carrier) {
        std::string out;
        for (const auto& [m, c] : poly.terms()) {
            if (!out.empty()) out += ' ';
            out += term_to_string(m, c, points);
            out += '*';
            out += carrier;
        }
        return out;
    };
    return std::visit(
        [&](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Step0> || std::is_same_v<T, Step3>) {
                return to_string(x.value, points);
            } else if constexpr (std::is_same_v<T, Step1>) {
                std::string out;
                for (const auto& [p, c] : x.coeffs) {
                    if (!out.empty()) out += ' ';
                    out += poly_times(c, points.name(p));
                }
                return out.empty() ? "0" : out;
            } else {
                std::string out;
                for (const auto& [pq, c] : x.coeffs) {
                    if (!out.empty()) out += ' ';
                    out += poly_times(c, points.name(pq.first) + points.name(pq.second));
                }
                return out.empty() ? "0" : out;
            }
        },
        v);
}

} // namespace gca
