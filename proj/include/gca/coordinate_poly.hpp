#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gca/bracket_ring.hpp"
#include "gca/formal_point.hpp"
#include "gca/rational.hpp"

namespace gca {

/// Variable layout: coordinate i of point p is variable 3*p.index + i.
/// Extra formal variables (the parameters of parametrized families) take
/// ids at or above 3 * <number of declared points>.
constexpr int coordinate_variable(FormalPoint p, int axis) { return 3 * p.index + axis; }

/// A power product of variables, sorted by variable id.
struct CoordMonomial {
    std::vector<std::pair<int, int>> powers; // (variable, exponent), exponent > 0

    static CoordMonomial unit() { return {}; }

    CoordMonomial times(const CoordMonomial& other) const {
        CoordMonomial out;
        out.powers.reserve(powers.size() + other.powers.size());
        auto a = powers.begin();
        auto b = other.powers.begin();
        while (a != powers.end() && b != other.powers.end()) {
            if (a->first < b->first) {
                out.powers.push_back(*a++);
            } else if (b->first < a->first) {
                out.powers.push_back(*b++);
            } else {
                out.powers.emplace_back(a->first, a->second + b->second);
                ++a;
                ++b;
            }
        }
        out.powers.insert(out.powers.end(), a, powers.end());
        out.powers.insert(out.powers.end(), b, other.powers.end());
        return out;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [v, e] : powers) d += e;
        return d;
    }

    auto operator<=>(const CoordMonomial&) const = default;
};

/// Fully expanded multivariate polynomial over the coordinate variables.
/// Equality is coefficient-map equality, which makes it a sound and
/// complete oracle for equality of bracket polynomials as functions of
/// generic points.
class CoordinatePolynomial {
public:
    using TermMap = std::map<CoordMonomial, Rational>;

    CoordinatePolynomial() = default;

    /// Ring embedding of the scalars.
    CoordinatePolynomial(const Rational& c) { add_term(CoordMonomial::unit(), c); }

    static CoordinatePolynomial zero() { return {}; }

    static CoordinatePolynomial constant(Rational c) {
        CoordinatePolynomial p;
        p.add_term(CoordMonomial::unit(), std::move(c));
        return p;
    }

    static CoordinatePolynomial one() { return constant(Rational(1)); }

    static CoordinatePolynomial variable(int var) {
        CoordinatePolynomial p;
        p.add_term(CoordMonomial{{{var, 1}}}, Rational(1));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    const TermMap& terms() const { return terms_; }

    void add_term(CoordMonomial m, Rational c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    CoordinatePolynomial& operator+=(const CoordinatePolynomial& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }

    CoordinatePolynomial& operator-=(const CoordinatePolynomial& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }

    friend CoordinatePolynomial operator+(CoordinatePolynomial a, const CoordinatePolynomial& b) { return a += b; }

    friend CoordinatePolynomial operator-(CoordinatePolynomial a, const CoordinatePolynomial& b) { return a -= b; }

    CoordinatePolynomial operator-() const {
        CoordinatePolynomial out;
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    friend CoordinatePolynomial operator*(const CoordinatePolynomial& a, const CoordinatePolynomial& b) {
        CoordinatePolynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
        return out;
    }

    friend CoordinatePolynomial operator*(const CoordinatePolynomial& a, const Rational& s) {
        CoordinatePolynomial out;
        if (s.is_zero()) return out;
        for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, c * s);
        return out;
    }

    friend CoordinatePolynomial operator*(const Rational& s, const CoordinatePolynomial& a) { return a * s; }

    /// Exact evaluation; values is indexed by variable id and must cover
    /// every variable that occurs.
    Rational evaluate(const std::vector<Rational>& values) const {
        Rational total(0);
        for (const auto& [m, c] : terms_) {
            Rational term = c;
            for (const auto& [v, e] : m.powers)
                for (int k = 0; k < e; ++k) term *= values.at(static_cast<std::size_t>(v));
            total += term;
        }
        return total;
    }

    /// Replaces each variable that has an entry in `substitution` by the
    /// mapped polynomial; all other variables stay themselves.
    CoordinatePolynomial substitute(const std::map<int, CoordinatePolynomial>& substitution) const {
        CoordinatePolynomial out;
        for (const auto& [m, c] : terms_) {
            CoordinatePolynomial term = constant(c);
            for (const auto& [v, e] : m.powers) {
                const auto it = substitution.find(v);
                const CoordinatePolynomial repl = (it != substitution.end()) ? it->second : variable(v);
                for (int k = 0; k < e; ++k) term = term * repl;
            }
            out += term;
        }
        return out;
    }

    /// Number of distinct variables that occur.
    int variable_count() const {
        std::vector<int> vars;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.powers) vars.push_back(v);
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        return static_cast<int>(vars.size());
    }

    bool operator==(const CoordinatePolynomial&) const = default;

private:
    TermMap terms_;
};

/// The determinant reading of a bracket: [p q r] expands to the 3x3
/// determinant of the points' coordinate rows, a 6-term polynomial.
inline CoordinatePolynomial expand_bracket(const Bracket& b) {
    static constexpr int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {1, 0, 2}, {0, 2, 1}};
    static constexpr int sign[6] = {1, 1, 1, -1, -1, -1};
    CoordinatePolynomial out;
    for (int s = 0; s < 6; ++s) {
        CoordMonomial m;
        for (int row = 0; row < 3; ++row) m = m.times(CoordMonomial{{{coordinate_variable(b.points[row], perm[s][row]), 1}}});
        out.add_term(std::move(m), Rational(sign[s]));
    }
    return out;
}

/// Substitutes every bracket by its determinant expansion, then expands
/// and collects. Linear in the terms of f; exact.
inline CoordinatePolynomial coordinate_expand(const BracketPolynomial& f) {
    CoordinatePolynomial out;
    for (const auto& [monomial, coeff] : f.terms()) {
        CoordinatePolynomial term = CoordinatePolynomial::constant(coeff);
        for (const Bracket& b : monomial.factors) term = term * expand_bracket(b);
        out += term;
    }
    return out;
}

/// True iff f and g agree as functions of generic points, i.e. f - g
/// expands to the zero coordinate polynomial. Bracket polynomials can be
/// equal as functions without being term-identical; the difference is
/// then a combination of Grassmann-Plücker syzygies, all of which vanish
/// under full coordinate expansion.
inline bool equal_mod_syzygies(const BracketPolynomial& f, const BracketPolynomial& g) {
    return coordinate_expand(f - g).is_zero();
}

} // namespace gca
