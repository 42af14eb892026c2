#pragma once

#include <array>
#include <optional>
#include <string>

#include "gca/rational.hpp"

namespace gca {

/// Homogeneous coordinates of a projective point (step-1 extensor).
/// A valid point is never the zero triple; the zero extensor is
/// represented by std::nullopt at the operation boundaries instead.
template <class Scalar>
struct PointT {
    std::array<Scalar, 3> x{};

    bool operator==(const PointT&) const = default;
};

/// Plücker coordinates (p01, p02, p12) of a line (step-2 extensor), over
/// the basis e0^e1, e0^e2, e1^e2.
template <class Scalar>
struct LineT {
    std::array<Scalar, 3> p{};

    bool operator==(const LineT&) const = default;
};

using HomogeneousPoint = PointT<Rational>;
using PluckerLine = LineT<Rational>;

namespace detail {

template <class Scalar>
bool all_zero(const std::array<Scalar, 3>& v) {
    return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

} // namespace detail

/// The wedge p ∧ q. Zero (nullopt) iff p and q are projectively equal.
template <class Scalar>
std::optional<LineT<Scalar>> join_pp(const PointT<Scalar>& p, const PointT<Scalar>& q) {
    LineT<Scalar> line{{p.x[0] * q.x[1] - p.x[1] * q.x[0],   // p01
                        p.x[0] * q.x[2] - p.x[2] * q.x[0],   // p02
                        p.x[1] * q.x[2] - p.x[2] * q.x[1]}}; // p12
    if (detail::all_zero(line.p)) return std::nullopt;
    return line;
}

/// The bracket [p q r]: determinant of the coordinate rows in order.
/// Zero iff the three points are collinear.
template <class Scalar>
Scalar bracket(const PointT<Scalar>& p, const PointT<Scalar>& q, const PointT<Scalar>& r) {
    return p.x[0] * (q.x[1] * r.x[2] - q.x[2] * r.x[1]) - p.x[1] * (q.x[0] * r.x[2] - q.x[2] * r.x[0]) +
           p.x[2] * (q.x[0] * r.x[1] - q.x[1] * r.x[0]);
}

/// The meet of two lines. For L = x∨y and M = u∨v this equals
/// [x y v]·u - [x y u]·v coordinate-wise (the same convention as the
/// symbolic evaluator), expressed through Plücker coordinates. Zero
/// (nullopt) iff the lines are proportional.
template <class Scalar>
std::optional<PointT<Scalar>> meet_ll(const LineT<Scalar>& l, const LineT<Scalar>& m) {
    PointT<Scalar> w{{l.p[0] * m.p[1] - l.p[1] * m.p[0],   // L01*M02 - L02*M01
                      l.p[0] * m.p[2] - l.p[2] * m.p[0],   // L01*M12 - L12*M01
                      l.p[1] * m.p[2] - l.p[2] * m.p[1]}}; // L02*M12 - L12*M02
    if (detail::all_zero(w.x)) return std::nullopt;
    return w;
}

/// The scalar L ∧ p. For L = x∨y this is bracket(x, y, p); zero iff p
/// lies on L. Expansion of the determinant along its third row gives the
/// Plücker form  p12·z0 - p02·z1 + p01·z2.
template <class Scalar>
Scalar meet_lp(const LineT<Scalar>& l, const PointT<Scalar>& z) {
    return l.p[2] * z.x[0] - l.p[1] * z.x[1] + l.p[0] * z.x[2];
}

/// Projective equality: proportionality of coordinate triples. Distinct
/// from coordinate-wise equality; identity checks use the latter.
template <class Scalar>
bool proportional(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b) {
    return Scalar(a[0] * b[1] - a[1] * b[0]).is_zero() && Scalar(a[0] * b[2] - a[2] * b[0]).is_zero() &&
           Scalar(a[1] * b[2] - a[2] * b[1]).is_zero();
}

template <class Scalar>
bool projectively_equal(const PointT<Scalar>& a, const PointT<Scalar>& b) {
    return proportional(a.x, b.x);
}

template <class Scalar>
bool projectively_equal(const LineT<Scalar>& a, const LineT<Scalar>& b) {
    return proportional(a.p, b.p);
}

template <class Scalar>
PointT<Scalar> scale(const PointT<Scalar>& p, const Scalar& s) {
    return PointT<Scalar>{{p.x[0] * s, p.x[1] * s, p.x[2] * s}};
}

template <class Scalar>
PointT<Scalar> add(const PointT<Scalar>& p, const PointT<Scalar>& q) {
    return PointT<Scalar>{{p.x[0] + q.x[0], p.x[1] + q.x[1], p.x[2] + q.x[2]}};
}

inline HomogeneousPoint make_point(Rational x0, Rational x1, Rational x2) {
    return HomogeneousPoint{{std::move(x0), std::move(x1), std::move(x2)}};
}

inline HomogeneousPoint make_point(long long x0, long long x1, long long x2) {
    return HomogeneousPoint{{Rational(x0), Rational(x1), Rational(x2)}};
}

/// Canonical projective representative for display: divide by the last
/// nonzero coordinate, e.g. (-2,-1,-3) renders as (2/3, 1/3, 1).
inline HomogeneousPoint display_normalize(const HomogeneousPoint& p) {
    for (int i = 2; i >= 0; --i) {
        if (!p.x[static_cast<std::size_t>(i)].is_zero()) {
            const Rational d = p.x[static_cast<std::size_t>(i)];
            return HomogeneousPoint{{p.x[0] / d, p.x[1] / d, p.x[2] / d}};
        }
    }
    return p;
}

inline std::string to_string(const HomogeneousPoint& p) {
    return "(" + to_string(p.x[0]) + ", " + to_string(p.x[1]) + ", " + to_string(p.x[2]) + ")";
}

inline std::string to_string(const PluckerLine& l) {
    return "(" + to_string(l.p[0]) + ", " + to_string(l.p[1]) + ", " + to_string(l.p[2]) + ")";
}

} // namespace gca
