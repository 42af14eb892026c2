#pragma once

// Step-typed random expression generator shared by the coherence suites.
// Every generated expression evaluates without StepError by construction.

#include "gca/cayley_expr.hpp"
#include "gca/formal_point.hpp"
#include "gca/rng.hpp"

namespace gca_test {

inline gca::CayleyExpr typed_random_expr(gca::Rng& rng, const gca::PointSet& points, int step, int depth) {
    using gca::CayleyExpr;
    const auto atom = [&] {
        return CayleyExpr::atom(points.name(gca::FormalPoint{static_cast<int>(rng.uniform(0, points.size() - 1))}));
    };
    const auto sub = [&](int s) { return typed_random_expr(rng, points, s, depth - 1); };
    if (depth <= 0) {
        switch (step) {
        case 0: return CayleyExpr::meet(CayleyExpr::join(atom(), atom()), atom());
        case 1: return atom();
        case 2: return CayleyExpr::join(atom(), atom());
        default: return CayleyExpr::join({atom(), atom(), atom()});
        }
    }
    switch (step) {
    case 0:
        switch (rng.uniform(0, 2)) {
        case 0: return CayleyExpr::meet(sub(2), sub(1));
        case 1: return CayleyExpr::meet(sub(1), sub(2));
        default: return CayleyExpr::meet(sub(3), sub(0));
        }
    case 1:
        switch (rng.uniform(0, 3)) {
        case 0: return atom();
        case 1: return CayleyExpr::meet(sub(2), sub(2));
        case 2: return CayleyExpr::join(sub(0), sub(1));
        default: return CayleyExpr::meet(sub(3), sub(1));
        }
    case 2:
        switch (rng.uniform(0, 3)) {
        case 0: return CayleyExpr::join(sub(1), sub(1));
        case 1: return CayleyExpr::join(sub(0), sub(2));
        case 2: return CayleyExpr::meet(sub(3), sub(2));
        default: return CayleyExpr::join({sub(1), sub(0), sub(1)});
        }
    default:
        switch (rng.uniform(0, 3)) {
        case 0: return CayleyExpr::join(sub(1), sub(2));
        case 1: return CayleyExpr::join(sub(2), sub(1));
        case 2: return CayleyExpr::join({sub(1), sub(1), sub(1)});
        default: return CayleyExpr::meet(sub(3), sub(3));
        }
    }
}

} // namespace gca_test
