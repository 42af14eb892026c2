// Walks through the hexagon identity end to end: raw expansion, the
// two-term normal form, the symbolic identity check, and a numeric run on
// a concrete collinear configuration.

#include <iostream>

#include "gca/gca.hpp"

int main() {
    using namespace gca;
    const PointSet points = PointSet::pappus_points();

    const CayleyExpr lhs = pappus_lhs();
    std::cout << "expression: " << print(lhs) << "\n\n";

    std::cout << "raw expansion:\n";
    for (const RawTerm& term : raw_expansion_terms(lhs, points)) std::cout << "  " << to_string(term, points) << "\n";

    const StepValue value = eval_symbolic(lhs, points);
    std::cout << "\nnormal form: " << to_string(value, points) << "\n\n";

    const CheckReport identity = check_identity_symbolic(lhs, pappus_rhs(), points);
    std::cout << "identity vs " << pappus_rhs_text() << ": " << identity.verdict() << "\n\n";

    const Configuration config = random_pappus_config(1, 100);
    const PappusReport report = pappus_check(config);
    std::cout << "random collinear configuration (seed 1):\n";
    for (const std::string& name : points.names())
        std::cout << "  " << name << " = " << to_string(config.points.at(name)) << "\n";
    std::cout << "final bracket: " << to_string(report.final_bracket) << " => " << (report.pass ? "PASS" : "FAIL")
              << "\n";
    return report.pass && identity.pass ? 0 : 1;
}
