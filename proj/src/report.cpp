#include "kcross/report.hpp"

#include <sstream>

namespace kcross {

BoundReport make_bound_report(const PointSet& P, const EdgeColoring& chi,
                              const MatchPlan& plan) {
    BoundReport r;
    r.n = P.size();
    r.k = chi.k;
    r.base_crossings = count_monochromatic(P, chi);
    r.coeffs = growth_coefficients(P, chi, plan.matching, plan.details);
    r.bound = bound_from_alpha(r.coeffs.alpha, r.n);
    Rat kk(r.k);
    r.book_bound = 2 / (kk * kk) - 1 / (kk * kk * kk);
    r.lower_gate = Rat(3) / (29 * kk * kk);
    r.improves_book = r.bound < r.book_bound;
    r.above_gate = r.bound >= r.lower_gate;
    return r;
}

std::string render(const BoundReport& r) {
    std::ostringstream os;
    os << "n " << r.n << "\n";
    os << "k " << r.k << "\n";
    os << "monochromatic crossings " << r.base_crossings << "\n";
    os << "alpha " << r.coeffs.alpha << " = " << decimal_string(r.coeffs.alpha) << "\n";
    os << "beta " << r.coeffs.beta << "\n";
    os << "gamma " << r.coeffs.gamma << "\n";
    os << "delta " << r.coeffs.delta << "\n";
    if (r.coeffs.residual != 0) os << "residual " << r.coeffs.residual << "\n";
    os << "bound " << r.bound << " = " << decimal_string(r.bound) << "\n";
    os << "book bound " << r.book_bound << " = " << decimal_string(r.book_bound)
       << "\n";
    os << "improves book bound " << (r.improves_book ? "yes" : "no") << "\n";
    os << "above lower gate " << decimal_string(r.lower_gate) << " "
       << (r.above_gate ? "yes" : "no") << "\n";
    return os.str();
}

} // namespace kcross
