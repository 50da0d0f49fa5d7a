#include "pcbf/polynomial.hpp"

#include <cmath>

namespace pcbf {

PolyD to_double(const Poly& p) {
    PolyD out(p.num_vars());
    for (const auto& [e, c] : p.terms()) out.add_term(e, rat_to_double(c));
    return out;
}

double max_abs_coefficient(const PolyD& p) {
    double m = 0.0;
    for (const auto& [e, c] : p.terms()) m = std::max(m, std::fabs(c));
    return m;
}

}  // namespace pcbf
