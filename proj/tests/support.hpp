#pragma once

#include <cmath>

#include "gasfold/family.hpp"
#include "gasfold/thermo.hpp"

namespace testing {

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

// The figure-reproduction parameter set: A0 = 1, m = -2/3, lambda = 1,
// alpha0 = 1, alpha2 = -2, t0 = 1, x0 = 0.
inline gasfold::family::SolutionFamily pstar_family(gasfold::Interval range = {1e-6, 50.0}) {
    gasfold::family::SolutionFamily fam;
    fam.lambda = 1.0;
    fam.alpha0 = 1.0;
    fam.alpha2 = -2.0;
    fam.t0 = 1.0;
    fam.x0 = 0.0;
    fam.hm = gasfold::thermo::power_law_model(1.0, -2.0 / 3.0, range);
    return fam;
}

} // namespace testing
