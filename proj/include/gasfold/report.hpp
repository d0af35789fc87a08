#pragma once

#include <string>
#include <vector>

#include "gasfold/family.hpp"
#include "gasfold/thermo.hpp"

namespace gasfold::cli {

struct Check {
    std::string name;
    bool pass;
    double worst;
    double tol;
};

struct Report {
    std::vector<Check> checks;
    bool all_pass() const;
    std::string to_json() const;
    std::string to_text() const;
};

struct ValidationOptions {
    unsigned seed = 20240817;
    int n_master = 10000; // solution-property sample count
    int n_small = 1000;
};

/// Run the full invariant suite for the family. forms_hm backs the 2-forms
/// and operator checks; pass a deliberately perturbed model to probe the
/// suite's sensitivity (it defaults to the family's own model).
Report run_validation(const family::SolutionFamily& fam,
                      const thermo::HomentropicModel& forms_hm, ValidationOptions opts = {});

inline Report run_validation(const family::SolutionFamily& fam, ValidationOptions opts = {}) {
    return run_validation(fam, fam.hm, opts);
}

/// Copy of hm with A(rho) scaled by rho^delta (and dp kept consistent with
/// the scaled A); Q/IQ are left untouched, so a nonzero delta breaks the
/// compatibility between the forms and the quadrature surface.
thermo::HomentropicModel perturb_exponent(const thermo::HomentropicModel& hm, double delta);

} // namespace gasfold::cli
