#pragma once

#include <string>
#include <vector>

#include "gasfold/family.hpp"
#include "gasfold/thermo.hpp"

namespace gasfold::cli {

struct ModelConfig {
    std::string type; // "ideal_gas" | "power_law"
    double n = 3.0;
    double R = 1.0;
    double s0 = 0.0;
    double A0 = 1.0;
    double m = -2.0 / 3.0;
    Interval rho_range;
    bool rho_range_set = false;
};

struct FamilyConfig {
    double lambda = 1.0; // figure-reproduction default
    double alpha0 = 0.0;
    double alpha2 = 0.0;
    double t0 = 0.0;
    double x0 = 0.0;
};

struct RunParams {
    std::vector<double> t_values;      // profile times
    double rho_min = 1e-3;             // profile grid
    double rho_max = 10.0;
    int rho_count = 2000;
    std::string rho_spacing = "log";   // "log" | "linear"
    double caustic_rho_min = 0.0;      // 0 = inherit rho_min/rho_max
    double caustic_rho_max = 0.0;
    int caustic_count = 800;
    std::string branch = "both";       // caustic/shock branch selection
    double dt = 0.01;                  // shock time step
    double t_len = 3.0;                // shock duration past the cusp
    unsigned seed = 20240817;          // randomized validation points
    double perturb_m = 0.0;            // validation sensitivity knob
};

struct OutputConfig {
    std::string dir = "out";
    std::vector<std::string> formats = {"csv", "svg"};
};

struct RunConfig {
    ModelConfig model;
    FamilyConfig family;
    RunParams run;
    OutputConfig output;
};

/// Parse the flat key=value/[section] config format. Throws ConfigError with
/// the offending line and key.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// Instantiate the homentropic model described by the model block.
thermo::HomentropicModel make_homentropic(const ModelConfig& mc);

/// Instantiate the solution family (model + constants).
family::SolutionFamily make_family(const RunConfig& cfg);

} // namespace gasfold::cli
