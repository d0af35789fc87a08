#include "gasfold/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>

#include <json.hpp>

#include "gasfold/csvio.hpp"
#include "gasfold/errors.hpp"
#include "gasfold/geometry.hpp"
#include "gasfold/numerics.hpp"
#include "gasfold/report.hpp"
#include "gasfold/singularity.hpp"
#include "gasfold/svg.hpp"

namespace gasfold::cli {

namespace fs = std::filesystem;
using family::Branch;

namespace {

bool wants(const OutputConfig& out, const std::string& fmt) {
    return std::find(out.formats.begin(), out.formats.end(), fmt) != out.formats.end();
}

fs::path ensure_outdir(const RunConfig& cfg) {
    fs::path dir(cfg.output.dir);
    fs::create_directories(dir);
    return dir;
}

std::vector<double> profile_grid(const RunConfig& cfg) {
    double lo = std::max(cfg.run.rho_min, cfg.model.rho_range.lo);
    double hi = std::min(cfg.run.rho_max, cfg.model.rho_range.hi);
    if (!(hi > lo)) throw ConfigError("run rho window does not intersect model.rho_range");
    return cfg.run.rho_spacing == "linear" ? numerics::linear_grid(lo, hi, cfg.run.rho_count)
                                           : numerics::log_grid(lo, hi, cfg.run.rho_count);
}

std::vector<double> caustic_grid(const RunConfig& cfg) {
    double lo = cfg.run.caustic_rho_min > 0.0 ? cfg.run.caustic_rho_min : cfg.run.rho_min;
    double hi = cfg.run.caustic_rho_max > 0.0 ? cfg.run.caustic_rho_max : cfg.run.rho_max;
    lo = std::max(lo, cfg.model.rho_range.lo);
    hi = std::min(hi, cfg.model.rho_range.hi);
    if (!(hi > lo)) throw ConfigError("caustic rho window does not intersect model.rho_range");
    return numerics::log_grid(lo, hi, cfg.run.caustic_count);
}

std::vector<Branch> selected_branches(const RunConfig& cfg) {
    if (cfg.run.branch == "plus") return {Branch::plus};
    if (cfg.run.branch == "minus") return {Branch::minus};
    return {Branch::plus, Branch::minus};
}

std::vector<std::pair<double, double>> branch_polyline(
    const std::vector<family::ProfileSample>& path, Branch b) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& s : path)
        if (s.branch == b) pts.emplace_back(s.x, s.rho);
    return pts;
}

} // namespace

int cmd_thermo(const RunConfig& cfg) {
    auto hm = make_homentropic(cfg.model);
    auto dir = ensure_outdir(cfg);
    auto grid = profile_grid(cfg);

    bool hyperbolic = true;
    double bad_rho = 0.0;
    for (double rho : grid) {
        if (geometry::classify(hm, rho).tag != geometry::TypeTag::Hyperbolic) {
            hyperbolic = false;
            bad_rho = rho;
            break;
        }
    }
    double m_exp = cfg.model.type == "ideal_gas" ? 1.0 / cfg.model.n - 1.0 : cfg.model.m;

    std::cout << "model: " << hm.descriptor << "\n";
    std::cout << "m = " << fmt_double(m_exp) << "\n";
    if (hyperbolic)
        std::cout << "hyperbolic on [" << fmt_double(grid.front()) << ", "
                  << fmt_double(grid.back()) << "]\n";
    else
        std::cout << "NOT hyperbolic at rho = " << fmt_double(bad_rho) << "\n";

    bool applicable = true;
    if (cfg.model.type == "ideal_gas") {
        auto model = thermo::ideal_gas_model({cfg.model.n, cfg.model.R, cfg.model.s0});
        for (double rho : grid) {
            auto a = thermo::applicability(model, hm.T(rho), rho);
            if (!a.applicable) {
                applicable = false;
                break;
            }
        }
        std::cout << "applicability along the reduced locus: " << (applicable ? "yes" : "NO")
                  << "\n";
    }

    if (wants(cfg.output, "csv")) {
        std::vector<std::vector<std::string>> rows;
        for (double rho : grid) {
            std::vector<std::string> row{fmt_double(rho)};
            if (hm.has_temperature()) row.push_back(fmt_double(hm.T(rho)));
            row.push_back(fmt_double(hm.p(rho)));
            row.push_back(fmt_double(hm.dp(rho)));
            row.push_back(fmt_double(hm.A(rho)));
            rows.push_back(std::move(row));
        }
        std::string header = hm.has_temperature() ? "rho,T,p,dp,A" : "rho,p,dp,A";
        write_file((dir / "thermo.csv").string(), csv_text(header, rows));
    }
    if (wants(cfg.output, "json")) {
        nlohmann::json j;
        j["model"] = hm.descriptor;
        j["m"] = m_exp;
        j["hyperbolic"] = hyperbolic;
        if (cfg.model.type == "ideal_gas") j["applicable"] = applicable;
        write_file((dir / "thermo.json").string(), j.dump(2) + "\n");
    }
    if (wants(cfg.output, "svg")) {
        SvgPlot plot("reduced model", "rho", "value");
        std::vector<std::pair<double, double>> pa, pp;
        for (double rho : grid) {
            pa.emplace_back(rho, hm.A(rho));
            pp.emplace_back(rho, hm.p(rho));
        }
        plot.add_series("A(rho)", "#1f77b4", pa);
        plot.add_series("p(rho)", "#d62728", pp);
        write_file((dir / "thermo.svg").string(), plot.render());
    }
    return hyperbolic && applicable ? 0 : 1;
}

int cmd_profile(const RunConfig& cfg) {
    if (cfg.run.t_values.empty()) throw ConfigError("cmd profile requires run.t_values", 0,
                                                    "run.t_values");
    auto fam = make_family(cfg);
    auto dir = ensure_outdir(cfg);
    auto grid = profile_grid(cfg);

    SvgPlot plot("density profiles", "x", "rho");
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b", "#e377c2"};
    int ci = 0;
    for (double t : cfg.run.t_values) {
        auto samples = family::profile(fam, t, grid);
        if (wants(cfg.output, "csv")) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& s : samples)
                rows.push_back({fmt_double(s.t), fmt_double(s.x), fmt_double(s.rho),
                                fmt_double(s.u), family::to_string(s.branch)});
            write_file((dir / ("profile_t" + fmt_double(t) + ".csv")).string(),
                       csv_text("t,x,rho,u,branch", rows));
        }
        if (wants(cfg.output, "json")) {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& s : samples)
                j.push_back({{"t", s.t},
                             {"x", s.x},
                             {"rho", s.rho},
                             {"u", s.u},
                             {"branch", family::to_string(s.branch)}});
            write_file((dir / ("profile_t" + fmt_double(t) + ".json")).string(), j.dump(2) + "\n");
        }
        auto path = family::path_profile(fam, t, grid);
        std::cout << "t = " << fmt_double(t) << ": " << samples.size() << " samples, fold count "
                  << family::fold_count(path) << "\n";
        const char* color = colors[ci++ % 6];
        plot.add_series("t=" + fmt_double(t), color, branch_polyline(path, Branch::minus));
        plot.add_series("", color, branch_polyline(path, Branch::plus));
    }
    if (wants(cfg.output, "svg")) write_file((dir / "profile.svg").string(), plot.render());
    return 0;
}

int cmd_caustic(const RunConfig& cfg) {
    auto fam = make_family(cfg);
    auto dir = ensure_outdir(cfg);
    auto grid = caustic_grid(cfg);

    SvgPlot plot("caustics", "t", "x");
    for (Branch b : selected_branches(cfg)) {
        auto curve = singularity::caustic(fam, grid, b);
        std::string name = family::to_string(b);
        if (wants(cfg.output, "csv")) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& s : curve.samples)
                rows.push_back(
                    {fmt_double(s.rho), fmt_double(s.t), fmt_double(s.x), name});
            write_file((dir / ("caustic_" + name + ".csv")).string(),
                       csv_text("rho,t,x,branch", rows));
        }
        if (wants(cfg.output, "json")) {
            nlohmann::json j;
            j["branch"] = name;
            j["skipped"] = curve.skipped;
            if (curve.cusp)
                j["cusp"] = {{"rho", curve.cusp->rho_c},
                             {"t", curve.cusp->t_c},
                             {"x", curve.cusp->x_c}};
            if (curve.printed_t_deviation)
                j["printed_t_deviation"] = *curve.printed_t_deviation;
            j["samples"] = nlohmann::json::array();
            for (const auto& s : curve.samples)
                j["samples"].push_back({{"rho", s.rho}, {"t", s.t}, {"x", s.x}});
            write_file((dir / ("caustic_" + name + ".json")).string(), j.dump(2) + "\n");
        }
        std::vector<std::pair<double, double>> pts;
        for (const auto& s : curve.samples) pts.emplace_back(s.t, s.x);
        plot.add_series(name, b == Branch::plus ? "#111111" : "#555555", pts);
        std::cout << "branch " << name << ": " << curve.samples.size() << " samples, "
                  << curve.skipped << " skipped";
        if (curve.cusp)
            std::cout << ", cusp at (rho, t, x) = (" << fmt_double(curve.cusp->rho_c) << ", "
                      << fmt_double(curve.cusp->t_c) << ", " << fmt_double(curve.cusp->x_c) << ")";
        if (curve.printed_t_deviation)
            std::cout << ", |t_fallback - t_closed| <= " << fmt_double(*curve.printed_t_deviation);
        std::cout << "\n";
    }
    if (wants(cfg.output, "svg")) write_file((dir / "caustic.svg").string(), plot.render());
    return 0;
}

int cmd_shock(const RunConfig& cfg) {
    auto fam = make_family(cfg);
    if (fam.lambda == 0.0) throw ConfigError("cmd shock requires family.lambda != 0");
    auto dir = ensure_outdir(cfg);
    auto grid = caustic_grid(cfg);

    SvgPlot plot("caustics and shock fronts", "t", "x");
    bool stalled = false;
    bool first = true;
    for (Branch b : selected_branches(cfg)) {
        auto curve = singularity::caustic(fam, grid, b);
        std::string name = family::to_string(b);
        std::vector<std::pair<double, double>> cpts;
        for (const auto& s : curve.samples) cpts.emplace_back(s.t, s.x);
        plot.add_series("caustic " + name, "#111111", cpts);
        if (!curve.cusp) {
            std::cout << "branch " << name << ": no cusp on the grid, no front\n";
            continue;
        }
        auto front = singularity::shock_front(
            fam, *curve.cusp, {curve.cusp->t_c, curve.cusp->t_c + cfg.run.t_len}, cfg.run.dt);
        if (front.stalled) {
            stalled = true;
            std::cout << "branch " << name << ": continuation stalled at t = "
                      << fmt_double(front.stall_t) << " (partial output written)\n";
        } else {
            std::cout << "branch " << name << ": front born at t = "
                      << fmt_double(front.t_start) << ", " << front.samples.size()
                      << " steps\n";
        }
        if (wants(cfg.output, "csv")) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& s : front.samples)
                rows.push_back({fmt_double(s.t), fmt_double(s.x_s), fmt_double(s.rho1),
                                fmt_double(s.rho2), fmt_double(s.res_H), fmt_double(s.res_x)});
            std::string fname = first ? "shock.csv" : "shock_" + name + ".csv";
            write_file((dir / fname).string(),
                       csv_text("t,x_s,rho1,rho2,residual_H,residual_x", rows));
        }
        if (wants(cfg.output, "json")) {
            nlohmann::json j;
            j["branch"] = family::to_string(front.branch);
            j["t_start"] = front.t_start;
            j["stalled"] = front.stalled;
            j["samples"] = nlohmann::json::array();
            for (const auto& s : front.samples)
                j["samples"].push_back({{"t", s.t},
                                        {"x_s", s.x_s},
                                        {"rho1", s.rho1},
                                        {"rho2", s.rho2},
                                        {"residual_H", s.res_H},
                                        {"residual_x", s.res_x}});
            std::string fname = first ? "shock.json" : "shock_" + name + ".json";
            write_file((dir / fname).string(), j.dump(2) + "\n");
        }
        std::vector<std::pair<double, double>> fpts;
        for (const auto& s : front.samples) fpts.emplace_back(s.t, s.x_s);
        plot.add_series("front " + name, "#d62728", fpts);
        first = false;
    }
    if (wants(cfg.output, "svg")) write_file((dir / "shock.svg").string(), plot.render());
    return stalled ? 1 : 0;
}

int cmd_validate(const RunConfig& cfg) {
    auto fam = make_family(cfg);
    auto forms_hm = perturb_exponent(fam.hm, cfg.run.perturb_m);
    ValidationOptions opts;
    opts.seed = cfg.run.seed;
    Report report = run_validation(fam, forms_hm, opts);
    std::cout << report.to_text();
    auto dir = ensure_outdir(cfg);
    write_file((dir / "validate.json").string(), report.to_json() + "\n");
    return report.all_pass() ? 0 : 1;
}

} // namespace gasfold::cli
