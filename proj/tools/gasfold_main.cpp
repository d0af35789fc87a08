#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gasfold/commands.hpp"
#include "gasfold/errors.hpp"

namespace {

struct CommonOpts {
    std::string config;
    std::string out;
    std::string formats;
};

void apply_overrides(gasfold::cli::RunConfig& cfg, const CommonOpts& opts) {
    if (!opts.out.empty()) cfg.output.dir = opts.out;
    if (!opts.formats.empty()) {
        cfg.output.formats.clear();
        std::string item;
        std::stringstream ss(opts.formats);
        while (std::getline(ss, item, ',')) {
            if (item != "csv" && item != "json" && item != "svg")
                throw gasfold::ConfigError("unknown format '" + item + "'");
            cfg.output.formats.push_back(item);
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multivalued gas-dynamics solutions: profiles, caustics, shock fronts"};
    app.require_subcommand(1);

    CommonOpts opts;
    int (*handler)(const gasfold::cli::RunConfig&) = nullptr;

    for (auto [name, desc, fn] :
         {std::tuple{"thermo", "model tables and type classification", &gasfold::cli::cmd_thermo},
          std::tuple{"profile", "density profiles at the configured times",
                     &gasfold::cli::cmd_profile},
          std::tuple{"caustic", "parametric caustic curves", &gasfold::cli::cmd_caustic},
          std::tuple{"shock", "shock fronts by continuation", &gasfold::cli::cmd_shock},
          std::tuple{"validate", "run the invariant suite, emit a JSON report",
                     &gasfold::cli::cmd_validate}}) {
        auto* sub = app.add_subcommand(name, desc);
        sub->add_option("--config", opts.config, "config file")->required();
        sub->add_option("--out", opts.out, "output directory (overrides output.dir)");
        sub->add_option("--format", opts.formats, "comma-separated list: csv,json,svg");
        sub->callback([&handler, fn] { handler = fn; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        auto cfg = gasfold::cli::parse_config_file(opts.config);
        apply_overrides(cfg, opts);
        return handler(cfg);
    } catch (const gasfold::ConfigError& e) {
        std::cerr << "config error";
        if (e.line > 0) std::cerr << " (line " << e.line << ")";
        std::cerr << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
