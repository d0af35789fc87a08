#include "gasfold/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "gasfold/errors.hpp"

namespace gasfold::cli {

namespace {

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_number(const std::string& raw, int line, const std::string& key) {
    std::string s = trim(raw);
    auto slash = s.find('/');
    if (slash != std::string::npos && slash > 0) {
        // Fraction syntax, e.g. "-2/3".
        double num = parse_number(s.substr(0, slash), line, key);
        double den = parse_number(s.substr(slash + 1), line, key);
        if (den == 0.0) throw ConfigError("division by zero in value of '" + key + "'", line, key);
        return num / den;
    }
    const char* begin = s.data();
    const char* end = begin + s.size();
    double v = 0.0;
    auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc() || res.ptr != end)
        throw ConfigError("invalid number '" + s + "' for key '" + key + "'", line, key);
    return v;
}

std::vector<std::string> split_list(const std::string& raw) {
    std::string s = trim(raw);
    if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

std::vector<double> parse_list(const std::string& raw, int line, const std::string& key) {
    std::vector<double> out;
    for (const auto& p : split_list(raw)) out.push_back(parse_number(p, line, key));
    return out;
}

int parse_int(const std::string& raw, int line, const std::string& key) {
    double v = parse_number(raw, line, key);
    return static_cast<int>(v);
}

} // namespace

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    bool any_key = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("unterminated section header", lineno);
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected 'key = value'", lineno);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.find('.') == std::string::npos && !section.empty()) key = section + "." + key;
        any_key = true;

        if (key == "model.type") {
            if (value != "ideal_gas" && value != "power_law")
                throw ConfigError("model.type must be ideal_gas or power_law, got '" + value + "'",
                                  lineno, key);
            cfg.model.type = value;
        } else if (key == "model.n") {
            cfg.model.n = parse_number(value, lineno, key);
        } else if (key == "model.R") {
            cfg.model.R = parse_number(value, lineno, key);
        } else if (key == "model.s0") {
            cfg.model.s0 = parse_number(value, lineno, key);
        } else if (key == "model.A0") {
            cfg.model.A0 = parse_number(value, lineno, key);
        } else if (key == "model.m") {
            cfg.model.m = parse_number(value, lineno, key);
        } else if (key == "model.rho_range") {
            auto v = parse_list(value, lineno, key);
            if (v.size() != 2 || !(v[0] > 0.0) || !(v[1] > v[0]))
                throw ConfigError("model.rho_range must be [min, max] with 0 < min < max", lineno,
                                  key);
            cfg.model.rho_range = {v[0], v[1]};
            cfg.model.rho_range_set = true;
        } else if (key == "family.lambda") {
            cfg.family.lambda = parse_number(value, lineno, key);
        } else if (key == "family.alpha0") {
            cfg.family.alpha0 = parse_number(value, lineno, key);
        } else if (key == "family.alpha2") {
            cfg.family.alpha2 = parse_number(value, lineno, key);
        } else if (key == "family.t0") {
            cfg.family.t0 = parse_number(value, lineno, key);
        } else if (key == "family.x0") {
            cfg.family.x0 = parse_number(value, lineno, key);
        } else if (key == "run.t_values") {
            cfg.run.t_values = parse_list(value, lineno, key);
        } else if (key == "run.rho_min") {
            cfg.run.rho_min = parse_number(value, lineno, key);
        } else if (key == "run.rho_max") {
            cfg.run.rho_max = parse_number(value, lineno, key);
        } else if (key == "run.rho_count") {
            cfg.run.rho_count = parse_int(value, lineno, key);
        } else if (key == "run.rho_spacing") {
            if (value != "log" && value != "linear")
                throw ConfigError("run.rho_spacing must be log or linear", lineno, key);
            cfg.run.rho_spacing = value;
        } else if (key == "run.caustic_rho_min") {
            cfg.run.caustic_rho_min = parse_number(value, lineno, key);
        } else if (key == "run.caustic_rho_max") {
            cfg.run.caustic_rho_max = parse_number(value, lineno, key);
        } else if (key == "run.caustic_count") {
            cfg.run.caustic_count = parse_int(value, lineno, key);
        } else if (key == "run.branch") {
            if (value != "plus" && value != "minus" && value != "both")
                throw ConfigError("run.branch must be plus, minus or both", lineno, key);
            cfg.run.branch = value;
        } else if (key == "run.dt") {
            cfg.run.dt = parse_number(value, lineno, key);
        } else if (key == "run.t_len") {
            cfg.run.t_len = parse_number(value, lineno, key);
        } else if (key == "run.seed") {
            cfg.run.seed = static_cast<unsigned>(parse_int(value, lineno, key));
        } else if (key == "run.perturb_m") {
            cfg.run.perturb_m = parse_number(value, lineno, key);
        } else if (key == "output.dir") {
            cfg.output.dir = value;
        } else if (key == "output.formats") {
            cfg.output.formats.clear();
            for (const auto& f : split_list(value)) {
                if (f != "csv" && f != "json" && f != "svg")
                    throw ConfigError("output format must be csv, json or svg, got '" + f + "'",
                                      lineno, key);
                cfg.output.formats.push_back(f);
            }
        } else {
            throw ConfigError("unknown key '" + key + "'", lineno, key);
        }
    }
    if (!any_key) throw ConfigError("empty config");
    if (cfg.model.type.empty()) throw ConfigError("missing required key 'model.type'", 0, "model.type");
    if (!cfg.model.rho_range_set)
        throw ConfigError("missing required key 'model.rho_range'", 0, "model.rho_range");
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

thermo::HomentropicModel make_homentropic(const ModelConfig& mc) {
    if (mc.type == "ideal_gas") {
        auto model = thermo::ideal_gas_model({mc.n, mc.R, mc.s0});
        return thermo::homentropic_reduce(model, mc.s0, mc.rho_range);
    }
    return thermo::power_law_model(mc.A0, mc.m, mc.rho_range);
}

family::SolutionFamily make_family(const RunConfig& cfg) {
    family::SolutionFamily fam;
    fam.lambda = cfg.family.lambda;
    fam.alpha0 = cfg.family.alpha0;
    fam.alpha2 = cfg.family.alpha2;
    fam.t0 = cfg.family.t0;
    fam.x0 = cfg.family.x0;
    fam.hm = make_homentropic(cfg.model);
    return fam;
}

} // namespace gasfold::cli
