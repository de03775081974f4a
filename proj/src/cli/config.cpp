#include "ptstab/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "ptstab/cli/presets.hpp"

namespace ptstab::cli {

namespace {

using Defaults = std::map<std::string, double>;
using FamilyTable = std::map<std::string, Defaults>;

const FamilyTable& table(Subcommand sub) {
    static const FamilyTable eigensweep{
        {"potential", {{"k1", 1.0}, {"k2", 1.0}, {"kappa", 0.4}, {"X", 0.0}, {"Y", 0.0}}},
        {"gyro", {{"k1", 1.0}, {"kappa", 0.0}, {"delta1", 0.0}, {"delta2", 0.0}, {"omega", 0.3}, {"balanced", 0.0}}},
        {"nls",
         {{"alpha", 1.0}, {"gamma", 1.0}, {"a", 0.0}, {"c", 0.0}, {"k", 1.0}, {"sigma", 1.0}, {"u0", 0.5}, {"phase", 0.0}}},
    };
    static const FamilyTable boundary{
        {"potential-k1", {{"k2", 1.0}, {"kappa", 0.4}}},
        {"gyro-Y", {{"k1", 1.0}, {"omega", 0.3}}},
        {"nls-amplitude", {{"alpha", 1.0}, {"gamma", 1.0}, {"k", 1.0}, {"sigma", 1.0}}},
        {"nls-c", {{"alpha", 1.0}, {"gamma", 1.0}, {"k", 1.0}, {"sigma", 1.0}}},
    };
    static const Defaults nls_base{{"alpha", 1.0}, {"gamma", 1.0}, {"sigma", 1.0}};
    static const FamilyTable thresholds{
        {"defaults", {{"k2", 1.0}, {"kappa", 0.4}, {"slope", 1.0}, {"alpha", 1.0}, {"gamma", 1.0}, {"sigma", 1.0}}},
        {"pt-interval", {{"k2", 1.0}, {"kappa", 0.4}}},
        {"ray-limits", {{"k2", 1.0}, {"kappa", 0.4}, {"slope", 1.0}}},
        {"delta-cr", {{"dt11", 2.0}, {"dt12", 0.0}, {"dt22", -1.0}, {"k11", 1.0}, {"k12", 0.4}, {"k22", 1.0}}},
        {"delta-pt", {{"dt11", 1.0}, {"dt12", 0.0}, {"dt22", -1.0}, {"k11", 2.5}, {"k12", 1.5}, {"k22", 2.5}}},
        {"nls-ideal", nls_base},
        {"nls-whitney", {{"alpha", 1.0}, {"gamma", 1.0}, {"sigma", 1.0}, {"k", 1.0}, {"a", 0.01}, {"c", 0.1}}},
        {"nls-slopes", {{"alpha", 1.0}, {"gamma", 1.0}, {"sigma", 1.0}, {"k", 1.0}, {"u0", 0.5}}},
    };
    switch (sub) {
        case Subcommand::Eigensweep: return eigensweep;
        case Subcommand::Boundary: return boundary;
        case Subcommand::Thresholds: return thresholds;
    }
    return eigensweep;
}

// Grid axes each boundary family needs (the last one is the scanned axis where applicable).
const std::vector<std::string>& boundary_axes(const std::string& family) {
    static const std::map<std::string, std::vector<std::string>> axes{
        {"potential-k1", {"X", "Y"}},
        {"gyro-Y", {"kappa", "X", "Y"}},
        {"nls-amplitude", {"a", "c"}},
        {"nls-c", {"u0", "a", "c"}},
    };
    return axes.at(family);
}

double parse_number(const std::string& text, const std::string& what) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) throw ConfigError("invalid number '" + text + "' in " + what);
    if (!std::isfinite(v)) throw ConfigError("non-finite value in " + what);
    return v;
}

std::pair<std::string, double> parse_binding(const std::string& s, const std::string& what) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError(what + " expects name=value, got '" + s + "'");
    return {s.substr(0, eq), parse_number(s.substr(eq + 1), what + " " + s.substr(0, eq))};
}

const std::set<std::string> kToleranceNames{"eps", "bisect", "residual"};

}  // namespace

std::string to_string(Subcommand s) {
    switch (s) {
        case Subcommand::Eigensweep: return "eigensweep";
        case Subcommand::Boundary: return "boundary";
        case Subcommand::Thresholds: return "thresholds";
    }
    return "?";
}

Subcommand parse_subcommand(const std::string& s) {
    if (s == "eigensweep") return Subcommand::Eigensweep;
    if (s == "boundary") return Subcommand::Boundary;
    if (s == "thresholds") return Subcommand::Thresholds;
    throw ConfigError("unknown subcommand '" + s + "'");
}

GridAxis parse_grid(const std::string& spec) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = spec.find(':', start);
        parts.push_back(spec.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    if (parts.size() != 4 || parts[0].empty()) throw ConfigError("--grid expects axis:min:max:count, got '" + spec + "'");
    GridAxis g;
    g.name = parts[0];
    g.min = parse_number(parts[1], "--grid " + g.name);
    g.max = parse_number(parts[2], "--grid " + g.name);
    const double count = parse_number(parts[3], "--grid " + g.name);
    if (count < 1.0 || count != std::floor(count)) throw ConfigError("--grid " + g.name + ": count must be a positive integer");
    g.count = static_cast<std::size_t>(count);
    if (g.count < 2 && g.min != g.max) throw ConfigError("--grid " + g.name + ": count must be >= 2 (or 1 with min == max)");
    if (g.max < g.min) throw ConfigError("--grid " + g.name + ": max < min");
    return g;
}

const GridAxis* RunConfig::grid(const std::string& name) const {
    for (const auto& g : grids)
        if (g.name == name) return &g;
    return nullptr;
}

double RunConfig::param(const std::string& name) const {
    const auto it = params.find(name);
    if (it == params.end()) throw ConfigError("missing parameter '" + name + "'");
    return it->second;
}

double RunConfig::tolerance(const std::string& name, double fallback) const {
    const auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
}

const std::map<std::string, double>& family_defaults(Subcommand sub, const std::string& family) {
    const auto& t = table(sub);
    const auto it = t.find(family);
    if (it == t.end()) throw ConfigError("unknown family '" + family + "' for " + to_string(sub));
    return it->second;
}

std::vector<std::string> families(Subcommand sub) {
    std::vector<std::string> out;
    for (const auto& [name, _] : table(sub)) out.push_back(name);
    return out;
}

RunConfig resolve(const CommandLine& cl) {
    RunConfig cfg;
    cfg.subcommand = cl.subcommand;
    cfg.out = cl.out;
    if (cl.format.empty())
        cfg.format = cl.subcommand == Subcommand::Thresholds ? Format::Json : Format::Csv;
    else if (cl.format == "csv")
        cfg.format = Format::Csv;
    else if (cl.format == "json")
        cfg.format = Format::Json;
    else
        throw ConfigError("--format must be csv or json");

    const Preset* preset = nullptr;
    if (!cl.preset.empty()) {
        preset = find_preset(cl.preset);
        if (!preset) throw ConfigError("unknown preset '" + cl.preset + "'");
        if (preset->subcommand != cl.subcommand)
            throw ConfigError("preset '" + cl.preset + "' belongs to subcommand " + to_string(preset->subcommand));
        cfg.preset = cl.preset;
        cfg.family = preset->family;
    }
    if (!cl.family.empty()) {
        if (preset && cl.family != cfg.family)
            throw ConfigError("--family " + cl.family + " conflicts with preset family " + cfg.family);
        cfg.family = cl.family;
    }
    if (cfg.family.empty()) throw ConfigError("either --preset or --family is required");

    const auto& defaults = family_defaults(cfg.subcommand, cfg.family);
    cfg.params = defaults;
    auto bind = [&](const std::string& name, double value) {
        if (!defaults.count(name)) throw ConfigError("unknown parameter '" + name + "' for family " + cfg.family);
        cfg.params[name] = value;
    };
    if (preset) {
        for (const auto& [name, value] : preset->params) bind(name, value);
        cfg.grids = preset->grids;
    }
    for (const auto& s : cl.sets) {
        const auto [name, value] = parse_binding(s, "--set");
        bind(name, value);
    }
    for (const auto& g : cl.grids) {
        GridAxis axis = parse_grid(g);
        auto it = std::find_if(cfg.grids.begin(), cfg.grids.end(), [&](const GridAxis& x) { return x.name == axis.name; });
        if (it != cfg.grids.end())
            *it = axis;
        else
            cfg.grids.push_back(axis);
    }
    for (const auto& t : cl.tols) {
        const auto [name, value] = parse_binding(t, "--tol");
        if (!kToleranceNames.count(name)) throw ConfigError("unknown tolerance '" + name + "' (eps, bisect, residual)");
        if (!(value > 0.0)) throw ConfigError("tolerance " + name + " must be positive");
        cfg.tolerances[name] = value;
    }

    switch (cfg.subcommand) {
        case Subcommand::Eigensweep: {
            if (cfg.grids.size() != 1) throw ConfigError("eigensweep needs exactly one --grid axis");
            if (!defaults.count(cfg.grids[0].name) || cfg.grids[0].name == "balanced")
                throw ConfigError("cannot sweep '" + cfg.grids[0].name + "' for family " + cfg.family);
            break;
        }
        case Subcommand::Boundary: {
            const auto& axes = boundary_axes(cfg.family);
            for (const auto& g : cfg.grids)
                if (std::find(axes.begin(), axes.end(), g.name) == axes.end())
                    throw ConfigError("unexpected grid axis '" + g.name + "' for family " + cfg.family);
            for (const auto& name : axes)
                if (!cfg.grid(name)) throw ConfigError("family " + cfg.family + " needs --grid " + name + ":min:max:count");
            break;
        }
        case Subcommand::Thresholds:
            if (!cfg.grids.empty()) throw ConfigError("thresholds takes no --grid");
            break;
    }
    return cfg;
}

}  // namespace ptstab::cli
