#include "ptstab/cli/runners.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <limits>

#include <CLI11.hpp>

#include "ptstab/cli/presets.hpp"
#include "ptstab/error.hpp"
#include "ptstab/gyro.hpp"
#include "ptstab/nls.hpp"
#include "ptstab/polynomial.hpp"
#include "ptstab/potential.hpp"
#include "ptstab/routh_hurwitz.hpp"
#include "ptstab/sweep.hpp"

#ifndef PTSTAB_VERSION
#define PTSTAB_VERSION "0.0.0"
#endif

namespace ptstab::cli {

namespace {

using Params = std::map<std::string, double>;

constexpr double kDefaultBisect = 1e-8;

std::vector<double> axis_values(const GridAxis& g) { return linspace(g.min, g.max, g.count); }

potential::PotentialParams potential_from(const Params& p) {
    return {p.at("k1"), p.at("k2"), p.at("kappa"), p.at("X"), p.at("Y")};
}

gyro::GyroParams gyro_from(const Params& p) {
    gyro::GyroParams g{p.at("k1"), p.at("kappa"), p.at("delta1"), p.at("delta2"), p.at("omega")};
    if (p.at("balanced") != 0.0) g.delta2 = -g.delta1;
    return g;
}

nls::NLSParams nls_from(const Params& p) {
    nls::NLSParams n;
    n.alpha = p.at("alpha");
    n.gamma = p.at("gamma");
    n.a = p.at("a");
    n.c = p.at("c");
    n.k = p.at("k");
    n.sigma = p.at("sigma");
    const double amp = p.at("u0"), phase = p.at("phase");
    n.u0 = {amp * std::cos(phase), amp * std::sin(phase)};
    return n;
}

nls::NLSParams nls_template(const RunConfig& cfg) {
    nls::NLSParams n;
    n.alpha = cfg.param("alpha");
    n.gamma = cfg.param("gamma");
    n.k = cfg.param("k");
    n.sigma = cfg.param("sigma");
    n.validate();
    return n;
}

std::function<Quartic(const Params&)> quartic_builder(const std::string& family) {
    if (family == "potential") return [](const Params& p) { return char_poly(potential::to_system(potential_from(p))); };
    if (family == "gyro") return [](const Params& p) { return char_poly(gyro::to_system(gyro_from(p))); };
    if (family == "nls") return [](const Params& p) { return char_poly(nls::assemble_linearization(nls_from(p))); };
    throw ConfigError("unknown eigensweep family '" + family + "'");
}

std::string multiple_mask(const std::array<bool, 4>& m) {
    std::string s;
    for (bool b : m) s += b ? '1' : '0';
    return s;
}

std::string side_tag(potential::StableSide s) {
    switch (s) {
        case potential::StableSide::Above: return "above";
        case potential::StableSide::Below: return "below";
        case potential::StableSide::None: break;
    }
    return "none";
}

std::vector<std::string> boundary_columns(const std::string& a1, const std::string& a2, const std::string& crit) {
    return {a1, a2, crit, "branch", "stable_side", "empty", "failed"};
}

std::vector<Cell> boundary_row(double x1, double x2, double crit, int branch, const std::string& side) {
    return {x1, x2, crit, std::int64_t{branch}, side, false, false};
}

std::vector<Cell> empty_row(double x1, double x2) {
    return {x1, x2, std::monostate{}, std::monostate{}, std::string("none"), true, false};
}

std::vector<Cell> failed_row(double x1, double x2) {
    return {x1, x2, std::monostate{}, std::monostate{}, std::string("none"), false, true};
}

// Threshold report helpers.

struct Scalar {
    std::string name;
    double value = 0.0;
    double oracle = 0.0;
    double residual = 0.0;
    double tolerance = 0.0;
};

void add_scalar(RunResult& r, const RunConfig& cfg, Scalar s) {
    s.tolerance = cfg.tolerance("residual", s.tolerance);
    const bool ok = std::isfinite(s.residual) && s.residual <= s.tolerance;
    if (!ok) {
        r.numerical_failure = true;
        r.diagnostics.push_back(s.name + ": residual " + format_double(s.residual) + " exceeds tolerance " +
                                format_double(s.tolerance));
    }
    r.table.add({s.name, s.value, s.oracle, s.residual, s.tolerance, ok});
}

// a2^2 - 4 a0 of the biquadratic characteristic polynomial on the PT locus.
double pt_discriminant(double y, double k2, double kappa) {
    const Quartic q = char_poly(potential::to_system({k2, k2, kappa, 0.0, y}));
    return q.c2() * q.c2() - 4.0 * q.c0();
}

void pt_interval_rows(RunResult& r, const RunConfig& cfg, bool both) {
    const double k2 = cfg.param("k2"), kappa = cfg.param("kappa");
    const auto ep = potential::ep_interval(k2, kappa);
    const auto flips = find_transitions([&](double y) { return pt_discriminant(y, k2, kappa) > 0.0; }, 0.0,
                                        2.0 * ep.y_plus, 512, 1e-13);
    auto oracle_near = [&](double v) {
        double best = std::numeric_limits<double>::quiet_NaN();
        for (const auto& t : flips)
            if (std::isnan(best) || std::abs(t.value - v) < std::abs(best - v)) best = t.value;
        return best;
    };
    const double om = oracle_near(ep.y_minus);
    add_scalar(r, cfg, {"Y_PT_minus", ep.y_minus, om, std::abs(ep.y_minus - om), 1e-9});
    if (both) {
        const double op = oracle_near(ep.y_plus);
        add_scalar(r, cfg, {"Y_PT_plus", ep.y_plus, op, std::abs(ep.y_plus - op), 1e-9});
    }
}

// X -> 0 limit of the boundary along X = slope (k1 - k2):
//   -Y^3 / (2 slope) + (1/slope^2 + k2) Y^2 - 4 kappa^2 = 0.
double ray_closed_form(double slope, double k2, double kappa, potential::Side side) {
    const std::array<double, 4> c{-4.0 * kappa * kappa, 0.0, 1.0 / (slope * slope) + k2, -0.5 / slope};
    double best = std::numeric_limits<double>::quiet_NaN();
    for (double y : poly::real_roots(c)) {
        if (side == potential::Side::Upper ? y <= 0.0 : y >= 0.0) continue;
        if (std::isnan(best) || std::abs(y) < std::abs(best)) best = y;
    }
    return best;
}

void ray_rows(RunResult& r, const RunConfig& cfg) {
    const double k2 = cfg.param("k2"), kappa = cfg.param("kappa"), slope = cfg.param("slope");
    if (!(slope > 0.0)) throw ConfigError("slope must be positive");
    for (const auto& [name, side] : {std::pair{"Y_plus_ray", potential::Side::Upper},
                                     std::pair{"Y_minus_ray", potential::Side::Lower}}) {
        const auto lim = potential::ray_limit(slope, side, k2, kappa);
        const double oracle = ray_closed_form(slope, k2, kappa, side);
        add_scalar(r, cfg, {name, lim.y_limit, oracle, std::abs(lim.y_limit - oracle), 1e-5});
    }
}

void ideal_rows(RunResult& r, const RunConfig& cfg) {
    nls::NLSParams n;
    n.alpha = cfg.param("alpha");
    n.gamma = cfg.param("gamma");
    n.sigma = cfg.param("sigma");
    const double value = nls::ideal_threshold(n);
    // The lossy threshold cubic restricted to a = 0 must reduce to the ideal threshold.
    double oracle = std::numeric_limits<double>::quiet_NaN();
    for (const auto& root : nls::dissipative_threshold(n, 0.0, 1.0)) oracle = root.amplitude;
    add_scalar(r, cfg, {"u0_ideal", value, oracle, std::abs(value - oracle), 1e-12});
}

Mat2 mat_from(const RunConfig& cfg, const std::string& prefix) {
    return Mat2::symmetric(cfg.param(prefix + "11"), cfg.param(prefix + "12"), cfg.param(prefix + "22"));
}

double nearest_transition(const std::vector<Transition>& ts, double v) {
    double best = std::numeric_limits<double>::quiet_NaN();
    for (const auto& t : ts)
        if (std::isnan(best) || std::abs(t.value - v) < std::abs(best - v)) best = t.value;
    return best;
}

void delta_cr_rows(RunResult& r, const RunConfig& cfg) {
    const Mat2 dt = mat_from(cfg, "dt"), kk = mat_from(cfg, "k");
    const double sq = delta_cr_squared(dt, kk);
    if (!(sq > 0.0)) throw DomainError("delta_cr_squared is not positive: no finite threshold");
    if ((kk * dt).trace() > kk.trace() * dt.trace())
        throw DomainError("tr K Dt > tr K tr Dt: unstable for every delta > 0, delta_cr_squared is not a threshold");
    const double value = std::sqrt(sq);
    const auto ts = find_transitions([&](double d) { return hurwitz_stable(char_poly(SystemSpec(d * dt, kk))); },
                                     0.0, 4.0 * value, 512, 1e-13);
    const double oracle = nearest_transition(ts, value);
    add_scalar(r, cfg, {"delta_cr", value, oracle, std::abs(value - oracle), 1e-9});
}

void delta_pt_rows(RunResult& r, const RunConfig& cfg) {
    const Mat2 dt = mat_from(cfg, "dt"), kk = mat_from(cfg, "k");
    const double value = delta_pt(dt, kk);
    const double eps = cfg.tolerance("eps", kDefaultEps);
    const auto ts = find_transitions(
        [&](double d) { return spectrum(SystemSpec(d * dt, kk), eps).classification == Stability::MarginallyStable; },
        0.0, 2.0 * value + 1.0, 512, 1e-13);
    const double oracle = nearest_transition(ts, value);
    add_scalar(r, cfg, {"delta_PT", value, oracle, std::abs(value - oracle), 1e-7});
}

void whitney_rows(RunResult& r, const RunConfig& cfg) {
    const nls::NLSParams tmpl = nls_template(cfg);
    const double a = cfg.param("a"), c = cfg.param("c");
    const double value = nls::whitney_amplitude(tmpl, a, c);
    const double si = nls::ideal_threshold(tmpl);
    double oracle = std::numeric_limits<double>::quiet_NaN();
    for (const auto& root : nls::dissipative_threshold(tmpl, a, c))
        if (std::isnan(oracle) || std::abs(root.amplitude - si) < std::abs(oracle - si)) oracle = root.amplitude;
    add_scalar(r, cfg, {"u0_whitney", value, oracle, std::abs(value - oracle) / std::abs(oracle), 0.05});
}

void slope_rows(RunResult& r, const RunConfig& cfg) {
    nls::NLSParams p = nls_template(cfg).with_amplitude(cfg.param("u0"));
    const auto slopes = nls::boundary_linear_slope(p);
    // Zeros of the h4 minor along a short segment a = a_probe, c = t a_probe.
    constexpr double a_probe = 1e-5;
    const double reach = 4.0 * std::max(std::abs(slopes.plus), std::abs(slopes.minus));
    const auto ts = find_transitions(
        [&](double t) { return hurwitz(char_poly(nls::assemble_linearization(p.with_losses(a_probe, t * a_probe)))).h4 > 0.0; },
        -reach, reach, 2048, 1e-12);
    for (const auto& [name, value] : {std::pair{"slope_plus", slopes.plus}, std::pair{"slope_minus", slopes.minus}}) {
        const double oracle = nearest_transition(ts, value);
        add_scalar(r, cfg, {name, value, oracle, std::abs(value - oracle) / std::abs(value), 1e-3});
    }
}

}  // namespace

RunResult run_eigensweep(const RunConfig& cfg) {
    RunResult r;
    r.table.columns = {"value", "re1", "re2", "re3", "re4", "im1", "im2", "im3", "im4", "classification", "multiple", "failed"};
    const GridAxis& axis = cfg.grids.at(0);
    const auto build = quartic_builder(cfg.family);
    const double eps = cfg.tolerance("eps", kDefaultEps);

    // Surface parameter-domain errors before sweeping.
    {
        Params base = cfg.params;
        base[axis.name] = axis.min;
        (void)build(base);
    }

    const auto rows = eigen_sweep(
        [&](double t) {
            Params p = cfg.params;
            p[axis.name] = t;
            return build(p);
        },
        axis.min, axis.max, axis.count, eps);

    for (const auto& row : rows) {
        std::vector<Cell> cells{row.parameter};
        for (const auto& z : row.roots) cells.emplace_back(z.real());
        for (const auto& z : row.roots) cells.emplace_back(z.imag());
        if (row.failed) {
            cells.emplace_back(std::monostate{});
            cells.emplace_back(std::monostate{});
            r.numerical_failure = true;
            r.diagnostics.push_back(axis.name + "=" + format_double(row.parameter) + ": " + row.failure);
        } else {
            cells.emplace_back(std::string(to_string(row.stability)));
            cells.emplace_back(multiple_mask(row.multiple));
        }
        cells.emplace_back(row.failed);
        r.table.add(std::move(cells));
    }
    return r;
}

RunResult run_boundary(const RunConfig& cfg) {
    RunResult r;
    const double bisect = cfg.tolerance("bisect", kDefaultBisect);
    auto fail = [&](double x1, double x2, const std::string& what) {
        r.numerical_failure = true;
        r.diagnostics.push_back("(" + format_double(x1) + ", " + format_double(x2) + "): " + what);
        r.table.add(failed_row(x1, x2));
    };

    if (cfg.family == "potential-k1") {
        r.table.columns = boundary_columns("X", "Y", "k1");
        const double k2 = cfg.param("k2"), kappa = cfg.param("kappa");
        if (!(cfg.grid("X")->min > 0.0)) throw ConfigError("potential-k1 needs X > 0 on the whole grid");
        for (double x : axis_values(*cfg.grid("X")))
            for (double y : axis_values(*cfg.grid("Y"))) {
                try {
                    const auto roots = potential::boundary_k1(x, y, k2, kappa);
                    if (roots.empty()) r.table.add(empty_row(x, y));
                    for (std::size_t b = 0; b < roots.size(); ++b)
                        r.table.add(boundary_row(x, y, roots[b].k1, static_cast<int>(b), side_tag(roots[b].stable_side)));
                } catch (const Error& e) {
                    fail(x, y, e.what());
                }
            }
    } else if (cfg.family == "gyro-Y") {
        r.table.columns = boundary_columns("kappa", "X", "Y");
        const GridAxis& ys = *cfg.grid("Y");
        gyro::SurfaceGrid grid;
        grid.kappa = axis_values(*cfg.grid("kappa"));
        grid.X = axis_values(*cfg.grid("X"));
        grid.y_min = ys.min;
        grid.y_max = ys.max;
        grid.scan_points = std::max<std::size_t>(ys.count, 2);
        grid.tol = bisect;
        for (const auto& col : gyro::boundary_surface(cfg.param("k1"), cfg.param("omega"), grid)) {
            if (col.samples.empty()) r.table.add(empty_row(col.axis1, col.axis2));
            for (const auto& s : col.samples)
                r.table.add(boundary_row(s.axis1, s.axis2, s.critical, s.branch, s.stable_above ? "above" : "below"));
        }
    } else if (cfg.family == "nls-amplitude") {
        r.table.columns = boundary_columns("a", "c", "u0");
        const nls::NLSParams tmpl = nls_template(cfg);
        for (double a : axis_values(*cfg.grid("a")))
            for (double c : axis_values(*cfg.grid("c"))) {
                if (a == 0.0 && c == 0.0) {
                    // Lossless corner: marginal below the ideal threshold.
                    r.table.add(boundary_row(a, c, nls::ideal_threshold(tmpl), 0, "below"));
                    continue;
                }
                try {
                    const auto roots = nls::dissipative_threshold(tmpl, a, c);
                    if (roots.empty()) r.table.add(empty_row(a, c));
                    const nls::NLSParams lossy = tmpl.with_losses(a, c);
                    for (std::size_t b = 0; b < roots.size(); ++b) {
                        const double amp = roots[b].amplitude;
                        const double h = 1e-6 * std::max(1.0, amp);
                        std::string side = "none";
                        if (nls::hurwitz_stable(lossy.with_amplitude(amp - h)))
                            side = "below";
                        else if (nls::hurwitz_stable(lossy.with_amplitude(amp + h)))
                            side = "above";
                        r.table.add(boundary_row(a, c, amp, static_cast<int>(b), side));
                    }
                } catch (const Error& e) {
                    fail(a, c, e.what());
                }
            }
    } else if (cfg.family == "nls-c") {
        r.table.columns = boundary_columns("u0", "a", "c");
        const nls::NLSParams tmpl = nls_template(cfg);
        const GridAxis& cs = *cfg.grid("c");
        if (!(cs.max > cs.min)) throw ConfigError("nls-c needs a non-empty c scan range");
        for (double u : axis_values(*cfg.grid("u0")))
            for (double a : axis_values(*cfg.grid("a"))) {
                try {
                    const nls::NLSParams p = tmpl.with_amplitude(u);
                    const auto ts = find_transitions(
                        [&](double c) { return nls::hurwitz_stable(p.with_losses(a, c)); }, cs.min, cs.max,
                        std::max<std::size_t>(cs.count, 2), bisect);
                    if (ts.empty()) r.table.add(empty_row(u, a));
                    for (std::size_t b = 0; b < ts.size(); ++b)
                        r.table.add(boundary_row(u, a, ts[b].value, static_cast<int>(b),
                                                 ts[b].holds_below ? "below" : "above"));
                } catch (const Error& e) {
                    fail(u, a, e.what());
                }
            }
    } else {
        throw ConfigError("unknown boundary family '" + cfg.family + "'");
    }
    return r;
}

RunResult run_thresholds(const RunConfig& cfg) {
    RunResult r;
    r.table.columns = {"name", "value", "oracle", "residual", "tolerance", "ok"};
    const std::string& f = cfg.family;
    if (f == "defaults") {
        pt_interval_rows(r, cfg, false);
        ray_rows(r, cfg);
        ideal_rows(r, cfg);
    } else if (f == "pt-interval") {
        pt_interval_rows(r, cfg, true);
    } else if (f == "ray-limits") {
        ray_rows(r, cfg);
    } else if (f == "delta-cr") {
        delta_cr_rows(r, cfg);
    } else if (f == "delta-pt") {
        delta_pt_rows(r, cfg);
    } else if (f == "nls-ideal") {
        ideal_rows(r, cfg);
    } else if (f == "nls-whitney") {
        whitney_rows(r, cfg);
    } else if (f == "nls-slopes") {
        slope_rows(r, cfg);
    } else {
        throw ConfigError("unknown thresholds family '" + f + "'");
    }
    return r;
}

RunResult run(const RunConfig& cfg) {
    switch (cfg.subcommand) {
        case Subcommand::Eigensweep: return run_eigensweep(cfg);
        case Subcommand::Boundary: return run_boundary(cfg);
        case Subcommand::Thresholds: return run_thresholds(cfg);
    }
    throw ConfigError("unknown subcommand");
}

int main_entry(int argc, char** argv) {
    CLI::App app{"Stability analysis of PT-symmetric, gyroscopic and dissipative NLS systems", "ptstab"};
    app.set_version_flag("--version", PTSTAB_VERSION);
    bool list = false;
    app.add_flag("--list-presets", list, "Print the preset table and exit");

    CommandLine cl;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--preset", cl.preset, "Named parameter set");
        sub->add_option("--family", cl.family, "System family (see README)");
        sub->add_option("--set", cl.sets, "Parameter binding name=value")->take_all()->allow_extra_args();
        sub->add_option("--grid", cl.grids, "Grid axis:min:max:count")->take_all()->allow_extra_args();
        sub->add_option("--tol", cl.tols, "Tolerance override (eps, bisect, residual)")->take_all()->allow_extra_args();
        sub->add_option("--format", cl.format, "csv or json");
        sub->add_option("--out", cl.out, "Output path (stdout when omitted)");
    };
    std::vector<std::pair<CLI::App*, Subcommand>> subs{
        {app.add_subcommand("eigensweep", "Branch-continuous spectra along one parameter"), Subcommand::Eigensweep},
        {app.add_subcommand("boundary", "Stability boundary over a two-axis grid"), Subcommand::Boundary},
        {app.add_subcommand("thresholds", "Named scalar thresholds with oracle residuals"), Subcommand::Thresholds},
    };
    for (auto& [sub, _] : subs) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    if (list) {
        for (const auto& p : presets()) std::cout << p.name << "\t" << to_string(p.subcommand) << "\t" << p.family << "\t" << p.description << "\n";
        return kExitOk;
    }
    bool chosen = false;
    for (auto& [sub, id] : subs)
        if (sub->parsed()) {
            cl.subcommand = id;
            chosen = true;
        }
    if (!chosen) {
        std::cerr << "ptstab: a subcommand is required (eigensweep, boundary, thresholds)\n";
        return kExitConfig;
    }

    try {
        const RunConfig cfg = resolve(cl);
        const RunResult result = run(cfg);
        emit(result.table, cfg);
        for (const auto& d : result.diagnostics) std::cerr << "ptstab: " << d << "\n";
        return result.numerical_failure ? kExitNumerical : kExitOk;
    } catch (const ConfigError& e) {
        std::cerr << "ptstab: configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const DomainError& e) {
        std::cerr << "ptstab: " << e.what() << "\n";
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << "ptstab: numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}

}  // namespace ptstab::cli
