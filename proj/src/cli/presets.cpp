#include "ptstab/cli/presets.hpp"

#include <algorithm>

namespace ptstab::cli {

// Every preset is one row of this table; runners only read it through resolve().
const std::vector<Preset>& presets() {
    static const std::vector<Preset> table{
        {"fig1a", Subcommand::Eigensweep, "potential",
         {{"k1", 1.0}, {"k2", 1.0}, {"kappa", 0.4}, {"X", 0.0}},
         {{"Y", -4.0, 4.0, 801}},
         "balanced gain/loss on the PT locus: imaginary loops between exceptional points"},
        {"fig1b", Subcommand::Eigensweep, "potential",
         {{"k1", 1.2}, {"k2", 1.0}, {"kappa", 0.4}, {"X", 0.2}},
         {{"Y", -4.0, 4.0, 801}},
         "off the PT locus: the loops unfold into two non-intersecting curves"},
        {"fig3a", Subcommand::Eigensweep, "gyro",
         {{"k1", 1.0}, {"kappa", 0.0}, {"omega", 0.3}, {"delta1", 0.0}, {"balanced", 1.0}},
         {{"delta1", 0.0, 2.5, 501}},
         "gyroscopic PT case, delta2 = -delta1 (imaginary parts)"},
        {"fig3b", Subcommand::Eigensweep, "gyro",
         {{"k1", 1.0}, {"kappa", 0.0}, {"omega", 0.3}, {"delta1", 0.0}, {"balanced", 1.0}},
         {{"delta1", 0.0, 2.5, 501}},
         "gyroscopic PT case, delta2 = -delta1 (real parts)"},
        {"fig3c", Subcommand::Eigensweep, "gyro",
         {{"k1", 1.0}, {"kappa", 0.1}, {"omega", 0.3}, {"delta2", -0.3}, {"balanced", 0.0}},
         {{"delta1", 0.0, 1.5, 301}},
         "detuned gain/loss and potential (imaginary parts)"},
        {"fig3d", Subcommand::Eigensweep, "gyro",
         {{"k1", 1.0}, {"kappa", 0.1}, {"omega", 0.3}, {"delta2", -0.3}, {"balanced", 0.0}},
         {{"delta1", 0.0, 1.5, 301}},
         "detuned gain/loss and potential (real parts)"},
        {"fig2", Subcommand::Boundary, "potential-k1",
         {{"k2", 1.0}, {"kappa", 0.4}},
         {{"X", 0.01, 1.0, 100}, {"Y", -4.0, 4.0, 161}},
         "stability boundary k1(X, Y) of the potential system"},
        {"fig4", Subcommand::Boundary, "gyro-Y",
         {{"k1", 1.0}, {"omega", 0.3}},
         {{"kappa", -0.2, 0.2, 41}, {"X", 0.0, 0.5, 26}, {"Y", -2.0, 2.0, 64}},
         "stability boundary Y(kappa, X) of the gyroscopic system"},
        {"fig5a", Subcommand::Boundary, "nls-amplitude",
         {{"alpha", 1.0}, {"gamma", 1.0}, {"k", 1.0}, {"sigma", 1.0}},
         {{"a", 0.0, 0.3, 31}, {"c", 0.0, 3.0, 31}},
         "modulational-instability threshold amplitude over (a, c)"},
        {"fig5b", Subcommand::Boundary, "nls-amplitude",
         {{"alpha", 1.0}, {"gamma", 1.0}, {"k", 1.0}, {"sigma", 1.0}},
         {{"a", 0.0, 0.1, 2}, {"c", 0.0, 3.0, 61}},
         "threshold amplitude against c at a = 0 and a = 0.1"},
        {"fig5c", Subcommand::Boundary, "nls-c",
         {{"alpha", 1.0}, {"gamma", 1.0}, {"k", 1.0}, {"sigma", 1.0}},
         {{"u0", 0.65710678118654757, 0.75710678118654757, 3}, {"a", 0.0, 0.3, 31}, {"c", 0.0, 3.0, 301}},
         "critical c against a at |u0| = |u0|_i - 0.05, |u0|_i, |u0|_i + 0.05"},
        {"paper-defaults", Subcommand::Thresholds, "defaults",
         {{"k2", 1.0}, {"kappa", 0.4}, {"slope", 1.0}, {"alpha", 1.0}, {"gamma", 1.0}, {"sigma", 1.0}},
         {},
         "exceptional point, ray limits and ideal NLS threshold"},
    };
    return table;
}

const Preset* find_preset(const std::string& name) {
    const auto& t = presets();
    const auto it = std::find_if(t.begin(), t.end(), [&](const Preset& p) { return p.name == name; });
    return it == t.end() ? nullptr : &*it;
}

}  // namespace ptstab::cli
