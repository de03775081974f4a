#include "ptstab/gyro.hpp"

#include "ptstab/error.hpp"
#include "ptstab/routh_hurwitz.hpp"

namespace ptstab::gyro {

SystemSpec to_system(const GyroParams& g) {
    return SystemSpec(Mat2::diag(g.delta1, g.delta2), Mat2::diag(g.k1, g.k1 + g.kappa), g.omega);
}

std::vector<SweepRow> eigencurve_sweep(const GyroParams& tmpl, DampingRule rule, double lo, double hi, std::size_t n,
                                       double eps) {
    auto family = [tmpl, rule](double d1) {
        GyroParams g = tmpl;
        g.delta1 = d1;
        if (rule == DampingRule::Balanced) g.delta2 = -d1;
        return char_poly(to_system(g));
    };
    return eigen_sweep(family, lo, hi, n, eps);
}

bool stable_or_marginal(const SystemSpec& sys, double eps) {
    const Quartic q = char_poly(sys);
    if (hurwitz(q).stable) return true;
    return roots(q, eps).classification == Stability::MarginallyStable;
}

std::vector<BoundaryColumn> boundary_surface(double k1, double omega, const SurfaceGrid& grid) {
    if (grid.kappa.empty() || grid.X.empty()) throw DomainError("boundary_surface: empty grid");
    if (!(grid.y_max > grid.y_min)) throw DomainError("boundary_surface: empty Y range");

    std::vector<BoundaryColumn> out;
    out.reserve(grid.kappa.size() * grid.X.size());
    for (double kappa : grid.kappa)
        for (double X : grid.X) {
            auto pred = [&](double Y) { return stable_or_marginal(to_system(GyroParams::from_xy(k1, kappa, X, Y, omega))); };
            BoundaryColumn col{kappa, X, {}};
            int branch = 0;
            for (const Transition& t : find_transitions(pred, grid.y_min, grid.y_max, grid.scan_points, grid.tol))
                col.samples.push_back({kappa, X, t.value, branch++, !t.holds_below});
            out.push_back(std::move(col));
        }
    return out;
}

}  // namespace ptstab::gyro
