#pragma once

// Gyroscopic two-mode system  z'' + (D + 2 Omega J) z' + (K + (Omega J)^2) z = 0
// with D = diag(d1, d2), K = diag(k1, k1 + kappa).

#include <cstddef>
#include <vector>

#include "ptstab/core.hpp"
#include "ptstab/sweep.hpp"

namespace ptstab::gyro {

struct GyroParams {
    double k1 = 1.0;
    double kappa = 0.0;
    double delta1 = 0.0;
    double delta2 = 0.0;
    double omega = 0.0;

    double X() const { return delta1 + delta2; }
    double Y() const { return delta1 - delta2; }
    /// Balanced gain/loss with equal stiffnesses.
    bool on_pt_locus() const { return delta2 == -delta1 && kappa == 0.0; }

    static GyroParams from_xy(double k1, double kappa, double X, double Y, double omega) {
        return {k1, kappa, 0.5 * (X + Y), 0.5 * (X - Y), omega};
    }
};

SystemSpec to_system(const GyroParams& g);

enum class DampingRule {
    Independent,  // delta2 taken from the template
    Balanced,     // delta2 = -delta1
};

/// Branch-continuous spectra as delta1 runs over [lo, hi].
std::vector<SweepRow> eigencurve_sweep(const GyroParams& tmpl, DampingRule rule, double lo, double hi, std::size_t n,
                                       double eps = kDefaultEps);

/// Hurwitz-stable, or marginally stable (used on tr D = 0 columns, where the
/// Hurwitz conditions cannot hold).
bool stable_or_marginal(const SystemSpec& sys, double eps = kDefaultEps);

struct SurfaceGrid {
    std::vector<double> kappa;
    std::vector<double> X;
    double y_min = -2.0;
    double y_max = 2.0;
    std::size_t scan_points = 64;
    double tol = 1e-8;
};

/// Stability boundary in (kappa, X, Y): for every (kappa, X) column, the Y values
/// where stable_or_marginal flips. Columns are ordered kappa-major.
std::vector<BoundaryColumn> boundary_surface(double k1, double omega, const SurfaceGrid& grid);

}  // namespace ptstab::gyro
