#pragma once

// Non-gyroscopic two-mode system with D = diag(d1, d2), K = [[k1, kappa], [kappa, k2]]
// in the coordinates X = d1 + d2 (damping trace) and Y = d1 - d2 (imbalance).

#include <Eigen/Core>
#include <vector>

#include "ptstab/core.hpp"

namespace ptstab::potential {

struct PotentialParams {
    double k1 = 1.0;
    double k2 = 1.0;
    double kappa = 0.0;
    double X = 0.0;
    double Y = 0.0;

    double delta1() const { return 0.5 * (X + Y); }
    double delta2() const { return 0.5 * (X - Y); }

    static PotentialParams from_dampings(double k1, double k2, double kappa, double d1, double d2) {
        return {k1, k2, kappa, d1 + d2, d1 - d2};
    }
};

SystemSpec to_system(const PotentialParams& p);

/// Balanced gain/loss system D = diag(-delta, delta), K = [[k, kappa], [kappa, k]].
SystemSpec balanced_system(double delta, double k, double kappa);

/// First-order form i x' = H x of the balanced system in the variables
/// x1 = z1 + i z2, x2 = z1 - i z2, x3 = x1', x4 = x2'. Satisfies P conj(H) = H P
/// with P = diag(1, -1, -1, 1); eig(H) = i * eig(pencil).
Eigen::Matrix4cd hamiltonian_form(double delta, double k, double kappa);

/// P = diag(1, -1, -1, 1).
Eigen::Matrix4cd parity();

/// Exceptional points bounding the marginal interval |Y| < y_minus on the
/// locus k1 = k2, X = 0; flutter for y_minus < |Y| < y_plus, divergence beyond.
struct EPPair {
    double y_minus = 0.0;
    double y_plus = 0.0;
    /// Double eigenvalue (upper half-plane) at Y = y_minus.
    cplx double_eigenvalue_at_minus{};
};

/// Throws DomainError when k2 - |kappa| <= 0.
EPPair ep_interval(double k2, double kappa);

enum class StableSide { Below = -1, None = 0, Above = 1 };

struct BoundaryRoot {
    double k1 = 0.0;
    /// Which side in k1 is asymptotically stable.
    StableSide stable_side = StableSide::None;
    /// |h4| after polishing against the minor evaluated from the assembled system.
    double residual = 0.0;
};

/// Coefficients (c0, c1, c2) of the h4 minor as a quadratic in k1:
///   d1 d2 k1^2 + d1 d2 (X d2 - 2 k2) k1 + d1 d2 k2 (k2 + X d1) + X^2 kappa^2.
std::array<double, 3> boundary_quadratic(double X, double Y, double k2, double kappa);

/// Values of k1 on the boundary of asymptotic stability at (X, Y), ascending.
/// Zeros of h4 where h1, h2, h3 are not all positive are not stability
/// boundaries and are omitted. Requires X > 0.
std::vector<BoundaryRoot> boundary_k1(double X, double Y, double k2, double kappa);

enum class Branch { Plus, Minus };

/// Linear (small-X) approximation of the boundary:
///   k1 = k2 + X/(4Y) [Y^2 +- sqrt((Y^2 - y_minus^2)(Y^2 - y_plus^2))].
/// Throws DomainError for Y = 0 or inside the flutter band (negative radicand).
double conoid_linear(double X, double Y, double k2, double kappa, Branch branch);

struct ConoidPoint {
    double k1 = 0.0;
    double X = 0.0;
    double Z = 0.0;
};

/// Canonical Pluecker conoid (k2 + rho cos phi, rho sin phi / sqrt k2, 2 kappa sin phi / sqrt k2).
ConoidPoint plucker_canonical(double k2, double kappa, double rho, double phi);

enum class Side { Upper, Lower };

/// Onset of instability in Y, moving from Y = 0 towards the given side, at fixed
/// (k1, X). Throws DomainError if Y = 0 is not asymptotically stable and
/// ConvergenceError if no onset is found before |Y| = y_max.
double critical_y(double k1, double X, double k2, double kappa, Side side, double y_max,
                  std::size_t scan_points = 512, double tol = 1e-13);

struct RayOptions {
    double rho0 = 0.01;
    int levels = 13;  // rho_n = rho0 * 2^-n, n = 0 .. levels-1
    std::size_t scan_points = 512;
    double bisect_tol = 1e-13;
    double monotone_tol = 1e-9;
};

struct RayLimit {
    double y_limit = 0.0;
    double error_estimate = 0.0;
    std::vector<double> rho;
    std::vector<double> y_critical;
};

/// Limit of the stability threshold in Y as (k1, X) -> (k2, 0) along the ray
/// X = slope (k1 - k2), X > 0. The threshold is computed at rho_n with X = rho_n,
/// k1 = k2 + rho_n / slope, and extrapolated to rho = 0 from the last four points.
/// Throws ConvergenceError if the sequence is not monotone within tolerance.
RayLimit ray_limit(double slope, Side side, double k2, double kappa, const RayOptions& opts = {});

}  // namespace ptstab::potential
