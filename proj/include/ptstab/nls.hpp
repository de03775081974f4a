#pragma once

// Modulational instability of a plane wave A0 exp(i k x - i omega t) of the
// dissipatively perturbed NLS  i A_t + (alpha - i a) A_xx + (gamma + i c)|A|^2 A = 0,
// restricted to the first sideband harmonic of wavenumber sigma.

#include <array>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "ptstab/core.hpp"

namespace ptstab::nls {

struct NLSParams {
    double alpha = 1.0;  // dispersion
    double gamma = 1.0;  // nonlinearity
    double a = 0.0;      // dispersive loss
    double c = 0.0;      // nonlinear loss
    double k = 1.0;      // carrier wavenumber
    double sigma = 1.0;  // perturbation wavenumber
    std::array<double, 2> u0{0.0, 0.0};

    double u0_norm_sq() const { return u0[0] * u0[0] + u0[1] * u0[1]; }
    double u0_norm() const;
    /// Carrier frequency alpha k^2 - gamma |u0|^2.
    double omega() const { return alpha * k * k - gamma * u0_norm_sq(); }

    /// Same phase direction (or (1, 0) if u0 = 0), given amplitude.
    NLSParams with_amplitude(double norm) const;
    NLSParams with_losses(double a_, double c_) const;

    /// Throws DomainError unless alpha, gamma, sigma > 0 and every field is finite.
    void validate() const;
};

/// First-order matrix M of x' = M x, x = (v1, v2, w1, w2):
///   M = [[A, B], [-B, A]],  A = -a s^2 I - alpha s^2 J + 2 gamma J U - 2 c U,
///                             B = -2 alpha k s I + 2 k a s J,   U = u0 u0^T.
Eigen::Matrix4d assemble_linearization(const NLSParams& p);

bool hurwitz_stable(const NLSParams& p);

/// Closed-form spectrum of the lossless system
///   +- i 2 alpha k sigma +- i sigma sqrt(2 alpha gamma (|u0|_i^2 - |u0|^2)).
/// Throws DomainError if a or c is non-zero.
std::array<cplx, 4> ideal_spectrum(const NLSParams& p);

/// |u0|_i = sqrt(alpha sigma^2 / (2 gamma)).
double ideal_threshold(const NLSParams& p);

/// Equivalent gyroscopic system of the lossless problem:
///   Omega = alpha s^2 - gamma |u0|^2,  D = 2 gamma (U J - J U),
///   K = (4 alpha^2 k^2 s^2 + gamma^2 |u0|^4) I.
SystemSpec as_gyro_system(const NLSParams& p);

/// Ascending coefficients in S = |u0|^2 of the lossy threshold cubic at (a, c).
std::array<double, 4> threshold_polynomial(const NLSParams& tmpl, double a, double c);

/// |P(S)| / max_i |C_i S^i| at S = amplitude^2.
double threshold_residual(const NLSParams& tmpl, double a, double c, double amplitude);

struct ThresholdRoot {
    double amplitude = 0.0;
    /// The h4 minor of the assembled matrix changes sign across amplitude +- 1e-6.
    /// False flags a disagreement between the threshold cubic and the matrix.
    bool confirmed = false;
    double minor_below = 0.0;
    double minor_above = 0.0;
};

/// Positive amplitudes on the modulational-instability boundary at losses (a, c),
/// ascending. Empty when the cubic has no positive root. Requires (a, c) != (0, 0).
std::vector<ThresholdRoot> dissipative_threshold(const NLSParams& tmpl, double a, double c);

struct SlopePair {
    double plus = 0.0;
    double minus = 0.0;
};

/// Slopes of the two boundary lines c = slope * a near a = c = 0:
///   (s/|u0|^2) [-s +- k (2|u0|_i^2 - |u0|^2) / (|u0|_i sqrt(|u0|_i^2 - |u0|^2))].
/// Requires 0 < |u0| < |u0|_i.
SlopePair boundary_linear_slope(const NLSParams& p);

/// Small-loss threshold amplitude |u0|_i - (k^2 s^2 / (2 |u0|_i^3)) (a/c)^2.
/// Requires c > 0 and 0 <= a/c <= max_ratio.
double whitney_amplitude(const NLSParams& tmpl, double a, double c, double max_ratio = 0.2);

struct ThresholdCurve {
    int branch = 0;
    std::vector<std::array<double, 3>> samples;  // (a, c, |u0|_critical)
};

/// Threshold roots over every (a, c) pair, grouped into curves by root index
/// (branch 0 = smallest amplitude). Pairs with (a, c) = (0, 0) are skipped.
std::vector<ThresholdCurve> threshold_curves(const NLSParams& tmpl, std::span<const double> a_values,
                                             std::span<const double> c_values);

}  // namespace ptstab::nls
