#pragma once

// Low-degree real polynomial root machinery shared by the quartic solver and
// the cubic threshold equations.

#include <array>
#include <complex>
#include <span>
#include <vector>

namespace ptstab::poly {

using cplx = std::complex<double>;

/// Horner evaluation; coefficients in ascending powers.
cplx evaluate(std::span<const double> coeffs, cplx x);
cplx evaluate_derivative(std::span<const double> coeffs, cplx x);
double evaluate(std::span<const double> coeffs, double x);
double evaluate_derivative(std::span<const double> coeffs, double x);

/// Roots of x^2 + b x + c, cancellation-free.
std::array<cplx, 2> monic_quadratic(double b, double c);

/// Real roots of x^3 + a x^2 + b x + c, ascending, Newton-polished.
std::vector<double> monic_cubic_real(double a, double b, double c);

/// Real roots of the polynomial with ascending coefficients (degree <= 3 after
/// trimming zero leading terms), ascending. An identically zero polynomial
/// yields no roots.
std::vector<double> real_roots(std::span<const double> coeffs);

/// All complex roots by Aberth-Ehrlich simultaneous iteration (monic, ascending
/// coefficients, leading 1 implied by the last entry). Throws ConvergenceError
/// if the iteration cap is hit.
std::vector<cplx> aberth(std::span<const double> coeffs, int max_iter = 500);

/// Newton steps on a complex root, each kept only if it lowers |p|.
cplx polish(std::span<const double> coeffs, cplx x, int steps = 2);
double polish(std::span<const double> coeffs, double x, int steps = 2);

}  // namespace ptstab::poly
