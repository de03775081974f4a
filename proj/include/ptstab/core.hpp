#pragma once

#include <array>
#include <complex>
#include <string_view>
#include <utility>

#include <Eigen/Core>

namespace ptstab {

using cplx = std::complex<double>;

/// Default half-width of the band around Re(lambda) = 0 treated as neutral.
inline constexpr double kDefaultEps = 1e-8;
/// Relative distance below which two roots are flagged as a cluster.
inline constexpr double kClusterTol = 1e-5;

/// Real 2x2 matrix, row-major entries.
struct Mat2 {
    double m11 = 0.0, m12 = 0.0, m21 = 0.0, m22 = 0.0;

    static constexpr Mat2 symmetric(double a, double offdiag, double d) { return {a, offdiag, offdiag, d}; }
    static constexpr Mat2 diag(double a, double d) { return {a, 0.0, 0.0, d}; }
    static constexpr Mat2 identity() { return diag(1.0, 1.0); }
    /// Gyroscopic generator: j11 = j22 = 0, j21 = -j12 = 1.
    static constexpr Mat2 gyroscopic() { return {0.0, -1.0, 1.0, 0.0}; }

    constexpr double trace() const { return m11 + m22; }
    constexpr double det() const { return m11 * m22 - m12 * m21; }
    constexpr bool is_symmetric() const { return m12 == m21; }

    /// Eigenvalues of a symmetric matrix, ascending.
    std::pair<double, double> symmetric_eigenvalues() const;

    friend constexpr Mat2 operator+(const Mat2& a, const Mat2& b) {
        return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
    }
    friend constexpr Mat2 operator-(const Mat2& a, const Mat2& b) {
        return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
    }
    friend constexpr Mat2 operator*(double s, const Mat2& a) { return {s * a.m11, s * a.m12, s * a.m21, s * a.m22}; }
    friend constexpr Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
                a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
    }
    friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

/// Two-degree-of-freedom system  z'' + (D + 2 Omega J) z' + (K + (Omega J)^2) z = 0.
class SystemSpec {
public:
    /// Throws DomainError if D or K is not exactly symmetric or any entry is not finite.
    SystemSpec(const Mat2& damping, const Mat2& stiffness, double omega = 0.0);

    const Mat2& damping() const { return damping_; }
    const Mat2& stiffness() const { return stiffness_; }
    double omega() const { return omega_; }

private:
    Mat2 damping_;
    Mat2 stiffness_;
    double omega_;
};

/// Monic quartic  lambda^4 + c3 lambda^3 + c2 lambda^2 + c1 lambda + c0.
class Quartic {
public:
    /// Throws DomainError on NaN/Inf coefficients.
    Quartic(double c0, double c1, double c2, double c3);

    double c0() const { return c_[0]; }
    double c1() const { return c_[1]; }
    double c2() const { return c_[2]; }
    double c3() const { return c_[3]; }
    /// Ascending-power coefficients c0..c3, 1.
    std::array<double, 5> coefficients() const { return {c_[0], c_[1], c_[2], c_[3], 1.0}; }

    cplx operator()(cplx lambda) const;
    cplx derivative(cplx lambda) const;
    /// sum_i |c_i| |lambda|^i, the natural rounding scale of an evaluation at lambda.
    double magnitude_scale(double abs_lambda) const;

private:
    std::array<double, 4> c_;
};

enum class Stability { AsymptoticallyStable, MarginallyStable, Flutter, Divergence, Degenerate };

std::string_view to_string(Stability s);

struct Spectrum {
    std::array<cplx, 4> roots{};
    Stability classification = Stability::Degenerate;
    /// multiple[i] is set when roots[i] lies within kClusterTol of another root.
    std::array<bool, 4> multiple{};

    bool any_multiple() const { return multiple[0] || multiple[1] || multiple[2] || multiple[3]; }
};

Quartic char_poly(const SystemSpec& sys);

/// Characteristic polynomial det(lambda I - M) by Faddeev-LeVerrier.
Quartic char_poly(const Eigen::Matrix4d& m);

/// State (z, z') first-order matrix [[0, I], [-(K - Omega^2 I), -(D + 2 Omega J)]].
Eigen::Matrix4d first_order_matrix(const SystemSpec& sys);

/// Four roots of q, conjugate-paired, with cluster flags and the classification at eps.
/// Throws ConvergenceError if neither the closed-form nor the iterative path meets the residual gate.
Spectrum roots(const Quartic& q, double eps = kDefaultEps);

Stability classify(const std::array<cplx, 4>& roots, const std::array<bool, 4>& multiple, double eps = kDefaultEps);
inline Stability classify(const Spectrum& s, double eps = kDefaultEps) { return classify(s.roots, s.multiple, eps); }

/// Multiplicity flags for a root set at the given relative cluster tolerance.
std::array<bool, 4> cluster_flags(const std::array<cplx, 4>& roots, double tol = kClusterTol);

inline Spectrum spectrum(const SystemSpec& sys, double eps = kDefaultEps) { return roots(char_poly(sys), eps); }

}  // namespace ptstab
