#pragma once

// Parameter sweeps over one-parameter families of quartics: branch-continuous
// eigencurves and scan+bisection location of stability transitions.

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ptstab/core.hpp"

namespace ptstab {

/// n evenly spaced values on [lo, hi]. n == 1 is accepted only when lo == hi.
std::vector<double> linspace(double lo, double hi, std::size_t n);

struct SweepRow {
    double parameter = 0.0;
    std::array<cplx, 4> roots{};
    std::array<bool, 4> multiple{};
    Stability stability = Stability::Degenerate;
    bool failed = false;
    std::string failure;
};

using QuarticFamily = std::function<Quartic(double)>;

/// Reorder `next` so that result[i] continues predicted[i]; match_permutation
/// returns the source index in `next` for each slot.
/// Greedy nearest pairing; pairings that would send a root across the real
/// axis to the opposite conjugate are skipped while an alternative exists.
std::array<std::size_t, 4> match_permutation(const std::array<cplx, 4>& predicted, const std::array<cplx, 4>& next);
std::array<cplx, 4> match_roots(const std::array<cplx, 4>& predicted, const std::array<cplx, 4>& next);

/// Spectra along the family. Rows are branch-continuous; root-solver failures
/// produce rows with failed = true and the sweep continues.
std::vector<SweepRow> eigen_sweep(const QuarticFamily& family, double lo, double hi, std::size_t n,
                                  double eps = kDefaultEps);

struct Transition {
    double value = 0.0;
    /// True when the predicate holds just below `value`.
    bool holds_below = false;
};

/// Sign changes of `pred` on [lo, hi]: a coarse scan on scan_points samples,
/// then bisection of each bracketing interval to width <= tol.
std::vector<Transition> find_transitions(const std::function<bool(double)>& pred, double lo, double hi,
                                         std::size_t scan_points = 64, double tol = 1e-8);

/// A point on a stability boundary in a named three-parameter space: the two
/// grid coordinates of its column and the critical value of the scanned axis.
struct BoundarySample {
    double axis1 = 0.0;
    double axis2 = 0.0;
    double critical = 0.0;
    /// Index of the crossing within its column, in increasing critical value.
    int branch = 0;
    /// True when the stable side lies above the critical value.
    bool stable_above = false;
};

struct BoundaryColumn {
    double axis1 = 0.0;
    double axis2 = 0.0;
    std::vector<BoundarySample> samples;  // empty when no transition exists
};

/// Bisection on a single bracket [lo, hi] where pred(lo) != pred(hi).
Transition bisect_transition(const std::function<bool(double)>& pred, double lo, double hi, double tol);

}  // namespace ptstab
