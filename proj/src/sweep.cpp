#include "ptstab/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ptstab/error.hpp"

namespace ptstab {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("linspace: non-finite bound");
    if (n == 0) throw DomainError("linspace: empty grid");
    if (n == 1) {
        if (lo != hi) throw DomainError("linspace: a one-point grid needs min == max");
        return {lo};
    }
    std::vector<double> v(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) v[i] = lo + step * static_cast<double>(i);
    v.back() = hi;
    return v;
}

std::array<std::size_t, 4> match_permutation(const std::array<cplx, 4>& predicted, const std::array<cplx, 4>& next) {
    struct Candidate {
        double dist;
        std::size_t slot, src;
        bool crosses;
    };
    std::vector<Candidate> cands;
    cands.reserve(16);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const double ti = 1e-6 * std::max(1.0, std::abs(predicted[i]));
            const double tj = 1e-6 * std::max(1.0, std::abs(next[j]));
            const bool crosses = (predicted[i].imag() > ti && next[j].imag() < -tj) ||
                                 (predicted[i].imag() < -ti && next[j].imag() > tj);
            cands.push_back({std::abs(predicted[i] - next[j]), i, j, crosses});
        }
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.dist < b.dist; });

    std::array<std::size_t, 4> perm{};
    std::array<bool, 4> slot_used{}, src_used{};
    for (int pass = 0; pass < 2; ++pass)
        for (const Candidate& c : cands) {
            if (slot_used[c.slot] || src_used[c.src]) continue;
            if (pass == 0 && c.crosses) continue;
            perm[c.slot] = c.src;
            slot_used[c.slot] = src_used[c.src] = true;
        }
    return perm;
}

std::array<cplx, 4> match_roots(const std::array<cplx, 4>& predicted, const std::array<cplx, 4>& next) {
    const auto perm = match_permutation(predicted, next);
    std::array<cplx, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) out[i] = next[perm[i]];
    return out;
}

std::vector<SweepRow> eigen_sweep(const QuarticFamily& family, double lo, double hi, std::size_t n, double eps) {
    const auto grid = linspace(lo, hi, n);
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());

    std::array<cplx, 4> prev{}, prev2{};
    int history = 0;
    for (double t : grid) {
        SweepRow row;
        row.parameter = t;
        try {
            const Spectrum s = roots(family(t), eps);
            row.stability = s.classification;
            if (history == 0) {
                row.roots = s.roots;
                row.multiple = s.multiple;
            } else {
                std::array<cplx, 4> predicted = prev;
                if (history >= 2)
                    for (std::size_t i = 0; i < 4; ++i) predicted[i] = 2.0 * prev[i] - prev2[i];
                const auto perm = match_permutation(predicted, s.roots);
                for (std::size_t i = 0; i < 4; ++i) {
                    row.roots[i] = s.roots[perm[i]];
                    row.multiple[i] = s.multiple[perm[i]];
                }
            }
            prev2 = prev;
            prev = row.roots;
            ++history;
        } catch (const Error& e) {
            row.failed = true;
            row.failure = e.what();
            const double nan = std::numeric_limits<double>::quiet_NaN();
            row.roots.fill(cplx{nan, nan});
            history = std::min(history, 1);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Transition bisect_transition(const std::function<bool(double)>& pred, double lo, double hi, double tol) {
    const bool at_lo = pred(lo);
    if (at_lo == pred(hi)) throw DomainError("bisect_transition: interval does not bracket a transition");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (pred(mid) == at_lo)
            lo = mid;
        else
            hi = mid;
    }
    return {0.5 * (lo + hi), at_lo};
}

std::vector<Transition> find_transitions(const std::function<bool(double)>& pred, double lo, double hi,
                                         std::size_t scan_points, double tol) {
    if (scan_points < 2) throw DomainError("find_transitions: need at least two scan points");
    const auto grid = linspace(lo, hi, scan_points);
    std::vector<Transition> out;
    bool prev = pred(grid.front());
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const bool cur = pred(grid[i]);
        if (cur != prev) out.push_back(bisect_transition(pred, grid[i - 1], grid[i], tol));
        prev = cur;
    }
    return out;
}

}  // namespace ptstab
