#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "q3fold/rational.hpp"

namespace q3fold {

/// Exact phase-1 simplex: decide whether A x = b has a solution x >= 0.
/// Returns the solution when feasible, otherwise a Farkas certificate y with
/// y^T A <= 0 componentwise and y^T b > 0. Bland's least-index rule with
/// exact rational pivots guarantees termination.
struct Phase1Result {
    std::optional<std::vector<Rat>> solution;
    std::optional<std::vector<Rat>> farkas;
};

inline Phase1Result exact_lp_feasible(const std::vector<std::vector<Rat>>& a_cols,
                                      const std::vector<Rat>& b) {
    const int rows = static_cast<int>(b.size());
    const int n = static_cast<int>(a_cols.size());
    for (const auto& col : a_cols) {
        if (static_cast<int>(col.size()) != rows) throw std::invalid_argument("exact_lp_feasible: column size");
    }
    // Tableau columns: n structural + rows artificial + rhs.
    const int cols = n + rows + 1;
    std::vector<std::vector<Rat>> t(static_cast<std::size_t>(rows + 1), std::vector<Rat>(static_cast<std::size_t>(cols), Rat(0)));
    std::vector<int> sign(static_cast<std::size_t>(rows), 1);
    for (int i = 0; i < rows; ++i) {
        sign[static_cast<std::size_t>(i)] = (b[static_cast<std::size_t>(i)] < 0) ? -1 : 1;
        for (int j = 0; j < n; ++j) {
            Rat v = a_cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sign[static_cast<std::size_t>(i)] < 0 ? -v : v;
        }
        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = Rat(1);
        Rat rhs = b[static_cast<std::size_t>(i)];
        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols - 1)] = sign[static_cast<std::size_t>(i)] < 0 ? -rhs : rhs;
    }
    // Objective: minimize sum of artificials. Reduced-cost row for the
    // all-artificial basis: z_j - c_j = sum_i a_ij - c_j.
    auto& z = t[static_cast<std::size_t>(rows)];
    for (int j = 0; j < cols; ++j) {
        Rat s(0);
        for (int i = 0; i < rows; ++i) s += t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        const Rat cost = (j >= n && j < n + rows) ? Rat(1) : Rat(0);
        z[static_cast<std::size_t>(j)] = s - cost;
    }

    std::vector<int> basis(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) basis[static_cast<std::size_t>(i)] = n + i;

    while (true) {
        // Bland: entering column = least index with positive reduced cost
        // (maximization of -objective phrased as: improve while z_j - c_j > 0).
        int enter = -1;
        for (int j = 0; j < cols - 1; ++j) {
            if (z[static_cast<std::size_t>(j)] > 0) { enter = j; break; }
        }
        if (enter < 0) break;
        int leave = -1;
        Rat best(0);
        for (int i = 0; i < rows; ++i) {
            const Rat& aij = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
            if (aij <= 0) continue;
            const Rat ratio = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols - 1)] / aij;
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) throw std::logic_error("exact_lp_feasible: phase-1 unbounded");
        // Pivot.
        auto& prow = t[static_cast<std::size_t>(leave)];
        const Rat piv = prow[static_cast<std::size_t>(enter)];
        for (auto& x : prow) x /= piv;
        for (int i = 0; i <= rows; ++i) {
            if (i == leave) continue;
            auto& row = t[static_cast<std::size_t>(i)];
            const Rat f = row[static_cast<std::size_t>(enter)];
            if (f.is_zero()) continue;
            for (int j = 0; j < cols; ++j) {
                row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
            }
        }
        basis[static_cast<std::size_t>(leave)] = enter;
    }

    // Optimal objective value = sum of basic artificial values.
    Rat value(0);
    for (int i = 0; i < rows; ++i) {
        if (basis[static_cast<std::size_t>(i)] >= n) value += t[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols - 1)];
    }
    Phase1Result out;
    if (value.is_zero()) {
        std::vector<Rat> x(static_cast<std::size_t>(n), Rat(0));
        for (int i = 0; i < rows; ++i) {
            if (basis[static_cast<std::size_t>(i)] < n) {
                x[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols - 1)];
            }
        }
        out.solution = std::move(x);
        return out;
    }
    // Farkas certificate from the duals: y_i = 1 - (reduced cost of the i-th
    // artificial), then undo the row sign flips.
    std::vector<Rat> y(static_cast<std::size_t>(rows), Rat(0));
    for (int i = 0; i < rows; ++i) {
        const Rat reduced = -z[static_cast<std::size_t>(n + i)];  // c_j - z_j with c_j = 1 folded in
        const Rat yi = Rat(1) - reduced;
        y[static_cast<std::size_t>(i)] = sign[static_cast<std::size_t>(i)] < 0 ? -yi : yi;
    }
    out.farkas = std::move(y);
    return out;
}

}  // namespace q3fold
