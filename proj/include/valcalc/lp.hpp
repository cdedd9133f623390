#ifndef VALCALC_LP_HPP
#define VALCALC_LP_HPP

#include <vector>

#include "linalg.hpp"

namespace valcalc {

// Exact feasibility of {x >= 0 : A x = b} by phase-1 simplex with Bland's
// rule. Sized for the small systems that arise in cone and hull queries.
inline bool lp_feasible_eq(const Mat& a, const Vec& b) {
    const std::size_t m = a.size();
    if (m == 0) return true;
    const std::size_t n = a[0].size();
    VALCALC_CHECK(b.size() == m, "lp_feasible_eq: size mismatch");

    // Tableau rows: [x_1..x_n | art_1..art_m | rhs], basis starts artificial.
    Mat t(m, zero_vec(n + m + 1));
    for (std::size_t i = 0; i < m; ++i) {
        int s = b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = s * a[i][j];
        t[i][n + i] = 1;
        t[i][n + m] = s * b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Reduced cost row for minimizing the sum of artificials.
    Vec cost = zero_vec(n + m + 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n + m; ++j) cost[j] -= t[i][j];
    for (std::size_t i = 0; i < m; ++i) cost[n + i] = 0;

    for (;;) {
        // Bland: entering = lowest-index column with negative reduced cost.
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == n + m) break;
        // Leaving: min ratio, ties by lowest basis index.
        std::size_t leave = m;
        Scalar best_ratio(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Scalar ratio = t[i][n + m] / t[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) break; // unbounded below cannot happen in phase 1
        Scalar piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Scalar f = t[i][enter];
            for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
        }
        {
            Scalar f = cost[enter];
            if (f != 0)
                for (std::size_t j = 0; j <= n + m; ++j) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    // Feasible iff every artificial contributes nothing.
    Scalar obj(0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) obj += t[i][n + m];
    return obj == 0;
}

// Is `target` a nonnegative combination of `gens` plus an arbitrary
// combination of `lin`?
inline bool in_cone_span(const Mat& gens, const Mat& lin, const Vec& target) {
    const std::size_t n = target.size();
    // Columns: one per generator, two per lineality vector (+/-).
    Mat a(n, Vec{});
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& g : gens) a[i].push_back(g[i]);
        for (const auto& l : lin) {
            a[i].push_back(l[i]);
            a[i].push_back(-l[i]);
        }
    }
    if (a[0].empty()) return is_zero(target);
    return lp_feasible_eq(a, target);
}

} // namespace valcalc

#endif
