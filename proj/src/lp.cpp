#include "diffbody/lp.hpp"

#include <cstddef>

#include "diffbody/errors.hpp"

namespace diffbody {

namespace {

// Tableau rows 0..m-1: constraints, last column is the rhs.
// Row m: reduced costs of the current objective, entry [m][last] = -objective value.
struct Tableau {
    std::size_t m = 0;
    std::size_t cols = 0;  // total columns including rhs
    std::vector<Vec> t;
    std::vector<std::size_t> basis;  // basis[i] = column basic in row i

    Rat& at(std::size_t i, std::size_t j) { return t[i][j]; }
};

void pivot(Tableau& tab, std::size_t row, std::size_t col) {
    const Rat p = tab.at(row, col);
    for (std::size_t j = 0; j < tab.cols; ++j) tab.at(row, j) /= p;
    for (std::size_t i = 0; i <= tab.m; ++i) {
        if (i == row) continue;
        const Rat f = tab.at(i, col);
        if (f == 0) continue;
        for (std::size_t j = 0; j < tab.cols; ++j) tab.at(i, j) -= f * tab.at(row, j);
    }
    tab.basis[row] = col;
}

// Bland: entering = lowest-index column with negative reduced cost; leaving =
// lowest-index basic variable among the minimum-ratio rows.
LpStatus run_simplex(Tableau& tab, std::size_t usable_cols) {
    const std::size_t rhs = tab.cols - 1;
    for (;;) {
        std::size_t enter = usable_cols;
        for (std::size_t j = 0; j < usable_cols; ++j) {
            if (tab.at(tab.m, j) < 0) {
                enter = j;
                break;
            }
        }
        if (enter == usable_cols) return LpStatus::Optimal;

        std::size_t leave = tab.m;
        Rat best;
        for (std::size_t i = 0; i < tab.m; ++i) {
            if (tab.at(i, enter) <= 0) continue;
            Rat ratio = tab.at(i, rhs) / tab.at(i, enter);
            if (leave == tab.m || ratio < best ||
                (ratio == best && tab.basis[i] < tab.basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == tab.m) return LpStatus::Unbounded;
        pivot(tab, leave, enter);
    }
}

}  // namespace

LpResult lp_solve_min(const std::vector<LpRow>& rows, const Vec& c) {
    const std::size_t m = rows.size();
    const std::size_t n = c.size();

    // Column layout: [original n][slack/surplus][artificial][rhs]
    std::size_t n_slack = 0;
    for (const LpRow& r : rows)
        if (r.rel != Rel::EQ) ++n_slack;

    // Artificials are added per row unless an LE row (after sign normalization)
    // provides a ready-made basic slack.
    std::vector<int> slack_col(m, -1);
    std::vector<int> art_col(m, -1);
    std::size_t col = n;
    for (std::size_t i = 0; i < m; ++i)
        if (rows[i].rel != Rel::EQ) slack_col[i] = static_cast<int>(col++);
    const std::size_t first_art = col;

    // Normalize rhs >= 0 and decide which rows need an artificial.
    std::vector<Rat> sign(m, 1);
    std::vector<bool> needs_art(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        Rel rel = rows[i].rel;
        if (rows[i].b < 0) {
            sign[i] = -1;
            if (rel == Rel::LE) rel = Rel::GE;
            else if (rel == Rel::GE) rel = Rel::LE;
        }
        // after normalization: LE rows have a +1 slack usable as basis
        needs_art[i] = !(rel == Rel::LE && slack_col[i] >= 0);
        if (needs_art[i]) art_col[i] = static_cast<int>(col++);
    }
    const std::size_t total = col;  // variables
    Tableau tab;
    tab.m = m;
    tab.cols = total + 1;
    tab.t.assign(m + 1, Vec(tab.cols, Rat(0)));
    tab.basis.assign(m, 0);

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = sign[i] * rows[i].a[j];
        tab.at(i, total) = sign[i] * rows[i].b;
        if (slack_col[i] >= 0) {
            const Rat s = rows[i].rel == Rel::LE ? Rat(1) : Rat(-1);
            tab.at(i, static_cast<std::size_t>(slack_col[i])) = sign[i] * s;
        }
        if (needs_art[i]) {
            tab.at(i, static_cast<std::size_t>(art_col[i])) = 1;
            tab.basis[i] = static_cast<std::size_t>(art_col[i]);
        } else {
            tab.basis[i] = static_cast<std::size_t>(slack_col[i]);
        }
    }

    // Phase 1: minimize the sum of artificials.
    bool any_art = false;
    for (std::size_t i = 0; i < m; ++i) any_art = any_art || needs_art[i];
    if (any_art) {
        for (std::size_t j = 0; j < tab.cols; ++j) {
            Rat s = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (needs_art[i]) s += tab.at(i, j);
            if (j >= first_art && j < total) s -= 1;  // cost 1 on artificials
            tab.at(m, j) = -s;
        }
        LpStatus st = run_simplex(tab, total);
        if (st == LpStatus::Unbounded)
            throw Error("phase-1 simplex unbounded");  // impossible: objective >= 0
        if (tab.at(m, total) != 0) return {LpStatus::Infeasible, Rat(0), {}};
        // Pivot surviving artificials out of the basis where possible.
        for (std::size_t i = 0; i < m; ++i) {
            if (tab.basis[i] < first_art) continue;
            std::size_t j = 0;
            while (j < first_art && tab.at(i, j) == 0) ++j;
            if (j < first_art) pivot(tab, i, j);
            // else the row is identically zero over real variables (redundant);
            // the artificial stays basic at value zero and never re-enters.
        }
    }

    // Phase 2: original objective, artificial columns frozen out.
    for (std::size_t j = 0; j < tab.cols; ++j) tab.at(m, j) = j < n ? c[j] : Rat(0);
    for (std::size_t i = 0; i < m; ++i) {
        const Rat f = tab.at(m, tab.basis[i]);
        if (f == 0) continue;
        for (std::size_t j = 0; j < tab.cols; ++j) tab.at(m, j) -= f * tab.at(i, j);
    }
    LpStatus st = run_simplex(tab, first_art);
    if (st == LpStatus::Unbounded) return {LpStatus::Unbounded, Rat(0), {}};

    Vec x(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (tab.basis[i] < n) x[tab.basis[i]] = tab.at(i, total);
    Rat obj = -tab.at(m, total);
    return {LpStatus::Optimal, obj, x};
}

}  // namespace diffbody
