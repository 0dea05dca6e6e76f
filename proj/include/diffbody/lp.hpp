#pragma once

#include <vector>

#include "diffbody/linalg.hpp"

namespace diffbody {

// Dense exact-rational two-phase simplex with Bland's rule. Problem sizes in
// this project are tiny (tens of variables), so no factorization or sparsity.

enum class LpStatus { Optimal, Infeasible, Unbounded };

enum class Rel { LE, EQ, GE };

struct LpRow {
    Vec a;
    Rel rel;
    Rat b;
};

struct LpResult {
    LpStatus status;
    Rat objective;  // meaningful for Optimal
    Vec x;          // primal solution, original variables only
};

// minimize c.x  subject to  rows, x >= 0
LpResult lp_solve_min(const std::vector<LpRow>& rows, const Vec& c);

}  // namespace diffbody
