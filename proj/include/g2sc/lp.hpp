#pragma once

#include "g2sc/linalg.hpp"

namespace g2sc {

/** Feasibility of A x = b, x >= 0. */
struct LpFeasibility {
    Matrix<Rat> a;
    std::vector<Rat> b;
    std::size_t num_vars = 0;
};

/**
 * Exact answer: a feasible point, or a Farkas certificate y with y^T A <= 0 componentwise
 * and y^T b > 0.
 */
struct LpResult {
    bool feasible = false;
    std::vector<Rat> point;
    std::vector<Rat> farkas;
};

LpResult lp_feasible(const LpFeasibility& prob);

bool verify_point(const LpFeasibility& prob, const std::vector<Rat>& x);
bool verify_farkas(const LpFeasibility& prob, const std::vector<Rat>& y);

}  // namespace g2sc
