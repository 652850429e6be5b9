#include "g2sc/lp.hpp"

namespace g2sc {

// Phase-1 simplex on A x + s = b (rows sign-normalized so b >= 0), minimizing the sum of
// artificials s. Bland's rule: smallest eligible entering index, smallest basic index on ties.
LpResult lp_feasible(const LpFeasibility& prob) {
    const std::size_t m = prob.a.size(), n = prob.num_vars;
    const std::size_t cols = n + m;
    std::vector<int> sign(m, 1);
    Matrix<Rat> t = zero_matrix<Rat>(m, cols + 1);
    for (std::size_t i = 0; i < m; ++i) {
        sign[i] = prob.b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = prob.a[i][j] * sign[i];
        t[i][n + i] = 1;
        t[i][cols] = prob.b[i] * sign[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    auto cost = [&](std::size_t j) { return j >= n ? Rat(1) : Rat(0); };

    while (true) {
        // Reduced cost r_j = c_j - sum_i c_{B(i)} t[i][j].
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            Rat r = cost(j);
            for (std::size_t i = 0; i < m; ++i) r -= cost(basis[i]) * t[i][j];
            if (r < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;
        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][cols] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        // Phase-1 objective is bounded below by 0, so a leaving row always exists.
        Rat inv = Rat(1) / t[leave][enter];
        for (auto& x : t[leave]) x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    Rat objective = 0;
    for (std::size_t i = 0; i < m; ++i) objective += cost(basis[i]) * t[i][cols];

    LpResult res;
    if (objective == 0) {
        res.feasible = true;
        res.point.assign(n, Rat(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) res.point[basis[i]] = t[i][cols];
        return res;
    }
    // Dual y' = c_B^T B^{-1}; the artificial columns of the tableau hold B^{-1}.
    res.farkas.assign(m, Rat(0));
    for (std::size_t k = 0; k < m; ++k) {
        Rat y = 0;
        for (std::size_t i = 0; i < m; ++i) y += cost(basis[i]) * t[i][n + k];
        res.farkas[k] = y * sign[k];
    }
    return res;
}

bool verify_point(const LpFeasibility& prob, const std::vector<Rat>& x) {
    if (x.size() != prob.num_vars) return false;
    for (const auto& xi : x)
        if (xi < 0) return false;
    for (std::size_t i = 0; i < prob.a.size(); ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < prob.num_vars; ++j) s += prob.a[i][j] * x[j];
        if (s != prob.b[i]) return false;
    }
    return true;
}

bool verify_farkas(const LpFeasibility& prob, const std::vector<Rat>& y) {
    if (y.size() != prob.a.size()) return false;
    for (std::size_t j = 0; j < prob.num_vars; ++j) {
        Rat s = 0;
        for (std::size_t i = 0; i < y.size(); ++i) s += y[i] * prob.a[i][j];
        if (s > 0) return false;
    }
    Rat rhs = 0;
    for (std::size_t i = 0; i < y.size(); ++i) rhs += y[i] * prob.b[i];
    return rhs > 0;
}

}  // namespace g2sc
