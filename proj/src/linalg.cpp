#include "g2sc/linalg.hpp"

namespace g2sc {

LinResult solve_linear(const LinSystem& sys) {
    const std::size_t m = sys.a.size(), n = sys.num_vars;
    Matrix<Rat> aug = sys.a;
    for (std::size_t i = 0; i < m; ++i) {
        aug[i].resize(n);
        aug[i].push_back(sys.b[i]);
    }
    auto track = identity_matrix<Rat>(m);
    auto pivots = rref(aug, n, &track);

    LinResult res;
    for (std::size_t r = pivots.size(); r < m; ++r) {
        if (aug[r][n] != 0) {
            res.certificate = track[r];
            res.value = aug[r][n];
            return res;
        }
    }
    res.consistent = true;
    res.solution.assign(n, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) res.solution[pivots[r]] = aug[r][n];
    return res;
}

bool verify_inconsistency(const LinSystem& sys, const std::vector<Rat>& y) {
    if (y.size() != sys.a.size()) return false;
    for (std::size_t j = 0; j < sys.num_vars; ++j) {
        Rat s = 0;
        for (std::size_t i = 0; i < y.size(); ++i) s += y[i] * sys.a[i][j];
        if (s != 0) return false;
    }
    Rat rhs = 0;
    for (std::size_t i = 0; i < y.size(); ++i) rhs += y[i] * sys.b[i];
    return rhs != 0;
}

std::string format_equation(const std::vector<Rat>& row, const Rat& rhs, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t j = 0; j < row.size(); ++j) {
        const Rat& c = row[j];
        if (c == 0) continue;
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (mag != 1) out += to_string(mag) + "*";
        out += names[j];
    }
    if (out.empty()) out = "0";
    return out + " = " + to_string(rhs);
}

}  // namespace g2sc
