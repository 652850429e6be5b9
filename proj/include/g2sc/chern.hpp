#pragma once

#include "g2sc/mpoly.hpp"

#include <vector>

namespace g2sc {

/** Total Chern class 1 + c_1 + ... + c_n of a rank-n bundle; c[0] is always 1. */
struct ChernVector {
    std::vector<MPoly> c{MPoly(1)};

    static ChernVector trivial(int rank);
    /** prod (1 + r) over the Chern roots. */
    static ChernVector from_roots(const std::vector<MPoly>& roots);
    /** Symbolic classes c_1..c_k followed by zeros up to the rank. */
    static ChernVector symbolic(const std::vector<Var>& classes, int rank);

    int rank() const { return static_cast<int>(c.size()) - 1; }
    const MPoly& operator[](int k) const;
    MPoly total() const;
    ChernVector operator*(const ChernVector& o) const;
    bool operator==(const ChernVector& o) const { return c == o.c; }
};

/** c_n(E (x) L) = sum_i c_i(E) l^(n-i). */
MPoly chern_tensor_line(const ChernVector& e, const MPoly& l);

/**
 * For 0 -> L -> E -> E' -> 0: c_k(E') = c_k(E) - l c_{k-1}(E'), truncated to rank(E) - 1.
 * `exact` reports whether the discarded class c_{rank E}(E') vanished.
 */
ChernVector chern_quotient(const ChernVector& e, const MPoly& l, bool* exact = nullptr);

}  // namespace g2sc
