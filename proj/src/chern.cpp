#include "g2sc/chern.hpp"

#include <stdexcept>

namespace g2sc {

ChernVector ChernVector::trivial(int rank) {
    ChernVector v;
    v.c.assign(rank + 1, MPoly());
    v.c[0] = MPoly(1);
    return v;
}

ChernVector ChernVector::from_roots(const std::vector<MPoly>& roots) {
    ChernVector v = trivial(static_cast<int>(roots.size()));
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t k = i + 1; k >= 1; --k) v.c[k] += roots[i] * v.c[k - 1];
    }
    return v;
}

ChernVector ChernVector::symbolic(const std::vector<Var>& classes, int rank) {
    ChernVector v = trivial(rank);
    for (std::size_t k = 0; k < classes.size() && static_cast<int>(k) < rank; ++k) v.c[k + 1] = X(classes[k]);
    return v;
}

const MPoly& ChernVector::operator[](int k) const {
    static const MPoly zero;
    if (k < 0 || k > rank()) return zero;
    return c[k];
}

MPoly ChernVector::total() const {
    MPoly s;
    for (const auto& x : c) s += x;
    return s;
}

ChernVector ChernVector::operator*(const ChernVector& o) const {
    ChernVector r = trivial(rank() + o.rank());
    r.c[0] = MPoly();
    for (int i = 0; i <= rank(); ++i)
        for (int j = 0; j <= o.rank(); ++j) r.c[i + j] += c[i] * o.c[j];
    return r;
}

MPoly chern_tensor_line(const ChernVector& e, const MPoly& l) {
    const int n = e.rank();
    MPoly out;
    for (int i = 0; i <= n; ++i) out += e[i] * l.pow(static_cast<unsigned>(n - i));
    return out;
}

ChernVector chern_quotient(const ChernVector& e, const MPoly& l, bool* exact) {
    const int n = e.rank();
    if (n < 1) throw std::invalid_argument("chern_quotient needs rank at least 1");
    ChernVector q = ChernVector::trivial(n - 1);
    MPoly prev(1);
    for (int k = 1; k <= n; ++k) {
        MPoly ck = e[k] - l * prev;
        if (k <= n - 1) q.c[k] = ck;
        else if (exact) *exact = ck.is_zero();
        prev = ck;
    }
    return q;
}

}  // namespace g2sc
