#include "g2sc/schubert.hpp"

namespace g2sc {

namespace {

const MPoly& x1() {
    static const MPoly p = X(Var::x1);
    return p;
}
const MPoly& x2() {
    static const MPoly p = X(Var::x2);
    return p;
}

}  // namespace

DividedDiffOp DividedDiffOp::from_word(std::string_view w, bool twisted) {
    if (!is_reduced(w)) throw NonReducedWord("word '" + std::string(w) + "' is not reduced");
    DividedDiffOp op;
    for (char c : w) op.word.push_back(c == 's' ? OpKind::S : (twisted ? OpKind::TTwisted : OpKind::T));
    return op;
}

MPoly div_diff(OpKind k, const MPoly& f) {
    if (f.is_zero()) return f;
    switch (k) {
    case OpKind::S: {
        MPoly sf = substitute_some(f, {{Var::x1, x2()}, {Var::x2, x1()}});
        return exact_divide(f - sf, x1() - x2());
    }
    case OpKind::T: {
        MPoly tf = substitute_some(f, {{Var::x2, x1() - x2()}});
        return exact_divide(f - tf, 2 * x2() - x1());
    }
    case OpKind::TTwisted: {
        const MPoly v = X(Var::v);
        MPoly tf = substitute_some(f, {{Var::x2, x1() - x2() - v}});
        return exact_divide(f - tf, 2 * x2() - x1() + v);
    }
    }
    return MPoly();
}

MPoly div_diff(const DividedDiffOp& op, const MPoly& f) {
    MPoly g = f;
    for (auto it = op.word.rbegin(); it != op.word.rend(); ++it) g = div_diff(*it, g);
    return g;
}

MPoly div_diff_word(std::string_view word, const MPoly& f, bool twisted) {
    return div_diff(DividedDiffOp::from_word(word, twisted), f);
}

namespace {

// Linear form c1*a1 + c2*a2 rewritten in x1, x2 via the inverse dictionary.
MPoly from_root_coords(const RootDict& d, const std::array<Rat, 2>& c) {
    Matrix<Rat> m{{d.x1[0], d.x2[0]}, {d.x1[1], d.x2[1]}};
    auto inv = inverse(m);
    if (!inv) throw std::logic_error("root dictionary is singular");
    // Column k of m is x_k; so a_i = sum_k inv[k][i] x_k.
    MPoly out;
    for (int i = 0; i < 2; ++i) {
        MPoly ai = (*inv)[0][i] * x1() + (*inv)[1][i] * x2();
        out += c[i] * ai;
    }
    return out;
}

std::array<Rat, 2> reflect(const RootDict& d, int i, const std::array<Rat, 2>& lambda) {
    // s_i(l) = l - <l, a_i^vee> a_i, with <a_j, a_i^vee> = pairing[i][j].
    Rat coroot = lambda[0] * d.pairing[i][0] + lambda[1] * d.pairing[i][1];
    auto out = lambda;
    out[i] -= coroot;
    return out;
}

}  // namespace

MPoly RootDict::root(int i) const {
    std::array<Rat, 2> c{Rat(0), Rat(0)};
    c[i] = 1;
    return from_root_coords(*this, c);
}

Assignment RootDict::action(int i) const {
    return {{Var::x1, from_root_coords(*this, reflect(*this, i, x1))},
            {Var::x2, from_root_coords(*this, reflect(*this, i, x2))}};
}

MPoly generic_div_diff(const RootDict& d, int i, const MPoly& f) {
    MPoly sf = substitute_some(f, d.action(i));
    return exact_divide(f - sf, d.root(i));
}

}  // namespace g2sc
