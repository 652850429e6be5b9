#include "g2sc/schubert.hpp"

#include "g2sc/parse.hpp"

namespace g2sc {

namespace {

MPoly V(Var x) { return X(x); }

}  // namespace

std::string family_name(FamilyKind k) {
    switch (k) {
    case FamilyKind::Chern: return "paper";
    case FamilyKind::Graham: return "graham";
    case FamilyKind::Point: return "point";
    case FamilyKind::ChernTwisted: return "twisted";
    case FamilyKind::EquivariantChern: return "eq-paper";
    case FamilyKind::EquivariantGraham: return "eq-graham";
    }
    return "?";
}

const std::vector<FamilyKind>& all_families() {
    static const std::vector<FamilyKind> list = {FamilyKind::Chern, FamilyKind::Graham,
                                                 FamilyKind::Point, FamilyKind::ChernTwisted,
                                                 FamilyKind::EquivariantChern, FamilyKind::EquivariantGraham};
    return list;
}

FamilyKind family_from_name(std::string_view name) {
    for (auto k : all_families())
        if (family_name(k) == name) return k;
    if (name == "chern") return FamilyKind::Chern;
    if (name == "eq-chern") return FamilyKind::EquivariantChern;
    throw std::invalid_argument("unknown family: " + std::string(name));
}

MPoly top_class_from_chern(const MPoly& c1F3, const MPoly& c2F3, const MPoly& c3F3, const MPoly& c1F1,
                           const MPoly& c1F2F1) {
    const MPoly x1 = V(Var::x1), x2 = V(Var::x2);
    MPoly a = x1.pow(3) - c1F3 * x1.pow(2) + c2F3 * x1 - c3F3;
    MPoly b = x1.pow(2) + c1F1 * x1 + c2F3 - c1F1 * c1F1;
    MPoly c = x2 - x1 - c1F2F1;
    return Rat(1, 2) * a * b * c;
}

MPoly y_to_t(const MPoly& f) { return substitute_some(f, {{Var::y1, V(Var::t1)}, {Var::y2, V(Var::t2)}}); }

MPoly top_class(FamilyKind k) {
    const MPoly x1 = V(Var::x1), x2 = V(Var::x2), y1 = V(Var::y1), y2 = V(Var::y2);
    switch (k) {
    case FamilyKind::Chern: {
        MPoly a = x1.pow(3) - 2 * x1.pow(2) * y1 + x1 * y1.pow(2) - x1 * y2.pow(2) + x1 * y1 * y2 -
                  y1.pow(2) * y2 + y1 * y2.pow(2);
        MPoly b = x1.pow(2) + x1 * y1 + y1 * y2 - y2.pow(2);
        return Rat(1, 2) * a * b * (x2 - x1 - y2);
    }
    case FamilyKind::Graham: {
        MPoly cubic = 2 * x1.pow(3) - 3 * x1.pow(2) * x2 - 3 * x1 * x2.pow(2) + 2 * x2.pow(3) - 2 * y1.pow(3) +
                      3 * y1.pow(2) * y2 + 3 * y1 * y2.pow(2) - 2 * y2.pow(3);
        return Rat(1, 54) * (2 * x1 - x2 - y1 + 2 * y2) * (2 * x1 - x2 - y1 - y2) * (x1 - 2 * x2 + y1 + y2) * cubic;
    }
    case FamilyKind::Point: return Rat(1, 2) * x1.pow(5) * x2;
    case FamilyKind::ChernTwisted: return twist_substitution(top_class(FamilyKind::Chern));
    case FamilyKind::EquivariantChern: return y_to_t(top_class(FamilyKind::Chern));
    case FamilyKind::EquivariantGraham: return y_to_t(top_class(FamilyKind::Graham));
    }
    return MPoly();
}

SchubertFamily generate_family(FamilyKind k, bool alt_w0_word) {
    SchubertFamily fam;
    fam.kind = k;
    const MPoly top = top_class(k);
    const WeylElt w0 = WeylElt::w0();
    for (const auto& w : all_elements()) {
        WeylElt u = mul(w0, inv(w));
        std::string word = (u == w0 && alt_w0_word) ? w0_alt_word() : u.word();
        fam.table[w.index()] = div_diff_word(word, top, fam.twisted());
    }
    return fam;
}

FamilyReport check_family(const SchubertFamily& fam) {
    FamilyReport rep;
    for (const auto& w : all_elements()) {
        const MPoly& p = fam[w];
        ++rep.checks;
        if (p.degree() != w.length() || !p.is_homogeneous()) {
            rep.ok = false;
            rep.failures.push_back("deg P_" + w.name() + " != " + std::to_string(w.length()));
        }
        for (char c : {'s', 't'}) {
            ++rep.checks;
            WeylElt wc = mul(w, WeylElt::from_word(std::string(1, c)));
            OpKind op = c == 's' ? OpKind::S : (fam.twisted() ? OpKind::TTwisted : OpKind::T);
            MPoly got = div_diff(op, p);
            MPoly want = wc.length() < w.length() ? fam[wc] : MPoly();
            if (got != want) {
                rep.ok = false;
                rep.failures.push_back(std::string("d_") + c + " P_" + w.name() + " mismatch");
            }
        }
    }
    return rep;
}

MPoly twist_substitution(const MPoly& f, TwistDirection dir) {
    const MPoly v = dir == TwistDirection::Forward ? V(Var::v) : -V(Var::v);
    return substitute_some(f, {{Var::x1, V(Var::x1) + v},
                               {Var::x2, V(Var::x2) + v},
                               {Var::y1, V(Var::y1) - v},
                               {Var::y2, V(Var::y2) - v}});
}

MPoly twisted_top_display() {
    const MPoly x1 = V(Var::x1), x2 = V(Var::x2), y1 = V(Var::y1), y2 = V(Var::y2), v = V(Var::v);
    MPoly a = x1.pow(3) - 2 * x1.pow(2) * y1 + x1 * y1.pow(2) - x1 * y2.pow(2) + x1 * y1 * y2 - y1.pow(2) * y2 +
              y1 * y2.pow(2) + 5 * x1.pow(2) * v - 7 * x1 * y1 * v + x1 * y2 * v + 2 * y1.pow(2) * v +
              y1 * y2 * v - 2 * y2.pow(2) * v + 8 * x1 * v.pow(2) - 6 * y1 * v.pow(2) + 2 * y2 * v.pow(2) +
              4 * v.pow(3);
    MPoly b = x1.pow(2) + x1 * y1 + y1 * y2 - y2.pow(2) + x1 * v + y2 * v;
    return Rat(1, 2) * a * b * (x2 - x1 - y2 + v);
}

const std::string& twisted_top_display_text() {
    static const std::string text =
        "1/2 (x1^3 - 2 x1^2 y1 + x1 y1^2 - x1 y2^2 + x1 y1 y2 - y1^2 y2 + y1 y2^2"
        " + 5 x1^2 v - 7 x1 y1 v + x1 y2 v + 2 y1^2 v + y1 y2 v - 2 y2^2 v"
        " + 8 x1 v^2 - 6 y1 v^2 + 2 y2 v^2 + 4 v^3)"
        " (x1^2 + x1 y1 + y1 y2 - y2^2 + x1 v + y2 v) (x2 - x1 - y2 + v)";
    return text;
}

std::array<MPoly, 3> graham_xi() {
    const MPoly x1 = V(Var::x1), x2 = V(Var::x2);
    const Rat third(1, 3);
    return {third * (2 * x1 - x2), third * (2 * x2 - x1), -third * (x1 + x2)};
}

std::array<MPoly, 3> graham_eta(Var first, Var second) {
    const MPoly a = V(first), b = V(second);
    const Rat third(1, 3);
    return {-third * (2 * a - b), -third * (2 * b - a), third * (a + b)};
}

Assignment graham_change() {
    auto xi = graham_xi();
    auto eta = graham_eta(Var::y1, Var::y2);
    return {{Var::x1, xi[0]}, {Var::x2, xi[1]}, {Var::y1, eta[0]}, {Var::y2, eta[1]}};
}

Assignment graham_change_inverse() {
    const MPoly x1 = V(Var::x1), x2 = V(Var::x2), y1 = V(Var::y1), y2 = V(Var::y2);
    return {{Var::x1, 2 * x1 + x2}, {Var::x2, x1 + 2 * x2}, {Var::y1, -(2 * y1 + y2)}, {Var::y2, -(y1 + 2 * y2)}};
}

IdentityReport graham_product_form_check() {
    auto xi = graham_xi();
    auto eta = graham_eta(Var::y1, Var::y2);
    IdentityReport rep;
    rep.lhs = Rat(-27, 2) * (xi[0] - eta[1]) * (xi[0] - eta[2]) * (xi[1] - eta[2]) *
              (xi[0] * xi[1] * xi[2] + eta[0] * eta[1] * eta[2]);
    rep.rhs = top_class(FamilyKind::Graham);
    rep.difference = rep.lhs - rep.rhs;
    rep.ok = rep.difference.is_zero();
    return rep;
}

IdentityReport graham_integrality_identity() {
    auto fam = generate_family(FamilyKind::EquivariantGraham);
    auto xi = graham_xi();
    auto eta = graham_eta(Var::t1, Var::t2);
    const MPoly t1 = V(Var::t1), t2 = V(Var::t2);
    IdentityReport rep;
    rep.lhs = Rat(1, 2) * (xi[0] * xi[1] * xi[2] + eta[0] * eta[1] * eta[2]);
    rep.rhs = Rat(-1, 27) * (3 * fam[WeylElt::from_word("tst")] + 3 * (t1 + t2) * fam[WeylElt::from_word("st")] +
                             (t1 + t2) * (2 * t1 - t2) * fam[WeylElt::from_word("t")]);
    rep.difference = rep.lhs - rep.rhs;
    rep.ok = rep.difference.is_zero();
    return rep;
}

}  // namespace g2sc
