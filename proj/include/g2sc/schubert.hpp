#pragma once

#include "g2sc/linalg.hpp"
#include "g2sc/lp.hpp"
#include "g2sc/mpoly.hpp"
#include "g2sc/weyl.hpp"

#include <array>
#include <string>
#include <vector>

namespace g2sc {

enum class OpKind { S, T, TTwisted };

/** A simple operator, or a word of them read as a composition (last letter acts first). */
struct DividedDiffOp {
    std::vector<OpKind> word;

    static DividedDiffOp simple(OpKind k) { return DividedDiffOp{{k}}; }
    /** Letters s, t; `twisted` selects the v-twisted t. Throws NonReducedWord. */
    static DividedDiffOp from_word(std::string_view w, bool twisted = false);
};

/** Explicit operators on the x-variables; every other variable is an inert constant. */
MPoly div_diff(OpKind k, const MPoly& f);
MPoly div_diff(const DividedDiffOp& op, const MPoly& f);
MPoly div_diff_word(std::string_view word, const MPoly& f, bool twisted = false);

/**
 * Root data for G2: simple roots a1 (short) and a2 (long), the pairing <a_j, a_i^vee>,
 * and x1, x2 written in root coordinates.
 */
struct RootDict {
    std::array<std::array<int, 2>, 2> pairing{{{2, -3}, {-1, 2}}};
    std::array<Rat, 2> x1{Rat(2), Rat(1)};
    std::array<Rat, 2> x2{Rat(1), Rat(1)};

    static const RootDict& g2() {
        static const RootDict d;
        return d;
    }
    /** Simple root a_i (i = 0 for s, 1 for t) as a linear form in x1, x2. */
    MPoly root(int i) const;
    /** Images of x1, x2 under the simple reflection s_i. */
    Assignment action(int i) const;
};

/** The generic (f - s_a f) / a for simple root i, from the root data alone. */
MPoly generic_div_diff(const RootDict& d, int i, const MPoly& f);

enum class FamilyKind { Chern, Graham, Point, ChernTwisted, EquivariantChern, EquivariantGraham };

std::string family_name(FamilyKind k);
FamilyKind family_from_name(std::string_view name);
const std::vector<FamilyKind>& all_families();

/** Top class P_{w0}. */
MPoly top_class(FamilyKind k);

/**
 * 1/2 (x1^3 - c1(F3) x1^2 + c2(F3) x1 - c3(F3)) (x1^2 + c1(F1) x1 + c2(F3) - c1(F1)^2)
 *   (x2 - x1 - c1(F2/F1)).
 */
MPoly top_class_from_chern(const MPoly& c1F3, const MPoly& c2F3, const MPoly& c3F3, const MPoly& c1F1,
                           const MPoly& c1F2F1);

/** Equivariant specialization y_i -> t_i. */
MPoly y_to_t(const MPoly& f);

struct SchubertFamily {
    FamilyKind kind = FamilyKind::Chern;
    std::array<MPoly, 12> table;

    const MPoly& operator[](const WeylElt& w) const { return table[w.index()]; }
    bool twisted() const { return kind == FamilyKind::ChernTwisted; }
};

/** P_w = d_{w0 w^-1} P_{w0}, using the canonical reduced words (or tststs for w0 when asked). */
SchubertFamily generate_family(FamilyKind k, bool alt_w0_word = false);

struct FamilyReport {
    bool ok = true;
    std::vector<std::string> failures;
    int checks = 0;
};

/** d_c P_w = P_{wc} when l(wc) < l(w), else 0; and deg P_w = l(w). */
FamilyReport check_family(const SchubertFamily& fam);

enum class TwistDirection { Forward, Inverse };

/** Forward: x_i -> x_i + v, y_i -> y_i - v. */
MPoly twist_substitution(const MPoly& f, TwistDirection dir = TwistDirection::Forward);

/** The twisted top class written out term by term. */
MPoly twisted_top_display();
/** The same polynomial as text in the parser grammar. */
const std::string& twisted_top_display_text();

/** xi_i from x; eta_i from (y1,y2) or (t1,t2). */
std::array<MPoly, 3> graham_xi();
std::array<MPoly, 3> graham_eta(Var first, Var second);
/** xi_i -> x_i and eta_i -> y_i-type substitution and its inverse, for round trips. */
Assignment graham_change();
Assignment graham_change_inverse();

struct IdentityReport {
    bool ok = false;
    MPoly lhs, rhs, difference;
};

IdentityReport graham_product_form_check();
IdentityReport graham_integrality_identity();

struct ImpossibilityReport {
    bool ok = false;
    bool chain_ok = false;
    std::vector<std::pair<std::string, MPoly>> chain;
    std::vector<std::string> names{"a", "b", "c", "d", "e"};
    // Distinct equations from d_t P = 0 and from d_s P = P_tst.
    LinSystem dt, ds;
    std::vector<std::string> dt_equations, ds_equations;
    // b - d = 1/2, a consequence of d_s P = P_tst, with its row multipliers.
    std::vector<Rat> ds_combination;
    std::vector<std::string> forced_zero;
    LinSystem combined;
    LinResult certificate;
    bool certificate_valid = false;
    LpFeasibility nonneg;
    LpResult farkas;
    bool farkas_valid = false;
    bool linear_alone_feasible = false;
};

ImpossibilityReport impossibility_certificate();

struct PositiveRewrite {
    bool feasible = false;
    std::vector<std::array<int, 3>> monomials;  // exponents of x1, x2, x3 = x1 - x2
    std::vector<Rat> coeffs;
    std::vector<Rat> farkas;
    bool verified = false;
};

PositiveRewrite positive_rewrite(const MPoly& f, int degree);
MPoly expand_positive(const PositiveRewrite& r);

}  // namespace g2sc
