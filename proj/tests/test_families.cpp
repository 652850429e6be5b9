#include "doctest.h"

#include "g2sc/parse.hpp"
#include "g2sc/presentation.hpp"
#include "g2sc/random.hpp"
#include "g2sc/schubert.hpp"

using namespace g2sc;

namespace {
const MPoly x1 = X(Var::x1), x2 = X(Var::x2), Y1 = X(Var::y1), Y2 = X(Var::y2);
}

TEST_CASE("top classes") {
    CHECK(top_class(FamilyKind::Point) == Rat(1, 2) * x1.pow(5) * x2);
    MPoly at0 = substitute_some(top_class(FamilyKind::Chern), {{Var::y1, MPoly()}, {Var::y2, MPoly()}});
    CHECK(at0 == Rat(1, 2) * x1.pow(5) * x2 - Rat(1, 2) * x1.pow(6));
    CHECK(top_class(FamilyKind::Graham).degree() == 6);
    CHECK(top_class(FamilyKind::EquivariantChern) == y_to_t(top_class(FamilyKind::Chern)));
}

TEST_CASE("Chern form of the top class with split data") {
    FlBase b = FlBase::split(Var::y1, Var::y2);
    CHECK(b.c1F3 == 2 * Y1);
    CHECK(top_class_from_chern(b.c1F3, b.c2F3, b.c3F3, b.c1F1, Y2) == top_class(FamilyKind::Chern));
    // At the point every Chern class vanishes.
    CHECK(top_class_from_chern(MPoly(), MPoly(), MPoly(), MPoly(), MPoly()) ==
          Rat(1, 2) * x1.pow(5) * (x2 - x1));
}

TEST_CASE("every family satisfies the operator action exhaustively") {
    for (auto k : all_families()) {
        CAPTURE(family_name(k));
        auto fam = generate_family(k);
        auto rep = check_family(fam);
        CHECK(rep.ok);
        CHECK(rep.checks >= 24);
        for (const auto& w : all_elements()) CHECK(fam[w].degree() == w.length());
        CHECK(generate_family(k, true).table == fam.table);
    }
    CHECK(generate_family(FamilyKind::Chern)[WeylElt::id()] == 1);
    CHECK(generate_family(FamilyKind::Graham)[WeylElt::id()] == 1);
}

TEST_CASE("point family entries") {
    auto fam = generate_family(FamilyKind::Point);
    CHECK(fam[WeylElt::s()] == x1);
    CHECK(fam[WeylElt::t()] == x1 + x2);
    CHECK(fam[WeylElt::from_word("ststs")] == Rat(1, 2) * x1.pow(5));
    CHECK(fam[WeylElt::id()] == 1);
}

TEST_CASE("family names") {
    for (auto k : all_families()) CHECK(family_from_name(family_name(k)) == k);
    CHECK_THROWS(family_from_name("nope"));
}

TEST_CASE("twisting") {
    CHECK(twist_substitution(top_class(FamilyKind::Chern)) == twisted_top_display());
    CHECK(parse_poly(twisted_top_display_text()) == twisted_top_display());
    CHECK(twist_substitution(x1 * Y1) == (x1 + X(Var::v)) * (Y1 - X(Var::v)));
    Rng rng(41);
    std::vector<Var> vars{Var::x1, Var::x2, Var::y1, Var::y2, Var::v};
    for (int k = 0; k < 20; ++k) {
        MPoly f = random_poly(rng, vars, 5);
        CHECK(twist_substitution(twist_substitution(f), TwistDirection::Inverse) == f);
    }
    auto tw = generate_family(FamilyKind::ChernTwisted);
    CHECK(tw.twisted());
    CHECK(tw[WeylElt::id()] == 1);
}

TEST_CASE("Graham identities") {
    auto a = graham_product_form_check();
    CHECK(a.ok);
    CHECK(a.difference.is_zero());
    auto b = graham_integrality_identity();
    CHECK(b.ok);
    // Both sides agree at random rational points too, since they agree as polynomials.
    Rng rng(42);
    for (int k = 0; k < 10; ++k) {
        Assignment pt{{Var::x1, random_rat(rng)}, {Var::x2, random_rat(rng)}, {Var::y1, random_rat(rng)},
                      {Var::y2, random_rat(rng)}};
        CHECK(substitute(a.lhs, pt) == substitute(a.rhs, pt));
    }
    auto xi = graham_xi();
    CHECK(xi[0] == Rat(1, 3) * (2 * x1 - x2));
}

TEST_CASE("impossibility certificate") {
    auto rep = impossibility_certificate();
    CHECK(rep.ok);
    CHECK(rep.chain_ok);
    CHECK(rep.certificate_valid);
    CHECK_FALSE(rep.certificate.consistent);
    CHECK(verify_inconsistency(rep.combined, rep.certificate.certificate));
    CHECK(rep.farkas_valid);
    auto has = [](const std::vector<std::string>& v, const std::string& s) {
        return std::find(v.begin(), v.end(), s) != v.end();
    };
    CHECK(has(rep.dt_equations, "d + 2*e = 0"));
    CHECK(has(rep.dt_equations, "b + c + d + e = 0"));
    CHECK(has(rep.ds_equations, "a - e = 0"));
    CHECK(has(rep.ds_equations, "b - d = 1/2"));
    // The chain as listed.
    auto find = [&](const std::string& w) {
        for (const auto& [n, p] : rep.chain)
            if (n == w) return p;
        return MPoly(-999);
    };
    CHECK(find("ts") == x1.pow(2));
    CHECK(find("tst") == Rat(1, 2) * (x1.pow(2) * x2 + x1 * x2.pow(2)));
}

TEST_CASE("positive rewriting") {
    auto sq = positive_rewrite(x1.pow(2), 2);
    CHECK(sq.feasible);
    CHECK(expand_positive(sq) == x1.pow(2));
    auto bad = positive_rewrite(x1 * x2 - x1.pow(2), 2);
    CHECK_FALSE(bad.feasible);
    CHECK(bad.verified);
    CHECK(bad.monomials.size() == 6);
    auto fam = generate_family(FamilyKind::Point);
    for (const auto& w : all_elements()) {
        auto r = positive_rewrite(fam[w], w.length());
        CHECK(r.feasible);
        CHECK(r.verified);
        for (const auto& c : r.coeffs) CHECK(c >= 0);
        CHECK(expand_positive(r) == fam[w]);
    }
}
