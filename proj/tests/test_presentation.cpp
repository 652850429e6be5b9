#include "doctest.h"

#include "g2sc/chern.hpp"
#include "g2sc/presentation.hpp"
#include "g2sc/random.hpp"

using namespace g2sc;

namespace {
const MPoly x1 = X(Var::x1), x2 = X(Var::x2), al = X(Var::alpha), h = X(Var::h), f = X(Var::f);
const MPoly Y1 = X(Var::y1), Y2 = X(Var::y2);
}  // namespace

TEST_CASE("point presentations") {
    auto ip = fl_integral_point();
    CHECK(reduce(ip, x1.pow(3)) == 2 * al);
    CHECK(reduce(ip, x2.pow(2)) == x1 * x2 - x1.pow(2));
    CHECK(reduce(ip, al.pow(2)).is_zero());
    CHECK(ip.rank() == 12);
    auto hp = fl_half_point();
    CHECK(reduce(hp, x1.pow(6)).is_zero());
    auto nf = normal_form(hp, Rat(1, 2) * x1.pow(5) * x2);
    for (std::size_t i = 0; i + 1 < nf.coeffs.size(); ++i) CHECK(nf.coeffs[i].is_zero());
    CHECK(nf.coeffs.back() == Rat(1, 2));
    CHECK(to_string(hp.basis.back()) == "x1^5*x2");
}

TEST_CASE("integral reduction refuses division by 2") {
    auto ip = fl_integral_point();
    CHECK_THROWS_AS(normal_form(ip, Rat(1, 2) * x1), NonIntegralReduction);
    CHECK_NOTHROW(normal_form(ip, x1.pow(5) * x2));
    CHECK_THROWS_AS(normal_form(ip, X(Var::h)), std::invalid_argument);
}

TEST_CASE("integral bundle basis and rules") {
    auto p = fl_integral_bundle(FlBase::symbolic());
    std::vector<std::string> names;
    for (const auto& b : p.basis) names.push_back(to_string(b));
    CHECK(names == std::vector<std::string>{"1", "x1", "x1^2", "alpha", "x1*alpha", "x1^2*alpha", "x2", "x1*x2",
                                            "x1^2*x2", "x2*alpha", "x1*x2*alpha", "x1^2*x2*alpha"});
    CHECK(reduce(p, x1.pow(3)) ==
          2 * al + X(Var::c1F) * x1.pow(2) - X(Var::c2F) * x1 + X(Var::c3F));
    CHECK(reduce(p, al.pow(2)) == (X(Var::c3Q) + X(Var::c1Q) * x1.pow(2)) * al);
}

TEST_CASE("every presentation verifies") {
    for (const auto& name : presentation_names()) {
        std::string n = name == "quadric-fiber:N" ? "quadric-fiber:4" : name;
        CAPTURE(n);
        auto p = presentation_by_name(n);
        auto rep = verify_presentation(p);
        CHECK(rep.ok);
        CHECK(rep.basis_matches);
        CHECK(rep.closure);
        CHECK(rep.associative);
        CHECK(rep.generators);
    }
    CHECK_THROWS(presentation_by_name("nope"));
}

TEST_CASE("verification notices a broken rule") {
    auto p = fl_half_point();
    p.rules[0].rhs = x1 * x2;  // x2^2 -> x1 x2 is not the stated relation
    auto rep = verify_presentation(p);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.generators);
}

TEST_CASE("normal form is idempotent and linear") {
    Rng rng(51);
    auto p = fl_half_bundle();
    std::vector<Var> vars{Var::x1, Var::x2, Var::y1, Var::y2};
    for (int k = 0; k < 30; ++k) {
        MPoly a = random_poly(rng, vars, 8), b = random_poly(rng, vars, 8);
        MPoly ra = reduce(p, a);
        CHECK(reduce(p, ra) == ra);
        CHECK(normal_form(p, a - b) == normal_form(p, to_poly(p, normal_form(p, a)) - b));
    }
}

TEST_CASE("S3 Chern classes") {
    CHECK(chern_s3_consistency(fl_integral_bundle(FlBase::symbolic()), FlBase::symbolic()));
    auto split = FlBase::split(Var::y1, Var::y2);
    CHECK(chern_s3_consistency(fl_integral_bundle(split, "split"), split));
    auto hp = fl_half_point();
    CHECK(normal_form(hp, -(x1 + x2 + (x1 - x2))) == normal_form(hp, -2 * x1));
}

TEST_CASE("Chern vectors") {
    auto e = ChernVector::from_roots({X(Var::a)});
    CHECK(chern_quotient(e, X(Var::a)).c == ChernVector::trivial(0).c);
    auto two = ChernVector::symbolic({Var::c1F, Var::c2F}, 2);
    CHECK(chern_tensor_line(two, X(Var::h)) == X(Var::c2F) + X(Var::c1F) * h + h.pow(2));
    CHECK(chern_tensor_line(ChernVector::symbolic({Var::c1F}, 1), h) == X(Var::c1F) + h);
    Rng rng(52);
    std::vector<Var> vars{Var::y1, Var::y2};
    for (int k = 0; k < 20; ++k) {
        MPoly l = random_poly(rng, vars, 1, 2);
        ChernVector c = ChernVector::from_roots({l, random_poly(rng, vars, 1, 2), random_poly(rng, vars, 1, 2)});
        bool exact = false;
        auto q = chern_quotient(c, l, &exact);
        CHECK(exact);
        CHECK((q * ChernVector::from_roots({l})) == c);
    }
    auto split = FlBase::split(Var::y1, Var::y2);
    // c(V/F3) = (1 - Y1)(1 - Y2)(1 - Y1 + Y2) up to degree 3.
    auto q = ChernVector::from_roots({-Y1, -Y2, Y2 - Y1});
    CHECK(split.c1Q == q[1]);
    CHECK(split.c3Q == q[3]);
}

TEST_CASE("quadric bundle") {
    auto q = quadric_bundle_split3();
    CHECK(q.rank() == 6);
    auto fiber = specialize(q, {{Var::y1, MPoly()}, {Var::y2, MPoly()}}, "fiber", {});
    CHECK(same_rules(fiber, quadric_fiber(3)));
    auto f3 = quadric_fiber(3);
    CHECK(reduce(f3, h.pow(3)) == 2 * f);
    CHECK(reduce(f3, f.pow(2)).is_zero());
    CHECK(quadric_eg_residue().is_zero());
    for (int n = 1; n <= 6; ++n) {
        auto p = quadric_fiber(n);
        CHECK(p.rank() == static_cast<std::size_t>(2 * n));
        CHECK(reduce(p, h.pow(static_cast<unsigned>(n))) == 2 * f);
        CHECK(reduce(p, f.pow(2)).is_zero());
        CHECK(verify_presentation(p).ok);
    }
}

TEST_CASE("Schubert expansion and duality") {
    auto hp = fl_half_point();
    auto pt = generate_family(FamilyKind::Point);
    auto c = schubert_expand(x1, pt, hp);
    CHECK(c[WeylElt::s().index()] == 1);
    c = schubert_expand(x1 + x2, pt, hp);
    CHECK(c[WeylElt::t().index()] == 1);
    for (const auto& w : all_elements()) {
        auto e = schubert_expand(pt[w], pt, hp);
        for (const auto& u : all_elements()) CHECK(e[u.index()] == MPoly(u == w ? 1 : 0));
    }
    auto m = duality_pairing(pt, hp);
    CHECK(m[WeylElt::id().index()][WeylElt::w0().index()] == 1);
    auto s = WeylElt::s(), t = WeylElt::t();
    CHECK(m[s.index()][mul(WeylElt::w0(), s).index()] == 1);
    CHECK(m[s.index()][mul(WeylElt::w0(), t).index()] == 0);
    CHECK_THROWS_AS(schubert_expand(x1, pt, quadric_fiber(3)), NotInSpan);
}

TEST_CASE("Chern and Graham families agree as classes") {
    auto hb = fl_half_bundle();
    auto p = generate_family(FamilyKind::Chern), g = generate_family(FamilyKind::Graham);
    for (const auto& w : all_elements()) CHECK(normal_form(hb, p[w] - g[w]).is_zero());
    auto eq = equivariant_half();
    auto ep = generate_family(FamilyKind::EquivariantChern);
    auto ei = equivariant();
    CHECK(normal_form(ei, ep[WeylElt::from_word("sts")]) == normal_form(ei, al));
    for (const auto& b : eq.basis) CHECK_NOTHROW(schubert_expand(MPoly::term(b, Rat(1)), ep, eq));
}

TEST_CASE("integral classes embed in the half ring") {
    auto base = FlBase::split(Var::y1, Var::y2);
    auto hb = fl_half_bundle();
    CHECK(normal_form(hb, alpha_to_half(al, base)) ==
          normal_form(hb, Rat(1, 2) * (x1.pow(3) - base.c1F3 * x1.pow(2) + base.c2F3 * x1 - base.c3F3)));
    // alpha^2 relation holds in the half ring.
    MPoly rel = al.pow(2) - (base.c3Q + base.c1Q * x1.pow(2)) * al;
    CHECK(normal_form(hb, alpha_to_half(rel, base)).is_zero());
}
