#include "doctest.h"

#include "g2sc/octonion.hpp"
#include "g2sc/random.hpp"

using namespace g2sc;

namespace {

const AlgebraCtx& ctx() {
    static const AlgebraCtx c = standard_forms(BasisKind::FBasis);
    return c;
}

Oct<Rat> f(int i) { return Oct<Rat>::basis(i); }

}  // namespace

TEST_CASE("standard coefficient data") {
    const auto& g = ctx().gamma;
    CHECK(g.value(1, 4, 7) == 1);
    CHECK(g.value(2, 3, 7) == -1);
    CHECK(g.value(1, 5, 6) == -1);
    CHECK(g.value(7, 4, 1) == -1);
    CHECK(g.value(1, 1, 4) == 0);
    CHECK(ctx().beta.at(4, 4) == -2);
    CHECK(ctx().beta.at(1, 7) == -1);
    CHECK(ctx().beta.is_symmetric());
    auto e = standard_forms(BasisKind::EBasis);
    CHECK(e.gamma.value(1, 2, 3) == 2);
    CHECK(e.beta.at(3, 3) == 2);
}

TEST_CASE("f2 f3 = f1 and the unit") {
    CHECK(oct_mul(ctx(), f(2), f(3)) == f(1));
    CHECK(oct_mul(ctx(), f(3), f(2)) == Rat(-1) * f(1));
    for (int i = 1; i <= 7; ++i) CHECK(oct_mul(ctx(), Oct<Rat>::unit(), f(i)) == f(i));
}

TEST_CASE("norm is multiplicative on 200 random pairs") {
    Rng rng(21);
    for (int k = 0; k < 200; ++k) {
        auto u = random_oct(rng), v = random_oct(rng);
        CHECK(norm(ctx(), oct_mul(ctx(), u, v)) == norm(ctx(), u) * norm(ctx(), v));
    }
}

TEST_CASE("the same holds in the e-basis and symbolically") {
    auto e = standard_forms(BasisKind::EBasis);
    Rng rng(22);
    for (int k = 0; k < 50; ++k) {
        auto u = random_oct(rng), v = random_oct(rng);
        CHECK(norm(e, oct_mul(e, u, v)) == norm(e, u) * norm(e, v));
    }
    // Symbolic u in f1, f4, f7 against a random v.
    Oct<MPoly> u;
    u.v[0] = X(Var::a);
    u.v[3] = X(Var::b);
    u.v[6] = X(Var::c);
    u.s = X(Var::d);
    Oct<MPoly> w{MPoly(1), lift<MPoly>(random_vec(rng))};
    CHECK(norm(ctx(), oct_mul(ctx(), u, w)) == norm(ctx(), u) * norm(ctx(), w));
}

TEST_CASE("conjugation and norm values") {
    auto e = Oct<Rat>::unit();
    CHECK(conjugate(ctx(), e) == e);
    CHECK(norm(ctx(), e) == 1);
    CHECK(conjugate(ctx(), f(3)) == Rat(-1) * f(3));
    CHECK(norm(ctx(), f(1)) == 0);
    CHECK(norm(ctx(), f(1) + f(7)) == -1);
}

TEST_CASE("dagger") {
    auto phi = zero_vec<Rat>();
    phi[6] = -1;
    CHECK(dagger(ctx(), phi) == basis_vec<Rat>(1));
    auto f4 = zero_vec<Rat>();
    f4[3] = 1;
    CHECK(dagger(ctx(), f4)[3] == Rat(-1, 2));
    CHECK(dagger(ctx(), zero_vec<Rat>()) == zero_vec<Rat>());
    Rng rng(23);
    for (int k = 0; k < 20; ++k) {
        auto x = random_vec(rng), u = random_vec(rng);
        Rat phi_u = 0;
        for (int i = 0; i < 7; ++i) phi_u += x[i] * u[i];
        CHECK(ctx().beta.eval(dagger(ctx(), x), u) == phi_u);
        CHECK(dagger(ctx(), dagger_inv(ctx(), u)) == u);
    }
    BilForm zero;
    CHECK_THROWS_AS(make_ctx(ctx().gamma, zero, BasisKind::FBasis), SingularForm);
}

TEST_CASE("basis change pushes the e-forms to the f-forms") {
    auto p = f_basis_in_e();
    auto tri = transport_tri(standard_gamma(BasisKind::EBasis), p);
    const auto& fg = ctx().gamma.coeffs;
    CHECK(tri.size() == fg.size());
    for (const auto& [t, c] : fg) CHECK(tri.at(t) == GaussRat(c));
    auto bil = transport_bil(standard_beta(BasisKind::EBasis), p);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) CHECK(bil[i][j] == GaussRat(ctx().beta.m[i][j]));
    auto col = f_to_e(basis_vec<GaussRat>(1));
    CHECK(col[0] == GaussRat(Rat(1, 2)));
    CHECK(col[1] == GaussRat(Rat(0), Rat(1, 2)));
}

TEST_CASE("compatibility on samples") {
    auto one = check_compatible(standard_gamma(BasisKind::FBasis), standard_beta(BasisKind::FBasis),
                                {{basis_vec<Rat>(1), basis_vec<Rat>(7)}});
    CHECK(one.ok);
    CHECK(one.lhs == -1);
    auto u = basis_vec<Rat>(2) + basis_vec<Rat>(4);
    CHECK(check_compatible(ctx().gamma, ctx().beta, {{u, u}}).ok);
    CHECK(spanning_sample().size() == 28);
    CHECK(check_compatible(ctx().gamma, ctx().beta, spanning_pairs()).ok);
    auto bad = ctx().beta;
    bad.m[3][3] = -1;
    auto r = check_compatible(ctx().gamma, bad, spanning_pairs());
    CHECK_FALSE(r.ok);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.lhs != r.rhs);
}

TEST_CASE("Bryant form") {
    auto rep = bryant_form(ctx().gamma);
    CHECK(rep.form == ctx().beta);
    CHECK(rep.nondegenerate);
    CHECK(rep.wedge[0][6] == 3);
    CHECK(rep.wedge[3][3] == 6);
    auto zero = bryant_form(TriForm{});
    CHECK_FALSE(zero.nondegenerate);
    CHECK(zero.form == BilForm{});
    // The e-basis form is 2 delta up to the same normalization.
    auto e = bryant_form(standard_gamma(BasisKind::EBasis));
    CHECK(e.nondegenerate);
}

TEST_CASE("isotropic kernels and fixed points") {
    auto k1 = isotropic_kernel(ctx(), basis_vec<Rat>(1));
    CHECK(k1.size() == 3);
    for (const auto& v : k1) CHECK((v[3] == 0 && v[4] == 0 && v[5] == 0 && v[6] == 0));
    auto k7 = isotropic_kernel(ctx(), basis_vec<Rat>(7));
    for (const auto& v : k7) CHECK((v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0));
    auto u = basis_vec<Rat>(1) + basis_vec<Rat>(2);
    auto ku = isotropic_kernel(ctx(), u);
    CHECK(ku.size() == 3);
    for (const auto& v : ku) CHECK(oct_mul(ctx(), Oct<Rat>::imag(u), Oct<Rat>::imag(v)).is_zero());
    CHECK_THROWS_AS(isotropic_kernel(ctx(), basis_vec<Rat>(4)), NotIsotropic);
    auto pts = fixed_points();
    CHECK(pts.size() == 12);
    CHECK(std::find(pts.begin(), pts.end(), std::pair(1, 2)) != pts.end());
    CHECK(std::find(pts.begin(), pts.end(), std::pair(7, 6)) != pts.end());
}

TEST_CASE("cross lambda") {
    auto b = [](int i) { return basis_vec<Rat>(i); };
    CHECK(cross_lambda(ctx(), b(1), b(2), b(3)) == 1);
    CHECK(cross_lambda(ctx(), b(1), b(3), b(2)) == -1);
    auto v = scale(Rat(2), b(2)) + scale(Rat(5), b(3)) + scale(Rat(-1), b(1));
    CHECK(cross_lambda(ctx(), b(1), v, b(3)) == 2);
}

TEST_CASE("torus weights") {
    auto rep = torus_invariance_check(ctx());
    CHECK(rep.ok);
    CHECK(rep.triples == 5);
    auto w = torus_weights();
    CHECK(w[0] == std::array<int, 2>{1, 0});
    CHECK(w[3] == std::array<int, 2>{0, 0});
}

TEST_CASE("big cell") {
    auto [r1, r2] = big_cell_rows<MPoly>(X(Var::a), X(Var::b), X(Var::c), X(Var::d), X(Var::e), X(Var::g));
    CHECK(oct_mul(ctx(), Oct<MPoly>::imag(r1), Oct<MPoly>::imag(r2)).is_zero());
    CHECK(ctx().beta.eval(r1, r1).is_zero());
    CHECK(ctx().beta.eval(r2, r2).is_zero());
    CHECK(ctx().beta.eval(r1, r2).is_zero());
    auto [z1, z2] = big_cell_rows<Rat>(0, 0, 0, 0, 0, 0);
    CHECK(z1 == basis_vec<Rat>(7));
    CHECK(z2 == basis_vec<Rat>(6));
}

TEST_CASE("octonion text") {
    CHECK(parse_oct("f2 + 1/2 f3 - e") == f(2) + Rat(1, 2) * f(3) - Oct<Rat>::unit());
    CHECK(parse_oct("1,0,0,0,0,0,0,2") == Oct<Rat>::unit() + Rat(2) * f(7));
    CHECK(parse_oct("0,1,0,0,0,0,0") == f(2));
    CHECK(parse_oct("e3", 'e') == Oct<Rat>::basis(3));
    CHECK(parse_oct("3") == Rat(3) * Oct<Rat>::unit());
    CHECK_THROWS_AS(parse_oct("f8"), SyntaxError);
    CHECK_THROWS_AS(parse_oct("1,2"), SyntaxError);
    CHECK(to_string(f(2) + Rat(-1, 2) * f(5)) == "f2 - 1/2*f5");
}
