#include "doctest.h"

#include "g2sc/errors.hpp"
#include "g2sc/mpoly.hpp"
#include "g2sc/random.hpp"
#include "g2sc/schubert.hpp"

#include <map>

using namespace g2sc;

namespace {

const MPoly x1 = X(Var::x1), x2 = X(Var::x2), v = X(Var::v);

// Term-by-term distributive product on raw exponent arrays.
MPoly naive_mul(const MPoly& f, const MPoly& g) {
    std::map<std::array<std::uint16_t, kNumVars>, Rat> acc;
    for (const auto& [ma, ca] : f.terms())
        for (const auto& [mb, cb] : g.terms()) {
            std::array<std::uint16_t, kNumVars> e{};
            for (int i = 0; i < kNumVars; ++i) e[i] = static_cast<std::uint16_t>(ma.e[i] + mb.e[i]);
            acc[e] += ca * cb;
        }
    MPoly out;
    for (const auto& [e, c] : acc) {
        Monomial m;
        m.e = e;
        out.add_term(m, c);
    }
    return out;
}

const std::vector<Var> kVars{Var::x1, Var::x2, Var::y1, Var::v};

}  // namespace

TEST_CASE("difference of squares and additive identity") {
    CHECK((x1 + x2) * (x1 - x2) == x1.pow(2) - x2.pow(2));
    MPoly f = x1 * x2 + Rat(1, 3);
    CHECK(f + MPoly() == f);
    CHECK((f - f).is_zero());
}

TEST_CASE("product agrees with the naive oracle on 100 random pairs") {
    Rng rng(1);
    for (int k = 0; k < 100; ++k) {
        MPoly f = random_poly(rng, kVars, 4), g = random_poly(rng, kVars, 4);
        CHECK(f * g == naive_mul(f, g));
    }
    MPoly f = x1.pow(2) + x1 * x2 + x2.pow(2);
    CHECK(f * (x1 - x2) == x1.pow(3) - x2.pow(3));
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(2);
    for (int k = 0; k < 50; ++k) {
        MPoly a = random_poly(rng, kVars, 3), b = random_poly(rng, kVars, 3), c = random_poly(rng, kVars, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("exact division") {
    CHECK(exact_divide(x1.pow(2) - x2.pow(2), x1 - x2) == x1 + x2);
    CHECK(exact_divide(MPoly(), x1 - x2).is_zero());
    CHECK_THROWS_AS(exact_divide(x1.pow(2) + x2, x1 - x2), NotDivisible);
    CHECK_THROWS(exact_divide(x1, MPoly()));
    Rng rng(3);
    for (int k = 0; k < 50; ++k) {
        MPoly f = random_poly(rng, kVars, 4), g = random_poly(rng, kVars, 3);
        if (g.is_zero()) continue;
        CHECK(exact_divide(f * g, g) == f);
    }
    for (int k = 0; k < 50; ++k) {
        MPoly f = random_poly(rng, kVars, 6);
        MPoly sf = substitute_some(f, {{Var::x1, x2}, {Var::x2, x1}});
        MPoly q = exact_divide(f - sf, x1 - x2);
        CHECK(q * (x1 - x2) == f - sf);
    }
}

TEST_CASE("substitution") {
    CHECK(substitute(x1.pow(2), {{Var::x1, x1 + v}}) == x1.pow(2) + 2 * x1 * v + v.pow(2));
    MPoly f = x1 * x2 - Rat(1, 2) * x2.pow(3);
    CHECK(substitute(f, {{Var::x1, x1}, {Var::x2, x2}}) == f);
    CHECK_THROWS_AS(substitute(f, {{Var::x1, x1}}), UnboundVariable);
    Rng rng(4);
    Assignment a{{Var::x1, x1 + v}, {Var::x2, x2 - 2 * v}, {Var::y1, x1 * x2}, {Var::v, v}};
    for (int k = 0; k < 20; ++k) {
        MPoly p = random_poly(rng, kVars, 3), q = random_poly(rng, kVars, 3);
        CHECK(substitute(p * q, a) == substitute(p, a) * substitute(q, a));
    }
}

TEST_CASE("Graham change of variables inverts") {
    Rng rng(5);
    std::vector<Var> vars{Var::x1, Var::x2, Var::y1, Var::y2};
    for (int k = 0; k < 20; ++k) {
        MPoly f = random_poly(rng, vars, 4);
        CHECK(substitute_some(substitute_some(f, graham_change()), graham_change_inverse()) == f);
    }
}

TEST_CASE("graded-lex order and printing") {
    MPoly f = Rat(1, 2) * x1.pow(5) * x2 - x1.pow(6);
    CHECK(to_string(f) == "-x1^6 + 1/2*x1^5*x2");
    CHECK(to_string(MPoly()) == "0");
    CHECK(to_string(x2 + x1 + 1) == "x1 + x2 + 1");
    CHECK(f.degree() == 6);
    CHECK(f.is_homogeneous());
    CHECK_FALSE((f + x1).is_homogeneous());
    CHECK(f.coeff_of(Var::x2, 1) == Rat(1, 2) * x1.pow(5));
}

TEST_CASE("variable universe") {
    CHECK(kNumVars == 22);
    for (int i = 0; i < kNumVars; ++i) {
        auto x = static_cast<Var>(i);
        CHECK(var_from_name(var_name(x)) == x);
    }
    CHECK_FALSE(var_from_name("z").has_value());
}
