#include "doctest.h"

#include "g2sc/random.hpp"
#include "g2sc/schubert.hpp"

using namespace g2sc;

namespace {

const MPoly x1 = X(Var::x1), x2 = X(Var::x2), v = X(Var::v);
const std::vector<Var> kVars{Var::x1, Var::x2, Var::y1, Var::y2};

// Independent oracle: numerator by substitution, quotient by exact division.
MPoly oracle_s(const MPoly& f) {
    return exact_divide(f - substitute_some(f, {{Var::x1, x2}, {Var::x2, x1}}), x1 - x2);
}
MPoly oracle_t(const MPoly& f) {
    return exact_divide(f - substitute_some(f, {{Var::x2, x1 - x2}}), 2 * x2 - x1);
}

}  // namespace

TEST_CASE("explicit values") {
    CHECK(div_diff(OpKind::S, x1) == 1);
    CHECK(div_diff(OpKind::S, x2) == -1);
    CHECK(div_diff(OpKind::S, x1 * x2).is_zero());
    CHECK(div_diff(OpKind::T, x1).is_zero());
    CHECK(div_diff(OpKind::T, x1 + x2) == 1);
    CHECK(div_diff(OpKind::S, Rat(1, 2) * x1.pow(5) * x2) ==
          Rat(1, 2) * x1 * x2 * (x1.pow(3) + x1.pow(2) * x2 + x1 * x2.pow(2) + x2.pow(3)));
    CHECK(div_diff(OpKind::S, MPoly(5)).is_zero());
}

TEST_CASE("operators agree with the substitution oracle") {
    Rng rng(31);
    for (int k = 0; k < 50; ++k) {
        MPoly f = random_poly(rng, kVars, 6, 8);
        CHECK(div_diff(OpKind::S, f) == oracle_s(f));
        CHECK(div_diff(OpKind::T, f) == oracle_t(f));
    }
}

TEST_CASE("squares vanish and the braid relation holds") {
    Rng rng(32);
    for (int k = 0; k < 50; ++k) {
        MPoly f = random_poly(rng, kVars, 6, 8);
        CHECK(div_diff(OpKind::S, div_diff(OpKind::S, f)).is_zero());
        CHECK(div_diff(OpKind::T, div_diff(OpKind::T, f)).is_zero());
        MPoly g = random_binary_form(rng, 6);
        CHECK(div_diff_word("ststst", g) == div_diff_word("tststs", g));
        CHECK(div_diff_word("ststst", f) == div_diff_word("tststs", f));
    }
}

TEST_CASE("degree drops by one on homogeneous inputs") {
    Rng rng(33);
    for (int k = 0; k < 30; ++k) {
        MPoly f = random_binary_form(rng, 5);
        for (auto op : {OpKind::S, OpKind::T}) {
            MPoly g = div_diff(op, f);
            if (!g.is_zero()) CHECK((g.is_homogeneous() && g.degree() == 4));
        }
    }
}

TEST_CASE("word composition applies the last letter first") {
    MPoly f = x1.pow(3) * x2;
    CHECK(div_diff_word("st", f) == div_diff(OpKind::S, div_diff(OpKind::T, f)));
    CHECK_THROWS_AS(div_diff_word("tt", f), NonReducedWord);
    CHECK(div_diff_word("", f) == f);
}

TEST_CASE("root-data operator reproduces both explicit operators") {
    const auto& d = RootDict::g2();
    auto s = d.action(0);
    CHECK(s.at(Var::x1) == x2);
    CHECK(s.at(Var::x2) == x1);
    auto t = d.action(1);
    CHECK(t.at(Var::x1) == x1);
    CHECK(t.at(Var::x2) == x1 - x2);
    Rng rng(34);
    for (int k = 0; k < 50; ++k) {
        MPoly f = random_poly(rng, kVars, 6, 8);
        CHECK(generic_div_diff(d, 0, f) == div_diff(OpKind::S, f));
        CHECK(generic_div_diff(d, 1, f) == div_diff(OpKind::T, f));
    }
}

TEST_CASE("twisted operator") {
    Rng rng(35);
    std::vector<Var> vars{Var::x1, Var::x2, Var::y2, Var::v};
    for (int k = 0; k < 50; ++k) {
        MPoly f = random_poly(rng, vars, 6, 8);
        MPoly at0 = substitute_some(div_diff(OpKind::TTwisted, f), {{Var::v, MPoly()}});
        CHECK(at0 == div_diff(OpKind::T, substitute_some(f, {{Var::v, MPoly()}})));
        MPoly num = f - substitute_some(f, {{Var::x2, x1 - x2 - v}});
        CHECK(div_diff(OpKind::TTwisted, f) * (2 * x2 - x1 + v) == num);
    }
}
