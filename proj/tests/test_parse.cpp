#include "doctest.h"

#include "g2sc/errors.hpp"
#include "g2sc/json_io.hpp"
#include "g2sc/parse.hpp"
#include "g2sc/random.hpp"
#include "g2sc/schubert.hpp"

using namespace g2sc;

TEST_CASE("basic grammar") {
    const MPoly x1 = X(Var::x1), x2 = X(Var::x2);
    CHECK(parse_poly("1/2 x1^5 x2") == Rat(1, 2) * x1.pow(5) * x2);
    CHECK(parse_poly("(x1+x2)^2 - x1^2 - x2^2") == 2 * x1 * x2);
    CHECK(parse_poly("  -x1*x2 +3 ") == 3 - x1 * x2);
    CHECK(parse_poly("x1/2") == Rat(1, 2) * x1);
    CHECK(parse_poly("2(x1 - x2)") == 2 * x1 - 2 * x2);
    CHECK(parse_poly("c1F x1") == X(Var::c1F) * x1);
}

TEST_CASE("errors carry positions") {
    CHECK_THROWS_AS(parse_poly("x1 +"), SyntaxError);
    CHECK_THROWS_AS(parse_poly("z1"), UnknownVariable);
    try {
        parse_poly("x1 + )");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 5);
    }
    CHECK_THROWS_AS(parse_poly("x1^"), SyntaxError);
    CHECK_THROWS_AS(parse_poly("(x1"), SyntaxError);
}

TEST_CASE("print then parse is the identity") {
    Rng rng(11);
    std::vector<Var> vars{Var::x1, Var::x2, Var::y1, Var::t2, Var::alpha, Var::c3Q, Var::g};
    for (int k = 0; k < 100; ++k) {
        MPoly f = random_poly(rng, vars, 5, 7);
        CHECK(parse_poly(to_string(f)) == f);
        CHECK(to_string(parse_poly(to_string(f))) == to_string(f));
        CHECK(poly_from_terms(terms_json(f)) == f);
    }
}

TEST_CASE("the twisted display text parses to the twisted top class") {
    CHECK(parse_poly(twisted_top_display_text()) == twist_substitution(top_class(FamilyKind::Chern)));
}
