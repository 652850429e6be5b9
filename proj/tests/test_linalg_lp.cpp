#include "doctest.h"

#include "g2sc/linalg.hpp"
#include "g2sc/lp.hpp"
#include "g2sc/random.hpp"

using namespace g2sc;

TEST_CASE("consistent systems return a solution") {
    LinSystem s{{{1, 1}, {1, -1}}, {2, 0}, 2};
    auto r = solve_linear(s);
    REQUIRE(r.consistent);
    CHECK(r.solution == std::vector<Rat>{1, 1});
}

TEST_CASE("inconsistent systems return a verifiable certificate") {
    LinSystem s{{{1}, {1}}, {1, 2}, 1};
    auto r = solve_linear(s);
    REQUIRE_FALSE(r.consistent);
    CHECK(verify_inconsistency(s, r.certificate));
    CHECK(r.value != 0);
    // row2 - row1 up to scale
    CHECK(r.certificate[0] == -r.certificate[1]);
}

TEST_CASE("random systems: solutions satisfy, certificates verify") {
    Rng rng(7);
    for (int k = 0; k < 50; ++k) {
        LinSystem s;
        s.num_vars = 4;
        for (int i = 0; i < 5; ++i) {
            std::vector<Rat> row;
            for (int j = 0; j < 4; ++j) row.push_back(random_rat(rng, 2));
            s.a.push_back(row);
            s.b.push_back(random_rat(rng, 2));
        }
        auto r = solve_linear(s);
        if (r.consistent) {
            for (std::size_t i = 0; i < s.a.size(); ++i) {
                Rat lhs = 0;
                for (int j = 0; j < 4; ++j) lhs += s.a[i][j] * r.solution[j];
                CHECK(lhs == s.b[i]);
            }
        } else {
            CHECK(verify_inconsistency(s, r.certificate));
        }
    }
}

TEST_CASE("inverse, determinant, nullspace") {
    Matrix<Rat> m{{2, 1}, {1, 1}};
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(mat_mul(m, *inv) == identity_matrix<Rat>(2));
    CHECK(determinant(m) == 1);
    Matrix<Rat> sing{{1, 2}, {2, 4}};
    CHECK_FALSE(inverse(sing).has_value());
    auto ns = nullspace(sing, 2);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] + 2 * ns[0][1] == 0);
    CHECK(rank(sing) == 1);
}

TEST_CASE("LP feasibility") {
    LpFeasibility p{{{1, 1}}, {1}, 2};
    auto r = lp_feasible(p);
    REQUIRE(r.feasible);
    CHECK(verify_point(p, r.point));
    LpFeasibility q{{{1}}, {-1}, 1};
    auto s = lp_feasible(q);
    REQUIRE_FALSE(s.feasible);
    CHECK(verify_farkas(q, s.farkas));
}

TEST_CASE("LP: random feasible systems recover a point") {
    Rng rng(8);
    for (int k = 0; k < 30; ++k) {
        LpFeasibility p;
        p.num_vars = 5;
        std::vector<Rat> x;
        for (int j = 0; j < 5; ++j) x.push_back(Rat(std::abs(static_cast<int>(rng() % 4))));
        for (int i = 0; i < 3; ++i) {
            std::vector<Rat> row;
            Rat b = 0;
            for (int j = 0; j < 5; ++j) {
                row.push_back(random_rat(rng, 3));
                b += row.back() * x[j];
            }
            p.a.push_back(row);
            p.b.push_back(b);
        }
        auto r = lp_feasible(p);
        REQUIRE(r.feasible);
        CHECK(verify_point(p, r.point));
    }
}

TEST_CASE("equation formatting") {
    CHECK(format_equation({0, 1, 0, -1, 0}, Rat(1, 2), {"a", "b", "c", "d", "e"}) == "b - d = 1/2");
    CHECK(format_equation({0, 0, 0, 1, 2}, 0, {"a", "b", "c", "d", "e"}) == "d + 2*e = 0");
}
