#include "doctest.h"

#include "g2sc/octonion.hpp"
#include "g2sc/weyl.hpp"

#include <set>

using namespace g2sc;

TEST_CASE("elements and canonical order") {
    const auto& el = all_elements();
    REQUIRE(el.size() == 12);
    std::vector<std::string> words;
    for (const auto& w : el) words.push_back(w.name());
    CHECK(words == std::vector<std::string>{"id", "s", "t", "st", "ts", "sts", "tst", "stst", "tsts", "ststs",
                                            "tstst", "ststst"});
    CHECK(WeylElt::w0().word() == "ststst");
    CHECK(w0_alt_word() == "tststs");
}

TEST_CASE("parsing words and pairs") {
    CHECK(WeylElt::parse("5 2") == WeylElt::from_word("sts"));
    CHECK(WeylElt::parse("52") == WeylElt::from_word("sts"));
    CHECK(WeylElt::parse("id") == WeylElt::id());
    CHECK(WeylElt::parse("tststs") == WeylElt::w0());
    CHECK(WeylElt::from_word("stststs") == WeylElt::from_word("tstst"));
    CHECK_THROWS_AS(WeylElt::from_pair(1, 4), InvalidPair);
    CHECK_THROWS(WeylElt::parse("sx"));
}

TEST_CASE("word reduction") {
    CHECK(reduce_word("ss") == "");
    CHECK(reduce_word("sttst") == "t");
    CHECK(reduce_word("tststs") == "ststst");
    CHECK(is_reduced("ststst"));
    CHECK_FALSE(is_reduced("stt"));
    CHECK_FALSE(is_reduced("stststs"));
}

TEST_CASE("group structure against S7") {
    const auto& el = all_elements();
    std::set<std::string> perms;
    for (const auto& u : el) {
        perms.insert(embed_s7(u).str());
        for (const auto& w : el) CHECK(embed_s7(mul(u, w)) == embed_s7(u) * embed_s7(w));
        CHECK(inv(u).length() == u.length());
        CHECK(embed_s7(inv(u)) == embed_s7(u).inverse());
    }
    CHECK(perms.size() == 12);
    CHECK(generator_perm('s').str() == "2 1 5 4 3 7 6");
    CHECK(generator_perm('t').str() == "1 3 2 4 6 5 7");
    CHECK(inv(WeylElt::from_word("st")) == WeylElt::from_word("ts"));
}

TEST_CASE("extend_pair") {
    CHECK(extend_pair(6, 3).str() == "6 3 7 4 1 5 2");
    CHECK(extend_pair(1, 2) == Perm7::identity());
    CHECK(extend_pair(7, 6).str() == "7 6 5 4 3 2 1");
    for (const auto& [i, j] : fixed_points()) CHECK(extend_pair(i, j) == embed_s7(WeylElt::from_pair(i, j)));
    CHECK_THROWS_AS(extend_pair(4, 1), InvalidPair);
}

TEST_CASE("Bruhat order and rank function") {
    for (const auto& w : all_elements()) {
        CHECK(bruhat_leq(WeylElt::id(), w));
        CHECK(bruhat_leq(w, WeylElt::w0()));
    }
    CHECK_FALSE(bruhat_leq(WeylElt::s(), WeylElt::t()));
    CHECK(bruhat_leq(WeylElt::s(), WeylElt::from_word("ts")));
    auto w = WeylElt::from_pair(6, 3);
    CHECK(rank_fn(w, 2, 3) == 1);
    CHECK(rank_fn(w, 7, 7) == 7);
}
