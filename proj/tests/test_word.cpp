#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linkgrp/errors.hpp"
#include "linkgrp/word.hpp"

using namespace linkgrp;

TEST_CASE("letters round-trip through parsing") {
    Word w = parse_word("x3^-1 x4 x0^-1 x2");
    CHECK(w.size() == 4);
    CHECK(w[0] == make_letter(3, -1));
    CHECK(w[3] == make_letter(2, +1));
    CHECK(w.str() == "x3^-1 x4 x0^-1 x2");
    CHECK(parse_word("").empty());
    CHECK(parse_word("1").empty());
    CHECK(Word().str() == "1");
}

TEST_CASE("parse rejects malformed tokens") {
    CHECK_THROWS_AS(parse_word("y3"), Error);
    CHECK_THROWS_AS(parse_word("x"), Error);
    CHECK_THROWS_AS(parse_word("x3^2"), Error);
}

TEST_CASE("free reduction") {
    CHECK(free_reduce(parse_word("x1 x1^-1")).empty());
    CHECK(free_reduce(parse_word("x3^-1 x4 x0^-1 x2")) == parse_word("x3^-1 x4 x0^-1 x2"));
    CHECK(free_reduce(parse_word("x1 x2 x2^-1 x2 x2^-1 x1^-1 x3")) == parse_word("x3"));
}

TEST_CASE("free reduction is confluent over random cancellation orders") {
    // Inserting cancelling pairs anywhere must always reduce back.
    Word base = parse_word("x1 x2^-1 x3");
    for (std::size_t pos = 0; pos <= base.size(); ++pos) {
        for (Letter l : {+1, -2, +3, -4}) {
            std::vector<Letter> ls = base.letters();
            ls.insert(ls.begin() + static_cast<std::ptrdiff_t>(pos), {l, Letter(-l)});
            CHECK(free_reduce(Word(ls)) == base);
        }
    }
}

TEST_CASE("inverse, rotation, cyclic reduction") {
    Word w = parse_word("x1 x2^-1 x3");
    CHECK(w.inverse() == parse_word("x3^-1 x2 x1^-1"));
    CHECK(w.rotated(1) == parse_word("x2^-1 x3 x1"));
    CHECK(w.rotated(3) == w);
    CHECK(cyclic_free_reduce(parse_word("x2^-1 x1 x2")) == parse_word("x1"));
    CHECK(min_rotation(parse_word("x3 x1 x2")) == min_rotation(parse_word("x1 x2 x3")));
}

TEST_CASE("sign alternation predicate") {
    CHECK(parse_word("x1 x0^-1 x3 x4^-1").alternates_in_sign());
    CHECK_FALSE(parse_word("x1 x2").alternates_in_sign());
    CHECK(Word().alternates_in_sign());
}
