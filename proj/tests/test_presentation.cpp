#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "linkgrp/errors.hpp"
#include "linkgrp/presentation.hpp"
#include "test_support.hpp"

using namespace linkgrp;
using namespace linkgrp::testing;

TEST_CASE("symmetrize orbit sizes") {
    auto rs = symmetrize({W("x1 x4^-1 x2 x0^-1")});
    CHECK(rs.size() == 8);  // 4 rotations + 4 rotated inverses

    CHECK(symmetrize({}).empty());

    auto collapsed = symmetrize({W("x1 x2^-1 x1 x2^-1")});
    CHECK(collapsed.size() == 4);  // the orbit collapses

    // Idempotent.
    auto again = symmetrize(rs);
    CHECK(again == rs);
}

TEST_CASE("symmetrize cyclically reduces first") {
    auto rs = symmetrize({W("x3 x1 x4^-1 x2 x0^-1 x3^-1")});
    auto direct = symmetrize({W("x1 x4^-1 x2 x0^-1")});
    CHECK(rs == direct);
}

TEST_CASE("trefoil fixture satisfies the small cancellation conditions") {
    SymPresentation p = trefoil();
    CHECK(p.relators().size() == 24);
    CHECK(check_c4(p).ok);
    CHECK(check_t4(p).ok);
}

TEST_CASE("figure-eight fixture satisfies the small cancellation conditions") {
    SymPresentation p = fig8();
    CHECK(p.relators().size() == 32);
    CHECK(check_c4(p).ok);
    CHECK(check_t4(p).ok);
}

TEST_CASE("constructed counterexamples fail with witnesses") {
    SymPresentation c4p = load_presentation_file(fixture("c4_fail.pres"));
    C4Report c4 = check_c4(c4p);
    CHECK_FALSE(c4.ok);
    CHECK(c4.piece.size() == 2);
    CHECK(c4.relator_a != c4.relator_b);
    // The witness relators really do share the piece as a prefix.
    CHECK(c4.relator_a.subword(0, 2) == c4.piece);
    CHECK(c4.relator_b.subword(0, 2) == c4.piece);

    SymPresentation t4p = load_presentation_file(fixture("t4_fail.pres"));
    T4Report t4 = check_t4(t4p);
    CHECK_FALSE(t4.ok);
    auto cancels = [](const Word& a, const Word& b) { return a[a.size() - 1] == -b[0]; };
    CHECK(cancels(t4.r1, t4.r2));
    CHECK(cancels(t4.r2, t4.r3));
    CHECK(cancels(t4.r3, t4.r1));
    CHECK(t4.r1 != t4.r2.inverse());
    CHECK(t4.r2 != t4.r3.inverse());
    CHECK(t4.r3 != t4.r1.inverse());
}

TEST_CASE("empty relator set passes vacuously") {
    SymPresentation p({0, 1}, {});
    CHECK(check_c4(p).ok);
    CHECK(check_t4(p).ok);
}

TEST_CASE("two-letter classification on the trefoil") {
    SymPresentation p = trefoil();
    CHECK(p.classify_two_letter(W("x1")[0], W("x4^-1")[0]) == TwoLetterClass::pair);
    CHECK(p.classify_two_letter(W("x1")[0], W("x1^-1")[0]) == TwoLetterClass::none);
    // x4 x0^-1: bridged by x3^-1 (x4 x3^-1 and x3 x0^-1 are pairs).
    CHECK(p.classify_two_letter(W("x4")[0], W("x0^-1")[0]) == TwoLetterClass::sister_set);
    // The trefoil has no pseudo-pairs at all.
    CHECK(p.pseudo_pair_regions().empty());
}

TEST_CASE("figure-eight pseudo-pair x1 x5^-1") {
    SymPresentation p = fig8();
    Letter x1 = make_letter(1, +1), x5i = make_letter(5, -1);
    CHECK(p.classify_two_letter(x1, x5i) == TwoLetterClass::pseudo_pair);
    CHECK(p.is_pseudo_pair(make_letter(5, +1), make_letter(1, -1)));  // inverse closure
    auto regions = p.pseudo_pair_regions();
    CHECK(regions == std::vector<std::pair<int, int>>{{1, 5}});
}

TEST_CASE("classifications are mutually exclusive on fixtures") {
    for (const SymPresentation& p : {trefoil(), fig8()}) {
        for (int i : p.generator_indices())
            for (int si : {+1, -1})
                for (int j : p.generator_indices())
                    for (int sj : {+1, -1}) {
                        Letter a = make_letter(i, si), b = make_letter(j, sj);
                        int hits = int(p.is_pair(a, b)) + int(p.is_sister_set(a, b)) +
                                   int(p.is_pseudo_pair(a, b));
                        if (b == -a) continue;
                        CHECK(hits <= 1);
                    }
    }
}

TEST_CASE("exchange_pair solves the relator equation") {
    SymPresentation p = trefoil();
    CHECK(p.exchange_pair(W("x1 x4^-1")) == W("x0 x2^-1"));
    SymPresentation q = fig8();
    CHECK(q.exchange_pair(W("x2 x5^-1")) == W("x0 x3^-1"));

    // Involution over every pair of both fixtures.
    for (const SymPresentation& pres : {trefoil(), fig8()}) {
        for (const Word& r : pres.relators()) {
            Word pair = r.subword(0, 2);
            CHECK(pres.exchange_pair(pres.exchange_pair(pair)) == pair);
        }
    }
    CHECK_THROWS_AS(p.exchange_pair(W("x1 x1^-1")), Error);
}

TEST_CASE("parity alternation is enforced at load time") {
    CHECK_THROWS_AS(load_presentation("parity x1 = white\nparity x2 = white\nx1 x2^-1 x1 x2^-1\n"),
                    Error);
}

TEST_CASE("presentations without parity directives load but refuse parity lookups") {
    SymPresentation p = load_presentation_file(fixture("c4_fail.pres"));
    CHECK_FALSE(p.has_parity());
    CHECK_THROWS_AS(p.parity(1), Error);
}

TEST_CASE("relators must have length 4") {
    CHECK_THROWS_AS(load_presentation("x1 x2 x1^-1\n"), Error);
}
