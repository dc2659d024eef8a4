#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "linkgrp/diagram.hpp"
#include "linkgrp/errors.hpp"
#include "test_support.hpp"

using namespace linkgrp;
using namespace linkgrp::testing;

TEST_CASE("trefoil code parses with the expected counts") {
    LinkDiagram d = parse_diagram("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
    CHECK(d.crossings.size() == 3);
    CHECK(d.edge_count == 6);
    CHECK(d.components == 1);
    RegionMap r = compute_regions(d);
    CHECK(r.count() == 5);
    CHECK(r.outer_region == 0);
    CHECK(r.colour[0] == Parity::white);
}

TEST_CASE("dangling edges are rejected") {
    CHECK_THROWS_AS(parse_diagram("X[1,4,2,5] X[3,6,4,1]"), Error);
}

TEST_CASE("malformed tuples are rejected") {
    CHECK_THROWS_AS(parse_diagram("X[1,2,3]"), Error);
    CHECK_THROWS_AS(parse_diagram("Y[1,2,3,4]"), Error);
}

TEST_CASE("0-crossing unknot") {
    LinkDiagram d = parse_diagram_file(fixture("unknot0.diag"));
    CHECK(d.crossings.empty());
    CHECK(d.components == 1);
    RegionMap r = compute_regions(d);
    CHECK(r.count() == 2);
    CHECK(r.colour[0] == Parity::white);
    CHECK(r.colour[1] == Parity::black);
    ProjectionClass c = classify_projection(d, r);
    CHECK(c.alternating);
    CHECK(c.reduced);
    CHECK(c.elementary);
    SymPresentation p = augmented_dehn(r, d);
    CHECK(p.relators().empty());
    CHECK(p.generator_indices() == std::vector<int>{0, 1});
}

TEST_CASE("split unions are rejected by compute_regions") {
    LinkDiagram two_loops;
    two_loops.free_loops = 2;
    CHECK_THROWS_AS(compute_regions(two_loops), Error);
    LinkDiagram mixed = parse_diagram("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\nO");
    CHECK_THROWS_AS(compute_regions(mixed), Error);
}

TEST_CASE("region count matches the Euler formula on all fixtures") {
    for (const char* name : {"trefoil.diag", "fig8.diag", "hopf.diag", "nugatory.diag"}) {
        LinkDiagram d = parse_diagram_file(fixture(name));
        RegionMap r = compute_regions(d);
        CHECK(r.count() == static_cast<int>(d.crossings.size()) + 2);
        // Every corner belongs to exactly one region.
        std::size_t corner_total = 0;
        for (const auto& region : r.regions) corner_total += region.size();
        CHECK(corner_total == 4 * d.crossings.size());
        // Checkerboard property across every edge.
        auto adj = region_adjacency(d, r);
        for (int a = 0; a < r.count(); ++a)
            for (int b : adj[a]) CHECK(r.colour[a] != r.colour[b]);
    }
}

TEST_CASE("classification of the fixture projections") {
    auto classify = [](const std::string& name) {
        LinkDiagram d = parse_diagram_file(fixture(name));
        RegionMap r = compute_regions(d);
        return classify_projection(d, r);
    };
    ProjectionClass trefoil = classify("trefoil.diag");
    CHECK(trefoil.alternating);
    CHECK(trefoil.reduced);
    CHECK(trefoil.elementary);
    ProjectionClass fig8 = classify("fig8.diag");
    CHECK(fig8.alternating);
    CHECK(fig8.reduced);
    CHECK(fig8.elementary);
    ProjectionClass hopf = classify("hopf.diag");
    CHECK(hopf.alternating);
    CHECK(hopf.reduced);
    CHECK(hopf.elementary);
    ProjectionClass nugatory = classify("nugatory.diag");
    CHECK_FALSE(nugatory.reduced);
    ProjectionClass nonalt = classify("nonalt.diag");
    CHECK_FALSE(nonalt.alternating);
}

TEST_CASE("elementary implies reduced") {
    for (const char* name : {"trefoil.diag", "fig8.diag", "hopf.diag", "nugatory.diag",
                             "nonalt.diag"}) {
        LinkDiagram d = parse_diagram_file(fixture(name));
        RegionMap r = compute_regions(d);
        ProjectionClass c = classify_projection(d, r);
        if (c.elementary) CHECK(c.reduced);
    }
}

TEST_CASE("trefoil diagram reproduces the paper presentation after relabelling") {
    LinkDiagram d = parse_diagram_file(fixture("trefoil.diag"));
    RegionMap r = compute_regions(d);
    SymPresentation from_diagram = augmented_dehn(r, d);
    SymPresentation paper = trefoil();
    CHECK(from_diagram.relators() == paper.relators());
    for (int g : paper.generator_indices())
        CHECK(from_diagram.parity(g) == paper.parity(g));
}

TEST_CASE("figure-eight diagram reproduces the paper presentation after relabelling") {
    LinkDiagram d = parse_diagram_file(fixture("fig8.diag"));
    RegionMap r = compute_regions(d);
    SymPresentation from_diagram = augmented_dehn(r, d);
    SymPresentation paper = fig8();
    CHECK(from_diagram.relators() == paper.relators());
    for (int g : paper.generator_indices())
        CHECK(from_diagram.parity(g) == paper.parity(g));
}

TEST_CASE("augmented presentation has 8 relators per crossing when all distinct") {
    LinkDiagram d = parse_diagram_file(fixture("trefoil.diag"));
    RegionMap r = compute_regions(d);
    CHECK(augmented_dehn(r, d).relators().size() == 8 * d.crossings.size());
}

TEST_CASE("pseudo-pair distance cross-check on the figure-eight") {
    LinkDiagram d = parse_diagram_file(fixture("fig8.diag"));
    RegionMap r = compute_regions(d);
    SymPresentation p = augmented_dehn(r, d);
    auto adj = region_adjacency(d, r);

    // pair => distance 1, sister-set => 2, pseudo-pair => 3.
    for (int i : p.generator_indices())
        for (int si : {+1, -1})
            for (int j : p.generator_indices())
                for (int sj : {+1, -1}) {
                    Letter a = make_letter(i, si), b = make_letter(j, sj);
                    switch (p.classify_two_letter(a, b)) {
                        case TwoLetterClass::pair: CHECK(region_distance(adj, i, j) == 1); break;
                        case TwoLetterClass::sister_set:
                            CHECK(region_distance(adj, i, j) == 2);
                            break;
                        case TwoLetterClass::pseudo_pair:
                            CHECK(region_distance(adj, i, j) == 3);
                            break;
                        case TwoLetterClass::none: break;
                    }
                }

    // Flag check: every distance-3 region pair is produced by the 3-square
    // search.
    auto pseudo = p.pseudo_pair_regions();
    for (int i : p.generator_indices())
        for (int j : p.generator_indices()) {
            if (i >= j) continue;
            if (region_distance(adj, i, j) == 3)
                CHECK(std::find(pseudo.begin(), pseudo.end(), std::make_pair(i, j)) !=
                      pseudo.end());
        }
}

TEST_CASE("small cancellation holds iff alternating and elementary over the corpus") {
    // Corpus of reduced projections: the alternating elementary ones (prime),
    // a reduced non-alternating one, and a composite alternating one.
    for (const char* name : {"trefoil.diag", "fig8.diag", "hopf.diag", "granny.diag",
                             "nonalt.diag"}) {
        LinkDiagram d = parse_diagram_file(fixture(name));
        RegionMap r = compute_regions(d);
        ProjectionClass c = classify_projection(d, r);
        CHECK(c.reduced);
        SymPresentation p = augmented_dehn(r, d);
        bool sc = check_c4(p).ok && check_t4(p).ok;
        CHECK(sc == (c.alternating && c.elementary));
    }
}
