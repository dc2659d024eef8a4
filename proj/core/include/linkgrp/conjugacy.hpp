#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "linkgrp/presentation.hpp"
#include "linkgrp/rewriting.hpp"
#include "linkgrp/word.hpp"

namespace linkgrp {

struct Point {
    int x = 0;
    int y = 0;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator<(const Point& o) const { return x != o.x ? x < o.x : y < o.y; }
};

// Rectilinear path on the integer lattice with one letter per unit edge.
struct LatticePath {
    std::vector<Point> vertices;
    Word edge_labels;
};

// A labelled square complex on the integer lattice: unit edges carry letters
// (read in the +x / +y direction) and unit squares carry relators.
class LatticeComplex {
  public:
    // Label of the edge p -> q (unit step); letters read against the stored
    // direction come back inverted.
    std::optional<Letter> label(Point p, Point q) const;
    bool has_edge(Point p, Point q) const;
    void add_edge(Point p, Point q, Letter l);

    bool has_square(Point lower_left) const { return squares_.count(lower_left) != 0; }
    const std::set<Point>& squares() const { return squares_; }
    void add_square(Point lower_left) { squares_.insert(lower_left); }

    int min_y() const { return min_y_; }
    int max_y() const { return max_y_; }
    int min_x() const { return min_x_; }
    int max_x() const { return max_x_; }

    // Word along a straight vertical run upward from p while edges exist,
    // stopping after at most max_len letters (no limit if 0).
    Word vertical_run_up(Point p, std::size_t max_len = 0) const;

    std::size_t edge_count() const { return edges_.size(); }

  private:
    static std::uint64_t ekey(int x, int y, bool horizontal);
    std::unordered_map<std::uint64_t, Letter> edges_;
    std::set<Point> squares_;
    int min_x_ = 0, max_x_ = 0, min_y_ = 0, max_y_ = 0;
};

// A finite set of unit relator squares with its base path; the geodesic
// completion of a word, or one half-built conjugacy strip.
struct SquareTiling {
    LatticeComplex complex;
    LatticePath base_path;
    int width = 0;   // I
    int height = 0;  // J

    // Every square's boundary reads a relator; checked in tests.
    bool squares_read_relators(const SymPresentation& p) const;
};

// Monotone staircase from the origin: the first letter heads in +x and the
// direction toggles exactly at windows classified pair or pseudo-pair.
LatticePath standard_embedding(const SymPresentation& p, const Word& w);

struct FillOptions {
    std::optional<std::uint64_t> shuffle_seed;  // randomized fill order for confluence tests
};

// Iteratively fills every pair-labelled right angle not already contained in
// a square of the complex; unique result independent of fill order.
SquareTiling geodesic_completion(const SymPresentation& p, const Word& w, FillOptions opt = {});

// Closure of {w} under single pair exchanges.
std::set<Word> equivalent_geodesics(const SymPresentation& p, const Word& w);

// The conjugacy strip: geodesic completion of w with the left-column words
// stacked above the right end and the right-column words stacked below the
// origin, until a column word repeats or comes back empty.
struct ConjugacyStrip {
    SquareTiling tiling;
    std::vector<Word> upper_columns;  // l_1, l_2, ...
    std::vector<Word> lower_columns;  // r_1, r_2, ...
    int up_extent = 0;                // left column filled for y in [0, up_extent]
    int down_extent = 0;              // and [-down_extent, 0]
};

ConjugacyStrip build_conjugacy_strip(const SymPresentation& p, const Word& w);

// Saturation of conjugacy chains: side words reachable from w by repeatedly
// taking chains whose chain word is a v a^-1 for a single letter a.
struct ConjugacyChainComplex {
    // Discovered side words with a conjugator c such that side = c w c^-1.
    std::vector<std::pair<Word, Word>> sides;
    std::size_t max_fanout = 0;  // most chains admitted by any queried side word
    std::size_t chain_count = 0;

    const Word* conjugator_for(const Word& side) const;
};

ConjugacyChainComplex saturate_conjugacy_chains(const SymPresentation& p, const Word& w);

struct ConjugacyResult {
    bool conjugate = false;
    std::string method;  // "empty", "cyclic-equal", "precheck", "strip", "chains"
    std::optional<Word> conjugator;  // u = c w c^-1, internally verified
    std::string detail;
    Word u_geodesic;
    Word w_geodesic;
};

// Full conjugacy decision: cyclic geodesic representatives, the length /
// parity-count precheck, then the strip (both parities) or chain saturation
// (single parity). A returned conjugator is always verified first.
ConjugacyResult are_conjugate(const SymPresentation& p, const Word& u, const Word& w);

// All cyclic geodesic representatives of the conjugacy class of w: labels
// read from the decision structures, closed under cyclic permutation.
std::set<Word> conjugacy_class_geodesics(const SymPresentation& p, const Word& w);

// Conjugator accumulated over a reduction trace: before = c * after * c^-1.
Word conjugator_from_trace(const ReductionTrace& trace);

}  // namespace linkgrp
