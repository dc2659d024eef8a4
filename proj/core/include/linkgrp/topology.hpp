#pragma once

#include <optional>
#include <vector>

#include "linkgrp/diagram.hpp"
#include "linkgrp/presentation.hpp"
#include "linkgrp/rewriting.hpp"
#include "linkgrp/word.hpp"

namespace linkgrp {

enum class Direction : std::uint8_t { down, up };

// Ordered region-crossing events of a based oriented loop.
struct IntersectionSequence {
    std::vector<std::pair<int, Direction>> entries;  // (region label, direction)
};

// The inclusion homomorphism x_i -> x_i x_0^-1 from the Dehn presentation
// into the augmented one. Input may not mention x_0; output has length 2|w|
// and alternates in sign (free reduction is the caller's business).
Word include_word(const Word& w);

// down -> positive letter, up -> negative, in sequence order. The sequence of
// a genuine loop is even in length and alternating in sign; NotLoopLike
// otherwise.
Word canonical_word(const IntersectionSequence& s);

struct LongitudeSpec {
    int component = 0;
    Word word;
    int parity_changes = 0;
    IntersectionSequence raw;  // before the zigzag normalization
};

// Canonical word of the i-th double (parallel copy pushed off to the left of
// the oriented component), zigzag-normalized so that all white-region
// crossings precede the black ones. The result is freely reduced, nonempty,
// and changes parity exactly once.
LongitudeSpec longitude_word(const LinkDiagram& d, const RegionMap& r, int component);

struct ComponentEvidence {
    int component = 0;
    Word longitude;
    Word geodesic;
    int parity_changes = 0;
};

struct NontrivialityReport {
    bool nontrivial = false;
    std::vector<ComponentEvidence> components;
};

// Reduces every longitude to a geodesic; nontrivial iff some geodesic is
// nonempty. Requires a reduced alternating elementary projection in which
// every component passes through a crossing.
NontrivialityReport is_nontrivial(const LinkDiagram& d);

enum class MoveType : std::uint8_t { type1_reduction, type2_deformation, basepoint_move };

struct MoveTag {
    MoveType type;
    std::optional<Parity> colour;  // hierarchy colour of a type 2 deformation
};

// Normal-surface annotation of a reduction trace: free reductions are type 1
// moves, pair exchanges type 2, and a chain collapse expands into n type 2
// deformations followed by one type 1 reduction.
std::vector<MoveTag> annotate_moves(const SymPresentation& p, const ReductionTrace& t);

}  // namespace linkgrp
