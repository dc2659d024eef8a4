#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "linkgrp/presentation.hpp"

namespace linkgrp {

// One 4-valent crossing. Slot k holds the edge incident at cyclic
// (counterclockwise) position k; the under-strand joins slots s and s+2 where
// s = 0 when the over pair is {1,3} (the X[a,b,c,d] default: a -> c under).
struct Crossing {
    std::array<int, 4> edges{};
    bool over_bd = true;

    int under_in_slot() const { return over_bd ? 0 : 1; }
};

// Combinatorial 4-valent planar diagram with over/under data per crossing.
// free_loops counts crossing-free unknot components.
struct LinkDiagram {
    std::vector<Crossing> crossings;
    int free_loops = 0;
    int components = 0;
    int edge_count = 0;

    std::optional<std::pair<int, bool>> outer_directive;  // edge, left?
    std::vector<std::pair<int, int>> relabel;             // region label i -> j

    std::size_t dart_count() const { return crossings.size() * 4; }
};

enum class Side { left, right };

// Faces of the planar embedding, checkerboard-coloured with the outer region
// white. Region 0 is always the outer region after relabelling.
struct RegionMap {
    // For each region, its corners as (crossing, corner index k), the corner
    // lying between rotation slots k and k+1.
    std::vector<std::vector<std::pair<int, int>>> regions;
    std::vector<Parity> colour;
    int outer_region = 0;
    // region_of_corner[c][k] = region label at corner k of crossing c.
    std::vector<std::array<int, 4>> region_of_corner;

    int count() const { return static_cast<int>(regions.size()); }
};

struct ProjectionClass {
    bool alternating = false;
    bool reduced = false;
    bool elementary = false;
};

// Diagram file: one X[a,b,c,d] tuple per crossing (edges counterclockwise,
// strand a -> c under), optional over=bd|ac per crossing, O for a free loop,
// outer=<edge>,<left|right>, relabel i=j ..., '#' comments.
LinkDiagram parse_diagram(const std::string& text);
LinkDiagram parse_diagram_file(const std::string& path);

RegionMap compute_regions(const LinkDiagram& d);

ProjectionClass classify_projection(const LinkDiagram& d, const RegionMap& r);

// Region adjacency graph: adjacency[i] lists regions sharing an edge with i.
std::vector<std::vector<int>> region_adjacency(const LinkDiagram& d, const RegionMap& r);

// Graph distance in the region adjacency graph (-1 if unreachable).
int region_distance(const std::vector<std::vector<int>>& adjacency, int from, int to);

// The symmetrized augmented Dehn presentation: one relator per crossing, the
// outer-region generator x0 kept, parity the checkerboard colouring of the
// augmented projection (outer region of the augmented projection white, so
// x0 black).
SymPresentation augmented_dehn(const RegionMap& r, const LinkDiagram& d);

// Strand passages of one link component in traversal order.
struct Passage {
    int crossing = 0;
    int enter_slot = 0;  // slot at which the strand enters
    bool under = false;
};

// Passages of each component, traversed from its lowest-numbered edge.
std::vector<std::vector<Passage>> component_passages(const LinkDiagram& d);

}  // namespace linkgrp
