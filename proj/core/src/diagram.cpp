#include "linkgrp/diagram.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "linkgrp/errors.hpp"

namespace linkgrp {

namespace {

struct Dart {
    int crossing;
    int slot;
};

// edge label -> its two darts, in (crossing, slot) scan order
std::map<int, std::vector<Dart>> edge_darts(const LinkDiagram& d) {
    std::map<int, std::vector<Dart>> out;
    for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
        for (int s = 0; s < 4; ++s) out[d.crossings[c].edges[s]].push_back({c, s});
    return out;
}

struct FaceTrace {
    std::vector<std::vector<std::pair<int, int>>> faces;  // corners (crossing, k)
    std::vector<std::array<int, 4>> face_of_corner;
};

// Traces face orbits of the rotation system: from the dart (c,s) move to the
// other end (c',s') of its edge and continue with (c', s'+1), sweeping the
// corner between slots s' and s'+1.
FaceTrace trace_faces(const LinkDiagram& d, const std::map<int, std::vector<Dart>>& darts) {
    int n = static_cast<int>(d.crossings.size());
    FaceTrace out;
    out.face_of_corner.assign(n, {-1, -1, -1, -1});
    auto other_end = [&](int c, int s) -> Dart {
        const auto& ds = darts.at(d.crossings[c].edges[s]);
        if (ds[0].crossing == c && ds[0].slot == s) return ds[1];
        return ds[0];
    };
    std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
    for (int c0 = 0; c0 < n; ++c0)
        for (int s0 = 0; s0 < 4; ++s0) {
            if (seen[c0][s0]) continue;
            std::vector<std::pair<int, int>> corners;
            int face = static_cast<int>(out.faces.size());
            int c = c0, s = s0;
            do {
                seen[c][s] = true;
                Dart a = other_end(c, s);
                corners.push_back({a.crossing, a.slot});
                out.face_of_corner[a.crossing][a.slot] = face;
                c = a.crossing;
                s = (a.slot + 1) % 4;
            } while (!(c == c0 && s == s0));
            out.faces.push_back(std::move(corners));
        }
    return out;
}

std::vector<int> crossing_components(const LinkDiagram& d,
                                     const std::map<int, std::vector<Dart>>& darts) {
    int n = static_cast<int>(d.crossings.size());
    std::vector<int> comp(n, -1);
    int next = 0;
    for (int c0 = 0; c0 < n; ++c0) {
        if (comp[c0] >= 0) continue;
        std::deque<int> queue{c0};
        comp[c0] = next;
        while (!queue.empty()) {
            int c = queue.front();
            queue.pop_front();
            for (int s = 0; s < 4; ++s)
                for (const Dart& a : darts.at(d.crossings[c].edges[s]))
                    if (comp[a.crossing] < 0) {
                        comp[a.crossing] = next;
                        queue.push_back(a.crossing);
                    }
        }
        ++next;
    }
    return comp;
}

}  // namespace

LinkDiagram parse_diagram(const std::string& text) {
    LinkDiagram d;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (tok == "O") {
                ++d.free_loops;
            } else if (tok.rfind("X[", 0) == 0) {
                if (tok.back() != ']')
                    fail(ErrorKind::parse_error, "unterminated crossing tuple '" + tok + "'");
                std::string body = tok.substr(2, tok.size() - 3);
                std::replace(body.begin(), body.end(), ',', ' ');
                std::istringstream bs(body);
                Crossing cr;
                for (int i = 0; i < 4; ++i)
                    if (!(bs >> cr.edges[i]))
                        fail(ErrorKind::parse_error, "crossing tuple needs 4 edges: '" + tok + "'");
                int extra;
                if (bs >> extra)
                    fail(ErrorKind::parse_error, "crossing tuple has > 4 edges: '" + tok + "'");
                d.crossings.push_back(cr);
            } else if (tok.rfind("over=", 0) == 0) {
                if (d.crossings.empty())
                    fail(ErrorKind::parse_error, "over= before any crossing");
                std::string v = tok.substr(5);
                if (v == "bd")
                    d.crossings.back().over_bd = true;
                else if (v == "ac")
                    d.crossings.back().over_bd = false;
                else
                    fail(ErrorKind::parse_error, "over= must be bd or ac");
            } else if (tok.rfind("outer=", 0) == 0) {
                std::string v = tok.substr(6);
                auto comma = v.find(',');
                if (comma == std::string::npos)
                    fail(ErrorKind::parse_error, "outer= needs <edge>,<left|right>");
                int edge = std::stoi(v.substr(0, comma));
                std::string side = v.substr(comma + 1);
                if (side != "left" && side != "right")
                    fail(ErrorKind::parse_error, "outer= side must be left or right");
                d.outer_directive = {edge, side == "left"};
            } else if (tok == "relabel") {
                std::string m;
                while (ls >> m) {
                    auto eq = m.find('=');
                    if (eq == std::string::npos)
                        fail(ErrorKind::parse_error, "relabel entries look like i=j");
                    d.relabel.push_back({std::stoi(m.substr(0, eq)), std::stoi(m.substr(eq + 1))});
                }
            } else {
                fail(ErrorKind::parse_error, "unrecognized token '" + tok + "'");
            }
        }
    }

    auto darts = edge_darts(d);
    for (const auto& [edge, ds] : darts)
        if (ds.size() != 2)
            fail(ErrorKind::dangling_edge, "edge " + std::to_string(edge) + " appears " +
                                               std::to_string(ds.size()) + " times");
    d.edge_count = static_cast<int>(darts.size());

    if (!d.crossings.empty()) {
        // Planarity, per connected component: V - E + F = 2.
        FaceTrace faces = trace_faces(d, darts);
        std::vector<int> comp = crossing_components(d, darts);
        int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
        std::vector<int> v(ncomp, 0), e2(ncomp, 0), f(ncomp, 0);
        for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) v[comp[c]] += 1;
        for (const auto& [edge, ds] : darts) e2[comp[ds[0].crossing]] += 1;
        for (const auto& face : faces.faces) f[comp[face.front().first]] += 1;
        for (int i = 0; i < ncomp; ++i)
            if (v[i] - e2[i] + f[i] != 2)
                fail(ErrorKind::non_planar, "rotation system is not planar (V-E+F = " +
                                                std::to_string(v[i] - e2[i] + f[i]) + ")");
    }

    // Count link components (strands through crossings, plus free loops).
    d.components = static_cast<int>(component_passages(d).size()) + d.free_loops;
    return d;
}

LinkDiagram parse_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::parse_error, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_diagram(buf.str());
}

std::vector<std::vector<Passage>> component_passages(const LinkDiagram& d) {
    auto darts = edge_darts(d);
    std::vector<std::vector<Passage>> out;
    std::set<int> visited_edges;
    for (const auto& [edge0, ds0] : darts) {
        if (visited_edges.count(edge0)) continue;
        std::vector<Passage> passages;
        // Walk the strand starting by entering via edge0's first-listed dart.
        int c = ds0[0].crossing, s = ds0[0].slot, edge = edge0;
        do {
            visited_edges.insert(edge);
            const Crossing& cr = d.crossings[c];
            bool under = cr.over_bd ? (s % 2 == 0) : (s % 2 == 1);
            passages.push_back({c, s, under});
            int out_slot = (s + 2) % 4;
            edge = cr.edges[out_slot];
            // Continue into the other end of this edge.
            const auto& ds = darts.at(edge);
            if (ds[0].crossing == c && ds[0].slot == out_slot) {
                c = ds[1].crossing;
                s = ds[1].slot;
            } else {
                c = ds[0].crossing;
                s = ds[0].slot;
            }
        } while (edge != edge0);
        out.push_back(std::move(passages));
    }
    return out;
}

RegionMap compute_regions(const LinkDiagram& d) {
    RegionMap r;
    if (d.crossings.empty()) {
        if (d.free_loops != 1)
            fail(ErrorKind::disconnected, "need exactly one free loop when there are no crossings");
        r.regions = {{}, {}};
        r.colour = {Parity::white, Parity::black};
        r.outer_region = 0;
        return r;
    }
    if (d.free_loops > 0)
        fail(ErrorKind::disconnected, "free loops alongside crossings form a split union");

    auto darts = edge_darts(d);
    std::vector<int> comp = crossing_components(d, darts);
    if (*std::max_element(comp.begin(), comp.end()) != 0)
        fail(ErrorKind::disconnected, "diagram is a split union; decide its factors separately");

    FaceTrace faces = trace_faces(d, darts);
    int nfaces = static_cast<int>(faces.faces.size());
    if (nfaces != static_cast<int>(d.crossings.size()) + 2)
        fail(ErrorKind::internal, "face count does not match Euler formula");

    // Outer face: directive, or the left side of the lowest edge at its first
    // occurrence.
    int outer_face;
    {
        int edge = d.outer_directive ? d.outer_directive->first : darts.begin()->first;
        bool left = d.outer_directive ? d.outer_directive->second : true;
        auto it = darts.find(edge);
        if (it == darts.end())
            fail(ErrorKind::parse_error, "outer= names unknown edge " + std::to_string(edge));
        Dart first = it->second[0];
        int corner = left ? first.slot : (first.slot + 3) % 4;
        outer_face = faces.face_of_corner[first.crossing][corner];
    }

    // Labels: x0 = outer, then discovery order.
    std::vector<int> label_of_face(nfaces, -1);
    label_of_face[outer_face] = 0;
    int next = 1;
    for (int f = 0; f < nfaces; ++f)
        if (label_of_face[f] < 0) label_of_face[f] = next++;

    if (!d.relabel.empty()) {
        std::map<int, int> perm(d.relabel.begin(), d.relabel.end());
        std::set<int> sources, targets;
        for (const auto& [from, to] : perm) {
            sources.insert(from);
            targets.insert(to);
            if (from == 0 || to == 0)
                fail(ErrorKind::parse_error, "relabel must keep the outer region x0 fixed");
            if (from >= nfaces || to >= nfaces)
                fail(ErrorKind::parse_error, "relabel uses an out-of-range region label");
        }
        if (sources != targets)
            fail(ErrorKind::parse_error, "relabel is not a permutation of the region labels");
        for (int f = 0; f < nfaces; ++f) {
            auto it = perm.find(label_of_face[f]);
            if (it != perm.end()) label_of_face[f] = it->second;
        }
    }

    r.regions.assign(nfaces, {});
    r.region_of_corner.assign(d.crossings.size(), {-1, -1, -1, -1});
    for (int f = 0; f < nfaces; ++f) {
        int lbl = label_of_face[f];
        r.regions[lbl] = faces.faces[f];
        for (const auto& [c, k] : faces.faces[f]) r.region_of_corner[c][k] = lbl;
    }
    r.outer_region = 0;

    // Checkerboard colouring forced by "outer is white": regions across any
    // edge get opposite colours.
    r.colour.assign(nfaces, Parity::white);
    std::vector<bool> coloured(nfaces, false);
    coloured[0] = true;
    std::deque<int> queue{0};
    auto adjacency = region_adjacency(d, r);
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        for (int b : adjacency[a]) {
            if (!coloured[b]) {
                coloured[b] = true;
                r.colour[b] = opposite(r.colour[a]);
                queue.push_back(b);
            } else if (r.colour[b] == r.colour[a]) {
                fail(ErrorKind::internal, "projection is not checkerboard 2-colourable");
            }
        }
    }
    if (!std::all_of(coloured.begin(), coloured.end(), [](bool b) { return b; }))
        fail(ErrorKind::internal, "region colouring did not reach every region");
    return r;
}

std::vector<std::vector<int>> region_adjacency(const LinkDiagram& d, const RegionMap& r) {
    std::vector<std::set<int>> adj(r.count());
    if (d.crossings.empty()) {
        adj[0].insert(1);
        adj[1].insert(0);
    }
    auto darts = edge_darts(d);
    for (const auto& [edge, ds] : darts) {
        int c = ds[0].crossing, s = ds[0].slot;
        int a = r.region_of_corner[c][s];
        int b = r.region_of_corner[c][(s + 3) % 4];
        if (a != b) {
            adj[a].insert(b);
            adj[b].insert(a);
        }
    }
    std::vector<std::vector<int>> out(r.count());
    for (int i = 0; i < r.count(); ++i) out[i].assign(adj[i].begin(), adj[i].end());
    return out;
}

int region_distance(const std::vector<std::vector<int>>& adjacency, int from, int to) {
    if (from == to) return 0;
    std::vector<int> dist(adjacency.size(), -1);
    dist[from] = 0;
    std::deque<int> queue{from};
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        for (int b : adjacency[a]) {
            if (dist[b] < 0) {
                dist[b] = dist[a] + 1;
                if (b == to) return dist[b];
                queue.push_back(b);
            }
        }
    }
    return dist[to];
}

ProjectionClass classify_projection(const LinkDiagram& d, const RegionMap& r) {
    ProjectionClass out;
    if (d.crossings.empty()) {
        out.alternating = out.reduced = out.elementary = true;
        return out;
    }

    out.alternating = true;
    for (const auto& passages : component_passages(d)) {
        for (std::size_t i = 0; i < passages.size(); ++i)
            if (passages[i].under == passages[(i + 1) % passages.size()].under) {
                out.alternating = false;
                break;
            }
        if (!out.alternating) break;
    }

    out.reduced = true;
    for (const auto& corners : r.region_of_corner) {
        std::set<int> distinct(corners.begin(), corners.end());
        if (distinct.size() != 4) {
            out.reduced = false;
            break;
        }
    }

    out.elementary = out.reduced;
    if (out.elementary) {
        auto darts = edge_darts(d);
        std::map<std::pair<int, int>, int> shared;
        for (const auto& [edge, ds] : darts) {
            int c = ds[0].crossing, s = ds[0].slot;
            int a = r.region_of_corner[c][s];
            int b = r.region_of_corner[c][(s + 3) % 4];
            if (a == b) continue;
            auto key = std::minmax(a, b);
            if (++shared[{key.first, key.second}] > 1) {
                out.elementary = false;
                break;
            }
        }
    }
    return out;
}

SymPresentation augmented_dehn(const RegionMap& r, const LinkDiagram& d) {
    std::vector<int> gens(r.count());
    std::iota(gens.begin(), gens.end(), 0);

    // Parity is the checkerboard colour of the labelling region, outer white.
    std::unordered_map<int, Parity> parities;
    for (int i = 0; i < r.count(); ++i) parities[i] = r.colour[i];

    std::vector<Word> relators;
    for (std::size_t c = 0; c < d.crossings.size(); ++c) {
        int s = d.crossings[c].under_in_slot();
        const auto& corner = r.region_of_corner[c];
        int a = corner[(s + 3) % 4];
        int b = corner[s % 4];
        int cc = corner[(s + 1) % 4];
        int dd = corner[(s + 2) % 4];
        relators.push_back(Word({make_letter(a, +1), make_letter(b, -1), make_letter(cc, +1),
                                 make_letter(dd, -1)}));
    }
    SymPresentation p(std::move(gens), std::move(relators), std::move(parities));
    // Corner-ordering bug guard: the constructor has verified that every
    // relator alternates in parity (ConventionMismatch otherwise).
    return p;
}

}  // namespace linkgrp
