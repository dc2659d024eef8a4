#include "linkgrp/topology.hpp"

#include <algorithm>

#include "linkgrp/errors.hpp"

namespace linkgrp {

Word include_word(const Word& w) {
    std::vector<Letter> out;
    out.reserve(2 * w.size());
    for (Letter l : w.letters()) {
        if (gen_index(l) == 0) fail(ErrorKind::contains_x0, "word already mentions x0");
        if (l > 0) {
            out.push_back(l);
            out.push_back(make_letter(0, -1));
        } else {
            out.push_back(make_letter(0, +1));
            out.push_back(l);
        }
    }
    return Word(std::move(out));
}

Word canonical_word(const IntersectionSequence& s) {
    std::vector<Letter> out;
    out.reserve(s.entries.size());
    for (const auto& [region, dir] : s.entries)
        out.push_back(make_letter(region, dir == Direction::down ? +1 : -1));
    Word w{std::move(out)};
    if (w.size() % 2 != 0)
        fail(ErrorKind::not_loop_like, "intersection sequence has odd length");
    if (!w.alternates_in_sign())
        fail(ErrorKind::not_loop_like, "directions do not alternate");
    return w;
}

LongitudeSpec longitude_word(const LinkDiagram& d, const RegionMap& r, int component) {
    ProjectionClass cls = classify_projection(d, r);
    if (!cls.alternating || !cls.reduced || !cls.elementary)
        fail(ErrorKind::preconditions_violated,
             "longitudes need a reduced alternating elementary projection");
    auto all = component_passages(d);
    if (component < 0 || component >= static_cast<int>(all.size()) + d.free_loops)
        fail(ErrorKind::preconditions_violated, "no such component");
    if (component >= static_cast<int>(all.size()))
        fail(ErrorKind::preconditions_violated, "component has no crossings");
    const auto& passages = all[component];

    // The double runs just above the plane on the left of the strand and dips
    // below it alongside every under-arc: down through the region on the left
    // before the crossing, up through the one on the left after it.
    IntersectionSequence raw;
    for (const Passage& pass : passages) {
        if (!pass.under) continue;
        int s = pass.enter_slot;
        int before = r.region_of_corner[pass.crossing][(s + 3) % 4];
        int after = r.region_of_corner[pass.crossing][(s + 2) % 4];
        raw.entries.push_back({before, Direction::down});
        raw.entries.push_back({after, Direction::up});
    }
    if (raw.entries.empty())
        fail(ErrorKind::preconditions_violated, "component has no under-crossings");

    // Zigzag normalization: rotate the cyclic sequence so it starts white and
    // ends black, then stably partition whites before blacks.
    auto colour = [&](const std::pair<int, Direction>& e) { return r.colour[e.first]; };
    std::size_t m = raw.entries.size();
    std::size_t start = m;
    for (std::size_t i = 0; i < m; ++i) {
        if (colour(raw.entries[i]) == Parity::white &&
            colour(raw.entries[(i + m - 1) % m]) == Parity::black) {
            start = i;
            break;
        }
    }
    if (start == m)
        fail(ErrorKind::internal, "double meets only one colour of region");
    std::vector<std::pair<int, Direction>> rotated;
    rotated.reserve(m);
    for (std::size_t i = 0; i < m; ++i) rotated.push_back(raw.entries[(start + i) % m]);
    std::stable_partition(rotated.begin(), rotated.end(),
                          [&](const auto& e) { return colour(e) == Parity::white; });

    std::vector<Letter> letters;
    letters.reserve(m);
    for (const auto& [region, dir] : rotated)
        letters.push_back(make_letter(region, dir == Direction::down ? +1 : -1));

    LongitudeSpec spec;
    spec.component = component;
    spec.raw = raw;
    spec.word = free_reduce(Word(std::move(letters)));
    for (std::size_t i = 0; i + 1 < spec.word.size(); ++i)
        if (r.colour[gen_index(spec.word[i])] != r.colour[gen_index(spec.word[i + 1])])
            ++spec.parity_changes;
    return spec;
}

NontrivialityReport is_nontrivial(const LinkDiagram& d) {
    RegionMap r = compute_regions(d);
    ProjectionClass cls = classify_projection(d, r);
    if (!cls.alternating || !cls.reduced || !cls.elementary)
        fail(ErrorKind::preconditions_violated,
             "need a reduced alternating elementary projection");
    if (d.free_loops > 0)
        fail(ErrorKind::preconditions_violated, "a crossing-free component has no longitude word");
    SymPresentation p = augmented_dehn(r, d);

    NontrivialityReport report;
    int n = static_cast<int>(component_passages(d).size());
    for (int i = 0; i < n; ++i) {
        LongitudeSpec spec = longitude_word(d, r, i);
        auto [geo, trace] = reduce_to_geodesic(p, spec.word);
        report.components.push_back({i, spec.word, geo, spec.parity_changes});
        if (!geo.empty()) report.nontrivial = true;
    }
    return report;
}

std::vector<MoveTag> annotate_moves(const SymPresentation& p, const ReductionTrace& t) {
    std::vector<MoveTag> out;
    for (const ReductionStep& step : t.steps) {
        switch (step.kind) {
            case StepKind::free_reduction: {
                std::size_t cancelled = (step.before.size() - step.after.size()) / 2;
                for (std::size_t i = 0; i < cancelled; ++i)
                    out.push_back({MoveType::type1_reduction, std::nullopt});
                break;
            }
            case StepKind::pair_exchange: {
                std::optional<Parity> colour;
                if (p.has_parity()) colour = p.parity_of(step.before[step.at]);
                out.push_back({MoveType::type2_deformation, colour});
                break;
            }
            case StepKind::chain_collapse: {
                // a t_1 .. t_n b -> s_1 u_1 t_2 .. b -> ... -> s_1 .. s_n b^-1 b:
                // n pair exchanges, then one free reduction.
                std::optional<Parity> colour;
                if (p.has_parity() && step.chain)
                    colour = p.parity_of(step.chain->chain_word[0]);
                std::size_t n = step.chain ? step.chain->n() : 0;
                for (std::size_t i = 0; i < n; ++i)
                    out.push_back({MoveType::type2_deformation, colour});
                out.push_back({MoveType::type1_reduction, std::nullopt});
                break;
            }
            case StepKind::cyclic_permutation:
                out.push_back({MoveType::basepoint_move, std::nullopt});
                break;
        }
    }
    return out;
}

}  // namespace linkgrp
