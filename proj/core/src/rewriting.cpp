#include "linkgrp/rewriting.hpp"

#include <algorithm>

#include "linkgrp/errors.hpp"

namespace linkgrp {

void require_small_cancellation(const SymPresentation& p) {
    if (!check_c4(p).ok || !check_t4(p).ok)
        fail(ErrorKind::not_small_cancellation,
             "presentation does not satisfy the C''(4)-T(4) conditions");
}

std::optional<ChainOccurrence> chain_at(const SymPresentation& p, const Word& w,
                                        std::size_t start, std::optional<Parity> colour_filter) {
    if (start + 3 > w.size()) return std::nullopt;
    Letter vertical = w[start];
    std::vector<Word> columns;
    std::vector<Letter> inner;
    for (std::size_t i = start + 1; i < w.size(); ++i) {
        Letter next = w[i];
        if (!inner.empty() && next == -vertical) {
            // The chain closes: w[start..i] is a chain word.
            ChainOccurrence occ;
            occ.start = start;
            occ.chain_word = w.subword(start, i - start + 1);
            occ.inner_link_path = Word(inner);
            occ.columns = columns;
            if (p.has_parity()) occ.colour = p.parity_of(inner.front());
            if (colour_filter && occ.colour != *colour_filter) return std::nullopt;
            return occ;
        }
        const auto& bucket = p.relators_for_pair(vertical, next);
        if (bucket.empty()) return std::nullopt;
        if (bucket.size() > 1)
            fail(ErrorKind::not_small_cancellation,
                 "pair '" + Word({vertical, next}).str() + "' determines more than one relator");
        const Word& r = bucket.front();  // v_{k-1} t_k v_k^-1 s_k^-1
        columns.push_back(r);
        vertical = -r[2];
        inner.push_back(-r[3]);
    }
    return std::nullopt;
}

std::vector<ChainOccurrence> find_chains(const SymPresentation& p, const Word& w,
                                         std::optional<Parity> colour_filter) {
    std::vector<ChainOccurrence> found;
    for (std::size_t start = 0; start + 3 <= w.size(); ++start)
        if (auto occ = chain_at(p, w, start, colour_filter)) found.push_back(std::move(*occ));
    // Keep maximal occurrences only.
    std::vector<ChainOccurrence> out;
    for (const auto& occ : found) {
        bool contained = false;
        for (const auto& other : found) {
            if (other.start <= occ.start &&
                other.start + other.chain_word.size() >= occ.start + occ.chain_word.size() &&
                other.chain_word.size() > occ.chain_word.size()) {
                contained = true;
                break;
            }
        }
        if (!contained) out.push_back(occ);
    }
    return out;
}

Word collapse_chain(const Word& w, const ChainOccurrence& c) {
    if (c.start + c.chain_word.size() > w.size() ||
        w.subword(c.start, c.chain_word.size()) != c.chain_word)
        fail(ErrorKind::stale_occurrence, "chain occurrence does not match the word");
    std::vector<Letter> out;
    out.reserve(w.size() - 2);
    for (std::size_t i = 0; i < c.start; ++i) out.push_back(w[i]);
    for (Letter l : c.inner_link_path.letters()) out.push_back(l);
    for (std::size_t i = c.start + c.chain_word.size(); i < w.size(); ++i) out.push_back(w[i]);
    return Word(std::move(out));
}

std::pair<Word, ReductionTrace> reduce_to_geodesic(const SymPresentation& p, const Word& w,
                                                   std::optional<Parity> colour_filter) {
    require_small_cancellation(p);
    p.validate_word(w);
    ReductionTrace trace;
    Word cur = w;
    for (;;) {
        if (!cur.is_freely_reduced()) {
            Word next = free_reduce(cur);
            trace.steps.push_back({StepKind::free_reduction, cur, next, std::nullopt, 0, 0});
            cur = std::move(next);
            continue;
        }
        bool rewrote = false;
        for (std::size_t start = 0; start + 3 <= cur.size(); ++start) {
            if (auto occ = chain_at(p, cur, start, colour_filter)) {
                Word next = collapse_chain(cur, *occ);
                trace.steps.push_back(
                    {StepKind::chain_collapse, cur, next, occ, occ->start, 0});
                cur = std::move(next);
                rewrote = true;
                break;
            }
        }
        if (!rewrote) break;
    }
    return {cur, std::move(trace)};
}

bool is_geodesic(const SymPresentation& p, const Word& w) {
    if (!w.is_freely_reduced()) return false;
    for (std::size_t start = 0; start + 3 <= w.size(); ++start)
        if (chain_at(p, w, start)) return false;
    return true;
}

bool is_identity(const SymPresentation& p, const Word& w) {
    return reduce_to_geodesic(p, w).first.empty();
}

std::pair<Word, ReductionTrace> cyclic_geodesic(const SymPresentation& p, const Word& w) {
    require_small_cancellation(p);
    ReductionTrace trace;
    auto reduce_into = [&](const Word& v) {
        auto [g, t] = reduce_to_geodesic(p, v);
        for (auto& s : t.steps) trace.steps.push_back(std::move(s));
        return g;
    };
    Word cur = reduce_into(w);
    for (;;) {
        bool shortened = false;
        for (std::size_t k = 0; k < cur.size(); ++k) {
            Word rot = cur.rotated(k);
            if (k != 0)
                trace.steps.push_back({StepKind::cyclic_permutation, cur, rot, std::nullopt, 0, k});
            Word g = reduce_into(rot);
            if (g.size() < cur.size()) {
                cur = g;
                shortened = true;
                break;
            }
        }
        if (!shortened || cur.empty()) break;
    }
    return {cur, std::move(trace)};
}

ProcessYResult process_y(const SymPresentation& p, const Word& w) {
    if (!p.has_parity()) fail(ErrorKind::no_parity, "process Y needs a parity assignment");
    if (w.size() < 2) fail(ErrorKind::bad_parity_shape, "word too short for process Y");
    if (p.parity_of(w[0]) != Parity::black || p.parity_of(w[w.size() - 1]) != Parity::black)
        fail(ErrorKind::bad_parity_shape, "word must begin and end with parity black");
    for (std::size_t i = 1; i + 1 < w.size(); ++i)
        if (p.parity_of(w[i]) != Parity::white)
            fail(ErrorKind::bad_parity_shape, "interior letters must have parity white");

    // Cascade the black head rightward; emitted inner letters accumulate.
    std::vector<Letter> emitted;
    Letter head = w[0];
    std::size_t i = 1;
    while (i + 1 < w.size()) {
        const auto& bucket = p.relators_for_pair(head, w[i]);
        if (bucket.empty()) break;
        if (bucket.size() > 1)
            fail(ErrorKind::not_small_cancellation, "ambiguous pair in process Y");
        const Word& r = bucket.front();
        emitted.push_back(-r[3]);
        head = -r[2];
        ++i;
    }
    ProcessYResult res;
    if (i + 1 == w.size()) {
        res.success = (w[w.size() - 1] == -head);
    }
    if (i == 1 && emitted.empty() && !res.success) {
        res.final = w;  // head two letters never formed a pair
        return res;
    }
    std::vector<Letter> fin(emitted);
    fin.push_back(head);
    for (std::size_t j = i; j < w.size(); ++j) fin.push_back(w[j]);
    res.final = Word(std::move(fin));
    return res;
}

Word switch_word(const SymPresentation& p, const Word& w) {
    ProcessYResult y = process_y(p, w);
    if (!y.success) fail(ErrorKind::process_y_failed, "process Y was not successful");
    // y.final = s_1 ... s_n u_n v(2) with u_n = v(2)^-1; cancel the spike.
    Word out = y.final.subword(0, y.final.size() - 2);
    return out;
}

bool dugopolski_is_identity(const SymPresentation& p, const Word& w) {
    require_small_cancellation(p);
    if (!p.has_parity()) fail(ErrorKind::no_parity, "the variant needs a parity assignment");
    Word cur = cyclic_free_reduce(w);
    for (;;) {
        bool rewrote = false;
        for (std::size_t k = 0; k < cur.size() && !rewrote; ++k) {
            Word rot = cur.rotated(k);
            for (std::size_t start = 0; start + 3 <= rot.size(); ++start) {
                if (auto occ = chain_at(p, rot, start, Parity::white)) {
                    cur = cyclic_free_reduce(collapse_chain(rot, *occ));
                    rewrote = true;
                    break;
                }
            }
        }
        if (!rewrote) break;
    }
    return cur.empty();
}

}  // namespace linkgrp
