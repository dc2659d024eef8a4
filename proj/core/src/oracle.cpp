#include "linkgrp/oracle.hpp"

#include <deque>
#include <unordered_set>

#include "linkgrp/errors.hpp"

namespace linkgrp {

namespace {

std::vector<Letter> all_letters(const SymPresentation& p) {
    std::vector<Letter> out;
    for (int g : p.generator_indices()) {
        out.push_back(make_letter(g, +1));
        out.push_back(make_letter(g, -1));
    }
    return out;
}

// Words reachable from w in one move: delete a cancelling pair, insert a
// cancelling pair, or replace a relator prefix r' (length 1..3) by the
// inverse of the remainder of that relator.
template <typename Emit>
void neighbours(const SymPresentation& p, const std::vector<Letter>& letters, const Word& w,
                std::size_t length_cap, Emit&& emit) {
    const auto& ls = w.letters();
    for (std::size_t i = 0; i + 1 < ls.size(); ++i)
        if (ls[i] == -ls[i + 1]) {
            std::vector<Letter> next(ls);
            next.erase(next.begin() + static_cast<std::ptrdiff_t>(i),
                       next.begin() + static_cast<std::ptrdiff_t>(i + 2));
            emit(Word(std::move(next)));
        }
    if (ls.size() + 2 <= length_cap)
        for (std::size_t i = 0; i <= ls.size(); ++i)
            for (Letter l : letters) {
                std::vector<Letter> next(ls);
                next.insert(next.begin() + static_cast<std::ptrdiff_t>(i), {l, -l});
                emit(Word(std::move(next)));
            }
    for (const Word& r : p.relators()) {
        for (std::size_t k = 1; k < r.size(); ++k) {
            // prefix r[0..k) replaced by inverse of r[k..)
            std::size_t grow = r.size() - 2 * k;
            if (grow > 0 && ls.size() + grow > length_cap) continue;
            for (std::size_t i = 0; i + k <= ls.size(); ++i) {
                bool match = true;
                for (std::size_t j = 0; j < k; ++j)
                    if (ls[i + j] != r[j]) {
                        match = false;
                        break;
                    }
                if (!match) continue;
                std::vector<Letter> next;
                next.reserve(ls.size() - k + (r.size() - k));
                next.insert(next.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(i));
                for (std::size_t j = r.size(); j > k; --j) next.push_back(-r[j - 1]);
                next.insert(next.end(), ls.begin() + static_cast<std::ptrdiff_t>(i + k), ls.end());
                emit(Word(std::move(next)));
            }
        }
    }
}

}  // namespace

OracleVerdict oracle_is_identity(const SymPresentation& p, const Word& w, OracleCaps caps) {
    Word start = free_reduce(w);
    if (caps.length_cap == 0) caps.length_cap = 2 * start.size() + 4;
    if (caps.depth_cap == 0) caps.depth_cap = 10 * (start.size() + 4);

    OracleVerdict verdict;
    verdict.length_cap = caps.length_cap;
    verdict.depth_cap = caps.depth_cap;

    if (start.empty()) {
        verdict.answer = OracleAnswer::yes;
        verdict.explored = 1;
        return verdict;
    }

    std::vector<Letter> letters = all_letters(p);
    std::unordered_set<Word, WordHash> visited{start};
    std::deque<Word> frontier{start};
    bool truncated = false;
    bool found = false;
    std::size_t depth = 0;
    while (!frontier.empty() && !found) {
        if (++depth > caps.depth_cap) {
            truncated = true;
            break;
        }
        std::deque<Word> next_frontier;
        for (const Word& cur : frontier) {
            neighbours(p, letters, cur, caps.length_cap, [&](Word next) {
                if (found || visited.count(next)) return;
                if (next.empty()) {
                    found = true;
                    return;
                }
                if (visited.size() >= caps.state_cap) {
                    truncated = true;
                    return;
                }
                visited.insert(next);
                next_frontier.push_back(std::move(next));
            });
            if (found) break;
        }
        frontier = std::move(next_frontier);
    }
    verdict.explored = visited.size();
    if (found)
        verdict.answer = OracleAnswer::yes;
    else if (!truncated && caps.length_cap >= 2 * start.size() + 4)
        verdict.answer = OracleAnswer::no;
    else
        verdict.answer = OracleAnswer::unknown;
    return verdict;
}

OracleVerdict oracle_are_conjugate(const SymPresentation& p, const Word& u, const Word& w,
                                   OracleCaps caps) {
    Word ur = free_reduce(u);
    Word wr = free_reduce(w);
    std::size_t longest = std::max(ur.size(), wr.size());
    if (caps.length_cap == 0) caps.length_cap = 2 * longest + 4;
    if (caps.depth_cap == 0) caps.depth_cap = 10 * (longest + 4);

    OracleVerdict verdict;
    verdict.length_cap = caps.length_cap;
    verdict.depth_cap = caps.depth_cap;

    // Reachability: closure of the cyclic word of w under relator-subword
    // replacement, cyclic free reduction and rotation.
    std::unordered_set<Word, WordHash> visited;
    {
        Word start = min_rotation(cyclic_free_reduce(wr));
        Word target = min_rotation(cyclic_free_reduce(ur));
        std::vector<Letter> letters = all_letters(p);
        std::deque<Word> frontier{start};
        visited.insert(start);
        bool truncated = false;
        bool found = (start == target);
        std::size_t depth = 0;
        while (!frontier.empty() && !found) {
            if (++depth > caps.depth_cap) {
                truncated = true;
                break;
            }
            std::deque<Word> next_frontier;
            for (const Word& cur : frontier) {
                // Apply moves to every rotation so that seam-crossing
                // subwords are reachable too.
                for (std::size_t k = 0; k < std::max<std::size_t>(cur.size(), 1); ++k) {
                    Word rot = cur.rotated(k);
                    neighbours(p, letters, rot, caps.length_cap, [&](Word next) {
                        if (found) return;
                        Word canon = min_rotation(cyclic_free_reduce(next));
                        if (visited.count(canon)) return;
                        if (canon == target) {
                            found = true;
                            return;
                        }
                        if (visited.size() >= caps.state_cap) {
                            truncated = true;
                            return;
                        }
                        visited.insert(canon);
                        next_frontier.push_back(std::move(canon));
                    });
                    if (found) break;
                }
                if (found) break;
            }
            frontier = std::move(next_frontier);
        }
        verdict.explored = visited.size();
        if (found) {
            verdict.answer = OracleAnswer::yes;
            return verdict;
        }
        if (!truncated && caps.length_cap >= 2 * longest + 4) {
            verdict.answer = OracleAnswer::no;
            return verdict;
        }
    }

    // Conjugator enumeration fallback: c w c^-1 u^-1 = 1 for short c.
    std::vector<Letter> letters = all_letters(p);
    std::vector<Word> conjugators{Word()};
    for (std::size_t len = 1; len <= caps.conjugator_cap; ++len) {
        std::vector<Word> next;
        for (const Word& c : conjugators) {
            if (c.size() != len - 1) continue;
            for (Letter l : letters) {
                if (!c.empty() && c[c.size() - 1] == -l) continue;
                Word ext = c;
                ext.push_back(l);
                next.push_back(ext);
            }
        }
        for (const Word& c : next) {
            Word probe = free_reduce(c * wr * c.inverse() * ur.inverse());
            OracleVerdict inner = oracle_is_identity(p, probe, caps);
            verdict.explored += inner.explored;
            if (inner.answer == OracleAnswer::yes) {
                verdict.answer = OracleAnswer::yes;
                return verdict;
            }
        }
        conjugators.insert(conjugators.end(), next.begin(), next.end());
    }
    verdict.answer = OracleAnswer::unknown;
    return verdict;
}

std::size_t oracle_shortest_equal_length(const SymPresentation& p, const Word& w) {
    Word start = free_reduce(w);
    std::unordered_set<Word, WordHash> visited{start};
    std::deque<Word> frontier{start};
    std::size_t best = start.size();
    while (!frontier.empty()) {
        Word cur = frontier.front();
        frontier.pop_front();
        best = std::min(best, cur.size());
        const auto& ls = cur.letters();
        auto push = [&](Word next) {
            if (!visited.count(next)) {
                visited.insert(next);
                frontier.push_back(std::move(next));
            }
        };
        for (std::size_t i = 0; i + 1 < ls.size(); ++i)
            if (ls[i] == -ls[i + 1]) {
                std::vector<Letter> next(ls);
                next.erase(next.begin() + static_cast<std::ptrdiff_t>(i),
                           next.begin() + static_cast<std::ptrdiff_t>(i + 2));
                push(Word(std::move(next)));
            }
        // Exchange a two-letter relator subword for the inverse of the
        // relator's remainder; length-preserving.
        for (const Word& r : p.relators())
            for (std::size_t i = 0; i + 2 <= ls.size(); ++i)
                if (ls[i] == r[0] && ls[i + 1] == r[1]) {
                    std::vector<Letter> next(ls);
                    next[i] = -r[3];
                    next[i + 1] = -r[2];
                    push(Word(std::move(next)));
                }
    }
    return best;
}

}  // namespace linkgrp
