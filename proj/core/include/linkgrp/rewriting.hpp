#pragma once

#include <optional>
#include <vector>

#include "linkgrp/presentation.hpp"
#include "linkgrp/word.hpp"

namespace linkgrp {

// A located chain subword: an n x 1 reduced disk of relator squares whose
// boundary splits into the chain word t_0 t_1 ... t_{n+1} (left end up, top
// rightward, right end down) and the inner link path s_1 ... s_n along the
// bottom. Column k reads the relator v_{k-1} t_k v_k^-1 s_k^-1 clockwise from
// its bottom-left corner.
struct ChainOccurrence {
    std::size_t start = 0;
    Word chain_word;       // n + 2 letters
    Word inner_link_path;  // n letters, equal to chain_word in the group
    std::vector<Word> columns;
    std::optional<Parity> colour;  // parity of the inner link path

    std::size_t n() const { return inner_link_path.size(); }
};

enum class StepKind { free_reduction, chain_collapse, pair_exchange, cyclic_permutation };

struct ReductionStep {
    StepKind kind;
    Word before;
    Word after;
    std::optional<ChainOccurrence> chain;  // chain_collapse only
    std::size_t at = 0;                    // position of the rewrite
    std::size_t rotation = 0;              // cyclic_permutation only
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
};

// Detects whether w[start..] begins a chain word, extending columns while the
// running vertical edge and the next letter form a pair and closing when the
// next letter matches the final vertical edge inverted.
std::optional<ChainOccurrence> chain_at(const SymPresentation& p, const Word& w,
                                        std::size_t start,
                                        std::optional<Parity> colour_filter = std::nullopt);

// All maximal chain subwords of the freely reduced word w, optionally
// restricted to a given inner-link-path colour.
std::vector<ChainOccurrence> find_chains(const SymPresentation& p, const Word& w,
                                         std::optional<Parity> colour_filter = std::nullopt);

// Replaces the chain word by its inner link path; shortens by exactly 2.
Word collapse_chain(const Word& w, const ChainOccurrence& c);

// Dehn-style reduction: freely reduce, collapse the leftmost chain, repeat.
// The unfiltered output is geodesic: freely reduced with no chain subwords.
std::pair<Word, ReductionTrace> reduce_to_geodesic(const SymPresentation& p, const Word& w,
                                                   std::optional<Parity> colour_filter = std::nullopt);

bool is_geodesic(const SymPresentation& p, const Word& w);

// w = 1 iff its geodesic is empty.
bool is_identity(const SymPresentation& p, const Word& w);

// A cyclically geodesic word conjugate to w: rounds of geodesic reduction
// over all cyclic permutations until none shortens.
std::pair<Word, ReductionTrace> cyclic_geodesic(const SymPresentation& p, const Word& w);

struct ProcessYResult {
    bool success = false;
    Word final;
};

// Head-substitution cascade on a word v(1) w(1) ... w(n) v(2) with v's black
// and w's white: while the leading two letters are a pair, replace the black
// head with the relator's other black letter; successful when the terminal
// two-letter word freely cancels.
ProcessYResult process_y(const SymPresentation& p, const Word& w);

// The full substitution cascade plus the final cancellation. Equals
// collapse_chain on the corresponding chain.
Word switch_word(const SymPresentation& p, const Word& w);

// Word-problem decision using free reductions over the cyclic word plus
// collapses of chains that begin and end in a letter of parity black (white
// inner link path) only.
bool dugopolski_is_identity(const SymPresentation& p, const Word& w);

void require_small_cancellation(const SymPresentation& p);

}  // namespace linkgrp
