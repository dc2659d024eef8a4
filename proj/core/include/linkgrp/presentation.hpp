#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "linkgrp/word.hpp"

namespace linkgrp {

enum class Parity : std::uint8_t { white, black };

inline Parity opposite(Parity p) { return p == Parity::white ? Parity::black : Parity::white; }
inline const char* to_string(Parity p) { return p == Parity::white ? "white" : "black"; }

struct Generator {
    int index = 0;
    Parity parity = Parity::white;
};

enum class TwoLetterClass : std::uint8_t { pair, sister_set, pseudo_pair, none };

const char* to_string(TwoLetterClass c);

// Closure of the cyclic reductions under inverses and cyclic permutations.
// Idempotent; works for relators of any length.
std::vector<Word> symmetrize(const std::vector<Word>& relators);

// A symmetrized group presentation whose relators all have length 4, with an
// optional parity on the generators (letters of each relator alternate in
// parity when one exists). Immutable after construction; all lookup tables
// are precomputed, so shared use across threads is safe.
class SymPresentation {
  public:
    // base_relators are symmetrized internally. Parities may be empty (no
    // parity); otherwise one entry per generator index present.
    SymPresentation(std::vector<int> generator_indices,
                    std::vector<Word> base_relators,
                    std::unordered_map<int, Parity> parities = {});

    const std::vector<int>& generator_indices() const { return generators_; }
    bool has_generator(int index) const { return present_.count(index) != 0; }

    const std::vector<Word>& relators() const { return relators_; }
    const std::vector<Word>& base_relators() const { return base_relators_; }

    bool has_parity() const { return has_parity_; }
    Parity parity(int gen_index) const;
    Parity parity_of(Letter l) const { return parity(gen_index(l)); }

    // True iff ab is a two-letter subword of some relator.
    bool is_pair(Letter a, Letter b) const;
    // The relators rotated to begin with the two-letter word ab (at most one
    // in a C''(4) presentation).
    const std::vector<Word>& relators_for_pair(Letter a, Letter b) const;
    // Unique relator rotation beginning with ab; requires C''(4) uniqueness.
    const Word& relator_for_pair(Letter a, Letter b) const;

    // Letters b such that ab is a pair.
    const std::vector<Letter>& pair_successors(Letter a) const;
    // Letters a such that ab is a pair.
    const std::vector<Letter>& pair_predecessors(Letter b) const;

    TwoLetterClass classify_two_letter(Letter a, Letter b) const;
    bool is_pseudo_pair(Letter a, Letter b) const;
    bool is_sister_set(Letter a, Letter b) const;

    // The equal-in-group exchanged pair: for relator abcd, ab = d^-1 c^-1.
    // Involution. Throws NotAPair / NotSmallCancellation.
    Word exchange_pair(Letter a, Letter b) const;
    Word exchange_pair(const Word& two_letter) const;

    // The region pairs of every pseudo-pair, for diagram cross-checks.
    std::vector<std::pair<int, int>> pseudo_pair_regions() const;

    void validate_word(const Word& w) const;

  private:
    static std::uint64_t key(Letter a, Letter b) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
               static_cast<std::uint64_t>(static_cast<std::uint32_t>(b));
    }
    void build_pair_tables();
    void build_pseudo_pairs();

    std::vector<int> generators_;
    std::unordered_set<int> present_;
    std::vector<Word> base_relators_;
    std::vector<Word> relators_;
    bool has_parity_ = false;
    std::unordered_map<int, Parity> parities_;

    std::unordered_map<std::uint64_t, std::vector<Word>> pair_table_;
    std::unordered_map<Letter, std::vector<Letter>> pair_succ_;
    std::unordered_map<Letter, std::vector<Letter>> pair_pred_;
    std::unordered_set<std::uint64_t> pseudo_pairs_;
};

struct C4Report {
    bool ok = true;
    // On failure: two distinct relators sharing the length-2 piece.
    Word piece;
    Word relator_a;
    Word relator_b;
};

struct T4Report {
    bool ok = true;
    // On failure: a triple, pairwise non-inverse, whose three products all cancel.
    Word r1, r2, r3;
};

// C''(4): all relators have length 4 and none is a product of fewer than four
// pieces. For length-4 relators this reduces to: no two distinct relators
// share a length-2 prefix.
C4Report check_c4(const SymPresentation& p);

// T(4): for any three relators, no two mutually inverse, at least one of
// r1 r2, r2 r3, r3 r1 is freely reduced without cancellation.
T4Report check_t4(const SymPresentation& p);

inline bool is_small_cancellation(const SymPresentation& p) {
    return check_c4(p).ok && check_t4(p).ok;
}

// Presentation file: one relator per line (x<k> / x<k>^-1 tokens), optional
// `parity x<k> = white|black` and `generators x<a> x<b> ...` directives,
// '#' comments.
SymPresentation load_presentation(const std::string& text);
SymPresentation load_presentation_file(const std::string& path);

std::string format_presentation(const SymPresentation& p);

}  // namespace linkgrp
