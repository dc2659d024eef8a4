#pragma once

#include <cstdint>
#include <optional>

#include "linkgrp/presentation.hpp"
#include "linkgrp/word.hpp"

namespace linkgrp {

enum class OracleAnswer : std::uint8_t { yes, no, unknown };

inline const char* to_string(OracleAnswer a) {
    switch (a) {
        case OracleAnswer::yes: return "yes";
        case OracleAnswer::no: return "no";
        case OracleAnswer::unknown: return "unknown";
    }
    return "unknown";
}

struct OracleVerdict {
    OracleAnswer answer = OracleAnswer::unknown;
    std::uint64_t explored = 0;
    std::size_t length_cap = 0;
    std::size_t depth_cap = 0;
};

struct OracleCaps {
    std::size_t length_cap = 0;  // 0: defaults to 2|w| + 4
    std::size_t depth_cap = 0;   // 0: defaults to 10 * (|w| + 4)
    std::size_t conjugator_cap = 3;
    std::uint64_t state_cap = 2'000'000;  // hard safety bound on visited states
};

// Breadth-first closure of free_reduce(w) under inserting / deleting
// cancelling pairs and replacing a relator prefix r' by the inverse of the
// relator's remainder, restricted to words of length <= length_cap. yes iff
// the empty word is reached; no iff the closure exhausts without truncation
// and length_cap >= 2|w| + 4; unknown otherwise.
OracleVerdict oracle_is_identity(const SymPresentation& p, const Word& w, OracleCaps caps = {});

// yes iff some conjugator c with |c| <= conjugator_cap gives
// oracle_is_identity(c w c^-1 u^-1), or u is reachable from a cyclic
// permutation of w in the bounded closure under relator-subword replacement
// and cyclic free reduction; no on full exhaustion with the completeness
// margin; unknown otherwise.
OracleVerdict oracle_are_conjugate(const SymPresentation& p, const Word& u, const Word& w,
                                   OracleCaps caps = {});

// Length of a shortest word equal to w, by exhaustive closure under pair
// exchange and free cancellation. Rewrites never grow the word, so for
// deciding geodesy of w the closure at length cap |w| is exact.
std::size_t oracle_shortest_equal_length(const SymPresentation& p, const Word& w);

}  // namespace linkgrp
