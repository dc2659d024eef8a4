#include "linkgrp/word.hpp"

#include <algorithm>
#include <sstream>

#include "linkgrp/errors.hpp"

namespace linkgrp {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse_error: return "ParseError";
        case ErrorKind::non_planar: return "NonPlanar";
        case ErrorKind::dangling_edge: return "DanglingEdge";
        case ErrorKind::disconnected: return "Disconnected";
        case ErrorKind::convention_mismatch: return "ConventionMismatch";
        case ErrorKind::not_a_pair: return "NotAPair";
        case ErrorKind::stale_occurrence: return "StaleOccurrence";
        case ErrorKind::not_small_cancellation: return "NotSmallCancellation";
        case ErrorKind::bad_parity_shape: return "BadParityShape";
        case ErrorKind::process_y_failed: return "ProcessYFailed";
        case ErrorKind::not_geodesic: return "NotGeodesic";
        case ErrorKind::contains_x0: return "ContainsX0";
        case ErrorKind::not_loop_like: return "NotLoopLike";
        case ErrorKind::preconditions_violated: return "PreconditionsViolated";
        case ErrorKind::no_parity: return "NoParity";
        case ErrorKind::internal: return "InternalError";
    }
    return "UnknownError";
}

std::string letter_to_string(Letter l) {
    std::string s = "x" + std::to_string(gen_index(l));
    if (l < 0) s += "^-1";
    return s;
}

Word Word::inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(-*it);
    return Word(std::move(out));
}

Word Word::rotated(std::size_t k) const {
    if (letters_.empty()) return *this;
    k %= letters_.size();
    std::vector<Letter> out;
    out.reserve(letters_.size());
    out.insert(out.end(), letters_.begin() + static_cast<std::ptrdiff_t>(k), letters_.end());
    out.insert(out.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k));
    return Word(std::move(out));
}

Word Word::subword(std::size_t begin, std::size_t length) const {
    std::vector<Letter> out(letters_.begin() + static_cast<std::ptrdiff_t>(begin),
                            letters_.begin() + static_cast<std::ptrdiff_t>(begin + length));
    return Word(std::move(out));
}

bool Word::is_freely_reduced() const {
    for (std::size_t i = 0; i + 1 < letters_.size(); ++i)
        if (letters_[i] == -letters_[i + 1]) return false;
    return true;
}

bool Word::alternates_in_sign() const {
    for (std::size_t i = 0; i + 1 < letters_.size(); ++i)
        if (letter_sign(letters_[i]) == letter_sign(letters_[i + 1])) return false;
    return true;
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += letter_to_string(letters_[i]);
    }
    return out;
}

Word operator*(const Word& a, const Word& b) {
    Word out = a;
    out.append(b);
    return out;
}

Word free_reduce(const Word& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (Letter l : w.letters()) {
        if (!stack.empty() && stack.back() == -l)
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return Word(std::move(stack));
}

Word cyclic_free_reduce(const Word& w) {
    Word r = free_reduce(w);
    while (r.size() >= 2 && r[0] == -r[r.size() - 1]) {
        std::vector<Letter> inner(r.letters().begin() + 1, r.letters().end() - 1);
        r = Word(std::move(inner));
    }
    return r;
}

Word min_rotation(const Word& w) {
    Word best = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
        Word rot = w.rotated(k);
        if (rot < best) best = rot;
    }
    return best;
}

Word parse_word(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<Letter> letters;
    while (in >> tok) {
        if (tok == "1" && letters.empty() && in.peek() == EOF) break;
        if (tok.size() < 2 || tok[0] != 'x')
            fail(ErrorKind::parse_error, "bad word token '" + tok + "'");
        std::size_t i = 1;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
        if (i == 1) fail(ErrorKind::parse_error, "bad word token '" + tok + "'");
        int gen = std::stoi(tok.substr(1, i - 1));
        int sign = 1;
        if (i < tok.size()) {
            std::string suffix = tok.substr(i);
            if (suffix == "^-1")
                sign = -1;
            else if (suffix == "^1" || suffix == "^+1")
                sign = 1;
            else
                fail(ErrorKind::parse_error, "bad exponent in token '" + tok + "'");
        }
        letters.push_back(make_letter(gen, sign));
    }
    return Word(std::move(letters));
}

}  // namespace linkgrp
