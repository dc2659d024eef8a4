#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace linkgrp {

// A letter is a signed generator: +(k+1) encodes x_k, -(k+1) encodes x_k^-1.
// Zero is not a letter.
using Letter = std::int32_t;

inline int gen_index(Letter l) { return (l > 0 ? l : -l) - 1; }
inline int letter_sign(Letter l) { return l > 0 ? 1 : -1; }
inline Letter make_letter(int gen, int sign) { return sign >= 0 ? Letter(gen + 1) : Letter(-(gen + 1)); }

std::string letter_to_string(Letter l);

// A finite sequence of signed generators. This is the universal currency of
// the rewriting engine; no invariant is imposed at construction.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    static Word single(Letter l) { return Word({l}); }

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter& operator[](std::size_t i) { return letters_[i]; }

    const std::vector<Letter>& letters() const { return letters_; }
    std::vector<Letter>& letters() { return letters_; }

    void push_back(Letter l) { letters_.push_back(l); }
    void append(const Word& other) {
        letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    }

    Word inverse() const;
    // Cyclic rotation by k: the word w[k..] w[..k].
    Word rotated(std::size_t k) const;
    Word subword(std::size_t begin, std::size_t length) const;

    bool is_freely_reduced() const;
    // True when adjacent letters strictly alternate in sign.
    bool alternates_in_sign() const;

    bool operator==(const Word& other) const { return letters_ == other.letters_; }
    bool operator!=(const Word& other) const { return letters_ != other.letters_; }
    bool operator<(const Word& other) const { return letters_ < other.letters_; }

    std::string str() const;

  private:
    std::vector<Letter> letters_;
};

Word operator*(const Word& a, const Word& b);

// Cancels adjacent x x^-1 until none remain; confluent, so the result is
// independent of cancellation order.
Word free_reduce(const Word& w);

// Free reduction of the cyclic word: reduces linearly, then cancels across
// the seam while first and last letters are inverse.
Word cyclic_free_reduce(const Word& w);

// Lexicographically least rotation; canonical representative of the cyclic word.
Word min_rotation(const Word& w);

// Parses whitespace-separated tokens of the form x<k>, x<k>^-1 (x<k>^1 also
// accepted). "" and "1" both denote the empty word.
Word parse_word(const std::string& text);

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = 1469598103934665603ull;
        for (Letter l : w.letters()) {
            h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(l));
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace linkgrp
