#include "linkgrp/presentation.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "linkgrp/errors.hpp"

namespace linkgrp {

const char* to_string(TwoLetterClass c) {
    switch (c) {
        case TwoLetterClass::pair: return "pair";
        case TwoLetterClass::sister_set: return "sister-set";
        case TwoLetterClass::pseudo_pair: return "pseudo-pair";
        case TwoLetterClass::none: return "none";
    }
    return "none";
}

namespace {

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    while (r.size() >= 2 && r[0] == -r[r.size() - 1]) {
        std::vector<Letter> inner(r.letters().begin() + 1, r.letters().end() - 1);
        r = free_reduce(Word(std::move(inner)));
    }
    return r;
}

}  // namespace

std::vector<Word> symmetrize(const std::vector<Word>& relators) {
    std::set<Word> out;
    for (const Word& raw : relators) {
        Word r = cyclic_reduce(raw);
        if (r.empty()) continue;
        Word inv = r.inverse();
        for (std::size_t k = 0; k < r.size(); ++k) {
            out.insert(r.rotated(k));
            out.insert(inv.rotated(k));
        }
    }
    return std::vector<Word>(out.begin(), out.end());
}

SymPresentation::SymPresentation(std::vector<int> generator_indices,
                                 std::vector<Word> base_relators,
                                 std::unordered_map<int, Parity> parities)
    : base_relators_(std::move(base_relators)), parities_(std::move(parities)) {
    std::set<int> gens(generator_indices.begin(), generator_indices.end());
    for (const Word& r : base_relators_)
        for (Letter l : r.letters()) gens.insert(gen_index(l));
    generators_.assign(gens.begin(), gens.end());
    present_.insert(generators_.begin(), generators_.end());

    relators_ = symmetrize(base_relators_);
    for (const Word& r : relators_)
        if (r.size() != 4)
            fail(ErrorKind::parse_error,
                 "relator '" + r.str() + "' does not have length 4 after cyclic reduction");

    has_parity_ = !parities_.empty();
    if (has_parity_) {
        for (int g : generators_)
            if (!parities_.count(g))
                fail(ErrorKind::no_parity, "generator x" + std::to_string(g) + " has no parity");
        for (const Word& r : relators_)
            for (std::size_t i = 0; i < r.size(); ++i)
                if (parity_of(r[i]) == parity_of(r[(i + 1) % r.size()]))
                    fail(ErrorKind::convention_mismatch,
                         "relator '" + r.str() + "' does not alternate in parity");
    }

    build_pair_tables();
    build_pseudo_pairs();
}

Parity SymPresentation::parity(int g) const {
    if (!has_parity_) fail(ErrorKind::no_parity, "presentation has no parity assignment");
    auto it = parities_.find(g);
    if (it == parities_.end())
        fail(ErrorKind::no_parity, "unknown generator x" + std::to_string(g));
    return it->second;
}

void SymPresentation::build_pair_tables() {
    for (const Word& r : relators_) {
        std::uint64_t k = key(r[0], r[1]);
        auto& bucket = pair_table_[k];
        if (std::find(bucket.begin(), bucket.end(), r) == bucket.end()) bucket.push_back(r);
    }
    for (auto& [k, bucket] : pair_table_) {
        std::sort(bucket.begin(), bucket.end());
        Letter a = static_cast<Letter>(k >> 32);
        Letter b = static_cast<Letter>(k & 0xffffffffu);
        pair_succ_[a].push_back(b);
        pair_pred_[b].push_back(a);
    }
    for (auto& [l, v] : pair_succ_) std::sort(v.begin(), v.end());
    for (auto& [l, v] : pair_pred_) std::sort(v.begin(), v.end());
}

// A placed square assigns letters to (bottom->, right^, top->, left^) so that
// the counterclockwise boundary bottom, right, top^-1, left^-1 reads a
// relator. Every symmetrized relator form gives one placement.
namespace {
struct PlacedSquare {
    Letter bottom, right, top, left;  // read rightward / upward
};
}  // namespace

void SymPresentation::build_pseudo_pairs() {
    std::vector<PlacedSquare> squares;
    squares.reserve(relators_.size());
    for (const Word& r : relators_)
        squares.push_back({r[0], r[1], -r[2], -r[3]});

    auto mirrored_h = [](const PlacedSquare& s) {  // reflection across a vertical line
        return PlacedSquare{-s.bottom, s.left, -s.top, s.right};
    };
    auto mirrored_v = [](const PlacedSquare& s) {  // reflection across a horizontal line
        return PlacedSquare{s.top, -s.right, s.bottom, -s.left};
    };
    auto same = [](const PlacedSquare& a, const PlacedSquare& b) {
        return a.bottom == b.bottom && a.right == b.right && a.top == b.top && a.left == b.left;
    };

    std::unordered_map<Letter, std::vector<std::size_t>> by_left, by_right, by_top, by_bottom;
    for (std::size_t i = 0; i < squares.size(); ++i) {
        by_left[squares[i].left].push_back(i);
        by_right[squares[i].right].push_back(i);
        by_top[squares[i].top].push_back(i);
        by_bottom[squares[i].bottom].push_back(i);
    }

    auto consider = [&](Letter first, Letter second) {
        if (first == -second) return;
        if (is_pair(first, second)) return;
        pseudo_pairs_.insert(key(first, second));
        pseudo_pairs_.insert(key(-second, -first));
    };

    // Shape 1: A left of B, C on top of B; reflex corner between A's top edge
    // and C's left edge, crook read (A.top ->) then (C.left ^).
    for (const PlacedSquare& b : squares) {
        auto ait = by_right.find(b.left);
        auto cit = by_bottom.find(b.top);
        if (ait == by_right.end() || cit == by_bottom.end()) continue;
        for (std::size_t ai : ait->second) {
            PlacedSquare a = squares[ai];
            if (same(a, mirrored_h(b))) continue;  // not reduced
            for (std::size_t ci : cit->second) {
                PlacedSquare c = squares[ci];
                if (same(c, mirrored_v(b))) continue;
                consider(a.top, c.left);
            }
        }
    }

    // Shape 2 (mirror image): A below B, C right of B; crook read
    // (A.right ^) then (C.bottom ->).
    for (const PlacedSquare& b : squares) {
        auto ait = by_top.find(b.bottom);
        auto cit = by_left.find(b.right);
        if (ait == by_top.end() || cit == by_left.end()) continue;
        for (std::size_t ai : ait->second) {
            PlacedSquare a = squares[ai];
            if (same(a, mirrored_v(b))) continue;
            for (std::size_t ci : cit->second) {
                PlacedSquare c = squares[ci];
                if (same(c, mirrored_h(b))) continue;
                consider(a.right, c.bottom);
            }
        }
    }
}

bool SymPresentation::is_pair(Letter a, Letter b) const {
    return pair_table_.count(key(a, b)) != 0;
}

const std::vector<Word>& SymPresentation::relators_for_pair(Letter a, Letter b) const {
    static const std::vector<Word> none;
    auto it = pair_table_.find(key(a, b));
    return it == pair_table_.end() ? none : it->second;
}

const Word& SymPresentation::relator_for_pair(Letter a, Letter b) const {
    const auto& bucket = relators_for_pair(a, b);
    if (bucket.empty())
        fail(ErrorKind::not_a_pair,
             "'" + Word({a, b}).str() + "' is not a two-letter subword of any relator");
    if (bucket.size() > 1)
        fail(ErrorKind::not_small_cancellation,
             "pair '" + Word({a, b}).str() + "' determines more than one relator");
    return bucket.front();
}

const std::vector<Letter>& SymPresentation::pair_successors(Letter a) const {
    static const std::vector<Letter> none;
    auto it = pair_succ_.find(a);
    return it == pair_succ_.end() ? none : it->second;
}

const std::vector<Letter>& SymPresentation::pair_predecessors(Letter b) const {
    static const std::vector<Letter> none;
    auto it = pair_pred_.find(b);
    return it == pair_pred_.end() ? none : it->second;
}

bool SymPresentation::is_pseudo_pair(Letter a, Letter b) const {
    return pseudo_pairs_.count(key(a, b)) != 0;
}

bool SymPresentation::is_sister_set(Letter a, Letter c) const {
    if (c == -a) return false;
    for (Letter b : pair_successors(a))
        if (is_pair(-b, c)) return true;
    return false;
}

TwoLetterClass SymPresentation::classify_two_letter(Letter a, Letter b) const {
    if (b == -a) return TwoLetterClass::none;
    if (is_pair(a, b)) return TwoLetterClass::pair;
    if (is_sister_set(a, b)) return TwoLetterClass::sister_set;
    if (is_pseudo_pair(a, b)) return TwoLetterClass::pseudo_pair;
    return TwoLetterClass::none;
}

Word SymPresentation::exchange_pair(Letter a, Letter b) const {
    const Word& r = relator_for_pair(a, b);
    // r = a b c d and a b = d^-1 c^-1 in the group.
    return Word({-r[3], -r[2]});
}

Word SymPresentation::exchange_pair(const Word& two_letter) const {
    if (two_letter.size() != 2)
        fail(ErrorKind::not_a_pair, "exchange_pair needs a two-letter word");
    return exchange_pair(two_letter[0], two_letter[1]);
}

std::vector<std::pair<int, int>> SymPresentation::pseudo_pair_regions() const {
    std::set<std::pair<int, int>> out;
    for (std::uint64_t k : pseudo_pairs_) {
        Letter a = static_cast<Letter>(k >> 32);
        Letter b = static_cast<Letter>(k & 0xffffffffu);
        int i = gen_index(a), j = gen_index(b);
        out.insert({std::min(i, j), std::max(i, j)});
    }
    return std::vector<std::pair<int, int>>(out.begin(), out.end());
}

void SymPresentation::validate_word(const Word& w) const {
    for (Letter l : w.letters())
        if (!has_generator(gen_index(l)))
            fail(ErrorKind::parse_error,
                 "word uses unknown generator x" + std::to_string(gen_index(l)));
}

C4Report check_c4(const SymPresentation& p) {
    for (const Word& r : p.relators()) {
        const auto& bucket = p.relators_for_pair(r[0], r[1]);
        for (const Word& s : bucket) {
            if (s == r) continue;
            // Two distinct relators share the length-2 prefix: that prefix is
            // a piece of length 2, so r is a product of < 4 pieces.
            return {false, Word({r[0], r[1]}), r, s};
        }
    }
    return {};
}

T4Report check_t4(const SymPresentation& p) {
    const auto& rs = p.relators();
    auto cancels = [](const Word& a, const Word& b) {
        return !a.empty() && !b.empty() && a[a.size() - 1] == -b[0];
    };
    for (const Word& r1 : rs)
        for (const Word& r2 : rs) {
            if (r2 == r1.inverse()) continue;
            if (!cancels(r1, r2)) continue;
            for (const Word& r3 : rs) {
                if (r3 == r1.inverse() || r3 == r2.inverse()) continue;
                if (cancels(r2, r3) && cancels(r3, r1)) return {false, r1, r2, r3};
            }
        }
    return {};
}

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

SymPresentation load_presentation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Word> relators;
    std::vector<int> gens;
    std::unordered_map<int, Parity> parities;
    while (std::getline(in, line)) {
        std::istringstream ls(strip_comment(line));
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "generators") {
            std::string tok;
            while (ls >> tok) {
                if (tok.size() < 2 || tok[0] != 'x')
                    fail(ErrorKind::parse_error, "bad generator token '" + tok + "'");
                gens.push_back(std::stoi(tok.substr(1)));
            }
        } else if (first == "parity") {
            std::string gen_tok, eq, colour;
            if (!(ls >> gen_tok >> eq >> colour) || eq != "=" || gen_tok.size() < 2 ||
                gen_tok[0] != 'x')
                fail(ErrorKind::parse_error, "bad parity directive: " + line);
            Parity par;
            if (colour == "white")
                par = Parity::white;
            else if (colour == "black")
                par = Parity::black;
            else
                fail(ErrorKind::parse_error, "bad parity colour '" + colour + "'");
            parities[std::stoi(gen_tok.substr(1))] = par;
        } else {
            std::string rest;
            std::getline(ls, rest);
            relators.push_back(parse_word(first + " " + rest));
        }
    }
    return SymPresentation(std::move(gens), std::move(relators), std::move(parities));
}

SymPresentation load_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::parse_error, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return load_presentation(buf.str());
}

std::string format_presentation(const SymPresentation& p) {
    std::ostringstream out;
    out << "generators";
    for (int g : p.generator_indices()) out << " x" << g;
    out << "\n";
    if (p.has_parity())
        for (int g : p.generator_indices())
            out << "parity x" << g << " = " << to_string(p.parity(g)) << "\n";
    for (const Word& r : p.base_relators()) out << r.str() << "\n";
    return out.str();
}

}  // namespace linkgrp
