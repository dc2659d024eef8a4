#include "linkgrp/conjugacy.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "linkgrp/errors.hpp"

namespace linkgrp {

std::uint64_t LatticeComplex::ekey(int x, int y, bool horizontal) {
    auto ux = static_cast<std::uint64_t>(static_cast<std::uint32_t>(x + (1 << 20)));
    auto uy = static_cast<std::uint64_t>(static_cast<std::uint32_t>(y + (1 << 20)));
    return (ux << 32) | (uy << 1) | (horizontal ? 1u : 0u);
}

std::optional<Letter> LatticeComplex::label(Point p, Point q) const {
    int dx = q.x - p.x, dy = q.y - p.y;
    const std::unordered_map<std::uint64_t, Letter>::const_iterator end = edges_.end();
    if (dx == 1 && dy == 0) {
        auto it = edges_.find(ekey(p.x, p.y, true));
        return it == end ? std::nullopt : std::optional<Letter>(it->second);
    }
    if (dx == -1 && dy == 0) {
        auto it = edges_.find(ekey(q.x, q.y, true));
        return it == end ? std::nullopt : std::optional<Letter>(-it->second);
    }
    if (dx == 0 && dy == 1) {
        auto it = edges_.find(ekey(p.x, p.y, false));
        return it == end ? std::nullopt : std::optional<Letter>(it->second);
    }
    if (dx == 0 && dy == -1) {
        auto it = edges_.find(ekey(q.x, q.y, false));
        return it == end ? std::nullopt : std::optional<Letter>(-it->second);
    }
    return std::nullopt;
}

bool LatticeComplex::has_edge(Point p, Point q) const { return label(p, q).has_value(); }

void LatticeComplex::add_edge(Point p, Point q, Letter l) {
    int dx = q.x - p.x, dy = q.y - p.y;
    if (dx == -1 || dy == -1) {
        std::swap(p, q);
        l = -l;
        dx = -dx;
        dy = -dy;
    }
    if (!((dx == 1 && dy == 0) || (dx == 0 && dy == 1)))
        fail(ErrorKind::internal, "add_edge needs a unit step");
    auto key = ekey(p.x, p.y, dx == 1);
    auto it = edges_.find(key);
    if (it != edges_.end()) {
        if (it->second != l)
            fail(ErrorKind::internal, "square tiling produced inconsistent edge labels");
        return;
    }
    edges_.emplace(key, l);
    min_x_ = std::min({min_x_, p.x, q.x});
    max_x_ = std::max({max_x_, p.x, q.x});
    min_y_ = std::min({min_y_, p.y, q.y});
    max_y_ = std::max({max_y_, p.y, q.y});
}

Word LatticeComplex::vertical_run_up(Point p, std::size_t max_len) const {
    std::vector<Letter> letters;
    Point cur = p;
    while (max_len == 0 || letters.size() < max_len) {
        Point next{cur.x, cur.y + 1};
        auto l = label(cur, next);
        if (!l) break;
        letters.push_back(*l);
        cur = next;
    }
    return Word(std::move(letters));
}

LatticePath standard_embedding(const SymPresentation& p, const Word& w) {
    if (w.empty()) fail(ErrorKind::not_geodesic, "standard embedding needs a nonempty word");
    if (!is_geodesic(p, w)) fail(ErrorKind::not_geodesic, "word is not geodesic");
    LatticePath path;
    path.vertices.push_back({0, 0});
    bool horizontal = true;
    Point cur{0, 0};
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) {
            TwoLetterClass c = p.classify_two_letter(w[i - 1], w[i]);
            if (c == TwoLetterClass::pair || c == TwoLetterClass::pseudo_pair)
                horizontal = !horizontal;
        }
        cur = horizontal ? Point{cur.x + 1, cur.y} : Point{cur.x, cur.y + 1};
        path.vertices.push_back(cur);
        path.edge_labels.push_back(w[i]);
    }
    return path;
}

namespace {

struct Filler {
    const SymPresentation& p;
    LatticeComplex& complex;
    std::deque<Point> dirty;
    std::optional<std::mt19937_64> rng;

    void mark(Point q) { dirty.push_back(q); }

    Point take() {
        if (rng) {
            std::uniform_int_distribution<std::size_t> pick(0, dirty.size() - 1);
            std::size_t i = pick(*rng);
            std::swap(dirty[i], dirty.back());
            Point q = dirty.back();
            dirty.pop_back();
            return q;
        }
        Point q = dirty.front();
        dirty.pop_front();
        return q;
    }

    // Fills every pair-labelled right angle at q that is not already covered
    // by a square of the complex.
    void process(Point q) {
        static const Point steps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (const Point& dp : steps) {
            Point from{q.x - dp.x, q.y - dp.y};
            auto l1 = complex.label(from, q);
            if (!l1) continue;
            for (const Point& dr : steps) {
                if (dr.x == dp.x && dr.y == dp.y) continue;
                if (dr.x == -dp.x && dr.y == -dp.y) continue;  // collinear
                Point to{q.x + dr.x, q.y + dr.y};
                auto l2 = complex.label(q, to);
                if (!l2) continue;
                Point s{from.x + to.x - q.x, from.y + to.y - q.y};
                Point lower_left{std::min(std::min(from.x, q.x), std::min(to.x, s.x)),
                                 std::min(std::min(from.y, q.y), std::min(to.y, s.y))};
                if (complex.has_square(lower_left)) continue;
                const auto& bucket = p.relators_for_pair(*l1, *l2);
                if (bucket.empty()) continue;
                if (bucket.size() > 1)
                    fail(ErrorKind::not_small_cancellation, "ambiguous pair while tiling");
                const Word& r = bucket.front();
                complex.add_square(lower_left);
                complex.add_edge(to, s, r[2]);
                complex.add_edge(s, from, r[3]);
                mark(from);
                mark(q);
                mark(to);
                mark(s);
            }
        }
    }

    void run() {
        while (!dirty.empty()) process(take());
    }
};

}  // namespace

SquareTiling geodesic_completion(const SymPresentation& p, const Word& w, FillOptions opt) {
    require_small_cancellation(p);
    SquareTiling t;
    t.base_path = standard_embedding(p, w);
    for (std::size_t i = 0; i + 1 < t.base_path.vertices.size(); ++i)
        t.complex.add_edge(t.base_path.vertices[i], t.base_path.vertices[i + 1],
                           t.base_path.edge_labels[i]);
    t.width = t.base_path.vertices.back().x;
    t.height = t.base_path.vertices.back().y;

    Filler filler{p, t.complex, {}, std::nullopt};
    if (opt.shuffle_seed) filler.rng.emplace(*opt.shuffle_seed);
    for (const Point& v : t.base_path.vertices) filler.mark(v);
    filler.run();
    return t;
}

bool SquareTiling::squares_read_relators(const SymPresentation& p) const {
    for (const Point& s : complex.squares()) {
        Point a{s.x, s.y}, b{s.x + 1, s.y}, c{s.x + 1, s.y + 1}, d{s.x, s.y + 1};
        auto l1 = complex.label(a, b), l2 = complex.label(b, c), l3 = complex.label(c, d),
             l4 = complex.label(d, a);
        if (!l1 || !l2 || !l3 || !l4) return false;
        Word boundary({*l1, *l2, *l3, *l4});
        const auto& rs = p.relators();
        if (std::find(rs.begin(), rs.end(), boundary) == rs.end()) return false;
    }
    return true;
}

std::set<Word> equivalent_geodesics(const SymPresentation& p, const Word& w) {
    if (!is_geodesic(p, w)) fail(ErrorKind::not_geodesic, "word is not geodesic");
    std::set<Word> out{w};
    std::deque<Word> frontier{w};
    while (!frontier.empty()) {
        Word cur = frontier.front();
        frontier.pop_front();
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            if (!p.is_pair(cur[i], cur[i + 1])) continue;
            Word ex = p.exchange_pair(cur[i], cur[i + 1]);
            Word next = cur;
            next[i] = ex[0];
            next[i + 1] = ex[1];
            if (out.insert(next).second) frontier.push_back(next);
        }
    }
    return out;
}

ConjugacyStrip build_conjugacy_strip(const SymPresentation& p, const Word& w) {
    ConjugacyStrip strip;
    strip.tiling = geodesic_completion(p, w);
    LatticeComplex& complex = strip.tiling.complex;
    const int I = strip.tiling.width;
    const int J = strip.tiling.height;

    auto complete_from = [&](const std::vector<Point>& seeds) {
        Filler filler{p, complex, {}, std::nullopt};
        for (const Point& q : seeds) filler.mark(q);
        filler.run();
    };

    // Upward: read l_i off the left column, stack it on the right, fill.
    {
        int left_top = 0, right_top = J;
        std::size_t guard = 0;
        for (;;) {
            Word l = complex.vertical_run_up({0, left_top});
            if (l.empty()) break;
            bool repeated = false;
            for (const Word& seen : strip.upper_columns)
                if (seen == l) repeated = true;
            if (repeated) break;
            strip.upper_columns.push_back(l);
            left_top += static_cast<int>(l.size());
            std::vector<Point> seeds;
            for (std::size_t t = 0; t < l.size(); ++t) {
                Point a{I, right_top + static_cast<int>(t)};
                Point b{I, right_top + static_cast<int>(t) + 1};
                complex.add_edge(a, b, l[t]);
                seeds.push_back(a);
                seeds.push_back(b);
            }
            right_top += static_cast<int>(l.size());
            complete_from(seeds);
            if (++guard > 4 * (p.generator_indices().size() + 2) *
                              (p.generator_indices().size() + 2))
                fail(ErrorKind::internal, "conjugacy strip failed to repeat");
        }
        strip.up_extent = left_top;
    }

    // Downward, symmetric: read r_i off the right column, stack it below the
    // origin on the left, fill.
    {
        int right_bottom = J, left_bottom = 0;
        std::size_t guard = 0;
        for (;;) {
            // Maximal vertical run on x = I ending at (I, right_bottom).
            std::vector<Letter> rev;
            Point cur{I, right_bottom};
            for (;;) {
                Point below{I, cur.y - 1};
                auto l = complex.label(below, cur);
                if (!l) break;
                rev.push_back(*l);
                cur = below;
            }
            std::reverse(rev.begin(), rev.end());
            Word r{std::move(rev)};
            if (r.empty()) break;
            bool repeated = false;
            for (const Word& seen : strip.lower_columns)
                if (seen == r) repeated = true;
            if (repeated) break;
            strip.lower_columns.push_back(r);
            right_bottom -= static_cast<int>(r.size());
            std::vector<Point> seeds;
            for (std::size_t t = 0; t < r.size(); ++t) {
                Point a{0, left_bottom - static_cast<int>(r.size() - t)};
                Point b{0, left_bottom - static_cast<int>(r.size() - t) + 1};
                complex.add_edge(a, b, r[t]);
                seeds.push_back(a);
                seeds.push_back(b);
            }
            left_bottom -= static_cast<int>(r.size());
            complete_from(seeds);
            if (++guard > 4 * (p.generator_indices().size() + 2) *
                              (p.generator_indices().size() + 2))
                fail(ErrorKind::internal, "conjugacy strip failed to repeat");
        }
        strip.down_extent = -left_bottom;
    }
    return strip;
}

ConjugacyChainComplex saturate_conjugacy_chains(const SymPresentation& p, const Word& w) {
    ConjugacyChainComplex out;
    std::unordered_map<Word, Word, WordHash> conj;
    std::deque<Word> queue;

    auto admit = [&](const Word& side, const Word& c) {
        if (conj.count(side)) return;
        conj[side] = c;
        out.sides.push_back({side, c});
        queue.push_back(side);
        // Close under rotation so every cyclic representative can seed chains.
        for (std::size_t k = 1; k < side.size(); ++k) {
            Word rot = side.rotated(k);
            if (conj.count(rot)) continue;
            Word pre = side.subword(0, k);
            Word crot = free_reduce(pre.inverse() * c);
            conj[rot] = crot;
            out.sides.push_back({rot, crot});
            queue.push_back(rot);
        }
    };

    admit(w, Word());
    std::vector<Letter> letters;
    for (int g : p.generator_indices()) {
        letters.push_back(make_letter(g, +1));
        letters.push_back(make_letter(g, -1));
    }

    while (!queue.empty()) {
        Word side = queue.front();
        queue.pop_front();
        if (side.empty()) continue;
        std::size_t fanout = 0;
        for (Letter a : letters) {
            if (side[0] == -a || side[side.size() - 1] == a) continue;  // a v a^-1 unreduced
            Word cand = Word::single(a) * side * Word::single(-a);
            auto occ = chain_at(p, cand, 0);
            if (!occ || occ->chain_word.size() != cand.size()) continue;
            ++fanout;
            ++out.chain_count;
            admit(occ->inner_link_path, free_reduce(Word::single(a) * conj[side]));
        }
        out.max_fanout = std::max(out.max_fanout, fanout);
        if (out.sides.size() > 200000)
            fail(ErrorKind::internal, "conjugacy chain saturation exploded");
    }
    return out;
}

const Word* ConjugacyChainComplex::conjugator_for(const Word& side) const {
    for (const auto& [s, c] : sides)
        if (s == side) return &c;
    return nullptr;
}

Word conjugator_from_trace(const ReductionTrace& trace) {
    Word conj;
    for (const ReductionStep& step : trace.steps)
        if (step.kind == StepKind::cyclic_permutation)
            conj = free_reduce(conj * step.before.subword(0, step.rotation));
    return conj;
}

namespace {

// Transversal search: monotone paths from (0, n) to (I, J+n) labelled by a
// cyclic permutation of u. Returns (rotation k, conjugator from the strip).
struct TransversalMatch {
    std::size_t rotation;
    int offset;
    Word left_column;  // word of the vertical path (0,0) -> (0,n)
};

std::optional<TransversalMatch> find_transversal(const ConjugacyStrip& strip, const Word& u) {
    const LatticeComplex& complex = strip.tiling.complex;
    const int I = strip.tiling.width;
    const int J = strip.tiling.height;
    const int len = static_cast<int>(u.size());
    if (len != I + J) return std::nullopt;

    for (int n = -strip.down_extent; n <= strip.up_extent; ++n) {
        for (std::size_t k = 0; k < std::max<std::size_t>(u.size(), 1); ++k) {
            Word target = u.rotated(k);
            // DP over lattice points: reached[x][y'] with y' = y - n, matching
            // target[(x + y')] edge by edge.
            std::vector<std::vector<char>> reach(static_cast<std::size_t>(I) + 1,
                                                 std::vector<char>(static_cast<std::size_t>(J) + 1, 0));
            reach[0][0] = 1;
            for (int x = 0; x <= I; ++x)
                for (int yy = 0; yy <= J; ++yy) {
                    if (!reach[static_cast<std::size_t>(x)][static_cast<std::size_t>(yy)]) continue;
                    int idx = x + yy;
                    if (idx >= len) continue;
                    Point cur{x, yy + n};
                    Point right{x + 1, yy + n};
                    Point up{x, yy + n + 1};
                    if (x + 1 <= I) {
                        auto l = complex.label(cur, right);
                        if (l && *l == target[static_cast<std::size_t>(idx)])
                            reach[static_cast<std::size_t>(x) + 1][static_cast<std::size_t>(yy)] = 1;
                    }
                    if (yy + 1 <= J) {
                        auto l = complex.label(cur, up);
                        if (l && *l == target[static_cast<std::size_t>(idx)])
                            reach[static_cast<std::size_t>(x)][static_cast<std::size_t>(yy) + 1] = 1;
                    }
                }
            if (reach[static_cast<std::size_t>(I)][static_cast<std::size_t>(J)]) {
                // Vertical path (0,0) -> (0,n).
                std::vector<Letter> col;
                int step = n >= 0 ? 1 : -1;
                for (int y = 0; y != n; y += step) {
                    auto l = step > 0 ? complex.label({0, y}, {0, y + 1})
                                      : complex.label({0, y}, {0, y - 1});
                    if (!l) fail(ErrorKind::internal, "strip left column is not contiguous");
                    col.push_back(*l);
                }
                return TransversalMatch{k, n, Word(std::move(col))};
            }
        }
    }
    return std::nullopt;
}

void collect_transversal_words(const ConjugacyStrip& strip, std::set<Word>& out) {
    const LatticeComplex& complex = strip.tiling.complex;
    const int I = strip.tiling.width;
    const int J = strip.tiling.height;
    for (int n = -strip.down_extent; n <= strip.up_extent; ++n) {
        // DFS over monotone paths from (0, n) to (I, J+n).
        struct Frame {
            Point at;
            std::vector<Letter> word;
        };
        std::vector<Frame> stack{{{0, n}, {}}};
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();
            if (f.at.x == I && f.at.y == J + n) {
                out.insert(Word(f.word));
                continue;
            }
            Point right{f.at.x + 1, f.at.y};
            Point up{f.at.x, f.at.y + 1};
            if (f.at.x < I) {
                auto l = complex.label(f.at, right);
                if (l) {
                    Frame g{right, f.word};
                    g.word.push_back(*l);
                    stack.push_back(std::move(g));
                }
            }
            if (f.at.y < J + n) {
                auto l = complex.label(f.at, up);
                if (l) {
                    Frame g{up, f.word};
                    g.word.push_back(*l);
                    stack.push_back(std::move(g));
                }
            }
            if (out.size() > 1000000)
                fail(ErrorKind::internal, "transversal enumeration exploded");
        }
    }
}

std::optional<std::size_t> rotation_matching(const Word& u, const Word& w) {
    if (u.size() != w.size()) return std::nullopt;
    if (u == w) return 0;
    for (std::size_t k = 1; k < w.size(); ++k)
        if (w.rotated(k) == u) return k;
    return std::nullopt;
}

struct ParityCount {
    std::size_t white = 0;
    std::size_t black = 0;
};

ParityCount count_parities(const SymPresentation& p, const Word& w) {
    ParityCount c;
    for (Letter l : w.letters())
        (p.parity_of(l) == Parity::white ? c.white : c.black)++;
    return c;
}

}  // namespace

ConjugacyResult are_conjugate(const SymPresentation& p, const Word& u, const Word& w) {
    require_small_cancellation(p);
    if (!p.has_parity())
        fail(ErrorKind::no_parity, "conjugacy decision needs a parity assignment");
    p.validate_word(u);
    p.validate_word(w);

    ConjugacyResult res;
    auto [ug, utrace] = cyclic_geodesic(p, u);
    auto [wg, wtrace] = cyclic_geodesic(p, w);
    res.u_geodesic = ug;
    res.w_geodesic = wg;
    Word cu = conjugator_from_trace(utrace);  // u = cu * ug * cu^-1
    Word cw = conjugator_from_trace(wtrace);

    auto finish_true = [&](const Word& g, const std::string& method, std::string detail) {
        // u = cu ug cu^-1, ug = g wg g^-1, w = cw wg cw^-1.
        Word c = free_reduce(cu * g * cw.inverse());
        if (!is_identity(p, c.inverse() * u * c * w.inverse()))
            fail(ErrorKind::internal, "conjugacy certificate failed verification");
        res.conjugate = true;
        res.method = method;
        res.conjugator = c;
        res.detail = std::move(detail);
        return res;
    };

    if (ug.empty() && wg.empty()) return finish_true(Word(), "empty", "both words are identities");
    if (ug.empty() || wg.empty()) {
        res.method = "empty";
        res.detail = "exactly one word is an identity";
        return res;
    }

    if (auto k = rotation_matching(ug, wg)) {
        Word pre = wg.subword(0, *k);
        return finish_true(pre.inverse(), "cyclic-equal",
                           "cyclic geodesics are cyclic permutations of each other");
    }

    if (ug.size() != wg.size()) {
        res.method = "precheck";
        res.detail = "cyclic geodesic lengths differ";
        return res;
    }
    ParityCount pu = count_parities(p, ug), pw = count_parities(p, wg);
    if (pu.white != pw.white || pu.black != pw.black) {
        res.method = "precheck";
        res.detail = "parity letter counts differ";
        return res;
    }
    if (ug.alternates_in_sign() != wg.alternates_in_sign()) {
        res.method = "precheck";
        res.detail = "sign alternation differs";
        return res;
    }

    bool single_parity = pu.white == 0 || pu.black == 0;
    if (single_parity) {
        ConjugacyChainComplex complex = saturate_conjugacy_chains(p, wg);
        if (const Word* g = complex.conjugator_for(ug))
            return finish_true(*g, "chains",
                               "side word reached after " + std::to_string(complex.chain_count) +
                                   " chain gluings");
        res.method = "chains";
        res.detail = "chain saturation exhausted without reaching the word";
        return res;
    }

    ConjugacyStrip strip = build_conjugacy_strip(p, wg);
    if (auto match = find_transversal(strip, ug)) {
        // transversal = c^-1 wg c with c the left-column word; and
        // ug = pre * transversal * pre^-1 for pre = ug[0:k].
        Word pre = ug.subword(0, match->rotation);
        Word g = free_reduce(pre * match->left_column.inverse());
        return finish_true(g, "strip",
                           "transversal match at offset " + std::to_string(match->offset));
    }
    res.method = "strip";
    res.detail = "no transversal path is labelled by a cyclic permutation of u";
    return res;
}

std::set<Word> conjugacy_class_geodesics(const SymPresentation& p, const Word& w) {
    require_small_cancellation(p);
    if (!p.has_parity())
        fail(ErrorKind::no_parity, "class generation needs a parity assignment");
    auto [wg, trace] = cyclic_geodesic(p, w);
    std::set<Word> out;
    if (wg.empty()) {
        out.insert(Word());
        return out;
    }
    ParityCount c = count_parities(p, wg);
    std::set<Word> raw;
    if (c.white == 0 || c.black == 0) {
        for (const auto& [side, conj] : saturate_conjugacy_chains(p, wg).sides) raw.insert(side);
    } else {
        collect_transversal_words(build_conjugacy_strip(p, wg), raw);
    }
    raw.insert(wg);
    for (const Word& v : raw)
        for (std::size_t k = 0; k < v.size(); ++k) out.insert(v.rotated(k));
    return out;
}

}  // namespace linkgrp
