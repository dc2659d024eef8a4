#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "linkgrp/conjugacy.hpp"
#include "linkgrp/diagram.hpp"
#include "linkgrp/errors.hpp"
#include "linkgrp/oracle.hpp"
#include "linkgrp/presentation.hpp"
#include "linkgrp/rewriting.hpp"
#include "linkgrp/svg.hpp"
#include "linkgrp/topology.hpp"

using json = nlohmann::json;
using namespace linkgrp;

namespace {

struct Options {
    std::string input;
    std::vector<std::string> words;
    std::string colour = "both";
    bool oracle = false;
    bool trace = false;
    bool json_out = false;
    std::string svg_path;
    std::size_t length_cap = 0;
    std::size_t depth_cap = 0;
};

struct LoadedInput {
    SymPresentation presentation;
    std::optional<LinkDiagram> diagram;
    std::optional<RegionMap> regions;
};

bool looks_like_diagram(const std::string& text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
        if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        return text[i] == 'X' || text[i] == 'O' || text.compare(i, 6, "outer=") == 0;
    }
    return false;
}

LoadedInput load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::parse_error, "cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    bool diagram = path.size() > 5 && path.compare(path.size() - 5, 5, ".diag") == 0;
    bool pres = path.size() > 5 && path.compare(path.size() - 5, 5, ".pres") == 0;
    if (!diagram && !pres) diagram = looks_like_diagram(text);
    if (diagram) {
        LinkDiagram d = parse_diagram(text);
        RegionMap r = compute_regions(d);
        return {augmented_dehn(r, d), std::move(d), std::move(r)};
    }
    return {load_presentation(text), std::nullopt, std::nullopt};
}

std::optional<Parity> colour_filter(const Options& opt) {
    if (opt.colour == "white") return Parity::white;
    if (opt.colour == "black") return Parity::black;
    return std::nullopt;
}

OracleCaps oracle_caps(const Options& opt) {
    OracleCaps caps;
    caps.length_cap = opt.length_cap;
    caps.depth_cap = opt.depth_cap;
    return caps;
}

json trace_json(const ReductionTrace& trace) {
    json steps = json::array();
    for (const ReductionStep& s : trace.steps) {
        json item;
        switch (s.kind) {
            case StepKind::free_reduction: item["step"] = "free-reduction"; break;
            case StepKind::chain_collapse: item["step"] = "chain-collapse"; break;
            case StepKind::pair_exchange: item["step"] = "pair-exchange"; break;
            case StepKind::cyclic_permutation: item["step"] = "cyclic-permutation"; break;
        }
        item["before"] = s.before.str();
        item["after"] = s.after.str();
        if (s.chain) {
            item["chain_word"] = s.chain->chain_word.str();
            item["inner_link_path"] = s.chain->inner_link_path.str();
            item["at"] = s.chain->start;
        }
        if (s.kind == StepKind::cyclic_permutation) item["rotation"] = s.rotation;
        steps.push_back(std::move(item));
    }
    return steps;
}

void emit_trace(const Options& opt, const ReductionTrace& trace) {
    if (!opt.trace) return;
    for (const auto& step : trace_json(trace)) std::cout << step.dump() << "\n";
}

void write_svg(const Options& opt, const std::string& svg) {
    if (opt.svg_path.empty()) return;
    std::ofstream out(opt.svg_path);
    if (!out) fail(ErrorKind::parse_error, "cannot write '" + opt.svg_path + "'");
    out << svg;
}

int cmd_present(const Options& opt) {
    LoadedInput in = load_input(opt.input);
    if (opt.json_out) {
        json j;
        j["generators"] = json::array();
        for (int g : in.presentation.generator_indices()) {
            json gen;
            gen["index"] = g;
            if (in.presentation.has_parity())
                gen["parity"] = to_string(in.presentation.parity(g));
            j["generators"].push_back(gen);
        }
        j["base_relators"] = json::array();
        for (const Word& r : in.presentation.base_relators())
            j["base_relators"].push_back(r.str());
        j["symmetrized_count"] = in.presentation.relators().size();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << format_presentation(in.presentation);
        std::cout << "# symmetrized relators: " << in.presentation.relators().size() << "\n";
    }
    return 0;
}

int cmd_check_sc(const Options& opt) {
    LoadedInput in = load_input(opt.input);
    C4Report c4 = check_c4(in.presentation);
    T4Report t4 = check_t4(in.presentation);
    if (opt.json_out) {
        json j;
        j["c4"] = c4.ok;
        j["t4"] = t4.ok;
        if (!c4.ok) {
            j["c4_witness"] = {{"piece", c4.piece.str()},
                               {"relator_a", c4.relator_a.str()},
                               {"relator_b", c4.relator_b.str()}};
        }
        if (!t4.ok)
            j["t4_witness"] = {c4.ok ? t4.r1.str() : t4.r1.str(), t4.r2.str(), t4.r3.str()};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "C''(4): " << (c4.ok ? "pass" : "fail") << "\n";
        if (!c4.ok)
            std::cout << "  witness piece " << c4.piece.str() << " shared by " << c4.relator_a.str()
                      << " and " << c4.relator_b.str() << "\n";
        std::cout << "T(4): " << (t4.ok ? "pass" : "fail") << "\n";
        if (!t4.ok)
            std::cout << "  witness triple " << t4.r1.str() << " | " << t4.r2.str() << " | "
                      << t4.r3.str() << "\n";
    }
    return (c4.ok && t4.ok) ? 0 : 1;
}

int report_oracle_disagreement(const std::string& what) {
    std::cerr << "oracle disagreement: " << what << "\n";
    return 5;
}

int cmd_word(const Options& opt) {
    LoadedInput in = load_input(opt.input);
    if (opt.words.size() != 1) fail(ErrorKind::parse_error, "word needs exactly one word");
    Word w = parse_word(opt.words[0]);
    auto [geo, trace] = reduce_to_geodesic(in.presentation, w, colour_filter(opt));
    bool identity = geo.empty();
    emit_trace(opt, trace);
    if (opt.json_out) {
        json j{{"word", w.str()}, {"identity", identity}, {"geodesic", geo.str()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (identity ? "identity" : "not identity") << "\n";
    }
    if (opt.oracle) {
        OracleVerdict v = oracle_is_identity(in.presentation, w, oracle_caps(opt));
        if (v.answer != OracleAnswer::unknown && (v.answer == OracleAnswer::yes) != identity)
            return report_oracle_disagreement("engine says " +
                                              std::string(identity ? "identity" : "not identity") +
                                              ", oracle says " + to_string(v.answer));
    }
    return identity ? 0 : 1;
}

int cmd_geodesic(const Options& opt) {
    LoadedInput in = load_input(opt.input);
    if (opt.words.size() != 1) fail(ErrorKind::parse_error, "geodesic needs exactly one word");
    Word w = parse_word(opt.words[0]);
    auto [geo, trace] = reduce_to_geodesic(in.presentation, w, colour_filter(opt));
    emit_trace(opt, trace);
    if (!opt.svg_path.empty() && !geo.empty())
        write_svg(opt, tiling_to_svg(geodesic_completion(in.presentation, geo)));
    if (opt.json_out) {
        json j{{"word", w.str()}, {"geodesic", geo.str()}, {"length", geo.size()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << geo.str() << "\n";
    }
    return 0;
}

int cmd_conjugate(const Options& opt) {
    LoadedInput in = load_input(opt.input);
    if (opt.words.size() != 2) fail(ErrorKind::parse_error, "conjugate needs exactly two words");
    Word u = parse_word(opt.words[0]);
    Word w = parse_word(opt.words[1]);
    ConjugacyResult res = are_conjugate(in.presentation, u, w);
    if (!opt.svg_path.empty()) {
        Word wg = res.w_geodesic;
        if (!wg.empty()) {
            bool mixed = false;
            Parity first = in.presentation.parity_of(wg[0]);
            for (Letter l : wg.letters())
                if (in.presentation.parity_of(l) != first) mixed = true;
            if (mixed) write_svg(opt, strip_to_svg(build_conjugacy_strip(in.presentation, wg)));
        }
    }
    if (opt.json_out) {
        json j{{"u", u.str()},
               {"w", w.str()},
               {"conjugate", res.conjugate},
               {"method", res.method},
               {"detail", res.detail},
               {"u_geodesic", res.u_geodesic.str()},
               {"w_geodesic", res.w_geodesic.str()}};
        if (res.conjugator) j["conjugator"] = res.conjugator->str();
        std::cout << j.dump(2) << "\n";
    } else {
        if (res.conjugate)
            std::cout << "conjugate (u = c w c^-1 with c = " << res.conjugator->str() << ")\n";
        else
            std::cout << "not conjugate (" << res.method << ": " << res.detail << ")\n";
    }
    if (opt.oracle) {
        OracleVerdict v = oracle_are_conjugate(in.presentation, u, w, oracle_caps(opt));
        if (v.answer != OracleAnswer::unknown && (v.answer == OracleAnswer::yes) != res.conjugate)
            return report_oracle_disagreement("engine says " +
                                              std::string(res.conjugate ? "conjugate"
                                                                        : "not conjugate") +
                                              ", oracle says " + to_string(v.answer));
    }
    return res.conjugate ? 0 : 1;
}

int cmd_classes(const Options& opt) {
    LoadedInput in = load_input(opt.input);
    if (opt.words.size() != 1) fail(ErrorKind::parse_error, "classes needs exactly one word");
    Word w = parse_word(opt.words[0]);
    std::set<Word> reps = conjugacy_class_geodesics(in.presentation, w);
    if (opt.json_out) {
        json j = json::array();
        for (const Word& v : reps) j.push_back(v.str());
        std::cout << json{{"word", w.str()}, {"cyclic_geodesics", j}}.dump(2) << "\n";
    } else {
        for (const Word& v : reps) std::cout << v.str() << "\n";
    }
    return 0;
}

int cmd_nontrivial(const Options& opt) {
    LoadedInput in = load_input(opt.input);
    if (!in.diagram) fail(ErrorKind::parse_error, "nontrivial needs a diagram input");
    NontrivialityReport report = is_nontrivial(*in.diagram);
    if (opt.json_out) {
        json comps = json::array();
        for (const auto& c : report.components)
            comps.push_back({{"component", c.component},
                             {"longitude_word", c.longitude.str()},
                             {"geodesic", c.geodesic.str()},
                             {"parity_changes", c.parity_changes}});
        std::cout << json{{"nontrivial", report.nontrivial}, {"components", comps}}.dump(2)
                  << "\n";
    } else {
        std::cout << (report.nontrivial ? "nontrivial" : "possibly trivial") << "\n";
        for (const auto& c : report.components)
            std::cout << "  component " << c.component << ": longitude " << c.longitude.str()
                      << " -> geodesic " << c.geodesic.str()
                      << " (parity changes: " << c.parity_changes << ")\n";
    }
    return report.nontrivial ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"word, conjugacy and non-triviality decisions for prime alternating link groups"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool with_words, int word_count) {
        sub->add_option("input", opt.input, "presentation (.pres) or diagram (.diag) file")
            ->required();
        if (with_words)
            sub->add_option("words", opt.words, "word(s), e.g. \"x3^-1 x4 x0^-1 x2\"")
                ->expected(word_count);
        sub->add_option("--colour", opt.colour, "chain colour filter: white|black|both")
            ->check(CLI::IsMember({"white", "black", "both"}));
        sub->add_flag("--oracle", opt.oracle, "cross-check with the brute-force oracle");
        sub->add_flag("--trace", opt.trace, "emit rewrite steps as JSON lines");
        sub->add_flag("--json", opt.json_out, "machine-readable output");
        sub->add_option("--svg", opt.svg_path, "write a tiling rendering");
        sub->add_option("--length-cap", opt.length_cap, "oracle word-length cap");
        sub->add_option("--depth-cap", opt.depth_cap, "oracle search-depth cap");
    };

    add_common(app.add_subcommand("present", "emit the augmented Dehn presentation"), false, 0);
    add_common(app.add_subcommand("check-sc", "verify the small cancellation conditions"), false,
               0);
    add_common(app.add_subcommand("word", "decide whether a word is the identity"), true, 1);
    add_common(app.add_subcommand("geodesic", "reduce a word to a geodesic"), true, 1);
    add_common(app.add_subcommand("conjugate", "decide conjugacy of two words"), true, 2);
    add_common(app.add_subcommand("classes", "list cyclic geodesic class representatives"), true,
               1);
    add_common(app.add_subcommand("nontrivial", "longitude-based non-triviality evidence"), false,
               0);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("present")) return cmd_present(opt);
        if (app.got_subcommand("check-sc")) return cmd_check_sc(opt);
        if (app.got_subcommand("word")) return cmd_word(opt);
        if (app.got_subcommand("geodesic")) return cmd_geodesic(opt);
        if (app.got_subcommand("conjugate")) return cmd_conjugate(opt);
        if (app.got_subcommand("classes")) return cmd_classes(opt);
        if (app.got_subcommand("nontrivial")) return cmd_nontrivial(opt);
    } catch (const Error& e) {
        if (opt.json_out)
            std::cout << json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump(2)
                      << "\n";
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
