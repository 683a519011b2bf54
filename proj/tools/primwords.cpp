#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "primwords/acceptance.hpp"
#include "primwords/enumerate.hpp"
#include "primwords/growth.hpp"
#include "primwords/report.hpp"
#include "primwords/whitehead.hpp"
#include "primwords/word.hpp"
#include "primwords/wordmap.hpp"

namespace pw = primwords;
using pw::Json;

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kWorkBound = 3 };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Config {
    int rank = 2;
    int max_len = 8;
    std::vector<std::string> classes;
    std::string word;
    std::string y, z, v;
    std::string shape;
    bool all_shapes = false;
    std::vector<std::string> tuples;
    int n = 3;
    std::uint64_t samples = 0;
    std::uint64_t seed = 1;
    int threads = pw::default_threads();
    std::string out;
    std::string format = "json";
    bool force = false;
    std::vector<std::string> suites;
};

void emit(const Config& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write " + cfg.out);
    }
    f << text;
}

void emit(const Config& cfg, const Json& j) { emit(cfg, j.dump(2) + "\n"); }

pw::Word require_word(const Config& cfg) {
    if (cfg.word.empty()) {
        throw UsageError("--word is required");
    }
    return pw::parse_word(cfg.word, cfg.rank);
}

// ---------------------------------------------------------------------------

int cmd_reduce(const Config& cfg) {
    const pw::Word w = require_word(cfg);
    Json out{{"input", cfg.word}, {"rank", cfg.rank}, {"reduced", w.to_string()}, {"length", w.size()}};
    if (w.empty()) {
        out["cyclic_word"] = "1";
        out["cyclic_length"] = 0;
    } else {
        const auto cr = pw::cyclic_reduce(w);
        out["cyclic_core"] = cr.core.to_string();
        out["conjugator"] = cr.conjugator.to_string();
        out["cyclic_word"] = pw::cyclic_word_of(cfg.rank, w.letters()).to_string();
        out["cyclic_length"] = cr.core.size();
    }
    emit(cfg, out);
    return kOk;
}

Json triplet_list(const std::vector<pw::ReducingTriplet>& list) {
    Json arr = Json::array();
    for (const auto& rt : list) {
        Json t = pw::to_json(rt.triplet);
        t["E"] = rt.reduction;
        arr.push_back(t);
    }
    return arr;
}

int cmd_classify(const Config& cfg) {
    const pw::Word w = require_word(cfg);
    if (w.empty()) {
        throw UsageError("the empty word has no cyclic class");
    }
    const pw::CyclicWord cw = pw::cyclic_word_of(cfg.rank, w.letters());
    const auto graph = pw::build_graph(cw);
    const auto m = pw::minimize(cw);
    Json cuts = Json::array();
    for (pw::Letter l : pw::cut_vertices(graph)) {
        cuts.push_back(std::string(1, l.to_char()));
    }
    Json trace = Json::array();
    pw::CyclicWord current = cw;
    for (const auto& t : m.trace) {
        current = pw::apply_whitehead(t, current);
        Json step = pw::to_json(t);
        step["result"] = current.to_string();
        trace.push_back(step);
    }
    Json out{{"word", w.to_string()},
             {"rank", cfg.rank},
             {"cyclic_word", cw.to_string()},
             {"primitive", pw::is_primitive(cw)},
             {"free_factor", pw::is_in_proper_free_factor(cw)},
             {"classes", pw::classify(cw).names()},
             {"graph", pw::to_json(graph)},
             {"cut_vertices", cuts}};
    try {
        out["valid_triplets"] = triplet_list(pw::valid_triplets(cw));
    } catch (const std::length_error&) {
        out["valid_triplets"] = "too many to list";
    }
    out["minimal_core"] = m.min_core.to_string();
    out["trace"] = trace;
    emit(cfg, out);
    return kOk;
}

int cmd_triplets(const Config& cfg) {
    const pw::Word w = require_word(cfg);
    if (w.empty()) {
        throw UsageError("the empty word has no cyclic class");
    }
    const pw::CyclicWord cw = pw::cyclic_word_of(cfg.rank, w.letters());
    Json out{{"cyclic_word", cw.to_string()},
             {"valid", triplet_list(pw::valid_triplets(cw))},
             {"reducing", triplet_list(pw::reducing_triplets(cw))}};
    emit(cfg, out);
    return kOk;
}

int cmd_count(const Config& cfg) {
    if (cfg.classes.empty()) {
        throw UsageError("--classes must name at least one class");
    }
    if (cfg.max_len < 1) {
        throw UsageError("--max-len must be at least 1");
    }
    std::vector<pw::WordClass> classes;
    for (const auto& c : cfg.classes) {
        classes.push_back(pw::parse_class(c));
    }
    pw::EnumerationOptions opts;
    opts.threads = cfg.threads;
    opts.force = cfg.force;
    const auto tables = pw::count_classes(cfg.rank, cfg.max_len, classes, opts);
    if (cfg.format == "csv") {
        emit(cfg, pw::count_tables_csv(tables));
    } else {
        Json arr = Json::array();
        for (const auto& t : tables) {
            arr.push_back(pw::to_json(t));
        }
        emit(cfg, arr);
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// Triplet specs

/// Letters from a comma-separated list; "v" and "v^-1" name the chosen v.
pw::LetterMask parse_letter_list(const std::string& text, int rank, pw::Letter v) {
    pw::LetterMask m = 0;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" {}"));
        item.erase(item.find_last_not_of(" {}") + 1);
        if (item.empty()) {
            continue;
        }
        pw::Letter l;
        if (item == "v") {
            l = v;
        } else if (item == "v^-1" || item == "V") {
            l = v.inverse();
        } else if (item == "x") {
            l = pw::Letter::make(1, +1);
        } else if (item == "x^-1") {
            l = pw::Letter::make(1, -1);
        } else if (item.size() == 3 && item.substr(1) == "^-1") {
            l = pw::Letter::from_char(item[0]).inverse();
        } else if (item.size() == 1) {
            l = pw::Letter::from_char(item[0]);
        } else {
            throw UsageError("bad letter in triplet: " + item);
        }
        if (l.generator() > rank) {
            throw UsageError("letter beyond rank in triplet: " + item);
        }
        m |= pw::letter_bit(l);
    }
    return m;
}

pw::Letter parse_v(const Config& cfg) {
    if (cfg.v.empty()) {
        return pw::Letter::make(cfg.rank, +1);
    }
    if (cfg.v.size() != 1) {
        throw UsageError("--v takes a single letter");
    }
    return pw::Letter::from_char(cfg.v[0]);
}

pw::Triplet triplet_from_config(const Config& cfg) {
    const pw::Letter v = parse_v(cfg);
    if (v.generator() > cfg.rank) {
        throw UsageError("--v exceeds rank");
    }
    const pw::LetterMask all = pw::full_mask(cfg.rank) & ~pw::letter_bit(v);
    if (!cfg.shape.empty()) {
        const auto eq = cfg.shape.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw UsageError("--shape expects Y={...} or Z={...}");
        }
        const std::string side = cfg.shape.substr(0, eq);
        const pw::LetterMask set = parse_letter_list(cfg.shape.substr(eq + 1), cfg.rank, v);
        if (side == "Y") {
            return pw::Triplet::make(cfg.rank, set, v);
        }
        if (side == "Z") {
            return pw::Triplet::make(cfg.rank, all & ~set, set, v);
        }
        throw UsageError("--shape expects Y={...} or Z={...}");
    }
    if (cfg.y.empty() && cfg.z.empty()) {
        throw UsageError("give --Y/--Z, --shape or --all-shapes");
    }
    if (cfg.y.empty()) {
        const pw::LetterMask z = parse_letter_list(cfg.z, cfg.rank, v);
        return pw::Triplet::make(cfg.rank, all & ~z, z, v);
    }
    const pw::LetterMask y = parse_letter_list(cfg.y, cfg.rank, v);
    if (cfg.z.empty()) {
        return pw::Triplet::make(cfg.rank, y, v);
    }
    return pw::Triplet::make(cfg.rank, y, parse_letter_list(cfg.z, cfg.rank, v), v);
}

/// "start:r", start being a letter, "v" or "v^-1".
pw::TupleCount tuple_from_spec(const pw::Triplet& t, const std::string& spec) {
    const auto colon = spec.rfind(':');
    if (colon == std::string::npos) {
        throw UsageError("--tuple expects start:r");
    }
    const std::string start = spec.substr(0, colon);
    int r = 0;
    try {
        r = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
        throw UsageError("--tuple expects an integer length");
    }
    const pw::LetterMask m = parse_letter_list(start, t.rank(), t.v());
    if (std::popcount(m) != 1) {
        throw UsageError("--tuple start must be one letter");
    }
    return pw::count_follow_tuples(t, pw::mask_letters(m).front(), r);
}

int cmd_growth(const Config& cfg) {
    if (cfg.all_shapes) {
        Json reports = Json::array();
        for (const auto& t : pw::shape_triplets(cfg.rank)) {
            reports.push_back(pw::growth_report(t));
        }
        emit(cfg, Json{{"rank", cfg.rank}, {"triplets", reports}});
        return kOk;
    }
    const pw::Triplet t = triplet_from_config(cfg);
    std::vector<pw::TupleCount> counts;
    for (const auto& spec : cfg.tuples) {
        counts.push_back(tuple_from_spec(t, spec));
    }
    emit(cfg, pw::growth_report(t, counts));
    return kOk;
}

int cmd_wordmap(const Config& cfg) {
    const pw::Word w = require_word(cfg);
    if (cfg.samples > 0) {
        emit(cfg, pw::mc_wordmap_report(w, cfg.n, cfg.samples, cfg.seed, cfg.threads));
    } else {
        emit(cfg, pw::exact_wordmap_report(w, cfg.n, cfg.threads));
    }
    return kOk;
}

int cmd_verify(const Config& cfg) {
    std::vector<int> ids;
    for (const auto& s : cfg.suites.empty() ? std::vector<std::string>{"all"} : cfg.suites) {
        for (int id : pw::acceptance::resolve_suite(s)) {
            if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
                ids.push_back(id);
            }
        }
    }
    bool all_passed = true;
    Json results = Json::array();
    for (int id : ids) {
        const auto r = pw::acceptance::run_criterion(id, cfg.threads);
        all_passed = all_passed && r.passed;
        results.push_back(pw::acceptance::to_json(r));
    }
    emit(cfg, Json{{"passed", all_passed}, {"criteria", results}});
    return all_passed ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Primitive words in free groups: Whitehead reduction, exact counts and growth rates"};
    app.require_subcommand(1);
    Config cfg;

    auto add_rank = [&](CLI::App* sub) {
        sub->add_option("--rank", cfg.rank, "rank of the free group")->check(CLI::Range(2, 26));
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "write the report to this file instead of stdout");
    };
    auto add_threads = [&](CLI::App* sub) {
        sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    };

    auto* reduce = app.add_subcommand("reduce", "free and cyclic reduction of a word");
    reduce->add_option("--word", cfg.word)->required();
    add_rank(reduce);
    add_output(reduce);

    auto* classify = app.add_subcommand("classify", "primitivity, free factors, class labels and Whitehead trace");
    classify->add_option("--word", cfg.word)->required();
    add_rank(classify);
    add_output(classify);

    auto* triplets = app.add_subcommand("triplets", "valid and reducing triplets of a cyclic word");
    triplets->add_option("--word", cfg.word)->required();
    add_rank(triplets);
    add_output(triplets);

    auto* count = app.add_subcommand("count", "exact counts of word classes by length");
    add_rank(count);
    count->add_option("--max-len", cfg.max_len)->check(CLI::PositiveNumber);
    count->add_option("--classes", cfg.classes, "P, C, L, S, Sbar, M, Mc, Ltilde, AllReduced, AllCyclic")
        ->delimiter(',')
        ->required();
    count->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
    count->add_flag("--force", cfg.force, "ignore the work bound");
    add_threads(count);
    add_output(count);

    auto* growth = app.add_subcommand("growth", "transfer matrix growth rate and tuple counts of a triplet");
    add_rank(growth);
    growth->add_option("--Y", cfg.y, "comma-separated letters of Y");
    growth->add_option("--Z", cfg.z, "comma-separated letters of Z");
    growth->add_option("--v", cfg.v, "the letter v (default: last generator)");
    growth->add_option("--shape", cfg.shape, "e.g. \"Y={a}\", \"Y={x,x^-1}\", \"Z={v^-1}\"");
    growth->add_flag("--all-shapes", cfg.all_shapes, "report every triplet with v the last generator");
    growth->add_option("--tuple", cfg.tuples, "start:r, e.g. v:3");
    add_output(growth);

    auto* wordmap = app.add_subcommand("wordmap", "expected fixed points of the word map on S_n");
    wordmap->add_option("--word", cfg.word)->required();
    add_rank(wordmap);
    wordmap->add_option("--n", cfg.n, "symmetric group degree")->check(CLI::PositiveNumber);
    wordmap->add_option("--samples", cfg.samples, "Monte Carlo samples (0 = exact)");
    wordmap->add_option("--seed", cfg.seed);
    add_threads(wordmap);
    add_output(wordmap);

    auto* verify = app.add_subcommand("verify", "run acceptance criteria");
    verify->add_option("suite", cfg.suites, "all, a criterion number or name, constants, identities, trends");
    add_threads(verify);
    add_output(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*reduce) return cmd_reduce(cfg);
        if (*classify) return cmd_classify(cfg);
        if (*triplets) return cmd_triplets(cfg);
        if (*count) return cmd_count(cfg);
        if (*growth) return cmd_growth(cfg);
        if (*wordmap) return cmd_wordmap(cfg);
        if (*verify) return cmd_verify(cfg);
    } catch (const pw::WorkBoundExceeded& e) {
        std::cerr << "error: " << e.what() << " (use --force to override)\n";
        return kWorkBound;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kUsage;
}
