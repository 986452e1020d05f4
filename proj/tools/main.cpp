// Command-line front end: check, validity, classify, convert, bouquet,
// search, parse. Exit codes: 0 yes, 1 no, 2 error.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cltop/bouquet.hpp"
#include "cltop/correspondence.hpp"
#include "cltop/model_io.hpp"
#include "cltop/search.hpp"

namespace {

using namespace cltop;

const char* yesno(bool b) { return b ? "yes" : "no"; }

void print_valuation(std::ostream& out, const Valuation& v) {
    for (int var : v.variables())
        out << "  p" << var << " = " << v.get(var).to_string() << "\n";
}

void emit_model(const ModelFile& m, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << serialize_model(m);
    } else {
        save_model_file(m, out_path);
        std::cout << "wrote " << out_path << "\n";
    }
}

int run_parse(const std::string& text) {
    std::cout << render(parse(text)) << "\n";
    return 0;
}

Subset truth_on_file(const ModelFile& m, const Formula& f) {
    const Valuation v = m.valuation ? *m.valuation : Valuation(m.size());
    if (m.frame) return truth_set(VisserModel{*m.frame, v}, f);
    return eval(*m.space, v, f);
}

int run_check(const std::string& path, const std::string& text, std::optional<int> point) {
    const ModelFile m = load_model_file(path);
    const Formula f = parse(text);
    const Subset t = truth_on_file(m, f);
    if (point) {
        if (*point < 0 || *point >= m.size())
            throw InvalidInputError("--point outside the carrier");
        const bool holds = t.test(*point);
        std::cout << (holds ? "true" : "false") << " at point " << *point << "\n";
        return holds ? 0 : 1;
    }
    std::cout << "truth set: " << t.to_string() << (t.is_full() ? " (full carrier)" : "") << "\n";
    return t.is_full() ? 0 : 1;
}

int run_validity(const std::string& path, const std::string& text) {
    const ModelFile m = load_model_file(path);
    const Formula f = parse(text);
    const std::optional<Valuation> falsifying =
        m.frame ? find_falsifying_on_frame(*m.frame, f) : find_falsifying(*m.space, f);
    if (!falsifying) {
        std::cout << "valid\n";
        return 0;
    }
    std::cout << "invalid; falsifying valuation:\n";
    print_valuation(std::cout, *falsifying);
    return 1;
}

int run_classify(const std::string& path) {
    const ModelFile m = load_model_file(path);
    if (m.frame) {
        const FramePropertyReport rep = properties(*m.frame);
        std::cout << "frame on " << m.size() << " points\n";
        std::cout << "  R transitive: " << yesno(rep.r_transitive)
                  << "  irreflexive: " << yesno(rep.r_irreflexive)
                  << "  acyclic: " << yesno(rep.r_acyclic) << "\n";
        std::cout << "  S reflexive: " << yesno(rep.s_reflexive)
                  << "  transitive: " << yesno(rep.s_transitive) << "\n";
        std::cout << "  CLM condition (x S y R z => x R z): " << yesno(rep.clm_cond) << "\n";
        std::cout << "  R subset of S: " << yesno(rep.r_subset_s) << "\n";
        std::cout << "  ILP condition (x R y S z => x R z): " << yesno(rep.ilp_cond) << "\n";
        std::cout << "  ILW condition (R o S acyclic): " << yesno(rep.ilw_cond) << "\n";
        std::cout << "  class conditions met:";
        for (LogicClass c : classify(*m.frame)) std::cout << " " << to_string(c);
        std::cout << "\n";
        return 0;
    }
    const BitopSpace& sp = *m.space;
    std::cout << "space on " << sp.size() << " points\n";
    const bool cl = is_cl_space(sp);
    std::cout << "  CL-space (tau0 scattered): " << yesno(cl) << "\n";
    if (!cl) return 0;
    std::cout << "  IL-space: " << yesno(is_il_space(sp)) << "\n";
    if (sp.size() <= 8) {
        const ILCharClauses c = il_char_clauses(sp);
        std::cout << "  IL characterization: c1=" << yesno(c.c1) << " c2=" << yesno(c.c2)
                  << " c3=" << yesno(c.c3) << " c4=" << yesno(c.c4) << "\n";
    }
    return 0;
}

int run_convert(const std::string& path, const std::string& to, const std::string& out_path) {
    const ModelFile m = load_model_file(path);
    if (to == "space") {
        if (!m.frame) throw InvalidInputError("input is already a space");
        emit_model(ModelFile::of_space(frame_to_space(*m.frame), m.valuation), out_path);
        return 0;
    }
    if (to == "frame") {
        if (!m.space) throw InvalidInputError("input is already a frame");
        emit_model(ModelFile::of_frame(space_to_frame(*m.space), m.valuation), out_path);
        return 0;
    }
    throw InvalidInputError("--to must be \"frame\" or \"space\"");
}

// Seeded formula/valuation material for the bouquet lemma table.
Formula random_formula(std::mt19937_64& rng, int depth, int num_vars) {
    std::uniform_int_distribution<int> pick(0, depth == 0 ? 2 : 9);
    std::uniform_int_distribution<int> var(0, num_vars - 1);
    switch (pick(rng)) {
        case 0: return Formula::var(var(rng));
        case 1: return Formula::top();
        case 2: return Formula::bot();
        case 3: return Formula::neg(random_formula(rng, depth - 1, num_vars));
        case 4: return Formula::box(random_formula(rng, depth - 1, num_vars));
        case 5: return Formula::dia(random_formula(rng, depth - 1, num_vars));
        case 6:
            return Formula::conj(random_formula(rng, depth - 1, num_vars),
                                 random_formula(rng, depth - 1, num_vars));
        case 7:
            return Formula::disj(random_formula(rng, depth - 1, num_vars),
                                 random_formula(rng, depth - 1, num_vars));
        case 8:
            return Formula::imp(random_formula(rng, depth - 1, num_vars),
                                random_formula(rng, depth - 1, num_vars));
        default:
            return Formula::rhd(random_formula(rng, depth - 1, num_vars),
                                random_formula(rng, depth - 1, num_vars));
    }
}

int run_bouquet(const std::vector<std::string>& paths, const std::string& basepoints_csv,
                int k, std::uint64_t seed, const std::string& out_path) {
    BouquetSpec spec;
    for (const std::string& p : paths) {
        const ModelFile m = load_model_file(p);
        spec.components.push_back(m.space ? *m.space : frame_to_space(*m.frame));
    }
    std::stringstream csv(basepoints_csv);
    std::string item;
    while (std::getline(csv, item, ',')) {
        try {
            spec.basepoints.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InvalidInputError("--basepoints must be a comma-separated point list");
        }
    }
    spec.ultrafilter_index = k;

    const BouquetSpace b = build(spec);

    // Lemma table needs valuations; generate a seeded batch plus axiom
    // instances and a few random formulas over p0..p2.
    std::mt19937_64 rng(seed);
    std::vector<Formula> pool;
    for (const Schema& s : schema_library()) pool.push_back(standard_instance(s));
    for (int i = 0; i < 8; ++i) pool.push_back(random_formula(rng, 3, 3));

    const int rounds = 5;
    bool truth_components = true, truth_star = true, dead_ends = true;
    for (int round = 0; round < rounds; ++round) {
        std::vector<Valuation> vals;
        for (const BitopSpace& c : b.spec().components) {
            Valuation v(c.size());
            std::uniform_int_distribution<std::uint32_t> bits(0, full_mask(c.size()));
            for (int var = 0; var < 3; ++var) v.set(var, Subset(c.size(), bits(rng)));
            vals.push_back(std::move(v));
        }
        for (const Formula& f : pool) {
            truth_components = truth_components && verify_truth_lemma_components(b, vals, f);
            truth_star = truth_star && verify_truth_lemma_star(b, vals, f);
        }
        dead_ends = dead_ends && dead_end_check(b, vals);
    }
    const bool scattered = b.space().tau0().is_scattered();

    std::cout << "bouquet on " << b.space().size() << " points (star = " << b.star() << ")\n";
    std::cout << "  component truth lemma: " << (truth_components ? "pass" : "FAIL") << "\n";
    std::cout << "  star truth lemma:      " << (truth_star ? "pass" : "FAIL") << "\n";
    std::cout << "  dead ends outside Y:   " << (dead_ends ? "pass" : "FAIL") << "\n";
    std::cout << "  tau0 scattered:        " << (scattered ? "pass" : "FAIL") << "\n";
    emit_model(ModelFile::of_space(b.space()), out_path);
    return (truth_components && truth_star && dead_ends && scattered) ? 0 : 1;
}

std::vector<Formula> formulas_from_arg(const std::string& arg) {
    std::vector<Formula> out;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw InvalidInputError("cannot open formula list: " + arg.substr(1));
        std::string line;
        while (std::getline(in, line)) {
            const auto start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos || line[start] == '#') continue;
            out.push_back(parse(line));
        }
        if (out.empty()) throw InvalidInputError("formula list is empty: " + arg.substr(1));
    } else {
        out.push_back(parse(arg));
    }
    return out;
}

int run_search(const std::string& formula_arg, const std::string& mode,
               const std::string& cls_name, int max_n, const std::string& dedup,
               const std::string& out_path) {
    SearchOptions opts;
    if (dedup == "on") opts.dedup = true;
    else if (dedup == "off") opts.dedup = false;
    else if (dedup != "auto") throw InvalidInputError("--dedup must be auto, on or off");

    const LogicClass cls = logic_class_from_string(cls_name);
    const std::vector<Formula> formulas = formulas_from_arg(formula_arg);

    SearchResult res{SearchVerdict::ValidUpToN, std::nullopt, 0};
    if (mode == "countermodel") {
        if (formulas.size() != 1)
            throw InvalidInputError("countermodel mode takes a single formula");
        res = find_countermodel(formulas[0], cls, max_n, opts);
    } else if (mode == "satisfy") {
        res = find_model(formulas, cls, max_n, opts);
    } else {
        throw InvalidInputError("--mode must be countermodel or satisfy");
    }

    std::cout << "verdict: " << to_string(res.verdict) << " (max-n " << max_n << ", class "
              << to_string(cls) << ")\n";
    std::cout << "frames explored: " << res.frames_explored << "\n";
    if (res.witness) {
        std::cout << "witness point: " << res.witness->point << "\n";
        const ModelFile w =
            ModelFile::of_model(res.witness->model.frame, res.witness->model.valuation);
        emit_model(w, out_path);
    }
    return res.witness ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-model engine for conservativity and interpretability logics"};
    app.require_subcommand(1);

    std::string model_path, formula_text, out_path;
    std::optional<int> point;
    std::string to, basepoints_csv, mode = "countermodel", cls_name = "CL", dedup = "auto";
    std::vector<std::string> component_paths;
    int max_n = 3, k = 0;
    std::uint64_t seed = 42;

    CLI::App* cmd_parse = app.add_subcommand("parse", "parse a formula and print it canonically");
    cmd_parse->add_option("formula", formula_text, "formula text")->required();

    CLI::App* cmd_check = app.add_subcommand("check", "evaluate a formula on a model file");
    cmd_check->add_option("model", model_path, "model file")->required();
    cmd_check->add_option("formula", formula_text, "formula text")->required();
    cmd_check->add_option("--point", point, "report the verdict at one point");

    CLI::App* cmd_validity = app.add_subcommand("validity", "check validity under all valuations");
    cmd_validity->add_option("model", model_path, "model file")->required();
    cmd_validity->add_option("formula", formula_text, "formula text")->required();

    CLI::App* cmd_classify = app.add_subcommand("classify", "report frame/space properties");
    cmd_classify->add_option("model", model_path, "model file")->required();

    CLI::App* cmd_convert = app.add_subcommand("convert", "convert between frame and space files");
    cmd_convert->add_option("model", model_path, "model file")->required();
    cmd_convert->add_option("--to", to, "target kind: frame or space")->required();
    cmd_convert->add_option("-o,--out", out_path, "output file (default: stdout)");

    CLI::App* cmd_bouquet = app.add_subcommand("bouquet", "glue component spaces and verify the lemmas");
    cmd_bouquet->add_option("components", component_paths, "component model files")->required();
    cmd_bouquet->add_option("--basepoints", basepoints_csv, "comma-separated basepoints")->required();
    cmd_bouquet->add_option("--k", k, "ultrafilter component index")->required();
    cmd_bouquet->add_option("--seed", seed, "seed for the lemma-table valuations");
    cmd_bouquet->add_option("-o,--out", out_path, "output file (default: stdout)");

    CLI::App* cmd_search = app.add_subcommand("search", "bounded countermodel / satisfiability search");
    cmd_search->add_option("formula", formula_text, "formula text, or @file with one formula per line")
        ->required();
    cmd_search->add_option("--mode", mode, "countermodel or satisfy");
    cmd_search->add_option("--class", cls_name, "frame class: CL CLM IL ILP ILW ILM-cond");
    cmd_search->add_option("--max-n", max_n, "largest carrier size searched (1..5)");
    cmd_search->add_option("--dedup", dedup, "isomorphism dedup: auto, on, off");
    cmd_search->add_option("-o,--out", out_path, "witness output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(cmd_parse)) return run_parse(formula_text);
        if (app.got_subcommand(cmd_check)) return run_check(model_path, formula_text, point);
        if (app.got_subcommand(cmd_validity)) return run_validity(model_path, formula_text);
        if (app.got_subcommand(cmd_classify)) return run_classify(model_path);
        if (app.got_subcommand(cmd_convert)) return run_convert(model_path, to, out_path);
        if (app.got_subcommand(cmd_bouquet))
            return run_bouquet(component_paths, basepoints_csv, k, seed, out_path);
        if (app.got_subcommand(cmd_search))
            return run_search(formula_text, mode, cls_name, max_n, dedup, out_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
