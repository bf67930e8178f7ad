// tropdiff: command line front end for the tropical differential algebra
// engine.  Exit codes: 0 success/yes, 1 no (or failed verify), 2 unknown,
// 3 usage or parse error, 4 engine error.

#include "tropdiff/parse.hpp"
#include "tropdiff/solve.hpp"
#include "tropdiff/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace tropdiff;

namespace {

struct RunConfig {
    std::string pair = "T2";
    unsigned prime = 2;
    unsigned trunc_deg = kDefaultTruncDeg;
    std::string output = "text";
};

PairDescriptor make_pair(const RunConfig& cfg) {
    if (cfg.pair == "B") return boolean_pair();
    if (cfg.pair == "T2") return rank2_pair(cfg.prime);
    throw UnsupportedError("unknown pair '" + cfg.pair + "' (expected B or T2)");
}

EnhancedSeminorm make_enhancement(const RunConfig& cfg) {
    if (cfg.pair == "B") return EnhancedSeminorm::grigoriev();
    if (cfg.pair == "T2") return EnhancedSeminorm::padic_rank2(cfg.prime);
    throw UnsupportedError("unknown pair '" + cfg.pair + "' (expected B or T2)");
}

json config_json(const RunConfig& cfg) {
    return json{{"pair", cfg.pair},
                {"prime", cfg.prime},
                {"trunc_deg", cfg.trunc_deg},
                {"output", cfg.output}};
}

void emit(const RunConfig& cfg, const std::string& verb, const json& result,
          const std::string& text) {
    if (cfg.output == "json") {
        json out{{"verb", verb}, {"config", config_json(cfg)}, {"result", result}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

json term_json(const EvalTerm& t) {
    json j{{"monomial", to_string(t.monomial)},
           {"coefficient", to_string(t.coefficient)},
           {"value", to_string(t.value.value)},
           {"caveat", t.value.caveat}};
    if (t.value.caveat) j["min_order"] = rat_to_string(t.value.min_order);
    return j;
}

json slot_json(unsigned slot, const SlotAnalysis& analysis) {
    json j{{"slot", slot}, {"verdict", verdict_kind_name(analysis.verdict.kind)}};
    if (analysis.verdict.c) j["c"] = rat_to_string(*analysis.verdict.c);
    if (!analysis.verdict.equations.empty()) j["equations"] = analysis.verdict.equations;
    json terms = json::array();
    for (const auto& t : analysis.terms) terms.push_back(to_string(t));
    j["witness_terms"] = terms;
    return j;
}

std::string slot_text(unsigned slot, const SlotAnalysis& analysis) {
    std::ostringstream os;
    os << "slot " << slot << ": " << verdict_kind_name(analysis.verdict.kind);
    if (analysis.verdict.c) os << " (c = " << rat_to_string(*analysis.verdict.c) << ")";
    os << "\n  terms:";
    for (const auto& t : analysis.terms) os << " " << to_string(t);
    os << "\n";
    for (const auto& eq : analysis.verdict.equations) os << "  open: " << eq << "\n";
    return os.str();
}

int run_check(const RunConfig& cfg, const std::string& eq, const std::vector<std::string>& sols,
              bool exact) {
    PairDescriptor pair = make_pair(cfg);
    DiffPoly f = parse_diff_poly(eq, pair.s0_tag);
    std::vector<TruncSeries> point;
    std::optional<unsigned> trunc = exact ? std::nullopt : std::optional<unsigned>(cfg.trunc_deg);
    for (const std::string& s : sols) point.push_back(parse_series(s, pair.coeff_tag, trunc));

    Verdict verdict = is_solution(f, point, pair);
    json result{{"verdict", verdict_name(verdict)}};
    std::ostringstream text;
    text << "verdict: " << verdict_name(verdict) << "\n";
    try {
        EvalResult ev = eval_poly(f, point, pair);
        result["sum"] = to_string(ev.value);
        result["caveat"] = ev.caveat;
        json terms = json::array();
        for (const auto& t : ev.terms) {
            terms.push_back(term_json(t));
            text << "  " << to_string(t.monomial) << ": " << to_string(t.value.value);
            if (t.value.caveat)
                text << " (unknown tail, order >= " << rat_to_string(t.value.min_order) << ")";
            text << "\n";
        }
        result["terms"] = terms;
        text << "sum: " << to_string(ev.value) << "\n";
    } catch (const TruncationError& e) {
        result["sum"] = nullptr;
        result["caveat"] = true;
        result["terms"] = json::array();
        text << "  (evaluation ran past the truncation: " << e.what() << ")\n";
    }
    emit(cfg, "check", result, text.str());
    switch (verdict) {
        case Verdict::yes: return 0;
        case Verdict::no: return 1;
        case Verdict::unknown: return 2;
    }
    return 4;
}

int run_enumerate(const RunConfig& cfg, const std::string& eq, unsigned max_deg) {
    // Support enumeration only makes sense over the boolean pair.
    PairDescriptor pair = boolean_pair();
    DiffPoly f = parse_diff_poly(eq, pair.s0_tag);
    BooleanSolutions sols = enumerate_boolean_solutions(f, max_deg, pair);
    auto patterns_json = [](const std::vector<SupportPattern>& ps) {
        json arr = json::array();
        for (const auto& p : ps) arr.push_back(p.support);
        return arr;
    };
    json result{{"max_deg", max_deg},
                {"solutions", patterns_json(sols.yes)},
                {"unknown", patterns_json(sols.unknown)}};
    std::ostringstream text;
    text << sols.yes.size() << " solutions up to degree " << max_deg << ":\n";
    for (const auto& p : sols.yes) {
        text << "  {";
        for (std::size_t i = 0; i < p.support.size(); ++i)
            text << (i ? ", " : "") << p.support[i];
        text << "}\n";
    }
    if (!sols.unknown.empty()) text << sols.unknown.size() << " supports left unknown\n";
    emit(cfg, "enumerate", result, text.str());
    return 0;
}

int run_solve_coeff(const RunConfig& cfg, const std::string& eq, unsigned slot) {
    PairDescriptor pair = make_pair(cfg);
    DiffPoly f = parse_diff_poly(eq, pair.s0_tag);
    SlotAnalysis analysis = solve_leading_coefficient(f, CoeffTemplate::leading_one(slot), pair);
    emit(cfg, "solve-coeff", slot_json(slot, analysis), slot_text(slot, analysis));
    return 0;
}

int run_scan(const RunConfig& cfg, const std::string& eq, unsigned max_slot) {
    PairDescriptor pair = make_pair(cfg);
    DiffPoly f = parse_diff_poly(eq, pair.s0_tag);
    auto table = scan_template(f, max_slot, pair);
    json slots = json::array();
    std::ostringstream text;
    for (const auto& [slot, analysis] : table) {
        slots.push_back(slot_json(slot, analysis));
        text << slot_text(slot, analysis);
    }
    emit(cfg, "scan", json{{"max_slot", max_slot}, {"slots", slots}}, text.str());
    return 0;
}

int run_tropicalize(const RunConfig& cfg, const std::string& eq,
                    const std::vector<std::string>& points) {
    EnhancedSeminorm e = make_enhancement(cfg);
    json result{{"enhancement", cfg.pair == "B" ? "grigoriev" : "padic_rank2"},
                {"prime", cfg.prime}};
    std::ostringstream text;
    if (!eq.empty()) {
        RatDiffPoly f = parse_rat_diff_poly(eq);
        TropEquation trop = trop_equation(f, e);
        result["equation"] = to_string(trop.poly);
        result["equation_caveat"] = trop.caveat;
        text << "equation: " << to_string(trop.poly) << "\n";
    }
    if (!points.empty()) {
        json arr = json::array();
        for (const std::string& s : points) {
            RatSeries p = parse_rat_series(s, cfg.trunc_deg);
            TruncSeries enhanced = enhance(p, e);
            arr.push_back(to_string(enhanced));
            text << "point: " << to_string(enhanced) << "\n";
        }
        result["points"] = arr;
    }
    emit(cfg, "tropicalize", result, text.str());
    return 0;
}

int run_classical_solve(const RunConfig& cfg, const std::string& eq, const std::string& init,
                        unsigned deg) {
    RatDiffPoly f = parse_rat_diff_poly(eq);
    std::map<unsigned, RatSeries> by_order;
    unsigned max_order = 0;
    for (const auto& [mono, coeff] : f.terms()) {
        if (mono.exponents.size() != 1)
            throw UnsupportedError("classical-solve expects a linear equation in x1 and derivatives");
        const auto& [key, mult] = *mono.exponents.begin();
        if (key.first != 0 || mult != 1)
            throw UnsupportedError("classical-solve expects a linear equation in x1 and derivatives");
        by_order.emplace(key.second, coeff);
        max_order = std::max(max_order, key.second);
    }
    std::vector<RatSeries> coeffs(max_order + 1, RatSeries());
    for (auto& [order, c] : by_order) coeffs[order] = c;
    std::vector<Rat> init_values;
    std::stringstream ss(init);
    std::string item;
    while (std::getline(ss, item, ',')) init_values.push_back(rat_from_string(item));
    RatSeries x = solve_linear_ode(coeffs, init_values, deg);
    json result{{"equation", to_string(f)}, {"solution", to_string(x)}};
    emit(cfg, "classical-solve", result, "x1 = " + to_string(x) + "\n");
    return 0;
}

int run_verify(const RunConfig& cfg, const std::string& suite, unsigned long cases) {
    std::vector<CheckReport> parts;
    if (suite == "laws") {
        for (Semiring tag : {Semiring::boolean, Semiring::trop_exp, Semiring::pos_rat, Semiring::rank2})
            parts.push_back(verify_semiring_laws(tag, cases));
    } else if (suite == "leibniz") {
        parts.push_back(verify_leibniz(SeriesDifferential::padic(cfg.prime), Semiring::pos_rat,
                                       cases, cases / 2 + 1));
        parts.push_back(verify_leibniz(SeriesDifferential::degenerate(cfg.prime), Semiring::pos_rat,
                                       cases, cases / 2 + 1));
        parts.push_back(verify_leibniz(SeriesDifferential::strict_shift(), Semiring::boolean, cases,
                                       cases / 2 + 1));
    } else if (suite == "pi-hom") {
        parts.push_back(verify_projection_hom(boolean_pair(), cases));
        parts.push_back(verify_projection_hom(rank2_pair(cfg.prime), cases));
    } else if (suite == "axioms") {
        parts.push_back(verify_seminorm_axioms(EnhancedSeminorm::grigoriev(), cases));
        parts.push_back(verify_seminorm_axioms(EnhancedSeminorm::padic_rank2(cfg.prime), cases));
        parts.push_back(check_weight_seminorm(SeriesDifferential::padic(cfg.prime),
                                              Semiring::pos_rat, 40));
        parts.push_back(check_weight_seminorm(SeriesDifferential::degenerate(cfg.prime),
                                              Semiring::pos_rat, 40));
    } else if (suite == "commute") {
        parts.push_back(verify_enhancement_commutes(EnhancedSeminorm::grigoriev(), cases));
        parts.push_back(verify_enhancement_commutes(EnhancedSeminorm::padic_rank2(cfg.prime), cases));
    } else if (suite == "forest") {
        parts.push_back(verify_forest_soundness(SeriesDifferential::padic(cfg.prime), cases));
    } else if (suite == "reduced") {
        parts.push_back(verify_reducedness_witness(cases));
    } else if (suite == "soundness") {
        parts.push_back(verify_tropicalization_soundness(make_enhancement(cfg), cfg.trunc_deg));
    } else {
        throw UnsupportedError("unknown suite '" + suite +
                               "' (laws, leibniz, pi-hom, axioms, commute, forest, reduced, soundness)");
    }
    CheckReport report = merge_reports(suite, parts);
    json result{{"suite", suite},
                {"cases", report.cases},
                {"failures", report.failures},
                {"caveat_skips", report.caveat_skips},
                {"pass", report.pass()}};
    if (!report.pass()) result["counterexample"] = report.first_counterexample;
    std::ostringstream text;
    text << "suite " << suite << ": " << (report.pass() ? "pass" : "FAIL") << " (" << report.cases
         << " checks, " << report.failures << " failures, " << report.caveat_skips
         << " caveat skips)\n";
    if (!report.pass()) text << "counterexample: " << report.first_counterexample << "\n";
    emit(cfg, "verify", result, text.str());
    return report.pass() ? 0 : 1;
}

// The bundled second-order demo equation over the rank-2 pair, scanned
// through its first five slots.
int run_demo(RunConfig cfg) {
    cfg.pair = "T2";
    cfg.prime = 2;
    return run_scan(cfg, "(e^-4,1)*x1 + (1,8)*x1' + (e^-1,8)*x1''", 5);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tropdiff: exact arithmetic for tropical differential equations"};
    app.fallthrough();
    app.set_config("--config");

    RunConfig cfg;
    app.add_option("--pair", cfg.pair, "pair: B (boolean/support) or T2 (rank-2)")
        ->check(CLI::IsMember({"B", "T2"}));
    app.add_option("--prime", cfg.prime, "prime for p-adic weights (default 2)");
    app.add_option("--trunc-deg,--deg,--trunc_deg", cfg.trunc_deg, "truncation degree (default 16)");
    app.add_option("--output", cfg.output, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    bool paper_demo = false;
    app.add_flag("--paper-demo", paper_demo, "replay the bundled five-slot demo cascade");

    std::string eq, init = "";
    std::vector<std::string> sols;
    bool exact = false;
    unsigned max_deg = 5, slot = 1, max_slot = 5, deg = 12;
    unsigned long cases = 200;
    std::string suite = "laws";

    auto* check = app.add_subcommand("check", "test a series against an equation");
    check->add_option("--eq", eq, "differential polynomial")->required();
    check->add_option("--sol", sols, "candidate series, one per variable")->required();
    check->add_flag("--exact", exact, "treat series literals as exactly known");

    auto* enumerate = app.add_subcommand("enumerate", "enumerate boolean support solutions");
    enumerate->add_option("--eq", eq, "differential polynomial")->required();
    enumerate->add_option("--max-deg", max_deg, "largest support degree");

    auto* solve_coeff = app.add_subcommand("solve-coeff", "solve for one template coefficient");
    solve_coeff->add_option("--eq", eq, "differential polynomial")->required();
    solve_coeff->add_option("--slot", slot, "degree of the unknown coefficient")->required();

    auto* scan = app.add_subcommand("scan", "scan template slots in sequence");
    scan->add_option("--eq", eq, "differential polynomial")->required();
    scan->add_option("--max-slot", max_slot, "last slot to scan");

    auto* tropicalize = app.add_subcommand("tropicalize", "tropicalize equations and points");
    tropicalize->add_option("--eq", eq, "classical differential polynomial");
    tropicalize->add_option("--sol", sols, "classical series to enhance");

    auto* classical = app.add_subcommand("classical-solve", "solve a linear equation in Q[[t]]");
    classical->add_option("--eq", eq, "linear differential polynomial")->required();
    classical->add_option("--init", init, "comma-separated initial coefficients");
    classical->add_option("--solve-deg", deg, "degree to solve to (default 12)");

    auto* verify = app.add_subcommand("verify", "run a randomized law suite");
    verify->add_option("--suite", suite, "suite name")->required();
    verify->add_option("--cases", cases, "number of random cases");

    app.require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        if (cfg.trunc_deg < 1) throw UnsupportedError("trunc_deg must be at least 1");
        if (!is_prime(cfg.prime))
            throw UnsupportedError("--prime " + std::to_string(cfg.prime) + " is not prime");
        if (paper_demo) return run_demo(cfg);
        if (check->parsed()) return run_check(cfg, eq, sols, exact);
        if (enumerate->parsed()) return run_enumerate(cfg, eq, max_deg);
        if (solve_coeff->parsed()) return run_solve_coeff(cfg, eq, slot);
        if (scan->parsed()) return run_scan(cfg, eq, max_slot);
        if (tropicalize->parsed()) return run_tropicalize(cfg, eq, sols);
        if (classical->parsed()) return run_classical_solve(cfg, eq, init, deg);
        if (verify->parsed()) return run_verify(cfg, suite, cases);
        std::cerr << app.help();
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const EngineError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
