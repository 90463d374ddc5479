#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <centerfocus.hpp>

namespace {

using cf::json;

enum Exit { ok = 0, input = 2, math_no = 3, internal = 4, budget = 5 };

struct Globals {
    bool json = false;
    bool timing = false;
    std::uint64_t seed = 20240601;
    double budget = 0;
};

// Text or JSON emitter for one command's report.
class Report {
public:
    Report(std::string command, const Globals& g) : g_(g) {
        doc_["command"] = std::move(command);
        doc_["inputs"] = json::object();
        doc_["results"] = json::object();
        doc_["checks"] = json::array();
        start_ = std::chrono::steady_clock::now();
    }

    json& inputs() { return doc_["inputs"]; }
    json& results() { return doc_["results"]; }

    void check(const std::string& name, const std::string& expected, const std::string& got, const std::string& verdict) {
        doc_["checks"].push_back({{"name", name}, {"expected", expected}, {"got", got}, {"verdict", verdict}});
    }

    void line(const std::string& s) { text_ << s << "\n"; }

    void emit() {
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        // Timing breaks byte-identical output, so it is opt-in.
        doc_["elapsed"] = g_.timing ? json(ms) : json(nullptr);
        if (g_.json) {
            std::cout << doc_.dump(2) << "\n";
        } else {
            std::cout << text_.str();
            if (g_.timing) std::cout << "elapsed: " << ms << " ms\n";
        }
    }

private:
    const Globals& g_;
    json doc_;
    std::ostringstream text_;
    std::chrono::steady_clock::time_point start_;
};

std::string str(const cf::Poly& p, const cf::SystemSpec& spec) { return cf::canonical_string(p, spec.vars()); }

// Fills every still-symbolic slot with a seeded random rational.
cf::SystemSpec sample_remaining(cf::SystemSpec spec, std::uint64_t seed) {
    cf::RationalSampler rng(seed);
    for (std::size_t i = 0; i < spec.slots().size(); ++i) {
        if (spec.is_symbolic(i)) spec = spec.with_value(spec.slots()[i].display_name, rng.next_nonzero());
    }
    return spec;
}

int run_focal(const Globals& g, const std::string& system, unsigned order) {
    const auto spec = cf::parse_system(system);
    const auto seq = cf::focal_quantities(spec, order);
    Report r("focal", g);
    r.inputs() = cf::describe(spec);
    r.inputs()["order"] = order;
    json ls = json::array();
    for (std::size_t k = 0; k < seq.L.size(); ++k) {
        ls.push_back({{"k", k + 1}, {"L_k", str(seq.L[k], spec)}});
        r.line("L" + std::to_string(k + 1) + " = " + str(seq.L[k], spec));
    }
    r.results()["L"] = ls;
    r.results()["convention"] = seq.convention_note;
    r.line("convention: " + seq.convention_note);
    r.emit();
    return ok;
}

void put_solution(Report& r, const cf::PseudoQuantitySolution& sol, const cf::SystemSpec& spec) {
    r.results()["k"] = sol.k;
    r.results()["m"] = sol.m;
    r.results()["n"] = sol.n;
    r.results()["chosen_free"] = sol.chosen_free;
    r.results()["numerator"] = str(sol.numerator_core, spec);
    r.results()["sigma"] = str(sol.sigma, spec);
    json ft = json::object();
    for (const auto& [name, p] : sol.free_terms) ft[name] = str(p, spec);
    r.results()["free_terms"] = ft;
    std::string frees;
    for (const auto& f : sol.chosen_free) frees += (frees.empty() ? "" : ",") + f;
    r.line("k = " + std::to_string(sol.k) + ", system " + std::to_string(sol.m) + " x " + std::to_string(sol.n) +
           ", free " + frees);
    r.line("numerator = " + str(sol.numerator_core, spec));
    for (const auto& [name, p] : sol.free_terms) r.line("companion of " + name + " = " + str(p, spec));
    r.line("sigma = " + str(sol.sigma, spec));
}

int run_pseudo(const Globals& g, const std::string& system, unsigned k, const std::string& mode, const std::string& free_text,
               const std::string& point) {
    if (k < 1) throw cf::input_error("--k must be at least 1");
    auto spec = cf::parse_system(system);
    const cf::FreeChoice free = [&] {
        try {
            return cf::FreeChoice::parse(free_text, k);
        } catch (const std::invalid_argument& e) {
            throw cf::input_error(e.what());
        }
    }();
    Report r("pseudo", g);
    r.inputs() = cf::describe(spec);
    r.inputs()["k"] = k;
    r.inputs()["mode"] = mode;
    if (mode == "structure") {
        const auto rep = cf::structure(spec.signature(), k);
        json types = json::array();
        std::string ts;
        for (const auto& t : rep.types) {
            types.push_back(t.to_string());
            ts += (ts.empty() ? "" : " ") + t.to_string();
        }
        r.results() = {{"k", rep.k}, {"m", rep.m}, {"n", rep.n}, {"N", rep.N}, {"types", types}};
        r.line("k = " + std::to_string(rep.k) + ": m = " + std::to_string(rep.m) + ", n = " + std::to_string(rep.n) +
               ", N = " + std::to_string(rep.N));
        r.line("types: " + ts);
        r.emit();
        return ok;
    }
    if (mode == "symbolic") {
        if (k > 2) throw cf::input_error("symbolic mode supports k <= 2; use point or structure mode");
        if (k == 2 && g.budget <= 0) throw cf::input_error("symbolic k = 2 is expensive; pass --budget SECONDS to run it");
        if (!spec.fully_symbolic()) {
            // Variety chart or partial assignments: solve generically, then substitute.
            const auto generic = cf::build_generic(spec.signature());
            auto sol = cf::pseudo_symbolic(generic, k, free);
            const auto values = spec.assignment();
            sol.numerator_core = sol.numerator_core.substitute(values);
            sol.sigma = sol.sigma.substitute(values);
            for (auto& [name, p] : sol.free_terms) p = p.substitute(values);
            put_solution(r, sol, spec);
        } else {
            put_solution(r, cf::pseudo_symbolic(spec, k, free), spec);
        }
        r.emit();
        return ok;
    }
    if (mode != "point") throw cf::input_error("--mode must be symbolic, point or structure");
    if (!point.empty()) {
        json doc;
        try {
            doc = json::parse(cf::file_or_inline(point));
        } catch (const json::parse_error& e) {
            throw cf::input_error(std::string("malformed point JSON: ") + e.what());
        }
        spec = cf::apply_point(spec, doc);
    } else if (!spec.fully_concrete()) {
        spec = sample_remaining(spec, g.seed);
    }
    r.inputs() = cf::describe(spec);
    r.inputs()["k"] = k;
    r.inputs()["mode"] = mode;
    const auto sol = cf::pseudo_point(spec, k, free);
    put_solution(r, sol, spec);
    const cf::Rational value = sol.value_at_zero_free();
    r.results()["G_k"] = cf::to_string(value);
    r.line("G" + std::to_string(k) + " (free parameters 0) = " + cf::to_string(value));
    if (cf::on_variety(spec)) {
        const auto L = cf::focal_quantities(spec, k, free.as_normalization()).L.back();
        const cf::Rational lk = L.constant_value();
        r.results()["L_k"] = cf::to_string(lk);
        r.line("L" + std::to_string(k) + " = " + cf::to_string(lk));
        const bool same = lk == value;
        r.check("G_k equals L_k on the variety", cf::to_string(lk), cf::to_string(value), same ? "pass" : "fail");
        if (!same) {
            r.emit();
            return internal;
        }
    }
    r.emit();
    return ok;
}

int run_comitant_check(const Globals& g, const std::string& system, const std::string& poly_arg) {
    const auto spec = cf::parse_system(system);
    if (!spec.fully_symbolic()) throw cf::input_error("comitant-check needs a fully symbolic system (no V, no values)");
    const cf::Poly p = cf::parse_poly_arg(poly_arg, spec);
    if (p.is_zero()) throw cf::input_error("the zero polynomial has no type");
    const auto ty = cf::type_of(p, spec);
    if (const auto* bad = std::get_if<cf::Inhomogeneous>(&ty)) {
        throw cf::input_error("polynomial is not homogeneous of a comitant type: " +
                              cf::canonical_string(cf::Poly::term(bad->first, 1), spec.vars()) + " vs " +
                              cf::canonical_string(cf::Poly::term(bad->second, 1), spec.vars()));
    }
    const auto v = cf::is_comitant(p, spec);
    Report r("comitant-check", g);
    r.inputs() = cf::describe(spec);
    r.inputs()["poly"] = str(p, spec);
    r.results()["type"] = v.type.to_string();
    r.results()["weight"] = v.weight ? json(*v.weight) : json("half-integer");
    r.results()["verdict"] = v.comitant ? "comitant" : "not a comitant";
    r.results()["witness"] = v.comitant ? json(nullptr) : json({{"identity", v.witness}, {"residual", str(v.residual, spec)}});
    r.line("type " + v.type.to_string() + ", weight " + (v.weight ? std::to_string(*v.weight) : std::string("half-integer")));
    if (v.comitant) {
        r.line("comitant");
    } else {
        r.line("not a comitant: " + v.witness + (v.residual.is_zero() ? "" : " residual " + str(v.residual, spec)));
    }
    r.emit();
    return v.comitant ? ok : math_no;
}

int run_hilbert(const Globals& g, const std::string& series, bool krull, std::optional<unsigned> expand_to,
                const std::string& specialize_mode, const std::string& compare_with, unsigned compare_order) {
    cf::HilbertSeries h = cf::parse_series(series);
    Report r("hilbert", g);
    r.inputs()["series"] = h.to_string();
    if (!specialize_mode.empty()) {
        if (specialize_mode == "invariants") {
            h = cf::specialize(h, cf::Specialization::invariants);
        } else if (specialize_mode == "common") {
            h = cf::specialize(h, cf::Specialization::common, "u");
        } else {
            throw cf::input_error("--specialize must be invariants or common");
        }
        r.results()["specialized"] = h.to_string();
        r.line("specialized: " + h.to_string());
    }
    const bool single = h.single_variable().has_value();
    if ((krull || expand_to || !compare_with.empty()) && !single) {
        throw cf::input_error("series has several variables; use --specialize common first");
    }
    if (krull) {
        const unsigned d = cf::krull_dimension(h);
        r.results()["krull"] = d;
        r.line("Krull dimension: " + std::to_string(d));
    }
    if (expand_to) {
        const auto c = cf::expand(h, *expand_to);
        json arr = json::array();
        std::string s;
        for (const auto& v : c) {
            arr.push_back(cf::to_string(v));
            s += (s.empty() ? "" : ", ") + cf::to_string(v);
        }
        r.results()["expansion"] = arr;
        r.line("coefficients: " + s);
    }
    if (!compare_with.empty()) {
        const auto other = cf::parse_series(compare_with);
        const auto o = cf::compare(h, other, compare_order);
        r.results()["compare"] = cf::to_string(o);
        r.line("comparison to order " + std::to_string(compare_order) + ": " + cf::to_string(o));
    }
    if (!krull && !expand_to && compare_with.empty() && specialize_mode.empty()) r.line(h.to_string());
    r.emit();
    return ok;
}

int run_rho(const Globals& g, const std::string& sig_text) {
    std::vector<unsigned> degs;
    std::stringstream ss(sig_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long v = std::stol(item, &used);
            if (v < 0 || item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
            degs.push_back(static_cast<unsigned>(v));
        } catch (const std::exception&) {
            throw cf::input_error("bad degree '" + item + "' in --signature");
        }
    }
    // Accept both "2,3" and "1,2,3".
    if (!degs.empty() && degs.front() > 1) degs.insert(degs.begin(), 1);
    const cf::Signature sig(degs);
    Report r("rho", g);
    r.inputs()["signature"] = sig.to_string();
    const unsigned b = cf::rho_bound(sig);
    r.results() = {{"rho_bound", b}, {"slot_count", sig.slot_count()}};
    r.line("rho bound for " + sig.to_string() + ": " + std::to_string(b) + " (coefficient slots " +
           std::to_string(sig.slot_count()) + ")");
    r.emit();
    return ok;
}

int run_verify(const Globals& g, const std::string& suite) {
    if (suite != "paper") throw cf::input_error("unknown suite '" + suite + "' (available: paper)");
    const auto results = cf::run_reference_suite(g.seed);
    Report r("verify", g);
    r.inputs()["suite"] = suite;
    r.inputs()["seed"] = g.seed;
    bool failed = false;
    json criteria = json::array();
    for (const auto& c : results) {
        auto j = cf::to_json(c);
        if (!g.timing) j.erase("seconds");
        criteria.push_back(j);
        const auto v = c.verdict();
        failed = failed || v == cf::Verdict::fail;
        std::ostringstream line;
        line << (c.id < 10 ? " " : "") << c.id << "  " << cf::to_string(v) << "  " << c.title;
        if (g.timing) line << "  (" << c.seconds << " s)";
        r.line(line.str());
        for (const auto& ch : c.checks) {
            r.check(std::to_string(c.id) + ": " + ch.name, ch.expected, ch.got, cf::to_string(ch.verdict));
            if (ch.verdict != cf::Verdict::pass) {
                r.line("      " + ch.name + ": expected " + ch.expected + ", got " + ch.got + " [" + cf::to_string(ch.verdict) + "]");
            }
        }
    }
    r.results()["criteria"] = criteria;
    r.results()["passed"] = !failed;
    r.emit();
    return failed ? internal : ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Focal quantities, pseudo-quantities, comitants and Hilbert series"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "machine-readable report");
    app.add_flag("--timing", g.timing, "include wall-clock times in the output");
    app.add_option("--seed", g.seed, "seed for random points");
    app.add_option("--budget", g.budget, "time limit in seconds (exit 5 when exceeded)")->check(CLI::PositiveNumber);

    std::string system;
    unsigned order = 1;
    auto* focal = app.add_subcommand("focal", "focal quantities L_1..L_K on the variety");
    focal->add_option("--system", system, "system: JSON file, inline JSON or shorthand like \"s(1,2); V\"")->required();
    focal->add_option("--order", order, "K")->required()->check(CLI::PositiveNumber);

    unsigned k = 1;
    std::string mode = "symbolic";
    std::string free_text;
    std::string point;
    auto* pseudo = app.add_subcommand("pseudo", "generalized focal pseudo-quantity G_k");
    pseudo->add_option("--system", system, "system spec")->required();
    pseudo->add_option("--k", k, "k")->required();
    pseudo->add_option("--mode", mode, "symbolic | point | structure")
        ->check(CLI::IsMember({"symbolic", "point", "structure"}));
    pseudo->add_option("--free", free_text, "free unknowns per even degree, e.g. b2,d3");
    pseudo->add_option("--point", point, "coefficient values (JSON file or inline object)");

    std::string poly;
    auto* comitant = app.add_subcommand("comitant-check", "test a polynomial against the comitant conditions");
    comitant->add_option("--system", system, "symbolic system spec")->required();
    comitant->add_option("--poly", poly, "polynomial text or file")->required();

    std::string series;
    bool krull = false;
    std::optional<unsigned> expand_to;
    std::string specialize_mode;
    std::string compare_with;
    unsigned compare_order = 30;
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series calculations");
    hilbert->add_option("--series", series, "builtin:S01 | builtin:SI01 | builtin:S01-graded | builtin:SI01-graded | file.json")
        ->required();
    hilbert->add_flag("--krull", krull, "pole order at 1");
    hilbert->add_option("--expand", expand_to, "coefficients up to order N");
    hilbert->add_option("--specialize", specialize_mode, "invariants | common");
    hilbert->add_option("--compare", compare_with, "second series for coefficient-wise comparison");
    hilbert->add_option("--order", compare_order, "comparison order");

    std::string sig_text;
    auto* rho = app.add_subcommand("rho", "bound on the Krull dimension for a signature");
    rho->add_option("--signature", sig_text, "degrees, e.g. 1,2,3")->required();

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run the reference reproduction suite");
    verify->add_option("--suite", suite, "paper")->required();

    for (auto* sub : {focal, pseudo, comitant, hilbert, rho, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return input;
    }

    if (g.budget > 0) cf::Budget::set_seconds(g.budget);
    try {
        if (*focal) return run_focal(g, system, order);
        if (*pseudo) return run_pseudo(g, system, k, mode, free_text, point);
        if (*comitant) return run_comitant_check(g, system, poly);
        if (*hilbert) return run_hilbert(g, series, krull, expand_to, specialize_mode, compare_with, compare_order);
        if (*rho) return run_rho(g, sig_text);
        if (*verify) return run_verify(g, suite);
    } catch (const cf::budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return budget;
    } catch (const cf::degenerate_point& e) {
        std::cerr << "error: " << e.what();
        if (e.failing_row()) std::cerr << " (inconsistent row " << *e.failing_row() << ")";
        std::cerr << "\n";
        return math_no;
    } catch (const cf::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return input;
    } catch (const cf::variety_conflict& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return input;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return input;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return input;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal;
    }
    return internal;
}
