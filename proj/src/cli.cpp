#include "hv/cli.hpp"

#include "hv/classify.hpp"
#include "hv/errors.hpp"
#include "hv/iso.hpp"
#include "hv/lie.hpp"
#include "hv/modules.hpp"
#include "hv/poly.hpp"
#include "hv/realization.hpp"
#include "hv/scalar.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace hv::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

constexpr std::int64_t kDefaultWindow = 2;
constexpr std::uint32_t kDefaultDegree = 3;
constexpr std::int64_t kDefaultBound = 2;

std::pair<Scalar, Scalar> parse_pair(const std::string& text, const char* flag)
{
    auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw UsageError(std::string("--") + flag + " expects a,b but got '" + text + "'");
    return {parse_scalar(text.substr(0, comma)), parse_scalar(text.substr(comma + 1))};
}

// Module parameters as given on the command line.
struct SpecFlags {
    std::optional<std::string> p, lambda, alpha, beta, b0, k;

    void attach(CLI::App& app)
    {
        app.add_option("--p", p, "algebra shift p as a,b");
        app.add_option("--lambda", lambda, "lambda as a,b (nonzero)");
        app.add_option("--alpha", alpha, "alpha (p != 0)");
        app.add_option("--beta", beta, "beta as a,b (p = 0)");
        app.add_option("--b0", b0, "b0");
        app.add_option("--k", k, "k (p = 0)");
    }

    bool any() const { return p || lambda || alpha || beta || b0 || k; }

    ModuleSpec build() const
    {
        if (!p || !lambda || !b0) throw UsageError("module spec needs --p, --lambda and --b0");
        auto [p1, p2] = parse_pair(*p, "p");
        auto [l1, l2] = parse_pair(*lambda, "lambda");
        Scalar base = parse_scalar(*b0);
        AlgebraParams params{p1, p2};
        if (params.is_zero()) {
            if (alpha) throw UsageError("--alpha is only meaningful for p != 0; use --beta and --k");
            if (!beta || !k) throw UsageError("p = 0 module spec needs --beta and --k");
            auto [be1, be2] = parse_pair(*beta, "beta");
            return ModuleSpec::zero_p(l1, l2, be1, be2, base, parse_scalar(*k));
        }
        if (beta || k) throw UsageError("--beta and --k are only meaningful for p = 0; use --alpha");
        if (!alpha) throw UsageError("p != 0 module spec needs --alpha");
        return ModuleSpec::nonzero_p(params, l1, l2, parse_scalar(*alpha), base);
    }
};

ModuleSpec parse_spec_string(const std::string& text)
{
    CLI::App sub{"module spec"};
    SpecFlags flags;
    flags.attach(sub);
    try {
        sub.parse(text, false);
    } catch (const CLI::ParseError& e) {
        throw UsageError("bad module spec '" + text + "': " + e.what());
    }
    return flags.build();
}

Json spec_json(const ModuleSpec& s)
{
    Json j;
    j["p"] = s.p().p1.to_string() + "," + s.p().p2.to_string();
    j["lambda"] = s.lambda1().to_string() + "," + s.lambda2().to_string();
    if (s.is_zero_p()) {
        j["beta"] = s.zero().beta1.to_string() + "," + s.zero().beta2.to_string();
        j["b0"] = s.b0().to_string();
        j["k"] = s.zero().k.to_string();
    } else {
        j["alpha"] = s.nonzero().alpha.to_string();
        j["b0"] = s.b0().to_string();
    }
    return j;
}

struct Report {
    std::string command;
    Json params = Json::object();
    std::int64_t cases_total = 0;
    Json failures = Json::array();
    Json result = Json::object();

    void fail(const std::string& id, const std::string& expected, const std::string& actual)
    {
        failures.push_back(Json{{"case", id}, {"expected", expected}, {"actual", actual}});
    }
    void expect_zero(const std::string& id, const Poly& residual)
    {
        ++cases_total;
        if (!residual.is_zero()) fail(id, "0", residual.to_string());
    }
    void expect_true(const std::string& id, bool ok, const std::string& expected = "true")
    {
        ++cases_total;
        if (!ok) fail(id, expected, "false");
    }
};

std::string render(const Report& r, std::int64_t wall_ms, const std::optional<Json>& error = std::nullopt)
{
    Json j;
    j["command"] = r.command;
    j["params"] = r.params;
    j["cases_total"] = r.cases_total;
    j["failures"] = r.failures;
    if (error)
        j["error"] = *error;
    else
        j["result"] = r.result;
    j["wall_time_ms"] = wall_ms;
    return j.dump(2) + "\n";
}

std::vector<Weight> sample_weights()
{
    return {{0, 0},
            {1, 0},
            {0, 1},
            {2, 3},
            {Scalar::ratio(-1, 2), Scalar::ratio(1, 3)},
            {parse_scalar("1+1i"), parse_scalar("2-1i")}};
}

void run_verify_lie(Report& r, const AlgebraParams& p, std::int64_t window)
{
    const auto gens = generators_in_window(square_window(window));
    // Pair table for the inner brackets.
    std::map<std::pair<std::size_t, std::size_t>, LieElement> table;
    std::int64_t pairs = 0, derivation_pairs = 0;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = 0; b < gens.size(); ++b) {
            table[{a, b}] = bracket(gens[a], gens[b], p);
            ++pairs;
        }
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = 0; b < gens.size(); ++b) {
            LieElement anti = table[{a, b}] + table[{b, a}];
            if (!anti.is_zero())
                r.fail("antisymmetry " + gens[a].to_string() + "," + gens[b].to_string(), "0", anti.to_string());
            if (gens[a].is_derivation() || gens[b].is_derivation()) continue;
            ++derivation_pairs;
            LieElement x(gens[a]), y(gens[b]);
            LieElement law = outer_derivation(table[{a, b}]) - bracket(outer_derivation(x), y, p) -
                             bracket(x, outer_derivation(y), p);
            if (!law.is_zero())
                r.fail("outer derivation " + gens[a].to_string() + "," + gens[b].to_string(), "0", law.to_string());
        }
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = 0; b < gens.size(); ++b)
            for (std::size_t c = 0; c < gens.size(); ++c) {
                LieElement jac = bracket(table[{a, b}], LieElement(gens[c]), p);
                jac += bracket(table[{b, c}], LieElement(gens[a]), p);
                jac += bracket(table[{c, a}], LieElement(gens[b]), p);
                ++r.cases_total;
                if (!jac.is_zero())
                    r.fail("jacobi " + gens[a].to_string() + "," + gens[b].to_string() + "," + gens[c].to_string(), "0",
                           jac.to_string());
            }
    r.result["generators"] = gens.size();
    r.result["antisymmetry_pairs"] = pairs;
    r.result["derivation_pairs"] = derivation_pairs;
    r.result["jacobi_triples"] = r.cases_total;
    r.result["flavor"] = to_string(Flavor::ExtendedL);
}

void run_verify_realization(Report& r, const AlgebraParams& p, std::int64_t window)
{
    const auto gens = generators_in_window(square_window(window));
    const auto weights = sample_weights();
    for (const auto& x : gens)
        for (const auto& y : gens)
            for (const auto& w : weights) {
                RealizationElement res = cross_check_bracket(x, y, w, p);
                ++r.cases_total;
                if (!res.is_zero())
                    r.fail("cross-check " + x.to_string() + "," + y.to_string() + " at " + w.to_string(), "0",
                           res.to_string());
            }
    Json ws = Json::array();
    for (const auto& w : weights) ws.push_back(w.to_string());
    r.result["weights"] = ws;
    r.result["generator_pairs"] = gens.size() * gens.size();
}

void run_verify_module(Report& r, const ModuleSpec& spec, std::int64_t window, std::uint32_t degree)
{
    const auto idx = square_window(window);
    const auto gens = generators_in_window(idx);
    const auto monos = monomials_up_to(degree);
    std::int64_t axiom = 0, factor = 0, closure = 0, codim = 0;
    for (const auto& x : gens)
        for (const auto& y : gens)
            for (const auto& mono : monos) {
                Poly f = Poly::monomial(1, mono.e1, mono.e2);
                r.expect_zero("axiom " + x.to_string() + "," + y.to_string() + " on " + f.to_string(),
                              module_axiom_residual(x, y, f, spec));
                ++axiom;
            }
    for (const auto& m : idx)
        for (const auto& mono : monos) {
            Poly f = Poly::monomial(1, mono.e1, mono.e2);
            auto [e_res, t_res] = factorization_residuals(m, f, spec);
            r.expect_zero("factorization E" + m.to_string() + " on " + f.to_string(), e_res);
            r.expect_zero("factorization T" + m.to_string() + " on " + f.to_string(), t_res);
            factor += 2;
        }
    const auto corpus = distinguished_corpus(spec, degree);
    std::vector<Generator> b_tilde;
    for (const auto& m : idx) b_tilde.push_back(Generator::E(m));
    b_tilde.push_back(Generator::D1());
    b_tilde.push_back(Generator::D2());
    for (const auto& f : corpus) {
        r.expect_true("corpus member " + f.to_string(), in_distinguished_submodule(f, spec));
        ++closure;
        for (const auto& x : b_tilde) {
            r.expect_true("closure " + x.to_string() + " on " + f.to_string(),
                          in_distinguished_submodule(act(x, f, spec), spec));
            ++closure;
        }
    }
    // Codimension one: constants hit every value of the evaluation
    // functional, and f - f(point) lies in the submodule.
    auto [a1, a2] = distinguished_point(spec);
    for (const Scalar& c : {Scalar(1), Scalar::ratio(-3, 7), parse_scalar("2+1/2i")}) {
        r.expect_true("codim surjective on " + c.to_string(), eval(Poly(c), a1, a2) == c);
        ++codim;
    }
    for (const auto& mono : monos) {
        Poly f = Poly::monomial(1, mono.e1, mono.e2);
        r.expect_true("codim complement " + f.to_string(), in_distinguished_submodule(f - Poly(eval(f, a1, a2)), spec));
        ++codim;
    }
    r.expect_true("1 outside submodule", !in_distinguished_submodule(Poly(1), spec));
    ++codim;

    r.result["flavor"] = to_string(Flavor::ExtendedL);
    r.result["axiom_cases"] = axiom;
    r.result["factorization_cases"] = factor;
    r.result["closure_cases"] = closure;
    r.result["codimension_cases"] = codim;
    r.result["corpus_size"] = corpus.size();
}

void run_simplicity(Report& r, const ModuleSpec& spec, const Poly& f, std::int64_t bound)
{
    auto witness = simplicity_witness(f, spec, bound);
    ++r.cases_total;
    if (witness) {
        r.result["witness"] = witness->to_string();
        r.result["image"] = act(Generator::T(*witness), f, spec).to_string();
    } else {
        r.result["witness"] = nullptr;
        r.fail("witness for " + f.to_string(), "index within bound", "not found");
    }
}

void run_iso(Report& r, const ModuleSpec& a, const ModuleSpec& b, Flavor flavor, std::int64_t window,
             std::uint32_t degree)
{
    IsoCertificate cert = certify_isomorphism(a, b, flavor, window, degree);
    r.cases_total = cert.cases;
    for (const auto& f : cert.failures) r.fail(f.case_id, f.expected, f.actual);
    r.result["isomorphic"] = cert.decision;
    r.result["isomorphic_as_L"] = cert.plain_decision;
    if (cert.separating_generator) {
        r.result["separating_generator"] = *cert.separating_generator;
        r.result["separating_residual"] = cert.separating_residual->to_string();
    }
}

void run_invariance(Report& r, const Scalar& q1, const Scalar& q2, std::uint32_t degree)
{
    auto basis = solve_translation_invariance(q1, q2, degree);
    const std::size_t expected = translation_invariant_dimension(q1, q2, degree);
    ++r.cases_total;
    if (basis.size() != expected) r.fail("dimension", std::to_string(expected), std::to_string(basis.size()));
    Json out = Json::array();
    for (const auto& f : basis) {
        out.push_back(f.to_string());
        r.expect_zero("invariance of " + f.to_string(), shift(f, q1, q2) - f);
    }
    bool affine_linear = std::all_of(basis.begin(), basis.end(), [](const Poly& f) { return f.degree() <= 1; });
    r.result["dimension"] = basis.size();
    r.result["expected_dimension"] = expected;
    r.result["affine_linear_only"] = affine_linear;
    r.result["basis"] = out;
}

void run_residuals(Report& r, const ModuleSpec& spec, std::int64_t window)
{
    const auto idx = square_window(window);
    const ActionFamily fam = classified_family(spec, idx);
    std::map<std::string, std::int64_t> per_equation;
    for (const auto& res : constraint_residuals(fam, spec.p())) {
        r.expect_zero(std::string(to_string(res.equation)) + " m=" + res.m.to_string() + " n=" + res.n.to_string(),
                      res.residual);
        ++per_equation[to_string(res.equation)];
    }
    // The closed-form family must be what the module itself answers.
    for (const auto& m : idx) {
        r.expect_zero("g" + m.to_string() + " vs E(m)1", fam.g.at(m) - act(Generator::E(m), Poly(1), spec));
        r.expect_zero("h" + m.to_string() + " vs t^m 1", fam.h.at(m) - act(Generator::T(m), Poly(1), spec));
    }
    Json counts = Json::object();
    for (const char* id : {"t-t", "E-t", "E-E"}) counts[id] = per_equation[id];
    r.result["residuals_per_equation"] = counts;
    r.result["window_size"] = idx.size();
}

void run_solve_h(Report& r, const ModuleSpec& spec, std::int64_t window, std::uint32_t degree)
{
    HLinearSolution sol = solve_h_linear(spec, square_window(window), degree);
    r.expect_true("classified h in span", sol.classified_in_span);
    r.expect_true("classified h passes t-t filter", sol.classified_passes_quadratic);
    r.result["unknowns"] = sol.unknowns;
    r.result["equations"] = sol.equations;
    r.result["dimension"] = sol.basis.size();
    r.result["quadratic_survivors"] = sol.quadratic_survivors;
    Json basis = Json::array();
    for (const auto& fam : sol.basis) {
        Json entry = Json::object();
        for (const auto& [m, f] : fam)
            if (!f.is_zero()) entry[m.to_string()] = f.to_string();
        basis.push_back(entry);
    }
    r.result["basis"] = basis;
}

void run_recover(Report& r, const ModuleSpec& spec, std::int64_t window)
{
    Recovery rec = recover_parameters(spec, square_window(window));
    r.expect_true("round trip", rec.spec == spec, spec.to_flags());
    if (!(rec.spec == spec)) r.failures.back()["actual"] = rec.spec.to_flags();
    r.result["recovered"] = spec_json(rec.spec);
    r.result["probe_order"] = rec.log;
}

Flavor parse_flavor(const std::string& s)
{
    if (s == "L") return Flavor::PlainL;
    if (s == "Lt") return Flavor::ExtendedL;
    throw UsageError("--flavor must be L or Lt");
}

} // namespace

std::string usage()
{
    return R"(usage: hvcli <command> [flags]

commands:
  verify-lie          --p a,b [--window n]
  verify-realization  --p a,b [--window n]
  verify-module       <spec> [--window n] [--deg n]
  simplicity          <spec> --f <poly> [--bound n]
  iso                 --flavor L|Lt --specA "<spec>" --specB "<spec>" [--window n] [--deg n]
  invariance          --q a,b [--deg n]
  residuals           <spec> [--window n]
  solve-h             <spec> [--window n] [--deg n]
  recover             <spec> [--window n]

<spec> is either the flags
  --p a,b --lambda a,b --alpha s --b0 s                (p != 0)
  --p 0,0 --lambda a,b --beta a,b --b0 s --k s         (p = 0)
or the same flags quoted after --spec.
Defaults: --window 2, --deg 3, --bound 2.
exit codes: 0 all cases pass, 1 some case failed, 2 usage/parse error, 3 arithmetic/precondition error.
)";
}

CommandResult run_command(const std::vector<std::string>& args)
{
    const auto start = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    };

    CLI::App app{"hvcli"};
    app.require_subcommand(1);

    SpecFlags spec_flags;
    std::optional<std::string> spec_text, spec_a, spec_b, f_text, q_text, flavor_text;
    std::int64_t window = kDefaultWindow;
    std::uint32_t degree = kDefaultDegree;
    std::int64_t bound = kDefaultBound;

    const std::vector<std::string> names = {"verify-lie", "verify-realization", "verify-module",
                                            "simplicity", "iso",                "invariance",
                                            "residuals",  "solve-h",            "recover"};
    std::map<std::string, CLI::App*> subs;
    for (const auto& name : names) {
        CLI::App* sub = app.add_subcommand(name);
        subs[name] = sub;
        const bool wants_window = name != "simplicity" && name != "invariance";
        const bool wants_degree = name == "verify-module" || name == "iso" || name == "invariance" || name == "solve-h";
        if (name == "verify-lie" || name == "verify-realization") {
            sub->add_option("--p", spec_flags.p, "algebra shift p as a,b")->required();
        } else if (name == "iso") {
            sub->add_option("--flavor", flavor_text, "L or Lt")->required();
            sub->add_option("--specA", spec_a, "first module spec")->required();
            sub->add_option("--specB", spec_b, "second module spec")->required();
        } else if (name == "invariance") {
            sub->add_option("--q", q_text, "shift q as a,b")->required();
        } else {
            spec_flags.attach(*sub);
            sub->add_option("--spec", spec_text, "module spec flags, quoted");
        }
        if (wants_window) sub->add_option("--window", window, "index window radius")->check(CLI::NonNegativeNumber);
        if (wants_degree) sub->add_option("--deg", degree, "degree bound");
        if (name == "simplicity") {
            sub->add_option("--f", f_text, "polynomial in the distinguished submodule")->required();
            sub->add_option("--bound", bound, "search bound")->check(CLI::NonNegativeNumber);
        }
    }

    CommandResult out;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out.err = usage();
        out.exit_code = kExitUsage;
        return out;
    } catch (const CLI::ParseError& e) {
        out.err = std::string(e.what()) + "\n" + usage();
        out.exit_code = kExitUsage;
        return out;
    }

    std::string command;
    for (const auto& [name, sub] : subs)
        if (sub->parsed()) command = name;

    Report report;
    report.command = command;
    try {
        auto module_spec = [&]() -> ModuleSpec {
            if (spec_text && spec_flags.any()) throw UsageError("give the module spec either inline or via --spec");
            ModuleSpec s = spec_text ? parse_spec_string(*spec_text) : spec_flags.build();
            report.params["spec"] = spec_json(s);
            return s;
        };
        auto algebra = [&]() {
            auto [p1, p2] = parse_pair(*spec_flags.p, "p");
            report.params["p"] = p1.to_string() + "," + p2.to_string();
            return AlgebraParams{p1, p2};
        };

        if (command == "verify-lie" || command == "verify-realization") {
            AlgebraParams p = algebra();
            report.params["window"] = window;
            if (command == "verify-lie")
                run_verify_lie(report, p, window);
            else
                run_verify_realization(report, p, window);
        } else if (command == "verify-module") {
            ModuleSpec s = module_spec();
            report.params["window"] = window;
            report.params["deg"] = degree;
            run_verify_module(report, s, window, degree);
        } else if (command == "simplicity") {
            ModuleSpec s = module_spec();
            Poly f = parse_poly(*f_text);
            report.params["f"] = f.to_string();
            report.params["bound"] = bound;
            run_simplicity(report, s, f, bound);
        } else if (command == "iso") {
            Flavor flavor = parse_flavor(*flavor_text);
            ModuleSpec a = parse_spec_string(*spec_a);
            ModuleSpec b = parse_spec_string(*spec_b);
            report.params["flavor"] = to_string(flavor);
            report.params["specA"] = spec_json(a);
            report.params["specB"] = spec_json(b);
            report.params["window"] = window;
            report.params["deg"] = degree;
            run_iso(report, a, b, flavor, window, degree);
        } else if (command == "invariance") {
            auto [q1, q2] = parse_pair(*q_text, "q");
            report.params["q"] = q1.to_string() + "," + q2.to_string();
            report.params["deg"] = degree;
            run_invariance(report, q1, q2, degree);
        } else if (command == "residuals") {
            ModuleSpec s = module_spec();
            report.params["window"] = window;
            run_residuals(report, s, window);
        } else if (command == "solve-h") {
            ModuleSpec s = module_spec();
            report.params["window"] = window;
            report.params["deg"] = degree;
            run_solve_h(report, s, window, degree);
        } else if (command == "recover") {
            ModuleSpec s = module_spec();
            report.params["window"] = window;
            run_recover(report, s, window);
        }
    } catch (const UsageError& e) {
        out.err = std::string(e.what()) + "\n" + usage();
        out.exit_code = kExitUsage;
        return out;
    } catch (const hv::ParseError& e) {
        out.err = std::string(e.what()) + "\n" + usage();
        out.exit_code = kExitUsage;
        return out;
    } catch (const std::exception& e) {
        const char* kind = "error";
        if (dynamic_cast<const ArithmeticError*>(&e) != nullptr)
            kind = "arithmetic";
        else if (dynamic_cast<const NotClassifiedError*>(&e) != nullptr)
            kind = "not-classified";
        else if (dynamic_cast<const PreconditionError*>(&e) != nullptr)
            kind = "precondition";
        report.fail("error", "no error", e.what());
        out.out = render(report, elapsed_ms(), Json{{"kind", kind}, {"message", e.what()}});
        out.err = std::string(e.what()) + "\n";
        out.exit_code = kExitError;
        return out;
    }

    out.out = render(report, elapsed_ms());
    out.exit_code = report.failures.empty() ? kExitOk : kExitFailures;
    return out;
}

} // namespace hv::cli
