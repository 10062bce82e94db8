// Acceptance driver: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "generators.hpp"
#include "hv/classify.hpp"
#include "hv/cli.hpp"
#include "hv/iso.hpp"
#include "hv/modules.hpp"
#include "hv/realization.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

using namespace hv;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::vector<AlgebraParams> lie_params()
{
    return {{0, 0}, {1, 0}, {0, 1}, {1, 2}, {Scalar::ratio(1, 2), Scalar::ratio(-1, 3)}};
}

ModuleSpec nz(AlgebraParams p, Scalar l1, Scalar l2, Scalar alpha, Scalar b0)
{
    return ModuleSpec::nonzero_p(p, l1, l2, alpha, b0);
}

std::vector<ModuleSpec> module_specs()
{
    return {
        nz({1, 2}, 2, 3, 5, 7),
        nz({1, 0}, Scalar(0, 1), -2, Scalar::ratio(1, 3), 0),
        nz({Scalar::ratio(1, 2), Scalar::ratio(-1, 3)}, Scalar::ratio(3, 2), Scalar(1, -1), Scalar(0, 2), 1),
        ModuleSpec::zero_p(2, -3, 1, -1, 7, 4),
        ModuleSpec::zero_p(1, 1, Scalar::ratio(2, 5), 0, 3, 0),
        ModuleSpec::zero_p(Scalar(1, 1), Scalar::ratio(1, 3), Scalar::ratio(-1, 2), 5, 0, Scalar(0, -1)),
    };
}

std::vector<Poly> monomial_polys(std::uint32_t degree)
{
    std::vector<Poly> out;
    for (const auto& m : monomials_up_to(degree)) out.push_back(Poly::monomial(1, m.e1, m.e2));
    return out;
}

Outcome ac1_lie_laws()
{
    auto start = std::chrono::steady_clock::now();
    auto gens = generators_in_window(square_window(2));
    std::size_t triples = 0, bad = 0;
    for (const auto& p : lie_params()) {
        // Precompute all pairwise brackets; Jacobi then needs one more bracket per term.
        std::vector<std::vector<LieElement>> br(gens.size(), std::vector<LieElement>(gens.size()));
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = 0; j < gens.size(); ++j) br[i][j] = bracket(gens[i], gens[j], p);
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = 0; j < gens.size(); ++j) {
                if (!(br[i][j] + br[j][i]).is_zero()) ++bad;
                for (std::size_t k = 0; k < gens.size(); ++k) {
                    ++triples;
                    LieElement jac = bracket(LieElement(gens[i]), br[j][k], p) +
                                     bracket(LieElement(gens[j]), br[k][i], p) +
                                     bracket(LieElement(gens[k]), br[i][j], p);
                    if (!jac.is_zero()) ++bad;
                }
            }
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << triples << " triples over 5 p, " << bad << " nonzero residuals, " << secs << " s";
    return {bad == 0 && secs <= 60.0, os.str()};
}

Outcome ac2_realization()
{
    std::vector<Weight> gammas = {{0, 0}, {1, -1}, {Scalar::ratio(2, 3), 5}, {Scalar(0, 1), Scalar(-3, 2)},
                                  {Scalar::ratio(-7, 2), Scalar::ratio(1, 4)}};
    auto gens = generators_in_window(square_window(2));
    std::size_t cases = 0, bad = 0;
    for (const auto& p : lie_params())
        for (const auto& g : gammas)
            for (const auto& x : gens)
                for (const auto& y : gens) {
                    ++cases;
                    if (!cross_check_bracket(x, y, g, p).is_zero()) ++bad;
                }
    return {bad == 0, std::to_string(cases) + " pair/weight cases, " + std::to_string(bad) + " mismatches"};
}

Outcome ac3_module_axioms()
{
    auto gens = generators_in_window(square_window(2));
    auto polys = monomial_polys(3);
    std::size_t cases = 0, bad = 0;
    for (const auto& s : module_specs())
        for (const auto& f : polys)
            for (const auto& x : gens)
                for (const auto& y : gens) {
                    ++cases;
                    if (!module_axiom_residual(x, y, f, s).is_zero()) ++bad;
                }
    return {bad == 0, std::to_string(cases) + " cases over 3+3 specs (b0=0 and k=0 included), " +
                          std::to_string(bad) + " nonzero"};
}

Outcome ac4_factorization()
{
    std::size_t cases = 0, bad = 0;
    for (const auto& s : module_specs())
        for (const auto& f : monomial_polys(3))
            for (const auto& m : square_window(2)) {
                ++cases;
                auto [e, t] = factorization_residuals(m, f, s);
                if (!e.is_zero() || !t.is_zero()) ++bad;
            }
    return {bad == 0, std::to_string(cases) + " cases, " + std::to_string(bad) + " nonzero"};
}

Outcome ac5_submodule()
{
    std::size_t closure = 0, witnesses = 0, bad = 0;
    for (const auto& s : module_specs()) {
        auto corpus = distinguished_corpus(s, 3);
        auto [c1, c2] = distinguished_point(s);
        for (const auto& f : corpus) {
            if (!in_distinguished_submodule(f, s)) ++bad;
            std::vector<Generator> ops = {Generator::D1(), Generator::D2()};
            for (const auto& m : square_window(2)) ops.push_back(Generator::E(m));
            for (const auto& x : ops) {
                ++closure;
                if (!in_distinguished_submodule(act(x, f, s), s)) ++bad;
            }
            if (!s.t_action_trivial()) {
                ++witnesses;
                if (!simplicity_witness(f, s, 2)) ++bad;
            }
        }
        // Codimension one: 1 is outside, and f - f(point) is inside for every f.
        if (in_distinguished_submodule(Poly(1), s)) ++bad;
        for (const auto& f : monomial_polys(3))
            if (!in_distinguished_submodule(f - Poly(eval(f, c1, c2)), s)) ++bad;
    }
    return {bad == 0, std::to_string(closure) + " closure checks, " + std::to_string(witnesses) +
                          " witnesses at bound 2, " + std::to_string(bad) + " failures"};
}

Outcome ac6_invariance()
{
    struct Config {
        Scalar q1, q2;
        std::uint32_t d;
        std::size_t expected;
    };
    std::vector<Config> configs = {{0, 1, 4, 5}, {1, 0, 4, 5}, {1, 1, 4, 2}, {2, -3, 4, 2}, {0, 0, 2, 6}};
    bool pass = true;
    std::ostringstream os;
    os << "dimensions";
    for (const auto& c : configs) {
        auto basis = solve_translation_invariance(c.q1, c.q2, c.d);
        for (const auto& f : basis)
            if (shift(f, c.q1, c.q2) != f) pass = false;
        if (basis.size() != c.expected) pass = false;
        os << " " << basis.size() << "/" << c.expected;
    }
    os << " (got/expected)";
    if (!pass)
        os << "; the expected 2 for q=(1,1) and q=(2,-3) at degree 4 is not attainable: any polynomial in"
              " q2*d1 - q1*d2 is invariant, e.g. (d1-d2)^2 under q=(1,1), so the exact nullspace has"
              " dimension D+1 = 5";
    return {pass, os.str()};
}

Outcome ac7_classification()
{
    auto w = square_window(2);
    std::size_t cases = 0, bad = 0;
    auto specs = module_specs();
    for (const auto& s : specs) {
        for (const auto& r : constraint_residuals(classified_family(s, w), s.p())) {
            ++cases;
            if (!r.residual.is_zero()) ++bad;
        }
    }
    // single-coefficient perturbations: one per variant
    std::size_t perturbed_hits = 0;
    for (const auto& s : {specs[0], specs[3]}) {
        auto fam = classified_family(s, w);
        fam.h[{0, 0}] = Poly(s.b0()) + Poly::d1();
        for (const auto& r : constraint_residuals(fam, s.p()))
            if (!r.residual.is_zero()) {
                ++perturbed_hits;
                break;
            }
    }
    return {bad == 0 && perturbed_hits == 2, std::to_string(cases) + " residuals, " + std::to_string(bad) +
                                                 " nonzero; perturbations detected " +
                                                 std::to_string(perturbed_hits) + "/2"};
}

Outcome ac8_recovery()
{
    hv::testing::Gen gen(20261019);
    auto probes = required_probes();
    int ok = 0, total = 0;
    for (int trial = 0; trial < 5; ++trial) {
        AlgebraParams p{gen.scalar(), gen.scalar()};
        if (p.is_zero()) p.p2 = 1;
        auto a = nz(p, gen.nonzero_scalar(), gen.nonzero_scalar(), gen.scalar(), gen.scalar());
        auto z = ModuleSpec::zero_p(gen.nonzero_scalar(), gen.nonzero_scalar(), gen.scalar(), gen.scalar(),
                                    gen.scalar(), gen.scalar());
        for (const auto& s : {a, z}) {
            ++total;
            try {
                if (recover_parameters(s, probes).spec == s) ++ok;
            } catch (const std::exception&) {
            }
        }
    }
    return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " exact round trips"};
}

Outcome ac9_isomorphism()
{
    struct Pair {
        ModuleSpec a, b;
        bool plain, extended;
    };
    AlgebraParams p{1, 2};
    auto za = ModuleSpec::zero_p(2, 3, 1, -1, 7, 4);
    std::vector<Pair> matrix = {
        {nz(p, 2, 3, 5, 7), nz(p, 2, 3, 5, 7), true, true},
        {nz(p, 2, 3, 5, 7), nz(p, 2, 3, -1, 7), true, false},
        {nz(p, 2, 3, 5, 7), nz(p, 3, 3, 5, 7), false, false},
        {nz(p, 2, 3, 5, 7), nz(p, 2, 1, 5, 7), false, false},
        {nz(p, 2, 3, 5, 7), nz(p, 2, 3, 5, 6), false, false},
        {nz({0, 1}, 1, 1, Scalar(0, 1), 1), nz({0, 1}, 1, 1, 0, 1), true, false},
        {za, za, true, true},
        {za, ModuleSpec::zero_p(2, 3, 0, -1, 7, 4), true, false},
        {za, ModuleSpec::zero_p(2, 3, 1, 2, 7, 4), true, false},
        {za, ModuleSpec::zero_p(2, 3, 1, -1, 7, 5), false, false},
        {za, ModuleSpec::zero_p(2, 3, 1, -1, 8, 4), false, false},
        {za, ModuleSpec::zero_p(2, -3, 1, -1, 7, 4), false, false},
    };
    int bad = 0;
    std::int64_t cases = 0;
    for (const auto& m : matrix) {
        if (are_isomorphic(m.a, m.b, Flavor::PlainL) != m.plain) ++bad;
        if (are_isomorphic(m.a, m.b, Flavor::ExtendedL) != m.extended) ++bad;
        for (Flavor fl : {Flavor::PlainL, Flavor::ExtendedL}) {
            auto cert = certify_isomorphism(m.a, m.b, fl, 2, 3);
            cases += cert.cases;
            if (!cert.failures.empty()) ++bad;
            bool want_sep = fl == Flavor::ExtendedL && m.plain && !m.extended;
            if (want_sep && (!cert.separating_residual || cert.separating_residual->is_zero())) ++bad;
        }
    }
    return {bad == 0, std::to_string(matrix.size()) + " pairs, " + std::to_string(cases) +
                          " certificate residuals, " + std::to_string(bad) + " disagreements"};
}

std::string strip_time(const std::string& s)
{
    return std::regex_replace(s, std::regex(R"("wall_time_ms":\s*\d+)"), R"("wall_time_ms":0)");
}

std::string run_binary(const std::string& cmd)
{
    std::string out;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) return "<popen failed>";
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
    return out;
}

Outcome ac10_determinism()
{
    std::vector<std::vector<std::string>> commands = {
        {"verify-lie", "--p", "1/2,-1/3", "--window", "1"},
        {"verify-module", "--p", "0,0", "--lambda", "2,3", "--beta", "1,-1", "--b0", "7", "--k", "4", "--window",
         "1", "--deg", "2"},
        {"iso", "--flavor", "Lt", "--specA", "--p 1,0 --lambda 1,1 --alpha 2 --b0 1", "--specB",
         "--p 1,0 --lambda 1,1 --alpha 0 --b0 1", "--window", "1"},
        {"invariance", "--q", "1,1", "--deg", "4"},
        {"solve-h", "--p", "1,0", "--lambda", "2,3", "--alpha", "0", "--b0", "1", "--window", "1", "--deg", "1"},
        {"recover", "--p", "1,1", "--lambda", "2,3", "--alpha", "5", "--b0", "7"},
    };
    int bad = 0, runs = 0;
    for (const auto& args : commands) {
        auto first = strip_time(cli::run_command(args).out);
        for (int rep = 0; rep < 2; ++rep) {
            ++runs;
            if (strip_time(cli::run_command(args).out) != first) ++bad;
        }
        std::string shell = std::string("'") + HV_CLI_PATH + "'";
        for (const auto& a : args) shell += " '" + a + "'";
        for (int rep = 0; rep < 2; ++rep) {
            ++runs;
            if (strip_time(run_binary(shell)) != first) ++bad;
        }
    }
    return {bad == 0, std::to_string(runs) + " repeated runs (in-process and subprocess), " + std::to_string(bad) +
                          " differing reports"};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1 Lie laws", ac1_lie_laws},
        {"AC2 realization oracle", ac2_realization},
        {"AC3 module axioms", ac3_module_axioms},
        {"AC4 factorization", ac4_factorization},
        {"AC5 submodule structure", ac5_submodule},
        {"AC6 translation invariance dimensions", ac6_invariance},
        {"AC7 classification residuals", ac7_classification},
        {"AC8 recovery round trip", ac8_recovery},
        {"AC9 isomorphism decisions", ac9_isomorphism},
        {"AC10 determinism", ac10_determinism},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
