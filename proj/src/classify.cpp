#include "hv/classify.hpp"

#include "hv/errors.hpp"
#include "hv/linalg.hpp"

#include <algorithm>
#include <set>

namespace hv {

Poly x_index(Index m) { return Poly::linear(Scalar(m.m2), Scalar(-m.m1), 0); }

Poly x_params(const AlgebraParams& p) { return Poly::linear(p.p2, -p.p1, 0); }

Scalar delta(Index m, const AlgebraParams& p) { return p.p2 * Scalar(m.m1) - p.p1 * Scalar(m.m2); }

namespace {

// Equation rows keyed by the output monomial whose coefficient they state.
using EquationRows = std::map<Monomial, SparseRow, GradedLexDesc>;

void accumulate(EquationRows& rows, const Poly& contribution, std::size_t column)
{
    for (const auto& [mono, c] : contribution.terms()) {
        SparseRow unit{{column, c}};
        axpy(rows[mono], Scalar(1), unit);
    }
}

Poly poly_from_columns(const std::vector<Scalar>& v, const std::vector<Monomial>& monos, std::size_t stride,
                       std::size_t offset)
{
    Poly f;
    for (std::size_t k = 0; k < monos.size(); ++k) f.add_term(v[k * stride + offset], monos[k]);
    return f;
}

} // namespace

std::vector<Poly> solve_translation_invariance(const Scalar& q1, const Scalar& q2, std::uint32_t max_degree)
{
    const auto monos = monomials_up_to(max_degree);
    EquationRows rows;
    for (std::size_t col = 0; col < monos.size(); ++col) {
        Poly u = Poly::monomial(1, monos[col].e1, monos[col].e2);
        accumulate(rows, shift(u, q1, q2) - u, col);
    }
    RowReducer reducer(monos.size());
    for (auto& [mono, row] : rows) reducer.add_row(row);

    std::vector<Poly> basis;
    for (const auto& v : reducer.nullspace()) basis.push_back(poly_from_columns(v, monos, 1, 0));
    return basis;
}

std::size_t translation_invariant_dimension(const Scalar& q1, const Scalar& q2, std::uint32_t max_degree)
{
    const std::size_t d = max_degree;
    if (q1.is_zero() && q2.is_zero()) return (d + 1) * (d + 2) / 2;
    // Otherwise exactly the polynomials in q2*d1 - q1*d2.
    return d + 1;
}

void validate_window(const std::vector<Index>& window)
{
    std::set<Index> seen(window.begin(), window.end());
    if (seen.size() != window.size()) throw WindowError("window has duplicate indices");
    if (seen.count(Index{}) == 0) throw WindowError("window must contain (0,0)");
    for (const auto& m : window)
        if (seen.count(-m) == 0) throw WindowError("window is not symmetric: missing " + (-m).to_string());
}

ActionFamily classified_family(const ModuleSpec& spec, const std::vector<Index>& window)
{
    validate_window(window);
    ActionFamily fam;
    fam.window = window;
    const auto& p = spec.p();
    for (const auto& m : window) {
        const Scalar lam = spec.lambda_power(m);
        if (spec.is_zero_p()) {
            const auto& z = spec.zero();
            Poly shape = x_index(m) + Poly(Scalar(m.m2) * z.beta1 - Scalar(m.m1) * z.beta2);
            fam.g[m] = lam * shape;
            fam.h[m] = m.is_zero() ? Poly(spec.b0()) : Poly(lam * z.k);
        } else {
            // The d_0 constant of the classification is zero.
            Poly shape = x_params(p) - Poly(delta(m, p) * spec.nonzero().alpha) + x_index(m);
            fam.g[m] = lam * shape;
            fam.h[m] = Poly(lam * spec.b0());
        }
    }
    return fam;
}

const char* to_string(Constraint c)
{
    switch (c) {
    case Constraint::TT: return "t-t";
    case Constraint::ET: return "E-t";
    case Constraint::EE: return "E-E";
    }
    return "?";
}

namespace {

Poly shifted(const Poly& f, Index by, const AlgebraParams* p = nullptr)
{
    Scalar s1(by.m1), s2(by.m2);
    if (p != nullptr) {
        s1 += p->p1;
        s2 += p->p2;
    }
    return shift(f, s1, s2);
}

} // namespace

std::vector<ConstraintResidual> constraint_residuals(const ActionFamily& fam, const AlgebraParams& p)
{
    validate_window(fam.window);
    const std::set<Index> in_window(fam.window.begin(), fam.window.end());
    for (const auto* table : {&fam.g, &fam.h}) {
        if (table->size() != fam.window.size()) throw WindowError("action family is not defined exactly on its window");
        for (const auto& [m, f] : *table)
            if (in_window.count(m) == 0) throw WindowError("action family entry outside window: " + m.to_string());
    }

    std::vector<ConstraintResidual> out;
    for (const auto& m : fam.window)
        for (const auto& n : fam.window) {
            const Poly& hm = fam.h.at(m);
            const Poly& hn = fam.h.at(n);
            const Poly& gm = fam.g.at(m);
            const Poly& gn = fam.g.at(n);
            // h_n(d-m-p) h_m - h_m(d-n-p) h_n = 0
            out.push_back({Constraint::TT, m, n, shifted(hn, m, &p) * hm - shifted(hm, n, &p) * hn});
            auto sum = in_window.find(m + n);
            if (sum == in_window.end()) continue;
            const Scalar det = shifted_det(n, m, p);
            // h_n(d-m) g_m - g_m(d-n-p) h_n = |n+p, m+p| h_{m+n}
            out.push_back({Constraint::ET, m, n, shifted(hn, m) * gm - shifted(gm, n, &p) * hn - det * fam.h.at(*sum)});
            // g_n(d-m) g_m - g_m(d-n) g_n = |n+p, m+p| g_{m+n}
            out.push_back({Constraint::EE, m, n, shifted(gn, m) * gm - shifted(gm, n) * gn - det * fam.g.at(*sum)});
        }
    return out;
}

HLinearSolution solve_h_linear(const ModuleSpec& g_source, const std::vector<Index>& window, std::uint32_t degree)
{
    validate_window(window);
    const auto& p = g_source.p();
    const ActionFamily classified = classified_family(g_source, window);
    const auto monos = monomials_up_to(degree);
    const std::size_t width = window.size();
    std::map<Index, std::size_t> slot;
    for (std::size_t k = 0; k < width; ++k) slot[window[k]] = k;
    auto column = [&](std::size_t mono, Index m) { return mono * width + slot.at(m); };

    HLinearSolution sol;
    sol.window = window;
    sol.degree = degree;
    sol.unknowns = monos.size() * width;
    RowReducer reducer(sol.unknowns);

    for (const auto& m : window)
        for (const auto& n : window) {
            auto sum = slot.find(m + n);
            if (sum == slot.end()) continue;
            const Poly& gm = classified.g.at(m);
            const Poly gm_shift = shifted(gm, n, &p);
            const Scalar det = shifted_det(n, m, p);
            EquationRows rows;
            for (std::size_t k = 0; k < monos.size(); ++k) {
                const Poly u = Poly::monomial(1, monos[k].e1, monos[k].e2);
                accumulate(rows, shifted(u, m) * gm - gm_shift * u, column(k, n));
                accumulate(rows, -det * u, column(k, sum->first));
            }
            for (auto& [mono, row] : rows) {
                if (row.empty()) continue;
                ++sol.equations;
                reducer.add_row(std::move(row));
            }
        }
    if (sol.equations == 0) throw WindowError("window generates no nonzero constraint");

    auto family_of = [&](const std::vector<Scalar>& v) {
        std::map<Index, Poly> h;
        for (const auto& m : window) h[m] = poly_from_columns(v, monos, width, slot.at(m));
        return h;
    };
    auto passes_quadratic = [&](const std::map<Index, Poly>& h) {
        for (const auto& m : window)
            for (const auto& n : window)
                if (!(shifted(h.at(n), m, &p) * h.at(m) - shifted(h.at(m), n, &p) * h.at(n)).is_zero()) return false;
        return true;
    };

    for (const auto& v : reducer.nullspace()) {
        sol.basis.push_back(family_of(v));
        if (passes_quadratic(sol.basis.back())) ++sol.quadratic_survivors;
    }

    // Membership: the classified h must lie in the nullspace, i.e. satisfy
    // every row. Reduce it against the nullspace basis instead of the rows.
    std::vector<Scalar> target(sol.unknowns);
    bool representable = true;
    for (const auto& m : window)
        for (const auto& [mono, c] : classified.h.at(m).terms()) {
            auto it = std::find(monos.begin(), monos.end(), mono);
            if (it == monos.end()) {
                representable = false;
                continue;
            }
            target[column(static_cast<std::size_t>(it - monos.begin()), m)] = c;
        }
    RowReducer span(sol.unknowns);
    for (const auto& v : reducer.nullspace()) span.add_row(to_sparse(v));
    sol.classified_in_span = representable && span.contains(to_sparse(target));
    sol.classified_passes_quadratic = passes_quadratic(classified.h);
    return sol;
}

std::vector<Index> required_probes() { return {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {0, 0}}; }

namespace {

struct ProbeTable {
    std::map<Index, std::pair<Poly, Poly>> answers;

    const Poly& g(Index m) const { return answers.at(m).first; }
    const Poly& h(Index m) const { return answers.at(m).second; }
};

std::string fmt_probe(Index m) { return m.to_string(); }

// lambda_i from the linear part of g at +e_i (or -e_i). `shape_plus` and
// `shape_minus` are the expected (d1, d2) coefficients with lambda = 1.
bool lambda_from_g(const ProbeTable& t, Index plus, const std::pair<Scalar, Scalar>& shape_plus,
                   const std::pair<Scalar, Scalar>& shape_minus, Scalar& lambda, std::string& how)
{
    auto try_probe = [&](Index probe, const std::pair<Scalar, Scalar>& shape, bool inverse) {
        const std::pair<Scalar, Scalar> got{t.g(probe).coefficient(1, 0), t.g(probe).coefficient(0, 1)};
        for (int k = 0; k < 2; ++k) {
            const Scalar& s = k == 0 ? shape.first : shape.second;
            const Scalar& c = k == 0 ? got.first : got.second;
            if (s.is_zero()) continue;
            if (c.is_zero()) throw NotClassifiedError("g" + fmt_probe(probe) + " lacks its expected linear term");
            lambda = inverse ? s / c : c / s;
            how = std::string("g") + fmt_probe(probe) + (k == 0 ? " d1-coefficient" : " d2-coefficient");
            return true;
        }
        return false;
    };
    return try_probe(plus, shape_plus, false) || try_probe(-plus, shape_minus, true);
}

} // namespace

Recovery recover_parameters(const ActionOracle& oracle, const AlgebraParams& p, const std::vector<Index>& probes)
{
    for (const auto& need : required_probes())
        if (std::find(probes.begin(), probes.end(), need) == probes.end())
            throw PreconditionError("recovery needs probe " + need.to_string());

    ProbeTable table;
    for (const auto& m : probes) table.answers.emplace(m, oracle(m));

    std::vector<std::string> log;
    const Index e1{1, 0}, e2{0, 1};
    auto h_const = [&](Index m) { return table.h(m).constant_term(); };

    Scalar lambda1, lambda2;
    std::string how1, how2;
    if (p.is_zero()) {
        // g_(1,0) = lambda1 (-d2 - beta2), g_(0,1) = lambda2 (d1 + beta1)
        if (!lambda_from_g(table, e1, {0, -1}, {0, 1}, lambda1, how1) ||
            !lambda_from_g(table, e2, {1, 0}, {-1, 0}, lambda2, how2))
            throw NotClassifiedError("g probes are degenerate");
    } else {
        const Scalar one(1);
        bool ok1 = lambda_from_g(table, e1, {p.p2, -(one + p.p1)}, {p.p2, one - p.p1}, lambda1, how1);
        bool ok2 = lambda_from_g(table, e2, {one + p.p2, -p.p1}, {p.p2 - one, -p.p1}, lambda2, how2);
        // h_m = lambda^m b0 gives the ratio h_(e_i) / h_0 when b0 != 0.
        if (!ok1 && !h_const({0, 0}).is_zero()) {
            lambda1 = h_const(e1) / h_const({0, 0});
            how1 = "h(1,0)/h(0,0)";
            ok1 = true;
        }
        if (!ok2 && !h_const({0, 0}).is_zero()) {
            lambda2 = h_const(e2) / h_const({0, 0});
            how2 = "h(0,1)/h(0,0)";
            ok2 = true;
        }
        if (!ok1 || !ok2) throw NotClassifiedError("g and h probes are degenerate");
    }
    if (lambda1.is_zero() || lambda2.is_zero()) throw NotClassifiedError("recovered lambda has a zero component");
    log.push_back("lambda1 <- " + how1);
    log.push_back("lambda2 <- " + how2);

    const Scalar b0 = h_const({0, 0});
    log.push_back("b0 <- h(0,0) constant term");

    std::optional<ModuleSpec> spec;
    if (p.is_zero()) {
        const Scalar beta2 = -table.g(e1).constant_term() / lambda1;
        const Scalar beta1 = table.g(e2).constant_term() / lambda2;
        const Scalar k = h_const(e1) / lambda1;
        log.push_back("beta1 <- g(0,1) constant term");
        log.push_back("beta2 <- g(1,0) constant term");
        log.push_back("k <- h(1,0)/lambda1");
        spec = ModuleSpec::zero_p(lambda1, lambda2, beta1, beta2, b0, k);
    } else {
        std::optional<Scalar> alpha;
        for (const auto& m : required_probes()) {
            const Scalar d = delta(m, p);
            if (d.is_zero()) continue;
            const ModuleSpec unit = ModuleSpec::nonzero_p(p, lambda1, lambda2, 0, 0);
            alpha = -table.g(m).constant_term() / (unit.lambda_power(m) * d);
            log.push_back("alpha <- g" + m.to_string() + " constant term");
            break;
        }
        if (!alpha) throw NotClassifiedError("no probe with nonzero Delta");
        spec = ModuleSpec::nonzero_p(p, lambda1, lambda2, *alpha, b0);
    }

    // Every probe must match the classified shapes of the recovered record.
    std::vector<Index> window;
    for (const auto& m : probes) {
        window.push_back(m);
        if (std::find(probes.begin(), probes.end(), -m) == probes.end()) window.push_back(-m);
    }
    std::sort(window.begin(), window.end());
    window.erase(std::unique(window.begin(), window.end()), window.end());
    const ActionFamily expect = classified_family(*spec, window);
    for (const auto& m : probes) {
        if (!(expect.g.at(m) == table.g(m)))
            throw NotClassifiedError("g" + m.to_string() + " = " + table.g(m).to_string() + " does not fit; expected " +
                                     expect.g.at(m).to_string());
        if (!(expect.h.at(m) == table.h(m)))
            throw NotClassifiedError("h" + m.to_string() + " = " + table.h(m).to_string() + " does not fit; expected " +
                                     expect.h.at(m).to_string());
    }
    return {*spec, std::move(log)};
}

Recovery recover_parameters(const ModuleSpec& oracle, const std::vector<Index>& probes)
{
    auto answer = [&oracle](Index m) {
        return std::make_pair(act(Generator::E(m), Poly(1), oracle), act(Generator::T(m), Poly(1), oracle));
    };
    return recover_parameters(answer, oracle.p(), probes);
}

} // namespace hv
