#include "hv/modules.hpp"

#include "hv/errors.hpp"

namespace hv {

ModuleSpec ModuleSpec::nonzero_p(AlgebraParams p, Scalar lambda1, Scalar lambda2, Scalar alpha, Scalar b0)
{
    if (p.is_zero()) throw PreconditionError("Omega(lambda, alpha, b0) requires p != (0,0)");
    if (lambda1.is_zero() || lambda2.is_zero()) throw PreconditionError("lambda components must be nonzero");
    ModuleSpec s;
    s.p_ = std::move(p);
    s.lambda1_ = std::move(lambda1);
    s.lambda2_ = std::move(lambda2);
    s.b0_ = std::move(b0);
    s.shape_ = NonzeroP{std::move(alpha)};
    return s;
}

ModuleSpec ModuleSpec::zero_p(Scalar lambda1, Scalar lambda2, Scalar beta1, Scalar beta2, Scalar b0, Scalar k)
{
    if (lambda1.is_zero() || lambda2.is_zero()) throw PreconditionError("lambda components must be nonzero");
    ModuleSpec s;
    s.lambda1_ = std::move(lambda1);
    s.lambda2_ = std::move(lambda2);
    s.b0_ = std::move(b0);
    s.shape_ = ZeroP{std::move(beta1), std::move(beta2), std::move(k)};
    return s;
}

Scalar ModuleSpec::lambda_power(Index m) const { return lambda1_.pow(m.m1) * lambda2_.pow(m.m2); }

std::string ModuleSpec::to_flags() const
{
    std::string out = "--p " + p_.p1.to_string() + "," + p_.p2.to_string() + " --lambda " + lambda1_.to_string() +
                      "," + lambda2_.to_string();
    if (is_zero_p()) {
        const auto& z = zero();
        out += " --beta " + z.beta1.to_string() + "," + z.beta2.to_string() + " --b0 " + b0_.to_string() + " --k " +
               z.k.to_string();
    } else {
        out += " --alpha " + nonzero().alpha.to_string() + " --b0 " + b0_.to_string();
    }
    return out;
}

namespace {

// The polynomial multiplier of E(m), i.e. E(m)1.
Poly e_multiplier(Index m, const ModuleSpec& spec)
{
    const Scalar m1(m.m1), m2(m.m2);
    if (spec.is_zero_p()) {
        const auto& z = spec.zero();
        // m2 (d1 + beta1) - m1 (d2 + beta2)
        return spec.lambda_power(m) * Poly::linear(m2, -m1, m2 * z.beta1 - m1 * z.beta2);
    }
    const auto& p = spec.p();
    const Scalar& alpha = spec.nonzero().alpha;
    const Scalar a = m2 + p.p2;
    const Scalar b = m1 + p.p1;
    // (m2+p2)(d1 + p1 alpha) - (m1+p1)(d2 + p2 alpha)
    return spec.lambda_power(m) * Poly::linear(a, -b, a * p.p1 * alpha - b * p.p2 * alpha);
}

} // namespace

Poly act(const Generator& x, const Poly& f, const ModuleSpec& spec)
{
    switch (x.kind) {
    case GenKind::D1: return Poly::d1() * f;
    case GenKind::D2: return Poly::d2() * f;
    case GenKind::E: return e_multiplier(x.m, spec) * shift(f, Scalar(x.m.m1), Scalar(x.m.m2));
    case GenKind::T:
        if (spec.is_zero_p()) {
            if (x.m.is_zero()) return spec.b0() * f;
            return (spec.lambda_power(x.m) * spec.zero().k) * shift(f, Scalar(x.m.m1), Scalar(x.m.m2));
        }
        return (spec.lambda_power(x.m) * spec.b0()) *
               shift(f, Scalar(x.m.m1) + spec.p().p1, Scalar(x.m.m2) + spec.p().p2);
    }
    return {};
}

Poly act(const LieElement& x, const Poly& f, const ModuleSpec& spec)
{
    Poly out;
    for (const auto& [g, c] : x.terms()) out += c * act(g, f, spec);
    return out;
}

Poly module_axiom_residual(const Generator& x, const Generator& y, const Poly& f, const ModuleSpec& spec)
{
    Poly lhs = act(bracket(x, y, spec.p()), f, spec);
    Poly commutator = act(x, act(y, f, spec), spec) - act(y, act(x, f, spec), spec);
    return lhs - commutator;
}

std::pair<Scalar, Scalar> distinguished_point(const ModuleSpec& spec)
{
    if (spec.is_zero_p()) return {-spec.zero().beta1, -spec.zero().beta2};
    const Scalar& alpha = spec.nonzero().alpha;
    return {-(spec.p().p1 * alpha), -(spec.p().p2 * alpha)};
}

bool in_distinguished_submodule(const Poly& f, const ModuleSpec& spec)
{
    auto [a1, a2] = distinguished_point(spec);
    return eval(f, a1, a2).is_zero();
}

std::optional<Index> simplicity_witness(const Poly& f, const ModuleSpec& spec, std::int64_t bound)
{
    if (f.is_zero()) throw PreconditionError("simplicity witness needs a nonzero polynomial");
    if (!in_distinguished_submodule(f, spec))
        throw PreconditionError("polynomial " + f.to_string() + " is not in the distinguished submodule");
    if (spec.t_action_trivial())
        throw PreconditionError(spec.is_zero_p() ? "simplicity witness needs k != 0" : "simplicity witness needs b0 != 0");
    if (bound < 0) throw PreconditionError("negative search bound");
    for (const auto& m : square_window(bound)) {
        if (spec.is_zero_p() && m.is_zero()) continue;
        if (!in_distinguished_submodule(act(Generator::T(m), f, spec), spec)) return m;
    }
    return std::nullopt;
}

std::pair<Poly, Poly> factorization_residuals(Index m, const Poly& f, const ModuleSpec& spec)
{
    const Poly one(1);
    const Scalar m1(m.m1), m2(m.m2);
    Poly e_res = act(Generator::E(m), f, spec) - shift(f, m1, m2) * act(Generator::E(m), one, spec);
    Poly t_res = act(Generator::T(m), f, spec) -
                 shift(f, m1 + spec.p().p1, m2 + spec.p().p2) * act(Generator::T(m), one, spec);
    return {std::move(e_res), std::move(t_res)};
}

} // namespace hv

namespace hv {

std::vector<Poly> distinguished_corpus(const ModuleSpec& spec, std::uint32_t max_degree)
{
    auto [a1, a2] = distinguished_point(spec);
    const Poly g1 = Poly::d1() - Poly(a1);
    const Poly g2 = Poly::d2() - Poly(a2);
    std::vector<Poly> out;
    if (max_degree == 0) return out;
    for (const auto& m : monomials_up_to(max_degree - 1)) {
        const Poly u = Poly::monomial(1, m.e1, m.e2);
        out.push_back(g1 * u);
        out.push_back(g2 * u);
    }
    if (max_degree >= 2) out.push_back(g1 * g2);
    return out;
}

} // namespace hv
