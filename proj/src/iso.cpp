#include "hv/iso.hpp"

#include "hv/errors.hpp"

namespace hv {

namespace {

void require_comparable(const ModuleSpec& a, const ModuleSpec& b)
{
    if (a.is_zero_p() != b.is_zero_p())
        throw IncompatibleSpecError("cannot compare a p = 0 module with a p != 0 module");
    if (!(a.p() == b.p())) throw IncompatibleSpecError("modules over different algebras (p differs)");
}

std::pair<Scalar, Scalar> phi_offset(const ModuleSpec& src, const ModuleSpec& dst)
{
    if (src.is_zero_p())
        return {src.zero().beta1 - dst.zero().beta1, src.zero().beta2 - dst.zero().beta2};
    const Scalar diff = src.nonzero().alpha - dst.nonzero().alpha;
    return {src.p().p1 * diff, src.p().p2 * diff};
}

} // namespace

Poly phi_map(const Poly& f, const ModuleSpec& src, const ModuleSpec& dst)
{
    require_comparable(src, dst);
    if (!(src.lambda1() == dst.lambda1()) || !(src.lambda2() == dst.lambda2()))
        throw IncompatibleSpecError("phi requires equal lambda");
    auto [s1, s2] = phi_offset(src, dst);
    return shift(f, s1, s2);
}

Poly intertwine_residual(const Generator& x, const Poly& f, const ModuleSpec& src, const ModuleSpec& dst)
{
    return phi_map(act(x, f, src), src, dst) - act(x, phi_map(f, src, dst), dst);
}

bool are_isomorphic(const ModuleSpec& a, const ModuleSpec& b, Flavor flavor)
{
    require_comparable(a, b);
    bool same = a.lambda1() == b.lambda1() && a.lambda2() == b.lambda2() && a.b0() == b.b0();
    if (a.is_zero_p()) {
        same = same && a.zero().k == b.zero().k;
        if (flavor == Flavor::ExtendedL)
            same = same && a.zero().beta1 == b.zero().beta1 && a.zero().beta2 == b.zero().beta2;
    } else if (flavor == Flavor::ExtendedL) {
        same = same && a.nonzero().alpha == b.nonzero().alpha;
    }
    return same;
}

IsoCertificate certify_isomorphism(const ModuleSpec& a, const ModuleSpec& b, Flavor flavor, std::int64_t window,
                                   std::uint32_t max_degree)
{
    IsoCertificate cert;
    cert.decision = are_isomorphic(a, b, flavor);
    cert.plain_decision = are_isomorphic(a, b, Flavor::PlainL);

    if (cert.decision) {
        const auto gens = generators_in_window(square_window(window), flavor == Flavor::ExtendedL);
        for (const auto& g : gens)
            for (const auto& mono : monomials_up_to(max_degree)) {
                Poly f = Poly::monomial(1, mono.e1, mono.e2);
                Poly r = intertwine_residual(g, f, a, b);
                ++cert.cases;
                if (!r.is_zero())
                    cert.failures.push_back({"intertwine " + g.to_string() + " on " + f.to_string(), "0", r.to_string()});
            }
        return cert;
    }

    if (flavor == Flavor::ExtendedL && cert.plain_decision) {
        for (const auto& g : {Generator::D1(), Generator::D2()}) {
            Poly r = intertwine_residual(g, Poly(1), a, b);
            ++cert.cases;
            if (!r.is_zero()) {
                cert.separating_generator = g.to_string();
                cert.separating_residual = r;
                break;
            }
        }
        if (!cert.separating_generator)
            cert.failures.push_back({"separate D1/D2 on 1", "nonzero residual", "0"});
    }
    return cert;
}

} // namespace hv
