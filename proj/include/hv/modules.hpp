#pragma once

#include "hv/lie.hpp"
#include "hv/poly.hpp"
#include "hv/scalar.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hv {

/// Omega(lambda, alpha, b0) over L(p) with p != 0.
struct NonzeroP {
    Scalar alpha;
    friend bool operator==(const NonzeroP&, const NonzeroP&) = default;
};

/// Omega(lambda, beta, b0, k) over L(0, 0).
struct ZeroP {
    Scalar beta1;
    Scalar beta2;
    Scalar k;
    friend bool operator==(const ZeroP&, const ZeroP&) = default;
};

/// Parameters selecting one U(h)-free rank-one module on Scalar[d1, d2].
class ModuleSpec {
public:
    /// Throws PreconditionError if p == 0 or a lambda component is 0.
    static ModuleSpec nonzero_p(AlgebraParams p, Scalar lambda1, Scalar lambda2, Scalar alpha, Scalar b0);
    /// Throws PreconditionError if a lambda component is 0.
    static ModuleSpec zero_p(Scalar lambda1, Scalar lambda2, Scalar beta1, Scalar beta2, Scalar b0, Scalar k);

    const AlgebraParams& p() const { return p_; }
    const Scalar& lambda1() const { return lambda1_; }
    const Scalar& lambda2() const { return lambda2_; }
    const Scalar& b0() const { return b0_; }
    bool is_zero_p() const { return std::holds_alternative<ZeroP>(shape_); }
    const NonzeroP& nonzero() const { return std::get<NonzeroP>(shape_); }
    const ZeroP& zero() const { return std::get<ZeroP>(shape_); }

    /// lambda1^m1 * lambda2^m2
    Scalar lambda_power(Index m) const;

    /// Whether t^m acts as the zero map for every m != 0.
    bool t_action_trivial() const { return is_zero_p() ? zero().k.is_zero() : b0_.is_zero(); }

    /// Flag form, e.g. "--p 1,0 --lambda 2,3 --alpha 5 --b0 7".
    std::string to_flags() const;

    friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;

private:
    ModuleSpec() = default;

    AlgebraParams p_;
    Scalar lambda1_{1};
    Scalar lambda2_{1};
    Scalar b0_;
    std::variant<NonzeroP, ZeroP> shape_;
};

Poly act(const Generator& x, const Poly& f, const ModuleSpec& spec);
Poly act(const LieElement& x, const Poly& f, const ModuleSpec& spec);

/// act([x,y], f) - (x(y f) - y(x f)).
Poly module_axiom_residual(const Generator& x, const Generator& y, const Poly& f, const ModuleSpec& spec);

/// Common zero of the two degree-one generators of the distinguished
/// submodule: (-p1*alpha, -p2*alpha), or (-beta1, -beta2) when p = 0.
std::pair<Scalar, Scalar> distinguished_point(const ModuleSpec& spec);

/// Membership in (d1+c1)Omega + (d2+c2)Omega, decided by evaluating f at
/// (-c1, -c2).
bool in_distinguished_submodule(const Poly& f, const ModuleSpec& spec);

/// First m in lexicographic order from (-bound, -bound), |m_i| <= bound
/// (m != 0 when p = 0), with t^m f outside the distinguished submodule.
/// Throws PreconditionError if f is zero, outside the submodule, or the
/// t-action is trivial.
std::optional<Index> simplicity_witness(const Poly& f, const ModuleSpec& spec, std::int64_t bound);

/// (E(m)f - f(d-m) E(m)1, t^m f - f(d-m-p) t^m 1); both vanish in every
/// module of the family.
std::pair<Poly, Poly> factorization_residuals(Index m, const Poly& f, const ModuleSpec& spec);

} // namespace hv

namespace hv {

/// Sample elements of the distinguished submodule: (d_i + c_i) * u for
/// every monomial u of degree < max_degree, plus (d1 + c1)(d2 + c2).
std::vector<Poly> distinguished_corpus(const ModuleSpec& spec, std::uint32_t max_degree);

} // namespace hv
