#pragma once

#include "hv/lie.hpp"
#include "hv/scalar.hpp"

#include <map>
#include <string>

namespace hv {

/// Weight gamma of the formal basis vector u_gamma ~ t1^gamma1 t2^gamma2.
struct Weight {
    Scalar g1;
    Scalar g2;

    friend bool operator==(const Weight&, const Weight&) = default;
    std::string to_string() const;
};

struct WeightLess {
    bool operator()(const Weight& a, const Weight& b) const
    {
        auto c = canonical_compare(a.g1, b.g1);
        if (c != 0) return c < 0;
        return canonical_compare(a.g2, b.g2) < 0;
    }
};

/// Finite combination of basis vectors u_gamma.
class RealizationElement {
public:
    using TermMap = std::map<Weight, Scalar, WeightLess>;

    RealizationElement() = default;
    static RealizationElement basis(const Weight& w) { RealizationElement r; r.add_term(1, w); return r; }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const Weight& w) const;

    void add_term(const Scalar& c, const Weight& w);
    RealizationElement& operator+=(const RealizationElement& o);
    RealizationElement& operator-=(const RealizationElement& o);
    friend RealizationElement operator-(RealizationElement a, const RealizationElement& b) { return a -= b; }
    friend bool operator==(const RealizationElement& a, const RealizationElement& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    TermMap terms_;
};

/// Generalized power elements acting on u_gamma:
///   D_i u = gamma_i u,   t^m u = u_{gamma+m+p},
///   E(m) u = [(m2+p2) gamma1 - (m1+p1) gamma2] u_{gamma+m}.
RealizationElement realize_apply(const LieElement& x, const RealizationElement& w, const AlgebraParams& p);

/// [x,y] u_gamma - (x y - y x) u_gamma computed in the operator picture;
/// zero iff the structure constants agree with the operators at (x, y, gamma).
RealizationElement cross_check_bracket(const Generator& x, const Generator& y, const Weight& gamma,
                                       const AlgebraParams& p);

} // namespace hv
