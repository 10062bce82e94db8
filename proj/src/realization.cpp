#include "hv/realization.hpp"

#include <sstream>

namespace hv {

std::string Weight::to_string() const { return "(" + g1.to_string() + "," + g2.to_string() + ")"; }

Scalar RealizationElement::coefficient(const Weight& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

void RealizationElement::add_term(const Scalar& c, const Weight& w)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

RealizationElement& RealizationElement::operator+=(const RealizationElement& o)
{
    for (const auto& [w, c] : o.terms_) add_term(c, w);
    return *this;
}

RealizationElement& RealizationElement::operator-=(const RealizationElement& o)
{
    for (const auto& [w, c] : o.terms_) add_term(-c, w);
    return *this;
}

std::string RealizationElement::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")*u" << w.to_string();
    }
    return os.str();
}

namespace {

void apply_generator(const Generator& g, const Scalar& coeff, const Weight& w, const Scalar& wc,
                     const AlgebraParams& p, RealizationElement& out)
{
    const Scalar c = coeff * wc;
    switch (g.kind) {
    case GenKind::D1: out.add_term(c * w.g1, w); break;
    case GenKind::D2: out.add_term(c * w.g2, w); break;
    case GenKind::T:
        out.add_term(c, {w.g1 + Scalar(g.m.m1) + p.p1, w.g2 + Scalar(g.m.m2) + p.p2});
        break;
    case GenKind::E: {
        Scalar factor = (Scalar(g.m.m2) + p.p2) * w.g1 - (Scalar(g.m.m1) + p.p1) * w.g2;
        out.add_term(c * factor, {w.g1 + Scalar(g.m.m1), w.g2 + Scalar(g.m.m2)});
        break;
    }
    }
}

} // namespace

RealizationElement realize_apply(const LieElement& x, const RealizationElement& w, const AlgebraParams& p)
{
    RealizationElement out;
    for (const auto& [g, c] : x.terms())
        for (const auto& [wt, wc] : w.terms()) apply_generator(g, c, wt, wc, p, out);
    return out;
}

RealizationElement cross_check_bracket(const Generator& x, const Generator& y, const Weight& gamma,
                                       const AlgebraParams& p)
{
    const auto u = RealizationElement::basis(gamma);
    const LieElement lx(x), ly(y);
    RealizationElement lhs = realize_apply(bracket(lx, ly, p), u, p);
    RealizationElement commutator = realize_apply(lx, realize_apply(ly, u, p), p);
    commutator -= realize_apply(ly, realize_apply(lx, u, p), p);
    return lhs - commutator;
}

} // namespace hv
