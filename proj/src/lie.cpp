#include "hv/lie.hpp"

#include "hv/errors.hpp"

#include <charconv>
#include <cctype>
#include <sstream>

namespace hv {

std::string Index::to_string() const { return "(" + std::to_string(m1) + "," + std::to_string(m2) + ")"; }

std::vector<Index> square_window(std::int64_t radius)
{
    if (radius < 0) throw WindowError("negative window radius");
    std::vector<Index> out;
    for (std::int64_t a = -radius; a <= radius; ++a)
        for (std::int64_t b = -radius; b <= radius; ++b) out.push_back({a, b});
    return out;
}

const char* to_string(Flavor f) { return f == Flavor::PlainL ? "L" : "Lt"; }

std::string Generator::to_string() const
{
    switch (kind) {
    case GenKind::T: return "T" + m.to_string();
    case GenKind::E: return "E" + m.to_string();
    case GenKind::D1: return "D1";
    case GenKind::D2: return "D2";
    }
    return "?";
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole)
{
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw ParseError("malformed generator literal '" + std::string(whole) + "'");
    return v;
}

} // namespace

Generator parse_generator(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s == "D1") return Generator::D1();
    if (s == "D2") return Generator::D2();
    if (s.size() < 6 || (s[0] != 'T' && s[0] != 'E') || s[1] != '(' || s.back() != ')')
        throw ParseError("malformed generator literal '" + std::string(text) + "'");
    std::string_view inner(s);
    inner = inner.substr(2, inner.size() - 3);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw ParseError("malformed generator literal '" + std::string(text) + "'");
    Index m{parse_int(inner.substr(0, comma), text), parse_int(inner.substr(comma + 1), text)};
    return s[0] == 'T' ? Generator::T(m) : Generator::E(m);
}

std::vector<Generator> generators_in_window(const std::vector<Index>& window, bool with_derivations)
{
    std::vector<Generator> out;
    for (const auto& m : window) out.push_back(Generator::T(m));
    for (const auto& m : window) out.push_back(Generator::E(m));
    if (with_derivations) {
        out.push_back(Generator::D1());
        out.push_back(Generator::D2());
    }
    return out;
}

LieElement::LieElement(Generator g, const Scalar& c) { add_term(c, g); }

Scalar LieElement::coefficient(const Generator& g) const
{
    auto it = terms_.find(g);
    return it == terms_.end() ? Scalar() : it->second;
}

Flavor LieElement::flavor() const
{
    for (const auto& [g, c] : terms_)
        if (g.is_derivation()) return Flavor::ExtendedL;
    return Flavor::PlainL;
}

void LieElement::add_term(const Scalar& c, const Generator& g)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

LieElement LieElement::operator-() const
{
    LieElement r = *this;
    for (auto& [g, c] : r.terms_) c = -c;
    return r;
}

LieElement& LieElement::operator+=(const LieElement& o)
{
    for (const auto& [g, c] : o.terms_) add_term(c, g);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o)
{
    for (const auto& [g, c] : o.terms_) add_term(-c, g);
    return *this;
}

LieElement& LieElement::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [g, v] : terms_) v *= c;
    return *this;
}

std::string LieElement::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")*" << g.to_string();
    }
    return os.str();
}

Scalar det2(const Scalar& u1, const Scalar& u2, const Scalar& v1, const Scalar& v2) { return u1 * v2 - u2 * v1; }

Scalar shifted_det(Index m, Index n, const AlgebraParams& p)
{
    return det2(Scalar(m.m1) + p.p1, Scalar(m.m2) + p.p2, Scalar(n.m1) + p.p1, Scalar(n.m2) + p.p2);
}

namespace {

// [d_i, x] for a t/E generator x.
LieElement derivation_bracket(GenKind d, const Generator& x, const AlgebraParams& p)
{
    const bool first = d == GenKind::D1;
    Scalar weight(first ? x.m.m1 : x.m.m2);
    switch (x.kind) {
    case GenKind::E: return LieElement(x, weight);
    case GenKind::T: return LieElement(x, weight + (first ? p.p1 : p.p2));
    default: return {};
    }
}

} // namespace

LieElement bracket(const Generator& x, const Generator& y, const AlgebraParams& p)
{
    if (x.is_derivation() && y.is_derivation()) return {};
    if (x.is_derivation()) return derivation_bracket(x.kind, y, p);
    if (y.is_derivation()) return -derivation_bracket(y.kind, x, p);

    if (x.kind == GenKind::T && y.kind == GenKind::T) return {};
    const Scalar c = -shifted_det(x.m, y.m, p);
    const Index sum = x.m + y.m;
    if (x.kind == GenKind::E && y.kind == GenKind::E) return LieElement(Generator::E(sum), c);
    // Exactly one t: the result is a t, with antisymmetric sign.
    if (x.kind == GenKind::T) return LieElement(Generator::T(sum), c);
    return LieElement(Generator::T(sum), shifted_det(y.m, x.m, p));
}

LieElement bracket(const LieElement& x, const LieElement& y, const AlgebraParams& p)
{
    LieElement out;
    for (const auto& [gx, cx] : x.terms())
        for (const auto& [gy, cy] : y.terms()) out += (cx * cy) * bracket(gx, gy, p);
    return out;
}

LieElement outer_derivation(const LieElement& x)
{
    LieElement out;
    for (const auto& [g, c] : x.terms()) {
        if (g.is_derivation())
            throw UnsupportedDomainError("outer derivation is only defined on the span of t^m and E(m), got " +
                                         g.to_string());
        if (g.kind == GenKind::T) out.add_term(c, g);
    }
    return out;
}

} // namespace hv
