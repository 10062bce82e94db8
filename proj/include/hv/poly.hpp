#pragma once

#include "hv/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hv {

/// Exponent pair of the monomial d1^e1 * d2^e2.
struct Monomial {
    std::uint32_t e1 = 0;
    std::uint32_t e2 = 0;

    std::uint32_t degree() const { return e1 + e2; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lex, largest first: higher total degree, then higher d1 power.
struct GradedLexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        return a.e1 > b.e1;
    }
};

/// All monomials of total degree <= max_degree, graded-lex ascending
/// (1, d2, d1, d2^2, d1*d2, d1^2, ...).
std::vector<Monomial> monomials_up_to(std::uint32_t max_degree);

/// Sparse polynomial in Scalar[d1, d2]. Zero coefficients are never stored.
class Poly {
public:
    using TermMap = std::map<Monomial, Scalar, GradedLexDesc>;

    Poly() = default;
    Poly(const Scalar& c); // NOLINT(implicit) constant polynomial
    Poly(std::int64_t c) : Poly(Scalar(c)) {} // NOLINT(implicit)

    static Poly monomial(const Scalar& c, std::uint32_t e1, std::uint32_t e2);
    static Poly d1() { return monomial(1, 1, 0); }
    static Poly d2() { return monomial(1, 0, 1); }
    /// a*d1 + b*d2 + c
    static Poly linear(const Scalar& a, const Scalar& b, const Scalar& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    Scalar coefficient(std::uint32_t e1, std::uint32_t e2) const;
    Scalar constant_term() const { return coefficient(0, 0); }

    void add_term(const Scalar& c, Monomial m);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Scalar& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
    friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    /// Deterministic rendering in graded-lex order, e.g. "d1^2*d2 - 1/2*d2 + 3".
    std::string to_string() const;

private:
    TermMap terms_;
};

/// f(d1 - s1, d2 - s2), expanded binomially.
Poly shift(const Poly& f, const Scalar& s1, const Scalar& s2);

/// f(a1, a2).
Scalar eval(const Poly& f, const Scalar& a1, const Scalar& a2);

/// Parses expressions over d1, d2 with + - * ^ and parentheses; numeric
/// atoms are digits[/digits] with an optional trailing i, e.g.
/// "3*d1^2*d2 - 1/2*d2 + (1+2i)". Throws ParseError.
Poly parse_poly(std::string_view text);

} // namespace hv
