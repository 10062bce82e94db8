#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hv {

/// Exact element a + b*i of the Gaussian rationals Q(i).
///
/// Both parts are GMP rationals kept in canonical form (positive
/// denominator, gcd 1), so structural equality is field equality.
class Scalar {
public:
    Scalar() = default;
    Scalar(std::int64_t re) : re_(static_cast<long>(re)) {} // NOLINT(implicit)
    Scalar(mpq_class re, mpq_class im = 0);

    /// num/den + 0i; throws ArithmeticError when den == 0.
    static Scalar ratio(std::int64_t num, std::int64_t den);
    static Scalar imag_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    /// Multiplicative inverse; throws ArithmeticError for zero.
    Scalar inv() const;
    Scalar conj() const { return Scalar(re_, -im_); }

    /// Integer power; negative exponents go through inv().
    Scalar pow(std::int64_t n) const;

    /// Canonical literal accepted by parse(): "R", "Ri", "R+Ri", "R-Ri".
    std::string to_string() const;

    /// Total order (real part first, then imaginary). Only for use as a
    /// container key; Q(i) has no field ordering.
    friend std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b);

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

struct ScalarLess {
    bool operator()(const Scalar& a, const Scalar& b) const { return canonical_compare(a, b) < 0; }
};

/// Parses the scalar literal grammar
///   R | R i | R+Ri | R-Ri      with R ::= [-]digits[/digits]
/// Whitespace is ignored. Throws ParseError on malformed input or a
/// zero denominator.
Scalar parse_scalar(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace hv
