#include "hv/scalar.hpp"

#include "hv/errors.hpp"

#include <cctype>
#include <ostream>

namespace hv {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// R ::= [-]digits[/digits]
mpq_class parse_rational(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && s.front() == '-') {
        negative = true;
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed scalar literal '" + std::string(whole) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (sgn(d) == 0)
        throw ParseError("zero denominator in scalar literal '" + std::string(whole) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
}

} // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

Scalar Scalar::ratio(std::int64_t num, std::int64_t den)
{
    if (den == 0) throw ArithmeticError("zero denominator");
    mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    return Scalar(q);
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.is_zero()) throw ArithmeticError("division by zero");
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inv();
}

Scalar Scalar::inv() const
{
    if (is_zero()) throw ArithmeticError("inverse of zero");
    mpq_class norm = re_ * re_ + im_ * im_;
    return Scalar(re_ / norm, -im_ / norm);
}

Scalar Scalar::pow(std::int64_t n) const
{
    if (n < 0) return inv().pow(-n);
    Scalar result(1);
    Scalar base = *this;
    auto e = static_cast<std::uint64_t>(n);
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

std::string Scalar::to_string() const
{
    if (is_real()) return re_.get_str();
    std::string im_part = mpq_class(abs(im_)).get_str() + "i";
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + im_part;
    return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + im_part;
}

std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b)
{
    if (int c = cmp(a.re_, b.re_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = cmp(a.im_, b.im_);
    if (c == 0) return std::strong_ordering::equal;
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

Scalar parse_scalar(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty scalar literal");

    const bool imaginary = s.back() == 'i';
    std::string_view body(s);
    if (imaginary) body.remove_suffix(1);

    // A sign past position 0 separates the real and imaginary parts.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = 1; k < body.size(); ++k)
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }

    if (split == std::string_view::npos) {
        mpq_class q = parse_rational(body, text);
        return imaginary ? Scalar(0, q) : Scalar(q);
    }
    if (!imaginary) throw ParseError("malformed scalar literal '" + std::string(text) + "'");
    mpq_class re = parse_rational(body.substr(0, split), text);
    std::string_view rest = body.substr(split);
    const bool minus = rest.front() == '-';
    rest.remove_prefix(1);
    if (!rest.empty() && rest.front() == '-') throw ParseError("malformed scalar literal '" + std::string(text) + "'");
    mpq_class im = parse_rational(rest, text);
    return Scalar(re, minus ? mpq_class(-im) : im);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace hv
