#include "hv/poly.hpp"

#include "hv/errors.hpp"

#include <cctype>
#include <sstream>

namespace hv {

std::vector<Monomial> monomials_up_to(std::uint32_t max_degree)
{
    std::vector<Monomial> out;
    for (std::uint32_t d = 0; d <= max_degree; ++d)
        for (std::uint32_t e1 = 0; e1 <= d; ++e1) out.push_back({e1, d - e1});
    return out;
}

Poly::Poly(const Scalar& c)
{
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Poly Poly::monomial(const Scalar& c, std::uint32_t e1, std::uint32_t e2)
{
    Poly p;
    p.add_term(c, {e1, e2});
    return p;
}

Poly Poly::linear(const Scalar& a, const Scalar& b, const Scalar& c)
{
    Poly p;
    p.add_term(a, {1, 0});
    p.add_term(b, {0, 1});
    p.add_term(c, {0, 0});
    return p;
}

int Poly::degree() const
{
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.begin()->first.degree());
}

Scalar Poly::coefficient(std::uint32_t e1, std::uint32_t e2) const
{
    auto it = terms_.find({e1, e2});
    return it == terms_.end() ? Scalar() : it->second;
}

void Poly::add_term(const Scalar& c, Monomial m)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    for (const auto& [m, c] : o.terms_) add_term(c, m);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    for (const auto& [m, c] : o.terms_) add_term(-c, m);
    return *this;
}

Poly& Poly::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ca * cb, {ma.e1 + mb.e1, ma.e2 + mb.e2});
    return r;
}

namespace {

// Coefficients of (x - s)^n in ascending powers of x.
std::vector<Scalar> shifted_power(const Scalar& s, std::uint32_t n)
{
    std::vector<Scalar> out(n + 1);
    Scalar neg_s = -s;
    Scalar pw(1); // (-s)^(n-k), built from k = n downwards
    for (std::uint32_t k = n + 1; k-- > 0;) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, k);
        out[k] = Scalar(mpq_class(binom)) * pw;
        pw *= neg_s;
    }
    return out;
}

} // namespace

Poly shift(const Poly& f, const Scalar& s1, const Scalar& s2)
{
    if (s1.is_zero() && s2.is_zero()) return f;
    std::map<std::uint32_t, std::vector<Scalar>> cache1, cache2;
    auto powers = [](std::map<std::uint32_t, std::vector<Scalar>>& cache, const Scalar& s, std::uint32_t n)
        -> const std::vector<Scalar>& {
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, shifted_power(s, n)).first;
        return it->second;
    };
    Poly r;
    for (const auto& [m, c] : f.terms()) {
        const auto& p1 = powers(cache1, s1, m.e1);
        const auto& p2 = powers(cache2, s2, m.e2);
        for (std::uint32_t i = 0; i < p1.size(); ++i) {
            if (p1[i].is_zero()) continue;
            Scalar ci = c * p1[i];
            for (std::uint32_t j = 0; j < p2.size(); ++j)
                if (!p2[j].is_zero()) r.add_term(ci * p2[j], {i, j});
        }
    }
    return r;
}

Scalar eval(const Poly& f, const Scalar& a1, const Scalar& a2)
{
    Scalar total;
    for (const auto& [m, c] : f.terms()) total += c * a1.pow(m.e1) * a2.pow(m.e2);
    return total;
}

std::string Poly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        // Pull a leading minus out of real or purely imaginary coefficients.
        bool negative = false;
        Scalar mag = c;
        if ((c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0)) {
            negative = true;
            mag = -c;
        }
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;

        std::string coeff = mag.to_string();
        if (!mag.is_real() && sgn(mag.re()) != 0) coeff = "(" + coeff + ")";
        std::string vars;
        auto append = [&vars](const char* name, std::uint32_t e) {
            if (e == 0) return;
            if (!vars.empty()) vars += "*";
            vars += name;
            if (e > 1) vars += "^" + std::to_string(e);
        };
        append("d1", m.e1);
        append("d2", m.e2);
        if (vars.empty())
            os << coeff;
        else if (mag.is_one())
            os << vars;
        else
            os << coeff << "*" << vars;
    }
    return os.str();
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text)
    {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }

    Poly parse()
    {
        if (s_.empty()) fail("empty polynomial literal");
        Poly p = expr();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " in polynomial literal '" + std::string(text_) + "' at offset " + std::to_string(pos_));
    }

    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

    Poly expr()
    {
        Poly acc;
        bool negate = false;
        if (peek('+') || peek('-')) negate = s_[pos_++] == '-';
        Poly t = term();
        acc = negate ? -t : t;
        while (peek('+') || peek('-')) {
            bool minus = s_[pos_++] == '-';
            Poly u = term();
            if (minus)
                acc -= u;
            else
                acc += u;
        }
        return acc;
    }

    Poly term()
    {
        Poly acc = factor();
        while (peek('*')) {
            ++pos_;
            acc = acc * factor();
        }
        return acc;
    }

    Poly factor()
    {
        Poly base = atom();
        if (!peek('^')) return base;
        ++pos_;
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_ || pos_ - start > 6) fail("bad exponent");
        auto e = std::stoul(s_.substr(start, pos_ - start));
        Poly r(1);
        for (unsigned long k = 0; k < e; ++k) r = r * base;
        return r;
    }

    Poly atom()
    {
        if (peek('(')) {
            ++pos_;
            Poly p = expr();
            if (!peek(')')) fail("missing ')'");
            ++pos_;
            return p;
        }
        if (peek('d')) {
            ++pos_;
            if (peek('1')) {
                ++pos_;
                return Poly::d1();
            }
            if (peek('2')) {
                ++pos_;
                return Poly::d2();
            }
            fail("unknown variable");
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (peek('/')) {
                ++pos_;
                std::size_t dstart = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (dstart == pos_) fail("missing denominator");
            }
            std::string lit = s_.substr(start, pos_ - start);
            if (peek('i')) {
                ++pos_;
                lit += "i";
            }
            return Poly(parse_scalar(lit));
        }
        fail("expected number, variable or '('");
    }

    std::string_view text_;
    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

} // namespace hv
