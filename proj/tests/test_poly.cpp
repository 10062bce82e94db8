#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "hv/errors.hpp"
#include "hv/poly.hpp"

using hv::Poly;
using hv::Scalar;
using hv::parse_poly;

namespace {

// Oracle for shift: substitute by Horner-style repeated multiplication of
// (d1 - s1), (d2 - s2), independent of the binomial expansion.
Poly shift_by_substitution(const Poly& f, const Scalar& s1, const Scalar& s2)
{
    const Poly x = Poly::d1() - Poly(s1);
    const Poly y = Poly::d2() - Poly(s2);
    Poly out;
    for (const auto& [m, c] : f.terms()) {
        Poly t(c);
        for (std::uint32_t k = 0; k < m.e1; ++k) t = t * x;
        for (std::uint32_t k = 0; k < m.e2; ++k) t = t * y;
        out += t;
    }
    return out;
}

} // namespace

TEST_CASE("ring operations")
{
    CHECK(Poly::d1() * Poly::d2() == Poly::monomial(1, 1, 1));
    Poly f = parse_poly("3*d1^2 - d2 + 1/2");
    CHECK(f + Poly() == f);
    CHECK(f - f == Poly());
    CHECK((Poly::d1() + Poly(1)) * (Poly::d1() - Poly(1)) == parse_poly("d1^2 - 1"));
    CHECK((Scalar(2) * f).coefficient(2, 0) == Scalar(6));
    CHECK(Poly(Scalar(0)).is_zero());
    CHECK(Poly().degree() == -1);
    CHECK(f.degree() == 2);
}

TEST_CASE("shift examples")
{
    Poly f = parse_poly("d1^3*d2 - 2*d2^2 + 5");
    CHECK(shift(f, 0, 0) == f);
    CHECK(shift(parse_poly("d1^2"), 1, 0) == parse_poly("d1^2 - 2*d1 + 1"));
    // (d1 - 1/2)(d2 + 1)
    CHECK(shift(parse_poly("d1*d2"), Scalar::ratio(1, 2), -1) == parse_poly("d1*d2 + d1 - 1/2*d2 - 1/2"));
}

TEST_CASE("eval examples")
{
    CHECK(eval(parse_poly("d1 + 1"), -1, 0) == Scalar(0));
    CHECK(eval(Poly(Scalar(7)), 3, 4) == Scalar(7));
    CHECK(eval(parse_poly("d1^2*d2"), 2, 3) == Scalar(12));
}

TEST_CASE("shift agrees with substitution oracle")
{
    hv::testing::Gen gen(11);
    for (int trial = 0; trial < 100; ++trial) {
        Poly f = gen.poly(4, 5);
        Scalar s1 = gen.scalar(), s2 = gen.scalar();
        CHECK(shift(f, s1, s2) == shift_by_substitution(f, s1, s2));
        CHECK(shift(f, s1, s2).degree() == f.degree());
    }
}

TEST_CASE("shift is a ring homomorphism and composes additively")
{
    hv::testing::Gen gen(12);
    for (int trial = 0; trial < 60; ++trial) {
        Poly f = gen.poly(3, 4), g = gen.poly(3, 4);
        Scalar s1 = gen.scalar(), s2 = gen.scalar(), t1 = gen.scalar(), t2 = gen.scalar();
        CHECK(shift(f * g, s1, s2) == shift(f, s1, s2) * shift(g, s1, s2));
        CHECK(shift(f + g, s1, s2) == shift(f, s1, s2) + shift(g, s1, s2));
        CHECK(shift(shift(f, s1, s2), t1, t2) == shift(f, s1 + t1, s2 + t2));
        Scalar a1 = gen.scalar(), a2 = gen.scalar();
        CHECK(eval(shift(f, s1, s2), a1, a2) == eval(f, a1 - s1, a2 - s2));
    }
}

TEST_CASE("parse and render")
{
    CHECK(parse_poly("d1").to_string() == "d1");
    CHECK(parse_poly("0").to_string() == "0");
    CHECK(parse_poly("d2 + d1^2 + 1 + d1*d2").to_string() == "d1^2 + d1*d2 + d2 + 1");
    CHECK(parse_poly("-d1 - 1/2").to_string() == "-d1 - 1/2");
    CHECK(parse_poly("(d1+2)^2") == parse_poly("d1^2 + 4*d1 + 4"));
    CHECK(parse_poly("(1+2i)*d1") == Poly::monomial(Scalar(1, 2), 1, 0));
    CHECK(parse_poly("3*d1^2*d2").coefficient(2, 1) == Scalar(3));
    for (const char* bad : {"", "d3", "d1^", "(d1", "d1 +", "1/0", "x", "d1**2"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_poly(bad), hv::ParseError);
    }
}

TEST_CASE("render/parse round trip")
{
    hv::testing::Gen gen(13);
    for (int trial = 0; trial < 200; ++trial) {
        Poly f = gen.poly(4, 6);
        CAPTURE(f.to_string());
        CHECK(parse_poly(f.to_string()) == f);
    }
}

TEST_CASE("monomial enumeration")
{
    auto monos = hv::monomials_up_to(3);
    CHECK(monos.size() == 10);
    CHECK(monos.front() == hv::Monomial{0, 0});
    CHECK(monos[1] == hv::Monomial{0, 1});
    CHECK(monos[2] == hv::Monomial{1, 0});
    CHECK(monos.back() == hv::Monomial{3, 0});
}
