#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "hv/errors.hpp"
#include "hv/scalar.hpp"

using hv::Scalar;
using hv::parse_scalar;

TEST_CASE("gaussian rational product")
{
    // (1/2 + i)(1/2 - i) = 1/4 + 1 = 5/4
    Scalar a = parse_scalar("1/2+1i");
    Scalar b = parse_scalar("1/2-1i");
    CHECK(a * b == Scalar::ratio(5, 4));
    CHECK((a * b).is_real());
}

TEST_CASE("powers")
{
    Scalar x = parse_scalar("2/3-1/5i");
    CHECK(x.pow(0) == Scalar(1));
    CHECK(x.pow(3) == x * x * x);
    CHECK(x.pow(-2) == x.inv() * x.inv());
    CHECK(Scalar(2).pow(-3) == Scalar::ratio(1, 8));
    CHECK(Scalar::imag_unit().pow(2) == Scalar(-1));
    CHECK_THROWS_AS(Scalar(0).pow(-1), hv::ArithmeticError);
}

TEST_CASE("division by zero")
{
    CHECK_THROWS_AS(Scalar(0).inv(), hv::ArithmeticError);
    CHECK_THROWS_AS(Scalar(3) / Scalar(0), hv::ArithmeticError);
    CHECK_THROWS_AS(Scalar::ratio(1, 0), hv::ArithmeticError);
}

TEST_CASE("canonical form")
{
    CHECK(Scalar::ratio(4, -6) == Scalar::ratio(-2, 3));
    CHECK(Scalar::ratio(4, -6).re().get_den() == 3);
    CHECK(parse_scalar("6/4").to_string() == "3/2");
    CHECK(parse_scalar("0/5") == Scalar(0));
}

TEST_CASE("parse literals")
{
    CHECK(parse_scalar("2/3") == Scalar::ratio(2, 3));
    CHECK(parse_scalar("-1+1/2i") == Scalar(mpq_class(-1), mpq_class(1, 2)));
    CHECK(parse_scalar("3i") == Scalar(0, 3));
    CHECK(parse_scalar("-3/4i") == Scalar(0, mpq_class(-3, 4)));
    CHECK(parse_scalar(" 1 - 2 i ") == Scalar(1, -2));
    CHECK(parse_scalar("-7") == Scalar(-7));
}

TEST_CASE("parse errors")
{
    for (const char* bad : {"1/0", "", "abc", "1+2", "1/", "/2", "--1", "1+-2i", "1i+2", "1.5", "i", "2/0i"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_scalar(bad), hv::ParseError);
    }
}

TEST_CASE("field axioms on random triples")
{
    hv::testing::Gen gen(20241019);
    for (int trial = 0; trial < 300; ++trial) {
        Scalar a = gen.scalar(), b = gen.scalar(), c = gen.scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Scalar(0));
        CHECK(a - b == a + (-b));
        if (!a.is_zero()) {
            CHECK(a * a.inv() == Scalar(1));
            CHECK(b / a * a == b);
        }
    }
}

TEST_CASE("render/parse round trip")
{
    hv::testing::Gen gen(7);
    for (int trial = 0; trial < 300; ++trial) {
        Scalar x = gen.scalar();
        CAPTURE(x.to_string());
        CHECK(parse_scalar(x.to_string()) == x);
    }
    CHECK(Scalar::imag_unit().to_string() == "1i");
    CHECK(parse_scalar("-1/2-1/3i").to_string() == "-1/2-1/3i");
}
