#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlab/bigreal.hpp"
#include "qlab/exponent.hpp"
#include "qlab/int.hpp"
#include "qlab/rational.hpp"

using namespace qlab;

TEST_CASE("Int arithmetic and parsing") {
    Int a(12), b(-5);
    CHECK(a + b == Int(7));
    CHECK(a * b == Int(-60));
    CHECK((-a).str() == "-12");
    CHECK(Int("123456789012345678901234567890") * Int(10)
          == Int("1234567890123456789012345678900"));
    CHECK(gcd(Int(12), Int(18)) == Int(6));
    CHECK(fdiv(Int(-7), Int(2)) == Int(-4));  // floor, not truncation
    CHECK(divexact(Int(84), Int(7)) == Int(12));
    CHECK(Int(49).is_perfect_square());
    CHECK_FALSE(Int(50).is_perfect_square());
    CHECK(Int(49).isqrt() == Int(7));
    CHECK(pow(Int(3), 7) == Int(2187));
    CHECK_THROWS_AS(Int("12x"), error);
}

TEST_CASE("Rational canonical form") {
    Rational a(6, 4);
    CHECK(a.num() == Int(3));
    CHECK(a.den() == Int(2));
    Rational b(5, -10);
    CHECK(b.num() == Int(-1));
    CHECK(b.den() == Int(2));  // denominator kept positive
    Rational z(0, 7);
    CHECK(z.is_zero());
    CHECK(z.num() == Int(0));
    CHECK(z.den() == Int(1));  // zero is uniquely 0/1
    CHECK((a + b) == Rational(1));
    CHECK((a * b) == Rational(-3, 4));
    CHECK((a / b) == Rational(-3));
    CHECK(Rational("7/3") == Rational(7, 3));
    CHECK(Rational("-9") == Rational(-9));
    CHECK_THROWS_AS(Rational(1, 0), error);
    CHECK_THROWS_AS(Rational("1/0"), error);
    CHECK_THROWS_AS(a / z, error);
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(Rational(9, 4).exact_sqrt() == Rational(3, 2));
    CHECK_THROWS_AS(Rational(2).exact_sqrt(), non_square_lead_error);
    CHECK(Rational(3, 2).str() == "3/2");
}

TEST_CASE("Exponent lattice") {
    Exponent e = Exponent::from_ratio(1, 12);
    CHECK(e.ticks() == Int(2));
    CHECK(Exponent::from_int(1).ticks() == Int(24));
    CHECK(Exponent::from_ratio(7, 12) < Exponent::from_int(1));
    CHECK((e + e) == Exponent::from_ratio(1, 6));
    CHECK((e * 6) == Exponent::from_ratio(1, 2));
    CHECK(Exponent::from_int(3).is_integer());
    CHECK_FALSE(e.is_integer());
    CHECK(e.str() == "1/12");
    CHECK(Exponent::from_int(-2).str() == "-2");
    CHECK_THROWS_AS(Exponent::from_ratio(1, 5), error);  // 5 does not divide 24
}

TEST_CASE("BigReal basics") {
    long d = 50;
    BigReal two(2, d);
    BigReal r = sqrt(two);
    // sqrt(2) to 40 places
    BigReal ref("1.41421356237309504880168872420969807856967187537694", d);
    CHECK(abs(r - ref) < BigReal::pow10(-45, d));
    CHECK(abs(BigReal::pi(d) - BigReal("3.14159265358979323846264338327950288419716939937510", d))
          < BigReal::pow10(-45, d));
    CHECK(abs(exp(BigReal(1, d)) - BigReal("2.71828182845904523536028747135266249775724709369996", d))
          < BigReal::pow10(-45, d));
    CHECK(abs(rootn(BigReal(32, d), 5) - two) < BigReal::pow10(-45, d));
    CHECK(pow_int(two, 10) == BigReal(1024, d));
    CHECK(pow_int(two, -2) == BigReal(Rational(1, 4), d));
    CHECK_THROWS_AS(sqrt(BigReal(-1, d)), negative_radicand_error);
    CHECK_THROWS_AS(rootn(BigReal(-8, d), 4), negative_radicand_error);
    CHECK(rootn(BigReal(-8, d), 3) < BigReal(0, d));  // odd roots of negatives are fine
    CHECK_THROWS_AS(two / BigReal(0, d), domain_error);
    // precision carries through mixed-precision arithmetic
    CHECK((BigReal(1, 80) + BigReal(1, 20)).digits() == 80);
}
