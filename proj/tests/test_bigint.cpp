#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ksg/bigint.hpp"
#include "ksg/rational.hpp"

using ksg::BigInt;
using ksg::Rational;

TEST_CASE("bigint basic arithmetic") {
    BigInt a(123456789012345678LL), b(-987654321LL);
    CHECK((a + b).to_string() == "123456788024691357");
    CHECK((a * b).to_string() == "-121932631124828531222374638");
    CHECK((a - a).is_zero());
    CHECK((-b).to_string() == "987654321");
    CHECK(BigInt("000123").to_string() == "123");
    CHECK(BigInt("-0") == BigInt(0));
}

TEST_CASE("bigint division and remainder follow the dividend sign") {
    BigInt q, r;
    BigInt::divmod(BigInt(7), BigInt(2), q, r);
    CHECK(q == BigInt(3));
    CHECK(r == BigInt(1));
    BigInt::divmod(BigInt(-7), BigInt(2), q, r);
    CHECK(q == BigInt(-3));
    CHECK(r == BigInt(-1));
    BigInt big("123456789123456789123456789");
    CHECK(((big / BigInt(12345)) * BigInt(12345) + big % BigInt(12345)) == big);
    CHECK_THROWS(BigInt(1) / BigInt(0));
}

TEST_CASE("bigint multiplication round trip across limbs") {
    BigInt x("99999999999999999999999999999999");
    BigInt y("12345678901234567890");
    BigInt p = x * y;
    CHECK(p / y == x);
    CHECK((p % x).is_zero());
    CHECK(p.to_string() == "1234567890123456788999999999999987654321098765432110");
}

TEST_CASE("bigint gcd") {
    CHECK(BigInt::gcd(BigInt(48), BigInt(-18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    BigInt a("123456789123456789"), g(999);
    CHECK(BigInt::gcd(a * g, g) == g);
}

TEST_CASE("bigint comparisons and int64 conversion") {
    CHECK(BigInt(-5) < BigInt(3));
    CHECK(BigInt("10000000000000000000") > BigInt("9999999999999999999"));
    long long out;
    CHECK(BigInt(1234).to_int64(out));
    CHECK(out == 1234);
    CHECK_FALSE(BigInt("99999999999999999999999").to_int64(out));
}

TEST_CASE("rational normalization and arithmetic") {
    Rational r(6, -4);
    CHECK(r.to_string() == "-3/2");
    CHECK((r + Rational(3, 2)).is_zero());
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
    CHECK((Rational(1, 7) / Rational(2, 7)) == Rational(1, 2));
    CHECK(Rational::parse("-10/15") == Rational(-2, 3));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS(Rational(1, 0));
}
