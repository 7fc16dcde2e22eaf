#include <doctest.h>

#include "snf/rational.hpp"

using namespace snf;

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
    CHECK(rat(3, 4) * rat(4, 3) == Rational(1));
    CHECK(rat(-6, 4) == rat(3, -2));
    CHECK((rat(-6, 4)).str() == "-3/2");
    CHECK(rat(7, 1).str() == "7");
    CHECK_THROWS_AS(Rational(1) / Rational(0), domain_error);

    // re-canonicalizing is the identity
    Rational v = rat(84, -126);
    CHECK(Rational(v.num(), v.den()) == v);
    CHECK(v.str() == "-2/3");
}

TEST_CASE("rational parse round-trips") {
    for (const char* s : {"0", "5", "-5", "5/3", "-5/3", "123456789123456789/987654321"}) {
        Rational v = Rational::parse(s);
        CHECK(Rational::parse(v.str()) == v);
    }
    CHECK(Rational::parse("4/6") == rat(2, 3));
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), domain_error);
}

TEST_CASE("pochhammer k-symbol") {
    CHECK(pochhammer(Rational(5), 0, Rational(7)) == Rational(1));
    CHECK(pochhammer(Rational(2), 3, Rational(1)) == Rational(24));
    CHECK(pochhammer(Rational(-1), 3, Rational(5)) == Rational(-36));
    CHECK_THROWS_AS(pochhammer(Rational(1), -1, Rational(1)), domain_error);

    // recurrence (a)^{k+1}_b = (a)^k_b (a + k b)
    for (long long a = -3; a <= 3; ++a)
        for (long long b = -2; b <= 2; ++b)
            for (int k = 0; k <= 20; ++k)
                CHECK(pochhammer(rat(a, 2), k + 1, rat(b, 3)) ==
                      pochhammer(rat(a, 2), k, rat(b, 3)) * (rat(a, 2) + Rational(k) * rat(b, 3)));
}

TEST_CASE("exact roots") {
    Rational r;
    CHECK(rational_nth_root(rat(1, 16), 2, r));
    CHECK(r == rat(1, 4));
    CHECK(rational_nth_root(rat(27, 8), 3, r));
    CHECK(r == rat(3, 2));
    CHECK_FALSE(rational_nth_root(rat(2, 1), 2, r));
    CHECK_FALSE(rational_nth_root(rat(-4, 1), 2, r));
}
