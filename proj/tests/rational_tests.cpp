#include <doctest.h>

#include "bk/rational.hpp"

using bk::Rat;

TEST_CASE("construction normalizes sign and gcd") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(0, -7) == Rat(0));
    CHECK(Rat(0, -7).den() == 1);
    CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("field arithmetic") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
    CHECK(Rat(2, 3) / Rat(4, 9) == Rat(3, 2));
    CHECK(Rat(5, 7) + Rat(-5, 7) == Rat(0));
    CHECK(-Rat(3, 4) == Rat(-3, 4));
    CHECK(3 * Rat(1, 6) == Rat(1, 2));
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
}

TEST_CASE("compound assignment") {
    Rat a(1, 2);
    a += Rat(1, 4);
    CHECK(a == Rat(3, 4));
    a *= Rat(4, 3);
    CHECK(a == Rat(1));
    a -= Rat(2);
    CHECK(a == Rat(-1));
    a /= Rat(-4);
    CHECK(a == Rat(1, 4));
}

TEST_CASE("ordering is exact") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(-1, 3));
    CHECK(Rat(7, 3) > Rat(2));
    CHECK(Rat(2, 4) <= Rat(1, 2));
    CHECK(Rat(2, 4) >= Rat(1, 2));
    // a pair that overflows a double's 53-bit mantissa comparison
    CHECK(Rat(6004799503160661LL, 2) < Rat(9007199254740993LL, 3));
}

TEST_CASE("floor and ceil round toward the right directions") {
    CHECK(Rat(7, 2).floor() == 3);
    CHECK(Rat(7, 2).ceil() == 4);
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(-7, 2).ceil() == -3);
    CHECK(Rat(4).floor() == 4);
    CHECK(Rat(4).ceil() == 4);
    CHECK(Rat(0).floor() == 0);
    CHECK(Rat(-1, 3).floor() == -1);
    CHECK(Rat(-1, 3).ceil() == 0);
}

TEST_CASE("predicates") {
    CHECK(Rat(4, 2).is_integer());
    CHECK(!Rat(1, 2).is_integer());
    CHECK(Rat(-3, 4).abs() == Rat(3, 4));
    CHECK(Rat(-3).sign() == -1);
    CHECK(Rat(0).sign() == 0);
    CHECK(Rat(1, 9).sign() == 1);
}

TEST_CASE("serialization round trip") {
    for (const char* s : {"0", "7", "-7", "1/2", "-3/5", "1000000/7"}) {
        auto r = Rat::parse(s);
        REQUIRE(r.has_value());
        CHECK(r->str() == s);
    }
    CHECK(Rat::parse("2/4")->str() == "1/2");
    CHECK(Rat::parse("5/-10")->str() == "-1/2");
    CHECK(!Rat::parse("").has_value());
    CHECK(!Rat::parse("1/0").has_value());
    CHECK(!Rat::parse("a").has_value());
    CHECK(!Rat::parse("1/2/3").has_value());
    CHECK(!Rat::parse("1.5").has_value());
    CHECK(!Rat::parse("99999999999999999999999").has_value());
}

TEST_CASE("overflow throws instead of wrapping") {
    Rat big(3'000'000'000'000'000'000LL);
    CHECK_THROWS_AS(big * big, bk::OverflowError);
    Rat third(1, 3'000'000'000'000'000'000LL);
    CHECK_THROWS_AS(third * third, bk::OverflowError);
    // intermediates above 64 bits are fine when the reduced result fits
    Rat a(1, 3'000'000'000'000'000'000LL);
    CHECK(a + a + a == Rat(1, 1'000'000'000'000'000'000LL));
}
