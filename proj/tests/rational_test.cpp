#include <random>
#include <sstream>

#include "doctest.h"
#include "polyef/rational.hpp"

using namespace polyef;

TEST_SUITE_BEGIN("rational");

TEST_CASE("construction canonicalizes") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-2, 4) == rat(-1, 2));
    CHECK(rat(2, -4) == rat(-1, 2));
    CHECK(rat(0, 7) == rat(0));
    CHECK(rat(-3, -9) == rat(1, 3));
    CHECK_THROWS_AS(rat(1, 0), ConstructionError);
}

TEST_CASE("parse and str round trip") {
    CHECK(Rational::parse("3/4") == rat(3, 4));
    CHECK(Rational::parse("-3/4") == rat(-3, 4));
    CHECK(Rational::parse("7") == rat(7));
    CHECK(Rational::parse("+7") == rat(7));
    CHECK(Rational::parse("6/4") == rat(3, 2));
    CHECK(rat(3, 4).str() == "3/4");
    CHECK(rat(-3, 4).str() == "-3/4");
    CHECK(rat(7).str() == "7");
    CHECK(rat(0).str() == "0");
    CHECK_THROWS_AS(Rational::parse("1/0"), ConstructionError);
    CHECK_THROWS_AS(Rational::parse(""), InputError);
    CHECK_THROWS_AS(Rational::parse("a/b"), InputError);
    CHECK_THROWS_AS(Rational::parse("1.5"), InputError);

    std::mt19937_64 gen(7);
    for (int t = 0; t < 200; ++t) {
        long p = static_cast<long>(gen() % 2001) - 1000;
        long q = static_cast<long>(gen() % 999) + 1;
        Rational r = rat(p, q);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("arithmetic") {
    CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
    CHECK(rat(1, 2) - rat(1, 3) == rat(1, 6));
    CHECK(rat(2, 3) * rat(3, 4) == rat(1, 2));
    CHECK(rat(2, 3) / rat(3, 4) == rat(8, 9));
    CHECK(-rat(2, 3) == rat(-2, 3));
    CHECK(rat(3, 4).inverse() == rat(4, 3));
    CHECK(rat(-3, 4).inverse() == rat(-4, 3));
    CHECK_THROWS_AS(rat(1) / rat(0), ConstructionError);
    CHECK_THROWS_AS(rat(0).inverse(), ConstructionError);
}

TEST_CASE("ordering and predicates") {
    CHECK(rat(1, 3) < rat(1, 2));
    CHECK(rat(-1, 2) < rat(-1, 3));
    CHECK(rat(4, 2).is_integer());
    CHECK(!rat(1, 2).is_integer());
    CHECK(rat(0).is_zero());
    CHECK(rat(-5).sign() == -1);
    CHECK(rat(5).sign() == 1);
    CHECK(rat(0).sign() == 0);
}

TEST_CASE("field axioms hold on random values") {
    std::mt19937_64 gen(11);
    auto draw = [&]() {
        long p = static_cast<long>(gen() % 201) - 100;
        long q = static_cast<long>(gen() % 99) + 1;
        return rat(p, q);
    };
    for (int t = 0; t < 300; ++t) {
        Rational a = draw(), b = draw(), c = draw();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + rat(0) == a);
        CHECK(a * rat(1) == a);
        if (!a.is_zero()) CHECK(a * a.inverse() == rat(1));
    }
}

TEST_CASE("dot product") {
    RatVector u = {rat(1, 2), rat(0), rat(-3)};
    RatVector v = {rat(4), rat(9), rat(1, 3)};
    CHECK(dot(u, v) == rat(1));
    CHECK_THROWS_AS(dot(u, RatVector{rat(1)}), DimensionError);
}

TEST_CASE("stream output matches str") {
    std::ostringstream os;
    os << rat(-7, 3);
    CHECK(os.str() == "-7/3");
}

TEST_SUITE_END();
