#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rho/rational.hpp"

using namespace rho;

TEST_CASE("rational parse and render round out") {
    CHECK(parse_rat("3/4") == Rat(3, 4));
    CHECK(parse_rat("-6/8") == Rat(-3, 4));
    CHECK(parse_rat("5") == Rat(5));
    CHECK(render_rat(Rat(-3, 4)) == "-3/4");
    CHECK(render_rat(Rat(8, 4)) == "2");
    CHECK_THROWS(parse_rat("1/0"));
    CHECK_THROWS(parse_rat("x"));
    CHECK_THROWS(parse_rat("1/2 junk"));
}

TEST_CASE("gaussian rational arithmetic") {
    CRat i = crat_i();
    CHECK(i * i == CRat(-1));
    CRat z(Rat(1, 2), Rat(-3, 4));
    CHECK(z * z.conj() == CRat(Rat(1, 4) + Rat(9, 16)));
    CHECK((z / z) == CRat(1));
    CHECK_THROWS(z / CRat(0));
    CHECK((CRat(2) + i) * (CRat(2) - i) == CRat(5));
}

TEST_CASE("gaussian rational string format") {
    CHECK(render_crat(CRat(0)) == "0");
    CHECK(render_crat(CRat(Rat(1, 2), Rat(0))) == "1/2");
    CHECK(render_crat(CRat(Rat(0), Rat(1, 3))) == "1/3 i");
    CHECK(render_crat(CRat(Rat(0), Rat(-1, 3))) == "-1/3 i");
    CHECK(render_crat(CRat(Rat(1, 2), Rat(3, 4))) == "1/2+3/4 i");
    CHECK(render_crat(CRat(Rat(1, 2), Rat(-3, 4))) == "1/2-3/4 i");

    for (const char* s : {"0", "1/2", "1/3 i", "-1/3 i", "1/2+3/4 i", "1/2-3/4 i", "-2-2 i"}) {
        CHECK(render_crat(parse_crat(s)) == s);
    }
    CHECK(parse_crat("0/5+0/7 i") == CRat(0));
}
