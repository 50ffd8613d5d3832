#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles/oracles.hpp"
#include "skewlab/error.hpp"
#include "skewlab/text_format.hpp"

using namespace skewlab;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::ParseError;
}

std::vector<std::string> tower_strings() {
    return {"GF(2)^2", "GF(2)^3/y^3+y+1", "GF(3)^2", "GF(2)^4", "GF(2^2)^2", "GF(5)^2;gen=w",
            "GF(3)^3/mod=y^3+2*y+1", "GF(2^2/z^2+z+1)^3", "GF(3^2)^2;gen=a"};
}

}  // namespace

TEST_CASE("tower spec parsing") {
    auto s = parse_tower("GF(2)^2/y^2+y+1");
    CHECK(s.tower->p() == 2);
    CHECK(s.tower->e() == 1);
    CHECK(s.tower->n() == 2);
    CHECK(s.generator == 'g');
    CHECK(format_tower(s) == "GF(2)^2/y^2+y+1");

    auto t = parse_tower("GF(2)^3/y^3+y+1");
    CHECK(t.tower->ext_modulus() == std::vector<FElem>{{1}, {1}, {0}, {1}});
    CHECK(format_tower(parse_tower("GF(2)^3")) == "GF(2)^3/y^3+y^2+1");
    CHECK(format_tower(parse_tower(" GF( 3 )^2 ")) == "GF(3)^2/y^2+1");
    CHECK(format_tower(parse_tower("GF(2^2)^2")) == "GF(2^2/z^2+z+1)^2/y^2+z*y+1");

    auto w = parse_tower("GF(5)^2;gen=w");
    CHECK(w.generator == 'w');
    CHECK(format_tower(w).ends_with(";gen=w"));
}

TEST_CASE("tower spec round trip") {
    for (const auto& text : tower_strings()) {
        CAPTURE(text);
        auto s = parse_tower(text);
        auto canon = format_tower(s);
        auto back = parse_tower(canon);
        CHECK(*back.tower == *s.tower);
        CHECK(back.generator == s.generator);
        CHECK(format_tower(back) == canon);
    }
}

TEST_CASE("tower spec errors") {
    CHECK(code_of([] { parse_tower("GF(4)^2"); }) == ErrorCode::NonPrimeP);
    CHECK(code_of([] { parse_tower("GF(2)^2/y^2+1"); }) == ErrorCode::ReducibleModulus);
    CHECK(code_of([] { parse_tower("GF(2)^2/y^3+y+1"); }) == ErrorCode::DegreeMismatch);
    CHECK(code_of([] { parse_tower("GF(2)^30"); }) == ErrorCode::DegreeMismatch);
    CHECK(code_of([] { parse_tower("GF(2)^2;gen=t"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_tower("GF(2"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_tower("F(2)^2"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_tower("GF(2)"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_tower("GF(2)^2/y^2+q"); }) == ErrorCode::ParseError);
}

TEST_CASE("element and polynomial examples") {
    auto s = parse_tower("GF(2)^2/y^2+y+1");
    CHECK(parse_element(s, "g^1+1").v == 3);
    CHECK(parse_element(s, "[1,1]").v == 3);
    CHECK(parse_element(s, "g^2").v == 3);
    CHECK(parse_element(s, "g*g*g").v == 1);
    CHECK(format_element(s, KElem{3}) == "g+1");
    CHECK(format_element(s, KElem{0}) == "0");

    auto f = parse_skew(s, "t^2 + (g+1)*t + g");
    CHECK(oracle::to_poly(f) == oracle::Poly{2, 3, 1});
    CHECK(format_skew(s, f) == "t^2+(g+1)*t+g");
    // t*g = sigma(g)*t = (g+1)*t
    CHECK(format_skew(s, parse_skew(s, "t*g")) == "(g+1)*t");
    CHECK(format_skew(s, parse_skew(s, "(t+g)*(t+1)")) == "t^2+(g+1)*t+g");
    CHECK(format_skew(s, parse_skew(s, "-t + 1 - 1")) == "t");
    CHECK(format_skew(s, parse_skew(s, "0")) == "0");

    CHECK(format_center(*s.tower, parse_center(s, "x^2+x+1")) == "x^2+x+1");
    CHECK(format_center(*s.tower, parse_center(s, "(x+1)^2")) == "x^2+1");

    auto f9 = parse_tower("GF(3)^2");
    CHECK(format_skew(f9, parse_skew(f9, "2*g*t - 1")) == "2*g*t+2");
    CHECK(parse_element(f9, "5").v == 2);

    auto e2 = parse_tower("GF(2^2)^2");
    auto a = parse_element(e2, "(z+1)*g+z");
    CHECK(format_element(e2, a) == "(z+1)*g+z");
    CHECK(a.v == 2 + 3 * 4);
}

TEST_CASE("parse errors") {
    auto s = parse_tower("GF(2)^2");
    for (const char* bad : {"", "t+", "(t+1", "t^", "t^g", "q", "tt", "2**t", "t)", "[1,1", "[1,1,1]", "x"}) {
        CAPTURE(bad);
        CHECK(code_of([&] { parse_skew(s, bad); }) == ErrorCode::ParseError);
    }
    CHECK(code_of([&] { parse_element(s, "t"); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { parse_element(s, "z"); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { parse_center(s, "g"); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { parse_skew(s, "t^99999999"); }) == ErrorCode::ParseError);
}

TEST_CASE("randomized print/parse round trip") {
    std::mt19937 rng(5);
    for (const auto& text : tower_strings()) {
        CAPTURE(text);
        auto s = parse_tower(text);
        const auto& T = *s.tower;
        for (int trial = 0; trial < 200; ++trial) {
            KElem a{static_cast<std::uint32_t>(rng() % T.order())};
            CHECK(parse_element(s, format_element(s, a)) == a);
            FElem b{static_cast<std::uint32_t>(rng() % T.q())};
            CHECK(parse_base_element(s, format_base_element(T, b)) == b);

            oracle::Poly c(rng() % 6);
            for (auto& x : c) x = rng() % T.order();
            auto f = oracle::from_poly(s.tower, c);
            auto printed = format_skew(s, f);
            CAPTURE(printed);
            CHECK(parse_skew(s, printed) == f);

            std::vector<FElem> d(rng() % 6);
            for (auto& x : d) x = FElem{static_cast<std::uint32_t>(rng() % T.q())};
            CenterPoly h(T.base_ptr(), d);
            CHECK(parse_center(s, format_center(T, h)) == h);
        }
    }
}
