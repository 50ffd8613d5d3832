#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles/oracles.hpp"
#include "skewlab/error.hpp"
#include "skewlab/skew_poly.hpp"

using namespace skewlab;

namespace {

const TowerPtr& F4() {
    static const TowerPtr t = build_tower(2, 1, 2);
    return t;
}

SkewPoly S(const TowerPtr& T, std::vector<std::uint32_t> c) { return oracle::from_poly(T, c); }

SkewPoly random_poly(const TowerPtr& T, std::mt19937& rng, int degree, bool monic = false) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = rng() % T->order();
    if (monic) c.back() = 1;
    else if (c.back() == 0) c.back() = 1 + rng() % (T->order() - 1);
    return S(T, c);
}

std::vector<TowerPtr> towers() {
    return {F4(), build_tower(2, 1, 3, std::nullopt, std::vector<FElem>{{1}, {1}, {0}, {1}}), build_tower(3, 1, 2),
            build_tower(2, 1, 4), build_tower(2, 2, 2)};
}

constexpr std::uint32_t g = 2, g1 = 3;  // g and g+1 in F_4

}  // namespace

TEST_CASE("multiplication examples over F_4") {
    const auto& T = F4();
    CHECK(S(T, {0, 1}) * S(T, {g}) == S(T, {0, g1}));
    CHECK(S(T, {1, 1}) * S(T, {1, 1}) == S(T, {1, 0, 1}));
    CHECK(S(T, {g, 1}) * S(T, {1, 1}) == S(T, {g, g1, 1}));
}

TEST_CASE("multiplication matches the naive oracle and the degree law") {
    std::mt19937 rng(1);
    for (const auto& T : towers()) {
        oracle::NaiveTower N(*T);
        for (int trial = 0; trial < 1000; ++trial) {
            const SkewPoly a = random_poly(T, rng, rng() % 5), b = random_poly(T, rng, rng() % 5);
            const SkewPoly ab = a * b;
            REQUIRE(ab.degree() == a.degree() + b.degree());
            REQUIRE(oracle::to_poly(ab) == oracle::mul(N, oracle::to_poly(a), oracle::to_poly(b)));
        }
    }
}

TEST_CASE("tower mismatch") {
    auto other = build_tower(3, 1, 2);
    CHECK_THROWS_AS(S(F4(), {1, 1}) * S(other, {1, 1}), Error);
    CHECK_THROWS_AS(S(F4(), {5}), Error);
}

TEST_CASE("right division examples") {
    const auto& T = F4();
    auto [q1, r1] = right_divmod(S(T, {1, 0, 1}), S(T, {1, 1}));
    CHECK(q1 == S(T, {1, 1}));
    CHECK(r1.is_zero());
    auto [q2, r2] = right_divmod(S(T, {g, 0, 1}), S(T, {g, 1}));
    CHECK(q2 == S(T, {g1, 1}));
    CHECK(r2 == S(T, {g1}));
    auto [q3, r3] = right_divmod(S(T, {g, g1, 1}), S(T, {1}));
    CHECK(q3 == S(T, {g, g1, 1}));
    CHECK(r3.is_zero());
    CHECK_THROWS_AS(right_divmod(S(T, {1}), SkewPoly(T)), Error);
}

TEST_CASE("left division examples") {
    const auto& T = F4();
    auto [q1, r1] = left_divmod(S(T, {1, 0, 1}), S(T, {1, 1}));
    CHECK(q1 == S(T, {1, 1}));
    CHECK(r1.is_zero());
    // g*t = t * sigma^-1(g)
    auto [q2, r2] = left_divmod(S(T, {0, g}), S(T, {0, 1}));
    CHECK(q2 == S(T, {g1}));
    CHECK(r2.is_zero());
    CHECK(S(T, {0, 1}) * q2 == S(T, {0, g}));
}

TEST_CASE("division round trips and uniqueness") {
    std::mt19937 rng(2);
    for (const auto& T : towers()) {
        oracle::NaiveTower N(*T);
        for (int trial = 0; trial < 500; ++trial) {
            const SkewPoly a = random_poly(T, rng, rng() % 7), b = random_poly(T, rng, rng() % 4);
            auto [q, r] = right_divmod(a, b);
            REQUIRE(r.degree() < b.degree());
            REQUIRE(q * b + r == a);
            auto [oq, orem] = oracle::right_divmod(N, oracle::to_poly(a), oracle::to_poly(b));
            REQUIRE(oracle::to_poly(q) == oq);
            REQUIRE(oracle::to_poly(r) == orem);
            auto [lq, lr] = left_divmod(a, b);
            REQUIRE(lr.degree() < b.degree());
            REQUIRE(b * lq + lr == a);
        }
    }
}

TEST_CASE("quotient and remainder are unique for small degrees over F_4") {
    const auto& T = F4();
    oracle::NaiveTower N(*T);
    std::mt19937 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        const SkewPoly a = random_poly(T, rng, 2), b = random_poly(T, rng, 1 + rng() % 2);
        int hits = 0;
        oracle::for_each_poly(N, 3, [&](const oracle::Poly& q) {
            const SkewPoly r = a - S(T, q) * b;
            if (r.degree() < b.degree()) ++hits;
        });
        CHECK(hits == 1);
    }
}

TEST_CASE("gcrd examples and properties") {
    const auto& T = F4();
    CHECK(gcrd(S(T, {1, 0, 1}), S(T, {g, g1, 1})) == S(T, {1, 1}));
    CHECK(gcrd(S(T, {g, g1, 1}), SkewPoly(T)) == S(T, {g, g1, 1}));
    CHECK(gcrd(S(T, {g, 0, 1}), S(T, {0, 1})) == S(T, {1}));
    CHECK_THROWS_AS(gcrd(SkewPoly(T), SkewPoly(T)), Error);

    oracle::NaiveTower N(*T);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const SkewPoly a = random_poly(T, rng, 1 + rng() % 2, true), b = random_poly(T, rng, 1 + rng() % 2, true);
        const SkewPoly d = gcrd(a, b);
        REQUIRE(right_divides(d, a));
        REQUIRE(right_divides(d, b));
        int best = 0;
        for (std::size_t deg = 1; deg <= 2; ++deg)
            oracle::for_each_monic(N, deg, [&](const oracle::Poly& c) {
                if (oracle::right_divides(N, c, oracle::to_poly(a)) && oracle::right_divides(N, c, oracle::to_poly(b)))
                    best = std::max(best, static_cast<int>(deg));
            });
        REQUIRE(d.degree() == best);
    }
}

TEST_CASE("lclm") {
    const auto& T = F4();
    CHECK(lclm(S(T, {1, 1}), S(T, {1, 1})) == S(T, {1, 1}));
    for (auto [a, b] : {std::pair{S(T, {1, 1}), S(T, {g, 1})}, std::pair{S(T, {0, 1}), S(T, {1, 1})}}) {
        const SkewPoly m = lclm(a, b);
        CHECK(m.degree() == 2);
        CHECK(m.is_monic());
        CHECK(right_divides(a, m));
        CHECK(right_divides(b, m));
    }
    CHECK_THROWS_AS(lclm(SkewPoly(T), S(T, {1})), Error);
    std::mt19937 rng(6);
    for (const auto& U : towers())
        for (int trial = 0; trial < 100; ++trial) {
            const SkewPoly a = random_poly(U, rng, 1 + rng() % 3), b = random_poly(U, rng, 1 + rng() % 3);
            const SkewPoly m = lclm(a, b);
            REQUIRE(right_divides(a, m));
            REQUIRE(right_divides(b, m));
            REQUIRE(m.degree() == a.degree() + b.degree() - gcrd(a, b).degree());
        }
}

TEST_CASE("right invariance") {
    const auto& T = F4();
    CHECK(is_right_invariant(S(T, {1, 0, 1})));
    CHECK_FALSE(is_right_invariant(S(T, {g, 0, 1})));
    CHECK_FALSE(is_right_invariant(S(T, {1, 1, 1})));
    CHECK(is_right_invariant(S(T, {0, 0, 1})));
    // f right invariant iff R f is two-sided: f*t and f*c land in R f
    std::mt19937 rng(8);
    for (const auto& U : towers()) {
        for (int trial = 0; trial < 300; ++trial) {
            SkewPoly f = random_poly(U, rng, 1 + rng() % 4, true);
            if (trial % 3 == 0) {  // bias towards central-looking inputs
                std::vector<KElem> c(f.coeffs());
                for (std::size_t i = 0; i + 1 < c.size(); ++i)
                    if ((c.size() - 1 - i) % U->n() != 0) c[i] = KElem{0};
                    else c[i] = KElem{c[i].v % U->q()};
                f = SkewPoly(U, c);
            }
            bool two_sided = right_divides(f, f * S(U, {0, 1}));
            for (std::uint32_t a = 0; a < U->order() && two_sided; ++a)
                two_sided = right_divides(f, f * S(U, {a}));
            REQUIRE(is_right_invariant(f) == two_sided);
        }
    }
}

TEST_CASE("mclm worked examples") {
    const auto& T = F4();
    auto r1 = mclm(S(T, {g, 0, 1}));
    CHECK(oracle::to_poly(SkewPoly::from_center(T, r1.hhat)) == oracle::Poly{1, 0, 1, 0, 1});
    CHECK(r1.h == S(T, {1, 0, 1, 0, 1}));
    CHECK(r1.h.degree() == 4);
    auto r2 = mclm(S(T, {1, 0, 1}));
    CHECK(r2.h == S(T, {1, 0, 1}));
    CHECK(r2.hhat.degree() == 1);
    auto r3 = mclm(S(T, {g, g1, 1}));
    CHECK(r3.h == S(T, {1, 0, 0, 0, 1}));
    auto r4 = mclm(S(T, {0, 0, 1}));
    CHECK(r4.t_valuation == 2);
    CHECK(r4.h == S(T, {1}));
    CHECK_THROWS_AS(mclm(S(T, {1})), Error);
    CHECK_THROWS_AS(mclm(S(T, {1, g})), Error);
}

TEST_CASE("companion product conventions agree on the worked examples") {
    const auto& T = F4();
    auto a1 = companion_product(S(T, {g, 0, 1}));
    // product of row-convention companions equals diag(g, g+1)
    CHECK(a1[0][0] == KElem{g});
    CHECK(a1[1][1] == KElem{g1});
    CHECK(a1[0][1] == KElem{0});
    CHECK(a1[1][0] == KElem{0});
    auto M = flatten(*T, a1);
    CHECK(min_poly_of_matrix(M) == CenterPoly(T->base_ptr(), {FElem{1}, FElem{1}, FElem{1}}));
}

TEST_CASE("mclm against brute-force central multiples") {
    std::mt19937 rng(9);
    for (const auto& T : towers()) {
        oracle::NaiveTower N(*T);
        const unsigned max_deg = T->order() <= 9 ? 4u : 2u;
        for (int trial = 0; trial < 40; ++trial) {
            SkewPoly f = random_poly(T, rng, 1 + rng() % (T->order() <= 9 ? 3 : 2), true);
            if (f.coeff(0).v == 0) continue;
            auto r = mclm(f);
            REQUIRE(is_central(r.h));
            REQUIRE(r.cofactor * f == r.h);
            auto brute = oracle::mclm_bruteforce(N, oracle::to_poly(f), max_deg);
            if (static_cast<unsigned>(r.hhat.degree()) <= max_deg) {
                REQUIRE(brute.has_value());
                std::vector<std::uint32_t> mine;
                for (auto c : r.hhat.coeffs()) mine.push_back(c.v);
                REQUIRE(mine == *brute);
            } else {
                REQUIRE_FALSE(brute.has_value());
            }
        }
    }
}

TEST_CASE("central elements commute with t and K") {
    std::mt19937 rng(10);
    for (const auto& T : towers())
        for (int trial = 0; trial < 50; ++trial) {
            const SkewPoly f = random_poly(T, rng, 1 + rng() % 3, true);
            if (f.coeff(0).v == 0) continue;
            const SkewPoly h = mclm(f).h;
            REQUIRE(h * S(T, {0, 1}) == S(T, {0, 1}) * h);
            for (std::uint32_t c = 0; c < T->order(); c += 1 + T->order() / 16)
                REQUIRE(h * S(T, {c}) == S(T, {c}) * h);
        }
}

TEST_CASE("vector coordinates round trip") {
    std::mt19937 rng(12);
    for (const auto& T : towers()) {
        const SkewPoly a = random_poly(T, rng, 3);
        CHECK(from_vector(T, to_vector(a, 4)) == a);
    }
}
