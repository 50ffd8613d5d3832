#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "oracles/oracles.hpp"
#include "skewlab/cli.hpp"
#include "skewlab/text_format.hpp"

using namespace skewlab;
using nlohmann::json;

namespace {

std::string fixture_text() {
    std::ifstream in(std::string(SKEWLAB_FIXTURE_DIR) + "/worked_examples.json");
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::vector<std::uint32_t> raw(const CenterPoly& p) {
    std::vector<std::uint32_t> v;
    for (FElem c : p.coeffs()) v.push_back(c.v);
    return v;
}

}  // namespace

TEST_CASE("every fixture value agrees with the brute-force oracle") {
    json doc = json::parse(fixture_text());
    REQUIRE(doc["examples"].size() >= 8);
    for (const auto& e : doc["examples"]) {
        auto spec = parse_tower(e["tower"].get<std::string>());
        const auto& T = *spec.tower;
        oracle::NaiveTower N(T);
        auto f = oracle::to_poly(parse_skew(spec, e["f"].get<std::string>()));
        const auto m = static_cast<unsigned>(f.size() - 1);
        CAPTURE(e.dump());
        REQUIRE(f[0] != 0);

        auto hhat = oracle::mclm_bruteforce(N, f, m);
        REQUIRE(hhat);
        CHECK(raw(parse_center(spec, e["hhat"].get<std::string>())) == *hhat);
        oracle::Poly h(hhat->size() == 0 ? 0 : (hhat->size() - 1) * T.n() + 1, 0);
        for (std::size_t i = 0; i < hhat->size(); ++i) h[i * T.n()] = (*hhat)[i];
        CHECK(oracle::to_poly(parse_skew(spec, e["h"].get<std::string>())) == h);

        const bool irreducible = oracle::is_irreducible(N, f);
        CHECK(e["certified_irreducible"].get<bool>() == irreducible);

        auto E = oracle::eigenring_elements(N, f);
        CHECK(E.size() == ipow(T.q(), e["eigenring_dim"].get<std::uint64_t>()));
        if (!e["nucleus_degree"].is_null())
            CHECK(oracle::constant_eigen_elements(N, f).size() == ipow(T.q(), e["nucleus_degree"].get<std::uint64_t>()));

        oracle::Poly product{1};
        for (const auto& s : e["factors"]) {
            auto g = oracle::to_poly(parse_skew(spec, s.get<std::string>()));
            CHECK(g.back() == 1);
            CHECK(oracle::is_irreducible(N, g));
            product = oracle::mul(N, product, g);
        }
        oracle::Poly tv(e["t_valuation"].get<std::size_t>() + 1, 0);
        tv.back() = 1;
        CHECK(oracle::mul(N, product, tv) == f);
        CHECK((e["factors"].size() == 1) == irreducible);

        const auto verdict = e["decide"].get<std::string>();
        if (verdict == "TRUE") {
            CHECK_FALSE(irreducible);
            if (!e["decide_witness"].is_null()) {
                auto w = oracle::to_poly(parse_skew(spec, e["decide_witness"].get<std::string>()));
                CHECK(oracle::right_divides(N, w, f));
                CHECK(w.size() >= 2);
                CHECK(w.size() < f.size());
            }
        }
        if (verdict == "IRREDUCIBLE_CERTIFIED") CHECK(irreducible);
    }
}

TEST_CASE("worked example chain over F_4") {
    json doc = json::parse(fixture_text());
    const auto& a = doc["examples"][0];
    CHECK(a["tower"] == "GF(2)^2/y^2+y+1");
    CHECK(a["f"] == "t^2+g");
    CHECK(a["hhat"] == "x^2+x+1");
    CHECK(a["h"] == "t^4+t^2+1");
    CHECK(a["certified_irreducible"] == true);
    CHECK(a["nucleus_degree"] == 2);  // Nuc_r = K = F_4

    const auto& b = doc["examples"][1];
    CHECK(b["f"] == "t^2+(g+1)*t+g");
    CHECK(b["hhat"] == "x^2+1");  // (x+1)^2 in characteristic 2
    CHECK(b["factors"] == json::array({"t+g", "t+1"}));

    const auto& c = doc["examples"][4];
    CHECK(c["tower"] == "GF(2)^3/y^3+y+1");
    CHECK(c["decide"] == "TRUE");
    CHECK(c["decide_step"] == 1);
    CHECK(c["decide_witness"] == "t+1");
}

TEST_CASE("the library regenerates the fixture file byte for byte") {
    CHECK(generate_fixtures(0) == fixture_text());
    json doc = json::parse(fixture_text());
    CHECK(doc.dump(2) + "\n" == fixture_text());
}
