#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "skewlab/cli.hpp"
#include "skewlab/error.hpp"
#include "skewlab/petit.hpp"
#include "skewlab/reducibility.hpp"
#include "skewlab/skew_poly.hpp"
#include "skewlab/text_format.hpp"

namespace skewlab {
namespace {

// Calls fn on every monic polynomial of the given degree over K.
void for_each_monic(const TowerPtr& T, std::size_t degree, const std::function<void(const SkewPoly&)>& fn) {
    std::vector<KElem> c(degree + 1);
    c[degree] = KElem{1};
    for (;;) {
        fn(SkewPoly(T, c));
        std::size_t i = 0;
        while (i < degree && ++c[i].v == T->order()) c[i++].v = 0;
        if (i == degree) return;
    }
}

SkewPoly random_monic(const TowerPtr& T, std::size_t degree, std::mt19937_64& rng) {
    std::vector<KElem> c(degree + 1);
    for (auto& x : c) x.v = static_cast<std::uint32_t>(rng() % T->order());
    c[degree] = KElem{1};
    return SkewPoly(T, c);
}

std::uint64_t power(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Number of g with deg g < m and f*g in Rf, by enumeration.
std::uint64_t eigenring_size_by_scan(const SkewPoly& f) {
    const auto& T = f.tower_ptr();
    const std::size_t m = static_cast<std::size_t>(f.degree());
    std::vector<KElem> c(m);
    std::uint64_t count = 0;
    for (;;) {
        if (mod_right(f * SkewPoly(T, c), f).is_zero()) ++count;
        std::size_t i = 0;
        while (i < m && ++c[i].v == T->order()) c[i++].v = 0;
        if (i == m) return count;
    }
}

struct Checker {
    std::ostream& out;
    bool ok = true;

    // Runs the body over a family; the body returns an empty string on success.
    void family(const std::string& name, const std::vector<SkewPoly>& fs,
                const std::function<std::string(const SkewPoly&)>& body) {
        auto start = std::chrono::steady_clock::now();
        std::size_t checked = 0;
        for (const auto& f : fs) {
            std::string problem;
            try {
                problem = body(f);
            } catch (const std::exception& e) {
                problem = std::string("exception: ") + e.what();
            }
            if (!problem.empty()) {
                ok = false;
                out << "FAIL " << name << ": " << problem << " (f = " << format_skew({f.tower_ptr(), 'g'}, f) << ")\n";
                return;
            }
            ++checked;
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out << "PASS " << name << " (" << checked << " cases, " << std::fixed << std::setprecision(3) << secs
            << " s)\n" << std::defaultfloat;
    }
};

std::string check_mclm(const SkewPoly& f) {
    if (f.coeff(0) == KElem{}) return "";
    auto r = mclm(f);
    if (!is_central(r.h)) return "h not central";
    if (!(r.cofactor * f == r.h)) return "h != cofactor * f";
    return "";
}

std::string check_nucleus(const SkewPoly& f) {
    if (is_right_invariant(f)) return "";
    PetitAlgebra A(f);
    auto closed = nucleus(A);
    auto brute = nucleus_bruteforce(A);
    if (closed.degree_over_F != brute.degree_over_F) return "nucleus degree differs from linear solve";
    auto as_vectors = [&](const std::vector<KElem>& b) {
        std::vector<FVector> v;
        for (KElem x : b) {
            auto c = A.tower().coords(x);
            v.emplace_back(c.begin(), c.end());
        }
        return v;
    };
    if (!same_span(A.tower().base_ptr(), A.tower().n(), as_vectors(closed.subfield.basis), as_vectors(brute.basis)))
        return "nucleus span differs from linear solve";
    return "";
}

std::string check_eigenring_count(const SkewPoly& f) {
    PetitAlgebra A(f);
    auto E = eigenring(A);
    if (eigenring_size_by_scan(f) != power(A.tower().q(), E.dim_over_F)) return "eigenring size differs from scan";
    return "";
}

std::string check_certificate(const SkewPoly& f) {
    if (f.coeff(0) == KElem{}) return "";
    auto v = certify_irreducible(f);
    if (!v) return "";
    if (exhaustive_split(f)) return "certified polynomial has a factor";
    return "";
}

std::string check_factorization(const SkewPoly& f, std::uint64_t seed) {
    auto fac = factorize(f, seed);
    if (!(recombine(fac, f.tower_ptr()) == f)) return "factors do not recombine";
    for (const auto& g : fac.factors) {
        if (g.degree() < 1 || !g.is_monic()) return "factor not monic of positive degree";
        if (g.degree() == 1) continue;
        if (g.coeff(0) != KElem{} && certify_irreducible(g)) continue;
        if (exhaustive_split(g)) return "factor is reducible";
    }
    return "";
}

std::string check_decide(const SkewPoly& f, std::uint64_t seed) {
    Verdict v;
    try {
        v = decide(f, seed);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::HypothesisViolated) return "";
        throw;
    }
    bool reducible = exhaustive_split(f).has_value();
    if (v.kind == VerdictKind::ReducibleTrue || v.kind == VerdictKind::TrivialTFactor) {
        if (!reducible) return "TRUE verdict on an irreducible polynomial";
        if (factorize(f, seed).length() < 2) return "TRUE verdict but factorization has length 1";
        if (v.witness && !right_divides(*v.witness, f)) return "witness does not divide";
    }
    if (v.kind == VerdictKind::IrreducibleCertified && reducible) return "false irreducibility claim";
    return "";
}

std::vector<SkewPoly> all_monic(const TowerPtr& T, std::size_t degree) {
    std::vector<SkewPoly> v;
    for_each_monic(T, degree, [&](const SkewPoly& f) { v.push_back(f); });
    return v;
}

std::vector<SkewPoly> sample_monic(const TowerPtr& T, std::size_t degree, std::size_t count, std::mt19937_64& rng) {
    std::vector<SkewPoly> v;
    for (std::size_t i = 0; i < count; ++i) v.push_back(random_monic(T, degree, rng));
    return v;
}

}  // namespace

bool run_selftest(SelftestLevel level, std::uint64_t seed, std::ostream& out) {
    Checker ck{out};
    const bool full = level == SelftestLevel::Full;
    std::mt19937_64 rng(seed);

    const TowerPtr F4 = build_tower(2, 1, 2);
    const TowerPtr F8 = build_tower(2, 1, 3, std::nullopt, std::vector<FElem>{{1}, {1}, {0}, {1}});
    const TowerPtr F9 = build_tower(3, 1, 2);
    const TowerPtr F16 = build_tower(2, 1, 4);

    {
        TowerSpec s{F4, 'g'};
        auto f = parse_skew(s, "t^2+g");
        auto r = mclm(f);
        bool good = format_center(*F4, r.hhat) == "x^2+x+1" && format_skew(s, r.h) == "t^4+t^2+1" &&
                    certify_irreducible(f).has_value() && nucleus(PetitAlgebra(f)).degree_over_F == 2;
        auto g = parse_skew(s, "t^2+(g+1)*t+g");
        auto fac = factorize(g, seed);
        good = good && format_center(*F4, mclm(g).hhat) == "x^2+1" && fac.factors.size() == 2 &&
               recombine(fac, F4) == g;
        out << (good ? "PASS" : "FAIL") << " worked examples over F_4\n";
        ck.ok = ck.ok && good;
    }

    auto seeded = [&](auto fn) { return [fn, seed](const SkewPoly& f) { return fn(f, seed); }; };
    auto run_family = [&](const std::vector<SkewPoly>& fam, bool scan_eigenring) {
        const auto& T = fam.front().tower();
        std::string tag = " over F_" + std::to_string(T.order()) + ", degree " + std::to_string(fam.front().degree());
        ck.family("mclm central multiple" + tag, fam, check_mclm);
        ck.family("nucleus closed form" + tag, fam, check_nucleus);
        if (scan_eigenring) ck.family("eigenring size" + tag, fam, check_eigenring_count);
        ck.family("irreducibility certificate" + tag, fam, check_certificate);
        ck.family("decide soundness" + tag, fam, seeded(check_decide));
        ck.family("factorization" + tag, fam, seeded(check_factorization));
    };

    run_family(all_monic(F4, 2), true);
    run_family(all_monic(F8, 2), true);
    run_family(all_monic(F9, 2), true);
    run_family(all_monic(F16, 2), true);
    run_family(all_monic(F4, 3), true);
    run_family(all_monic(F4, 4), false);
    run_family(all_monic(F8, 3), false);
    if (full) {
        run_family(all_monic(F8, 3), true);
        run_family(all_monic(F9, 3), true);
        run_family(all_monic(F16, 3), false);
        run_family(all_monic(F4, 5), false);
        run_family(sample_monic(F8, 4, 1000, rng), false);
        run_family(sample_monic(build_tower(2, 1, 6), 2, 1000, rng), false);
        run_family(sample_monic(build_tower(3, 1, 4), 2, 500, rng), false);
    }
    out << (ck.ok ? "selftest passed" : "selftest FAILED") << '\n';
    return ck.ok;
}

std::string generate_fixtures(std::uint64_t seed) {
    using nlohmann::json;
    struct Case {
        const char* tower;
        const char* f;
    };
    const Case cases[] = {
        {"GF(2)^2/y^2+y+1", "t^2+g"},
        {"GF(2)^2/y^2+y+1", "t^2+(g+1)*t+g"},
        {"GF(2)^2/y^2+y+1", "t^4+1"},
        {"GF(2)^2/y^2+y+1", "t^3+g*t+1"},
        {"GF(2)^3/y^3+y+1", "t^2+1"},
        {"GF(2)^3/y^3+y+1", "t^2+g"},
        {"GF(3)^2/y^2+1", "t^2+g"},
        {"GF(3)^2/y^2+1", "t^2+g*t+2"},
    };
    json doc = json::object();
    json list = json::array();
    for (const auto& c : cases) {
        TowerSpec spec = parse_tower(c.tower);
        SkewPoly f = parse_skew(spec, c.f);
        json e = json::object();
        e["tower"] = format_tower(spec);
        e["f"] = format_skew(spec, f);
        auto r = mclm(f);
        e["hhat"] = format_center(*spec.tower, r.hhat);
        e["h"] = format_skew(spec, r.h);
        e["certified_irreducible"] = certify_irreducible(f).has_value();
        PetitAlgebra A(f);
        if (is_right_invariant(f)) {
            e["nucleus_degree"] = nullptr;
        } else {
            e["nucleus_degree"] = nucleus(A).degree_over_F;
        }
        e["eigenring_dim"] = eigenring(A).dim_over_F;
        auto fac = factorize(f, seed);
        json factors = json::array();
        for (const auto& g : fac.factors) factors.push_back(format_skew(spec, g));
        e["factors"] = factors;
        e["t_valuation"] = fac.t_valuation;
        Verdict v = decide(f, seed);
        e["decide"] = std::string(to_string(v.kind));
        e["decide_step"] = v.step;
        e["decide_witness"] = v.witness ? json(format_skew(spec, *v.witness)) : json(nullptr);
        list.push_back(e);
    }
    doc["examples"] = list;
    doc["seed"] = seed;
    return doc.dump(2) + "\n";
}

}  // namespace skewlab
