#include "skewlab/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skewlab/error.hpp"
#include "skewlab/petit.hpp"
#include "skewlab/reducibility.hpp"
#include "skewlab/skew_poly.hpp"
#include "skewlab/text_format.hpp"

namespace skewlab {
namespace {

using nlohmann::json;

// Text output keeps insertion order, JSON output sorts keys.
class Report {
   public:
    void line(std::string text) { text_.push_back(std::move(text)); }
    void put(const std::string& key, const std::string& text, json value) {
        text_.push_back(key + " = " + text);
        json_[key] = std::move(value);
    }
    void put(const std::string& key, const std::string& text) { put(key, text, text); }
    void put_json(const std::string& key, json value) { json_[key] = std::move(value); }

    void write(std::ostream& out, bool as_json) const {
        if (as_json) {
            out << json_.dump(2) << '\n';
            return;
        }
        for (const auto& l : text_) out << l << '\n';
    }

   private:
    std::vector<std::string> text_;
    json json_ = json::object();
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

template <class T>
std::string opt_text(const std::optional<T>& v) {
    return v ? std::to_string(*v) : "none";
}

template <class T>
json opt_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

std::string list_text(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
    return out + "]";
}

struct Context {
    TowerSpec spec;
    std::uint64_t seed = 0;
    std::vector<std::string> args;

    SkewPoly poly(std::size_t i) const { return parse_skew(spec, args.at(i)); }
    std::string fmt(const SkewPoly& f) const { return format_skew(spec, f); }
    std::string fmt(const CenterPoly& p) const { return format_center(*spec.tower, p); }
    std::string fmt(KElem a) const { return format_element(spec, a); }
};

void put_poly(Report& r, const Context& c, const std::string& key, const SkewPoly& f) { r.put(key, c.fmt(f)); }

void put_poly_list(Report& r, const Context& c, const std::string& key, const std::vector<SkewPoly>& v) {
    std::vector<std::string> items;
    for (const auto& f : v) items.push_back(c.fmt(f));
    r.put(key, list_text(items), items);
}

void verdict_report(Report& r, const Context& c, const Verdict& v) {
    std::string head = std::string(to_string(v.kind)) + " step=" + std::to_string(v.step);
    if (v.witness) head += " witness=" + c.fmt(*v.witness);
    r.line(head);
    r.put("rule", std::string(to_string(v.rule)));
    r.put_json("verdict", std::string(to_string(v.kind)));
    r.put_json("step", v.step);
    r.put_json("witness", v.witness ? json(c.fmt(*v.witness)) : json(nullptr));
}

Report cmd_mul(const Context& c) {
    Report r;
    auto p = c.poly(0) * c.poly(1);
    r.line(c.fmt(p));
    r.put_json("result", c.fmt(p));
    return r;
}

Report cmd_divmod(const Context& c, const std::string& side) {
    auto a = c.poly(0), b = c.poly(1);
    DivMod d = side == "left" ? left_divmod(a, b) : right_divmod(a, b);
    Report r;
    put_poly(r, c, "q", d.quotient);
    put_poly(r, c, "r", d.remainder);
    r.put_json("side", side);
    return r;
}

Report cmd_binary(const Context& c, SkewPoly (*op)(const SkewPoly&, const SkewPoly&)) {
    auto p = op(c.poly(0), c.poly(1));
    Report r;
    r.line(c.fmt(p));
    r.put_json("result", c.fmt(p));
    return r;
}

Report cmd_mclm(const Context& c) {
    auto res = mclm(c.poly(0));
    Report r;
    r.put("hhat", c.fmt(res.hhat));
    put_poly(r, c, "h", res.h);
    put_poly(r, c, "cofactor", res.cofactor);
    r.put("t_valuation", std::to_string(res.t_valuation), res.t_valuation);
    return r;
}

Report cmd_nucleus(const Context& c) {
    PetitAlgebra A(c.poly(0));
    auto N = nucleus(A);
    Report r;
    r.put("d", std::to_string(N.d), N.d);
    r.put("degree", std::to_string(N.degree_over_F), N.degree_over_F);
    std::vector<std::string> basis;
    for (KElem b : N.subfield.basis) basis.push_back(c.fmt(b));
    r.put("basis", list_text(basis), basis);
    return r;
}

Report cmd_eigenring(const Context& c) {
    PetitAlgebra A(c.poly(0));
    EigenringReport E = A.f().coeff(0) == KElem{} ? eigenring(A) : diagnostics_with_factors(A, c.seed);
    Report r;
    r.put("dim", std::to_string(E.dim_over_F), E.dim_over_F);
    r.put("hhat", c.fmt(E.hhat));
    r.put("hhat_irreducible", bool_text(E.hhat_irreducible), E.hhat_irreducible);
    r.put("s", opt_text(E.s), opt_json(E.s));
    r.put("k", opt_text(E.k), opt_json(E.k));
    r.put("l", opt_text(E.l), opt_json(E.l));
    r.put("commutative", bool_text(E.commutative), E.commutative);
    r.put("is_division", bool_text(E.is_division), E.is_division);
    put_poly_list(r, c, "basis", E.basis);
    return r;
}

Report cmd_tpow(const Context& c, std::size_t k) {
    PetitAlgebra A(c.poly(0));
    auto t = t_power_in_nucr(A, k);
    Report r;
    r.put("k", std::to_string(k), k);
    r.put("member", bool_text(t.member), t.member);
    r.put("coefficients_fixed", bool_text(t.coefficients_fixed), t.coefficients_fixed);
    return r;
}

Report cmd_decide(const Context& c) {
    Report r;
    verdict_report(r, c, decide(c.poly(0), c.seed));
    return r;
}

Report cmd_certify(const Context& c) {
    Report r;
    if (auto v = certify_irreducible(c.poly(0))) {
        verdict_report(r, c, *v);
    } else {
        r.line("NOT_CERTIFIED");
        r.put_json("verdict", "NOT_CERTIFIED");
    }
    return r;
}

Report cmd_factor(const Context& c) {
    auto fac = factorize(c.poly(0), c.seed);
    Report r;
    put_poly_list(r, c, "factors", fac.factors);
    r.put("unit", c.fmt(fac.unit));
    r.put("t_valuation", std::to_string(fac.t_valuation), fac.t_valuation);
    r.put("length", std::to_string(fac.length()), fac.length());
    return r;
}

}  // namespace

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
            return kExitParse;
        case ErrorCode::Inconclusive:
            return kExitInconclusive;
        default:
            return kExitDomain;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic in skew polynomial rings K[t; sigma] over finite fields", "skewlab"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string tower_text = "GF(2)^2";
    std::string format = "text";
    std::uint64_t seed = 0;
    app.add_option("--tower", tower_text, "tower spec, e.g. GF(2)^2/y^2+y+1 (see FORMATS.md)");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", seed, "seed for randomized subroutines");

    std::vector<std::string> args;
    std::string side = "right";
    std::size_t k = 1;
    std::string level = "fast";
    std::string fixture_out;

    std::map<std::string, CLI::App*> subs;
    auto add = [&](const std::string& name, const std::string& help, int nargs) {
        auto* s = app.add_subcommand(name, help);
        if (nargs > 0) s->add_option("polys", args, "skew polynomials in t")->required()->expected(nargs);
        subs[name] = s;
        return s;
    };
    add("mul", "product a*b", 2);
    add("divmod", "a = q*b + r (right) or a = b*q + r (left)", 2)
        ->add_option("--side", side, "division side")
        ->check(CLI::IsMember({"right", "left"}));
    add("gcrd", "greatest common right divisor", 2);
    add("lclm", "least common left multiple", 2);
    add("mclm", "minimal central left multiple", 1);
    add("nucleus", "right nucleus of S_f in K (closed form)", 1);
    add("eigenring", "eigenring of f with dimension diagnostics", 1);
    add("tpow", "is t^k in the right nucleus", 1)->add_option("--k", k, "power of t")->required();
    add("decide", "four-step reducibility test", 1);
    add("certify", "irreducibility certificate", 1);
    add("factor", "factorization into irreducibles", 1);
    add("selftest", "exhaustive cross-checks", 0)
        ->add_option("--level", level, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}));
    add("gen-fixtures", "write the worked-example fixtures", 0)->add_option("--out", fixture_out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (subs["selftest"]->parsed())
            return run_selftest(level == "full" ? SelftestLevel::Full : SelftestLevel::Fast, seed, out)
                       ? kExitOk
                       : kExitSelftestFailed;
        if (subs["gen-fixtures"]->parsed()) {
            std::string doc = generate_fixtures(seed);
            if (fixture_out.empty()) {
                out << doc;
            } else {
                std::ofstream file(fixture_out);
                file << doc;
                if (!file) {
                    err << "error: cannot write " << fixture_out << '\n';
                    return kExitDomain;
                }
            }
            return kExitOk;
        }

        Context c{parse_tower(tower_text), seed, args};
        Report r;
        if (subs["mul"]->parsed()) r = cmd_mul(c);
        else if (subs["divmod"]->parsed()) r = cmd_divmod(c, side);
        else if (subs["gcrd"]->parsed()) r = cmd_binary(c, gcrd);
        else if (subs["lclm"]->parsed()) r = cmd_binary(c, lclm);
        else if (subs["mclm"]->parsed()) r = cmd_mclm(c);
        else if (subs["nucleus"]->parsed()) r = cmd_nucleus(c);
        else if (subs["eigenring"]->parsed()) r = cmd_eigenring(c);
        else if (subs["tpow"]->parsed()) r = cmd_tpow(c, k);
        else if (subs["decide"]->parsed()) r = cmd_decide(c);
        else if (subs["certify"]->parsed()) r = cmd_certify(c);
        else if (subs["factor"]->parsed()) r = cmd_factor(c);
        r.write(out, format == "json");
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return exit_code_for(e.code());
    }
}

}  // namespace skewlab
