#include "skewlab/reducibility.hpp"

#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

#include "skewlab/error.hpp"

namespace skewlab {

std::string_view to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::ReducibleTrue: return "TRUE";
        case VerdictKind::StopUndecided: return "STOP";
        case VerdictKind::IrreducibleCertified: return "IRREDUCIBLE_CERTIFIED";
        case VerdictKind::RightInvariant: return "RIGHT_INVARIANT";
        case VerdictKind::TrivialTFactor: return "TRIVIAL_T_FACTOR";
    }
    return "?";
}

std::string_view to_string(Rule r) {
    switch (r) {
        case Rule::CommutativeFactor: return "commutative-factor";
        case Rule::CommutativeIrreducible: return "commutative-irreducible";
        case Rule::NucleusTooLarge: return "nucleus-exceeds-degree";
        case Rule::FixedFieldIsNucleus: return "fixed-field-is-nucleus";
        case Rule::ExactMultiple: return "exact-multiple";
        case Rule::WithRemainder: return "with-remainder";
        case Rule::Undecided: return "undecided";
        case Rule::ZeroConstantTerm: return "zero-constant-term";
        case Rule::RightInvariant: return "right-invariant";
        case Rule::DegreeOne: return "degree-one";
        case Rule::BoundCertificate: return "bound-certificate";
    }
    return "?";
}

std::string_view to_string(SplitRoute r) {
    switch (r) {
        case SplitRoute::TStrip: return "t-strip";
        case SplitRoute::CentralFactor: return "central-factor";
        case SplitRoute::ZeroDivisor: return "zero-divisor";
        case SplitRoute::Exhaustive: return "exhaustive";
    }
    return "?";
}

namespace {

void require_monic(const SkewPoly& f, int min_degree) {
    if (f.degree() < min_degree)
        fail(ErrorCode::DegenerateInput, "need degree at least " + std::to_string(min_degree));
    if (!f.is_monic()) fail(ErrorCode::NotMonic, "f must be monic");
}

bool proper(const SkewPoly& d, const SkewPoly& f) { return d.degree() >= 1 && d.degree() < f.degree(); }

Split split_at(const SkewPoly& f, const SkewPoly& right, SplitRoute route) {
    auto [q, r] = right_divmod(f, right);
    if (!r.is_zero()) throw std::logic_error("split factor does not divide");
    return {q, right, route};
}

// p(x) in the eigenring, by Horner
FVector eigen_eval(const EigenringReport& E, const CenterPoly& p, const FVector& x) {
    const auto& F = E.f.tower().base();
    const FVector one = eigen_one(E);
    FVector r(E.dim_over_F);
    for (int i = p.degree(); i >= 0; --i) {
        r = eigen_mul(E, r, x);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = F.add(r[k], F.mul(p.coeff(i), one[k]));
    }
    return r;
}

bool all_coefficients_fixed(const SkewPoly& f, long c) {
    for (std::size_t i = 0; i + 1 < f.coeffs().size(); ++i)
        if (!f.tower().in_fixed_field(f.coeff(i), c)) return false;
    return true;
}

// order^k, saturating at 2^63
std::uint64_t capped_power(std::uint64_t base, std::size_t k) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (r > (std::uint64_t{1} << 62) / base) return std::uint64_t{1} << 63;
        r *= base;
    }
    return r;
}

}  // namespace

std::optional<Verdict> certify_irreducible(const SkewPoly& f) {
    require_monic(f, 1);
    if (f.degree() == 1) return Verdict{VerdictKind::IrreducibleCertified, Rule::DegreeOne, 0, std::nullopt};
    if (f.coeff(0).v == 0) fail(ErrorCode::TValuationNonzero, "f has t as a right factor");
    const MclmResult h = mclm(f);
    const int mn = f.degree() * static_cast<int>(f.tower().n());
    if (h.h.degree() == mn && cp_is_irreducible(h.hhat))
        return Verdict{VerdictKind::IrreducibleCertified, Rule::BoundCertificate, 0, std::nullopt};
    return std::nullopt;
}

std::optional<std::pair<SkewPoly, SkewPoly>> find_zero_divisor(const EigenringReport& E, std::uint64_t seed) {
    if (E.is_division) return std::nullopt;
    const auto& T = E.f.tower();
    const auto& F = T.base_ptr();
    const std::size_t dim = E.dim_over_F;

    auto attempt = [&](const FVector& x) -> std::optional<std::pair<SkewPoly, SkewPoly>> {
        bool zero = true;
        for (auto c : x) zero = zero && c.v == 0;
        if (zero) return std::nullopt;
        const CenterPoly mu = min_poly_of_matrix(left_multiplication(E, x));
        if (mu.degree() < 2 || cp_is_irreducible(mu)) return std::nullopt;
        const CenterPoly p = cp_factor(mu, seed).front().factor;
        const CenterPoly rest = cp_divmod(mu, p).first;
        return std::pair{eigen_element(E, eigen_eval(E, p, x)), eigen_element(E, eigen_eval(E, rest, x))};
    };

    std::vector<FVector> candidates;
    for (std::size_t i = 0; i < dim; ++i) {
        FVector e(dim);
        e[i] = FElem{1};
        candidates.push_back(e);
    }
    if (E.commutative) {
        // nilpotents and idempotent-generating elements, as in Berlekamp's algorithm
        std::vector<FVector> images;
        for (const auto& e : candidates) images.push_back(eigen_pow(E, e, T.q()));
        const FMatrix phi = FMatrix::from_columns(F, dim, images);
        for (const auto& v : kernel(phi)) candidates.push_back(v);
        for (const auto& v : kernel(phi + FMatrix::identity(F, dim).scaled(F->neg(FElem{1})))) candidates.push_back(v);
    }
    for (const auto& x : candidates)
        if (auto z = attempt(x)) return z;

    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 512; ++trial) {
        FVector x(dim);
        for (auto& c : x) c = FElem{static_cast<std::uint32_t>(rng() % T.q())};
        if (auto z = attempt(x)) return z;
    }

    if (capped_power(T.q(), dim) > (std::uint64_t{1} << 20))
        fail(ErrorCode::TooLarge, "eigenring too large for an exhaustive zero-divisor scan");
    FVector x(dim);
    while (true) {
        if (auto z = attempt(x)) return z;
        std::size_t i = 0;
        while (i < dim && ++x[i].v == T.q()) x[i++].v = 0;
        if (i == dim) break;
    }
    throw std::logic_error("eigenring is not a division algebra but no zero divisor was found");
}

std::optional<Split> exhaustive_split(const SkewPoly& f) {
    require_monic(f, 1);
    const std::size_t m = static_cast<std::size_t>(f.degree());
    const auto& T = f.tower();
    if (capped_power(T.order(), (m + 1) / 2) > (std::uint64_t{1} << 24))
        fail(ErrorCode::TooLarge, "exhaustive factor scan exceeds 2^24 candidates");
    for (int side = 0; side < 2; ++side)
        for (std::size_t d = 1; d <= m / 2; ++d) {
            std::vector<KElem> c(d + 1);
            c[d] = KElem{1};
            while (true) {
                const SkewPoly g(f.tower_ptr(), c);
                if (side == 0) {
                    if (right_divides(g, f)) return split_at(f, g, SplitRoute::Exhaustive);
                } else {
                    auto [q, r] = left_divmod(f, g);
                    if (r.is_zero()) return Split{g, q.monic(), SplitRoute::Exhaustive};
                }
                std::size_t i = 0;
                while (i < d && ++c[i].v == T.order()) c[i++].v = 0;
                if (i == d) break;
            }
        }
    return std::nullopt;
}

std::optional<Split> proper_factor(const SkewPoly& f, std::uint64_t seed) {
    require_monic(f, 1);
    if (f.degree() == 1) return std::nullopt;
    if (f.coeff(0).v == 0) return split_at(f, SkewPoly::monomial(f.tower_ptr(), 1), SplitRoute::TStrip);

    const MclmResult h = mclm(f);
    const auto parts = cp_factor(h.hhat, seed);
    if (parts.size() > 1 || parts.front().multiplicity > 1) {
        const SkewPoly d = gcrd(SkewPoly::from_center(f.tower_ptr(), parts.front().factor), f);
        if (proper(d, f)) return split_at(f, d, SplitRoute::CentralFactor);
        throw std::logic_error("central factor gave no proper divisor");
    }
    if (certify_irreducible(f)) return std::nullopt;

    const EigenringReport E = eigenring(PetitAlgebra(f));
    try {
        if (auto z = find_zero_divisor(E, seed)) {
            for (const SkewPoly& q : {z->first, z->second}) {
                const SkewPoly d = gcrd(q, f);
                if (proper(d, f)) return split_at(f, d, SplitRoute::ZeroDivisor);
            }
        } else {
            return std::nullopt;
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::TooLarge) throw;
    }
    try {
        return exhaustive_split(f);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::TooLarge) throw;
        fail(ErrorCode::Inconclusive, "no factor found within the scan bounds");
    }
}

Verdict decide(const SkewPoly& f, std::uint64_t seed) {
    require_monic(f, 2);
    if (f.coeff(0).v == 0)
        return {VerdictKind::TrivialTFactor, Rule::ZeroConstantTerm, 0, SkewPoly::monomial(f.tower_ptr(), 1)};
    if (is_right_invariant(f)) return {VerdictKind::RightInvariant, Rule::RightInvariant, 0, std::nullopt};
    const auto& T = f.tower();
    const std::size_t m = static_cast<std::size_t>(f.degree()), n = T.n();
    if (!is_prime(static_cast<std::uint32_t>(n)) && std::gcd(m, n) != 1)
        fail(ErrorCode::HypothesisViolated, "need n prime or gcd(m, n) = 1");

    auto reducible = [&](Rule rule, int step) {
        Verdict v{VerdictKind::ReducibleTrue, rule, step, std::nullopt};
        try {
            if (auto s = proper_factor(f, seed)) v.witness = s->right;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Inconclusive) throw;
        }
        return v;
    };

    // step 1
    if (f.in_base_ring()) {
        std::vector<FElem> c;
        for (auto a : f.coeffs()) c.push_back(T.to_base(a));
        const auto parts = cp_factor(CenterPoly(T.base_ptr(), c), seed);
        if (parts.size() == 1 && parts.front().multiplicity == 1)
            return {VerdictKind::StopUndecided, Rule::CommutativeIrreducible, 1, std::nullopt};
        std::vector<KElem> w;
        for (auto a : parts.front().factor.coeffs()) w.push_back(T.embed(a));
        return {VerdictKind::ReducibleTrue, Rule::CommutativeFactor, 1, SkewPoly(f.tower_ptr(), w)};
    }
    // step 2
    const PetitAlgebra A(f);
    const NucleusReport L = nucleus(A);
    if (L.degree_over_F > m) return reducible(Rule::NucleusTooLarge, 2);
    // step 3
    for (std::size_t c = 1; c < n; ++c) {
        if (!all_coefficients_fixed(f, static_cast<long>(c))) continue;
        if (std::gcd(c, n) == std::gcd(static_cast<std::size_t>(L.d), n)) return reducible(Rule::FixedFieldIsNucleus, 3);
        if (m % c == 0 && L.degree_over_F > c) return reducible(Rule::ExactMultiple, 3);
        if (m % c != 0 && L.degree_over_F >= c) return reducible(Rule::WithRemainder, 3);
        break;
    }
    return {VerdictKind::StopUndecided, Rule::Undecided, 4, std::nullopt};
}

Factorization factorize(const SkewPoly& f, std::uint64_t seed) {
    if (f.degree() < 1) fail(ErrorCode::DegenerateInput, "need degree at least 1");
    Factorization out;
    out.unit = f.lead();
    out.t_valuation = f.t_valuation();
    const SkewPoly core = f.monic().strip_t();
    if (core.degree() == 0) return out;
    // depth-first, left factor before right factor
    std::function<void(const SkewPoly&)> run = [&](const SkewPoly& p) {
        auto s = proper_factor(p, seed);
        if (!s) {
            out.factors.push_back(p);
            return;
        }
        run(s->left);
        run(s->right);
    };
    run(core);
    return out;
}

SkewPoly recombine(const Factorization& fac, const TowerPtr& tower) {
    SkewPoly prod = SkewPoly::constant(tower, fac.unit);
    for (const auto& p : fac.factors) prod = prod * p;
    return prod * SkewPoly::monomial(tower, fac.t_valuation);
}

EigenringReport diagnostics_with_factors(const PetitAlgebra& A, std::uint64_t seed) {
    return diagnostics(A, static_cast<unsigned>(factorize(A.f(), seed).length()));
}

std::optional<Recompressed> recompress(const SkewPoly& f, std::size_t c) {
    if (c == 0 || f.is_zero()) return std::nullopt;
    const std::size_t m = static_cast<std::size_t>(f.degree()), r = m % c;
    std::vector<KElem> g(m / c + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        if (f.coeff(i).v == 0) continue;
        if (i < r || (i - r) % c != 0) return std::nullopt;
        g[(i - r) / c] = f.coeff(i);
    }
    return Recompressed{SkewPoly(f.tower_ptr(), g), r};
}

}  // namespace skewlab
