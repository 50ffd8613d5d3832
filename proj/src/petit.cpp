#include "skewlab/petit.hpp"

#include <numeric>
#include <stdexcept>

#include "skewlab/error.hpp"

namespace skewlab {

PetitAlgebra::PetitAlgebra(SkewPoly f) : f_(std::move(f)) {
    if (!f_.is_monic()) fail(ErrorCode::NotMonic, "f must be monic");
    if (f_.degree() < 2) fail(ErrorCode::DegenerateInput, "S_f needs deg f >= 2");
    for (std::size_t i = 0; i < m(); ++i)
        if (f_.coeff(i).v != 0) lambda_.push_back(i);
}

namespace {

void check_degree(const PetitAlgebra& A, const SkewPoly& g) {
    require_same_tower(A.f(), g);
    if (g.degree() >= static_cast<int>(A.m())) fail(ErrorCode::DegreeTooHigh, "operand degree must be below deg f");
}

SpanBuilder basis_span(const EigenringReport& E) {
    const std::size_t m = static_cast<std::size_t>(E.f.degree());
    SpanBuilder span(E.f.tower().base_ptr(), m * E.f.tower().n());
    for (const auto& b : E.basis) span.insert(to_vector(b, m));
    return span;
}

// Fix(sigma^c) for every coefficient of f below the top.
bool coefficients_fixed(const SkewPoly& f, long c) {
    for (std::size_t i = 0; i + 1 < f.coeffs().size(); ++i)
        if (!f.tower().in_fixed_field(f.coeff(i), c)) return false;
    return true;
}

}  // namespace

SkewPoly petit_mul(const PetitAlgebra& A, const SkewPoly& g, const SkewPoly& h) {
    check_degree(A, g);
    check_degree(A, h);
    return mod_right(g * h, A.f());
}

SkewPoly associator(const PetitAlgebra& A, const SkewPoly& x, const SkewPoly& y, const SkewPoly& z) {
    return petit_mul(A, petit_mul(A, x, y), z) - petit_mul(A, x, petit_mul(A, y, z));
}

NucleusReport nucleus(const PetitAlgebra& A) {
    if (is_right_invariant(A.f())) fail(ErrorCode::RightInvariantInput, "f is right invariant");
    long d = static_cast<long>(A.tower().n());
    for (auto lam : A.lambda_set()) d = std::gcd(d, static_cast<long>(A.m() - lam));
    NucleusReport r;
    r.d = d;
    r.subfield = A.tower().fixed_field(d);
    r.degree_over_F = r.subfield.degree_over_F;
    return r;
}

Subfield nucleus_bruteforce(const PetitAlgebra& A) {
    const auto& T = A.tower();
    const std::size_t m = A.m(), n = T.n();
    if (m * n > 4096) fail(ErrorCode::TooLarge, "linear system too large");
    // column k: f * y^k mod_r f
    std::vector<FVector> cols;
    KElem yk{1};
    for (std::size_t k = 0; k < n; ++k) {
        cols.push_back(to_vector(mod_right(A.f() * SkewPoly::constant(A.tower_ptr(), yk), A.f()), m));
        yk = T.mul(yk, T.generator());
    }
    Subfield s;
    for (const auto& v : kernel(FMatrix::from_columns(T.base_ptr(), m * n, cols))) s.basis.push_back(T.from_coords(v));
    s.degree_over_F = static_cast<unsigned>(s.basis.size());
    // recover d from the dimension: Fix(sigma^d) has degree gcd(n, d)
    s.d = s.degree_over_F;
    return s;
}

EigenringReport eigenring(const PetitAlgebra& A) {
    const auto& T = A.tower();
    const std::size_t m = A.m(), n = T.n();
    std::vector<FVector> cols;
    for (std::size_t i = 0; i < m; ++i) {
        KElem yk{1};
        for (std::size_t k = 0; k < n; ++k) {
            const SkewPoly mono = SkewPoly::monomial(A.tower_ptr(), i, yk);
            cols.push_back(to_vector(mod_right(A.f() * mono, A.f()), m));
            yk = T.mul(yk, T.generator());
        }
    }
    EigenringReport E{A.f(), {}, 0, CenterPoly(T.base_ptr()), false, 0, 0, {}, {}, {}, {}, false, false};
    for (const auto& v : kernel(FMatrix::from_columns(T.base_ptr(), m * n, cols)))
        E.basis.push_back(from_vector(A.tower_ptr(), v));
    E.dim_over_F = E.basis.size();

    const MclmResult h = mclm(A.f());
    E.hhat = h.hhat;
    E.deg_h = h.h.degree();
    E.t_valuation = h.t_valuation;
    E.hhat_irreducible = E.hhat.degree() >= 1 && cp_is_irreducible(E.hhat);
    if (E.hhat.degree() >= 1 && m % static_cast<std::size_t>(E.hhat.degree()) == 0)
        E.s = static_cast<unsigned>(m / static_cast<std::size_t>(E.hhat.degree()));

    const SpanBuilder span = basis_span(E);
    E.structure_constants.assign(E.dim_over_F, std::vector<FVector>(E.dim_over_F));
    for (std::size_t i = 0; i < E.dim_over_F; ++i)
        for (std::size_t j = 0; j < E.dim_over_F; ++j) {
            auto c = span.coordinates(to_vector(petit_mul(A, E.basis[i], E.basis[j]), m));
            if (!c) throw std::logic_error("eigenring is not closed under multiplication");
            E.structure_constants[i][j] = std::move(*c);
        }
    E.commutative = true;
    for (std::size_t i = 0; i < E.dim_over_F && E.commutative; ++i)
        for (std::size_t j = 0; j < i && E.commutative; ++j)
            E.commutative = E.structure_constants[i][j] == E.structure_constants[j][i];

    // A finite division ring is a field. A commutative algebra over F_q is a field exactly
    // when x -> x^q is injective (no nilpotents) and fixes only F (a single component).
    if (E.commutative) {
        const auto& F = T.base_ptr();
        std::vector<FVector> images;
        for (std::size_t i = 0; i < E.dim_over_F; ++i) {
            FVector e(E.dim_over_F);
            e[i] = FElem{1};
            images.push_back(eigen_pow(E, e, T.q()));
        }
        const FMatrix phi = FMatrix::from_columns(F, E.dim_over_F, images);
        const FMatrix shifted = phi + FMatrix::identity(F, E.dim_over_F).scaled(F->neg(FElem{1}));
        E.is_division = rank(phi) == E.dim_over_F && kernel(shifted).size() == 1;
    }
    return E;
}

std::optional<FVector> eigen_coords(const EigenringReport& E, const SkewPoly& g) {
    if (g.degree() >= E.f.degree()) return std::nullopt;
    return basis_span(E).coordinates(to_vector(g, static_cast<std::size_t>(E.f.degree())));
}

SkewPoly eigen_element(const EigenringReport& E, const FVector& x) {
    SkewPoly out(E.f.tower_ptr());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].v != 0) out = out + E.basis[i].left_scaled(E.f.tower().embed(x[i]));
    return out;
}

FVector eigen_mul(const EigenringReport& E, const FVector& x, const FVector& y) {
    const auto& F = E.f.tower().base();
    FVector out(E.dim_over_F);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].v == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j].v == 0) continue;
            const FElem c = F.mul(x[i], y[j]);
            const auto& sc = E.structure_constants[i][j];
            for (std::size_t k = 0; k < out.size(); ++k) out[k] = F.add(out[k], F.mul(c, sc[k]));
        }
    }
    return out;
}

FMatrix left_multiplication(const EigenringReport& E, const FVector& x) {
    std::vector<FVector> cols;
    for (std::size_t j = 0; j < E.dim_over_F; ++j) {
        FVector e(E.dim_over_F);
        e[j] = FElem{1};
        cols.push_back(eigen_mul(E, x, e));
    }
    return FMatrix::from_columns(E.f.tower().base_ptr(), E.dim_over_F, cols);
}

FVector eigen_one(const EigenringReport& E) {
    auto c = eigen_coords(E, SkewPoly::constant(E.f.tower_ptr(), KElem{1}));
    if (!c) throw std::logic_error("1 is missing from the eigenring");
    return *c;
}

FVector eigen_pow(const EigenringReport& E, FVector x, std::uint64_t e) {
    FVector r = eigen_one(E);
    while (e) {
        if (e & 1) r = eigen_mul(E, r, x);
        x = eigen_mul(E, x, x);
        e >>= 1;
    }
    return r;
}

TPowerReport t_power_in_nucr(const PetitAlgebra& A, std::size_t k) {
    if (k < 1 || k >= A.m()) fail(ErrorCode::DegreeTooHigh, "need 1 <= k < m");
    const EigenringReport E = eigenring(A);
    TPowerReport r;
    r.member = eigen_coords(E, SkewPoly::monomial(A.tower_ptr(), k)).has_value();
    r.coefficients_fixed = coefficients_fixed(A.f(), static_cast<long>(k));
    if (r.coefficients_fixed && !r.member) throw std::logic_error("fixed coefficients but t^k outside the nucleus");
    if (k == 1 && A.f().coeff(0).v != 0 && r.member != r.coefficients_fixed)
        throw std::logic_error("t membership disagrees with the coefficient test");
    return r;
}

SubalgebraBound subalgebra_lower_bound(const PetitAlgebra& A) {
    const NucleusReport L = nucleus(A);
    const std::size_t m = A.m(), n = A.tower().n();
    SubalgebraBound b;
    b.nucleus_degree = L.degree_over_F;
    for (std::size_t c = 1; c < m && c < n && !b.c; ++c)
        if (coefficients_fixed(A.f(), static_cast<long>(c))) b.c = c;
    if (A.f().in_base_ring()) {
        b.bound = m * L.degree_over_F;
    } else if (!b.c) {
        b.bound = L.degree_over_F;
    } else {
        const std::size_t q = m / *b.c, r = m % *b.c;
        b.bound = (r == 0 ? q : q + 1) * L.degree_over_F;
    }
    b.eigenring_dim = eigenring(A).dim_over_F;
    if (b.bound > b.eigenring_dim) throw std::logic_error("subalgebra bound exceeds the eigenring dimension");
    return b;
}

EigenringReport diagnostics(const PetitAlgebra& A, std::optional<unsigned> l) {
    if (A.f().coeff(0).v == 0) fail(ErrorCode::TValuationNonzero, "f has t as a right factor");
    EigenringReport E = eigenring(A);
    const std::size_t m = A.m(), n = A.tower().n();
    if (E.hhat_irreducible) {
        if (!E.s) throw std::logic_error("deg hhat does not divide m although hhat is irreducible");
        const unsigned s = *E.s;
        if (E.dim_over_F != m * s) throw std::logic_error("eigenring dimension differs from m*s");
        if (E.is_division != (s == 1)) throw std::logic_error("division test disagrees with s");
    }
    if (l) {
        E.l = *l;
        if (E.hhat_irreducible) {
            if (*E.s % *l != 0) throw std::logic_error("l does not divide s");
            if (*E.s % *l == 0 && n % (*E.s / *l) == 0) E.k = static_cast<unsigned>(n / (*E.s / *l));
        }
    }
    return E;
}

}  // namespace skewlab
