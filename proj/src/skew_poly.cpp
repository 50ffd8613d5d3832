#include "skewlab/skew_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "skewlab/error.hpp"

namespace skewlab {

SkewPoly::SkewPoly(TowerPtr tower, std::vector<KElem> coeffs) : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_)
        if (!tower_->contains(c)) fail(ErrorCode::TowerMismatch, "coefficient outside K");
    trim();
}

SkewPoly SkewPoly::constant(TowerPtr tower, KElem c) { return SkewPoly(std::move(tower), {c}); }

SkewPoly SkewPoly::monomial(TowerPtr tower, std::size_t k, KElem c) {
    std::vector<KElem> v(k + 1);
    v[k] = c;
    return SkewPoly(std::move(tower), std::move(v));
}

SkewPoly SkewPoly::from_center(TowerPtr tower, const CenterPoly& hhat) {
    const std::size_t n = tower->n();
    std::vector<KElem> v(hhat.is_zero() ? 0 : static_cast<std::size_t>(hhat.degree()) * n + 1);
    for (std::size_t i = 0; i < hhat.coeffs().size(); ++i) v[i * n] = tower->embed(hhat.coeffs()[i]);
    return SkewPoly(std::move(tower), std::move(v));
}

void SkewPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().v == 0) coeffs_.pop_back();
}

std::size_t SkewPoly::t_valuation() const noexcept {
    std::size_t v = 0;
    while (v < coeffs_.size() && coeffs_[v].v == 0) ++v;
    return coeffs_.empty() ? 0 : v;
}

SkewPoly SkewPoly::strip_t() const {
    const auto v = t_valuation();
    return SkewPoly(tower_, std::vector<KElem>(coeffs_.begin() + static_cast<long>(v), coeffs_.end()));
}

SkewPoly SkewPoly::left_scaled(KElem c) const {
    std::vector<KElem> v(coeffs_);
    for (auto& x : v) x = tower_->mul(c, x);
    return SkewPoly(tower_, std::move(v));
}

SkewPoly SkewPoly::monic() const {
    if (is_zero()) return *this;
    return left_scaled(tower_->inv(lead()));
}

bool SkewPoly::in_base_ring() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [this](KElem c) { return tower_->in_base(c); });
}

void require_same_tower(const SkewPoly& a, const SkewPoly& b) {
    if (a.tower_ptr() != b.tower_ptr() && !(a.tower() == b.tower()))
        fail(ErrorCode::TowerMismatch, "operands live over different towers");
}

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
    require_same_tower(a, b);
    std::vector<KElem> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.tower_->add(a.coeff(i), b.coeff(i));
    return SkewPoly(a.tower_, std::move(v));
}

SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) {
    require_same_tower(a, b);
    std::vector<KElem> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.tower_->sub(a.coeff(i), b.coeff(i));
    return SkewPoly(a.tower_, std::move(v));
}

SkewPoly operator-(const SkewPoly& a) {
    std::vector<KElem> v(a.coeffs_);
    for (auto& x : v) x = a.tower_->neg(x);
    return SkewPoly(a.tower_, std::move(v));
}

SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
    require_same_tower(a, b);
    if (a.is_zero() || b.is_zero()) return SkewPoly(a.tower_);
    const auto& T = *a.tower_;
    std::vector<KElem> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    std::vector<KElem> twisted(b.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].v == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) twisted[j] = T.frobenius(b.coeffs_[j], static_cast<long>(i));
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] = T.add(v[i + j], T.mul(a.coeffs_[i], twisted[j]));
    }
    return SkewPoly(a.tower_, std::move(v));
}

DivMod right_divmod(const SkewPoly& a, const SkewPoly& b) {
    require_same_tower(a, b);
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "right division by zero");
    const auto& T = a.tower();
    const int db = b.degree();
    if (a.degree() < db) return {SkewPoly(a.tower_ptr()), a};
    std::vector<KElem> r = a.coeffs();
    std::vector<KElem> q(static_cast<std::size_t>(a.degree() - db + 1));
    for (int d = a.degree(); d >= db; --d) {
        if (r[d].v == 0) continue;
        const int k = d - db;
        // (c t^k) * b has leading coefficient c * sigma^k(lead b)
        const KElem c = T.div(r[d], T.frobenius(b.lead(), k));
        q[k] = c;
        for (int j = 0; j <= db; ++j)
            r[k + j] = T.sub(r[k + j], T.mul(c, T.frobenius(b.coeff(j), k)));
    }
    r.resize(static_cast<std::size_t>(db));
    return {SkewPoly(a.tower_ptr(), std::move(q)), SkewPoly(a.tower_ptr(), std::move(r))};
}

DivMod left_divmod(const SkewPoly& a, const SkewPoly& b) {
    require_same_tower(a, b);
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "left division by zero");
    const auto& T = a.tower();
    const int db = b.degree();
    if (a.degree() < db) return {SkewPoly(a.tower_ptr()), a};
    std::vector<KElem> r = a.coeffs();
    std::vector<KElem> q(static_cast<std::size_t>(a.degree() - db + 1));
    const KElem inv_lead = T.inv(b.lead());
    for (int d = a.degree(); d >= db; --d) {
        if (r[d].v == 0) continue;
        const int k = d - db;
        // b * (c t^k) has leading coefficient lead(b) * sigma^db(c)
        const KElem c = T.frobenius(T.mul(inv_lead, r[d]), -db);
        q[k] = c;
        // b * c t^k = sum_j b_j sigma^j(c) t^(j+k)
        for (int j = 0; j <= db; ++j)
            r[k + j] = T.sub(r[k + j], T.mul(b.coeff(j), T.frobenius(c, j)));
    }
    r.resize(static_cast<std::size_t>(db));
    return {SkewPoly(a.tower_ptr(), std::move(q)), SkewPoly(a.tower_ptr(), std::move(r))};
}

SkewPoly mod_right(const SkewPoly& a, const SkewPoly& b) { return right_divmod(a, b).remainder; }

bool right_divides(const SkewPoly& d, const SkewPoly& a) { return mod_right(a, d).is_zero(); }

SkewPoly gcrd(const SkewPoly& a, const SkewPoly& b) {
    require_same_tower(a, b);
    if (a.is_zero() && b.is_zero()) fail(ErrorCode::BothZero, "gcrd of two zero polynomials");
    SkewPoly x = a, y = b;
    while (!y.is_zero()) {
        SkewPoly r = mod_right(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

SkewPoly lclm(const SkewPoly& a, const SkewPoly& b) {
    require_same_tower(a, b);
    if (a.is_zero() || b.is_zero()) fail(ErrorCode::ZeroInput, "lclm with a zero operand");
    // r_i = u_i * a + v_i * b
    SkewPoly r0 = a, r1 = b;
    SkewPoly u0 = SkewPoly::constant(a.tower_ptr(), KElem{1}), u1(a.tower_ptr());
    while (!r1.is_zero()) {
        auto [q, r] = right_divmod(r0, r1);
        SkewPoly u2 = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    return (u1 * a).monic();
}

bool is_right_invariant(const SkewPoly& f) {
    if (f.degree() < 1) return true;
    const auto& T = f.tower();
    const std::size_t m = static_cast<std::size_t>(f.degree());
    const KElem inv_lead = T.inv(f.lead());
    for (std::size_t i = 0; i < m; ++i) {
        const KElem c = T.mul(inv_lead, f.coeff(i));
        if (c.v == 0) continue;
        if (!T.in_base(c) || (m - i) % T.n() != 0) return false;
    }
    return true;
}

bool is_central(const SkewPoly& f) {
    const auto& T = f.tower();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const KElem c = f.coeff(i);
        if (c.v == 0) continue;
        if (!T.in_base(c) || i % T.n() != 0) return false;
    }
    return true;
}

std::vector<std::vector<KElem>> companion_product(const SkewPoly& f) {
    const auto& T = f.tower();
    const std::size_t m = static_cast<std::size_t>(f.degree());
    using KMatrix = std::vector<std::vector<KElem>>;
    // row i: coordinates of t * t^i mod_r f
    KMatrix c(m, std::vector<KElem>(m));
    for (std::size_t i = 0; i + 1 < m; ++i) c[i][i + 1] = KElem{1};
    for (std::size_t j = 0; j < m; ++j) c[m - 1][j] = T.neg(f.coeff(j));
    auto twist = [&](const KMatrix& x, long k) {
        KMatrix y = x;
        for (auto& row : y)
            for (auto& e : row) e = T.frobenius(e, k);
        return y;
    };
    auto product = [&](const KMatrix& x, const KMatrix& y) {
        KMatrix z(m, std::vector<KElem>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) {
                if (x[i][k].v == 0) continue;
                for (std::size_t j = 0; j < m; ++j) z[i][j] = T.add(z[i][j], T.mul(x[i][k], y[k][j]));
            }
        return z;
    };
    KMatrix a = c;
    for (long k = 1; k < static_cast<long>(T.n()); ++k) a = product(twist(c, k), a);
    return a;
}

FMatrix flatten(const FieldTower& tower, const std::vector<std::vector<KElem>>& a) {
    const std::size_t m = a.size(), n = tower.n();
    FMatrix out(tower.base_ptr(), m * n, m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const FMatrix block = tower.mult_matrix(a[i][j]);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s) out(i * n + r, j * n + s) = block(r, s);
        }
    return out;
}

namespace {

// Every monic divisor of a polynomial given by its factorization, excluding itself.
std::vector<CenterPoly> proper_monic_divisors(const CenterPoly& p) {
    const auto factors = cp_factor(p);
    std::vector<CenterPoly> divisors{CenterPoly::constant(p.field_ptr(), FElem{1})};
    for (const auto& [g, mult] : factors) {
        std::vector<CenterPoly> next;
        for (const auto& d : divisors) {
            CenterPoly power = d;
            for (unsigned k = 0; k <= mult; ++k) {
                next.push_back(power);
                power = power * g;
            }
        }
        divisors = std::move(next);
    }
    std::erase_if(divisors, [&](const CenterPoly& d) { return d.degree() == p.degree(); });
    return divisors;
}

}  // namespace

MclmResult mclm(const SkewPoly& f) {
    if (f.degree() < 1) fail(ErrorCode::DegenerateInput, "mclm of a constant");
    if (!f.is_monic()) fail(ErrorCode::NotMonic, "mclm expects a monic polynomial");
    const auto& tower = f.tower_ptr();
    const auto& F = tower->base_ptr();
    MclmResult out{SkewPoly(tower), CenterPoly(F), SkewPoly(tower), f.t_valuation()};
    const SkewPoly core = f.strip_t();
    if (core.degree() == 0) {
        out.hhat = CenterPoly::constant(F, FElem{1});
        out.h = SkewPoly::constant(tower, KElem{1});
        out.cofactor = out.h;
        return out;
    }
    out.hhat = min_poly_of_matrix(flatten(*tower, companion_product(core)));
    out.h = SkewPoly::from_center(tower, out.hhat);
    auto [cofactor, rem] = right_divmod(out.h, core);
    if (!rem.is_zero()) throw std::logic_error("minimal polynomial of A_f is not a left multiple of f");
    out.cofactor = std::move(cofactor);
    if (out.hhat.degree() <= 3)
        for (const auto& d : proper_monic_divisors(out.hhat))
            if (right_divides(core, SkewPoly::from_center(tower, d)))
                throw std::logic_error("central multiple is not minimal");
    return out;
}

FVector to_vector(const SkewPoly& g, std::size_t m) {
    const auto& T = g.tower();
    const std::size_t n = T.n();
    FVector v(m * n);
    for (std::size_t i = 0; i < m && i < g.coeffs().size(); ++i) {
        const auto c = T.coords(g.coeff(i));
        for (std::size_t k = 0; k < n; ++k) v[i * n + k] = c[k];
    }
    return v;
}

SkewPoly from_vector(const TowerPtr& tower, const FVector& v) {
    const std::size_t n = tower->n();
    std::vector<KElem> c(v.size() / n);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = tower->from_coords(std::span<const FElem>(v.data() + i * n, n));
    return SkewPoly(tower, std::move(c));
}

}  // namespace skewlab
