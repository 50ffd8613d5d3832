#include "skewlab/center_poly.hpp"

#include <algorithm>
#include <random>

#include "skewlab/error.hpp"

namespace skewlab {

CenterPoly::CenterPoly(std::shared_ptr<const GaloisField> field, std::vector<FElem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    trim();
}

CenterPoly CenterPoly::constant(std::shared_ptr<const GaloisField> field, FElem c) {
    return CenterPoly(std::move(field), {c});
}

CenterPoly CenterPoly::monomial(std::shared_ptr<const GaloisField> field, std::size_t degree, FElem c) {
    std::vector<FElem> v(degree + 1);
    v[degree] = c;
    return CenterPoly(std::move(field), std::move(v));
}

void CenterPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().v == 0) coeffs_.pop_back();
}

CenterPoly CenterPoly::monic() const {
    if (is_zero()) return *this;
    const FElem inv = field_->inv(lead());
    std::vector<FElem> v(coeffs_);
    for (auto& c : v) c = field_->mul(c, inv);
    return CenterPoly(field_, std::move(v));
}

CenterPoly CenterPoly::derivative() const {
    if (coeffs_.size() <= 1) return CenterPoly(field_);
    std::vector<FElem> v(coeffs_.size() - 1);
    const auto p = field_->characteristic();
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        FElem k{};
        for (std::size_t j = 0; j < i % p; ++j) k = field_->add(k, FElem{1});
        v[i - 1] = field_->mul(k, coeffs_[i]);
    }
    return CenterPoly(field_, std::move(v));
}

FElem CenterPoly::operator()(FElem x) const {
    FElem acc{};
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), coeffs_[i]);
    return acc;
}

CenterPoly operator+(const CenterPoly& a, const CenterPoly& b) {
    std::vector<FElem> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_->add(a.coeff(i), b.coeff(i));
    return CenterPoly(a.field_, std::move(v));
}

CenterPoly operator-(const CenterPoly& a, const CenterPoly& b) {
    std::vector<FElem> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_->sub(a.coeff(i), b.coeff(i));
    return CenterPoly(a.field_, std::move(v));
}

CenterPoly operator*(const CenterPoly& a, const CenterPoly& b) {
    if (a.is_zero() || b.is_zero()) return CenterPoly(a.field_);
    const auto& F = *a.field_;
    std::vector<FElem> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].v == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] = F.add(v[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return CenterPoly(a.field_, std::move(v));
}

std::pair<CenterPoly, CenterPoly> cp_divmod(const CenterPoly& a, const CenterPoly& b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    const auto& F = a.field();
    std::vector<FElem> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {CenterPoly(a.field_ptr()), a};
    std::vector<FElem> q(static_cast<std::size_t>(a.degree() - db + 1));
    const FElem inv = F.inv(b.lead());
    for (int d = a.degree(); d >= db; --d) {
        const FElem c = F.mul(r[d], inv);
        q[d - db] = c;
        if (c.v == 0) continue;
        for (int j = 0; j <= db; ++j) r[d - db + j] = F.sub(r[d - db + j], F.mul(c, b.coeff(j)));
    }
    return {CenterPoly(a.field_ptr(), std::move(q)), CenterPoly(a.field_ptr(), std::move(r))};
}

CenterPoly cp_mod(const CenterPoly& a, const CenterPoly& b) { return cp_divmod(a, b).second; }

CenterPoly cp_gcd(const CenterPoly& a, const CenterPoly& b) {
    if (a.is_zero() && b.is_zero()) fail(ErrorCode::BothZero, "gcd of two zero polynomials");
    CenterPoly x = a, y = b;
    while (!y.is_zero()) {
        CenterPoly r = cp_mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

CenterPoly cp_powmod(const CenterPoly& base, std::uint64_t e, const CenterPoly& modulus) {
    CenterPoly result = cp_mod(CenterPoly::constant(base.field_ptr(), FElem{1}), modulus);
    CenterPoly b = cp_mod(base, modulus);
    while (e) {
        if (e & 1) result = cp_mod(result * b, modulus);
        e >>= 1;
        if (e) b = cp_mod(b * b, modulus);
    }
    return result;
}

bool cp_less(const CenterPoly& a, const CenterPoly& b) noexcept {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
    return false;
}

namespace {

CenterPoly x_poly(const std::shared_ptr<const GaloisField>& F) { return CenterPoly::monomial(F, 1); }
CenterPoly one_poly(const std::shared_ptr<const GaloisField>& F) { return CenterPoly::constant(F, FElem{1}); }

CenterPoly exact_div(const CenterPoly& a, const CenterPoly& b) { return cp_divmod(a, b).first; }

// p-th root of a polynomial whose exponents are all multiples of p.
CenterPoly pth_root(const CenterPoly& a) {
    const auto& F = a.field();
    const std::uint32_t p = F.characteristic();
    const std::uint64_t root_exp = F.order() / p;  // a^(q/p) is the inverse of Frobenius
    std::vector<FElem> v(static_cast<std::size_t>(a.degree()) / p + 1);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.pow(a.coeff(i * p), root_exp);
    return CenterPoly(a.field_ptr(), std::move(v));
}

void squarefree(const CenterPoly& f, unsigned mult, std::vector<FactorPower>& out) {
    const std::uint32_t p = f.field().characteristic();
    const CenterPoly df = f.derivative();
    if (df.is_zero()) {
        squarefree(pth_root(f), mult * p, out);
        return;
    }
    CenterPoly c = cp_gcd(f, df);
    CenterPoly w = exact_div(f, c);
    unsigned i = 1;
    while (w.degree() > 0) {
        CenterPoly y = cp_gcd(w, c);
        CenterPoly fac = exact_div(w, y);
        if (fac.degree() > 0) out.push_back({fac, i * mult});
        w = y;
        c = exact_div(c, y);
        ++i;
    }
    if (c.degree() > 0) squarefree(pth_root(c), mult * p, out);
}

std::vector<std::pair<CenterPoly, unsigned>> distinct_degree(const CenterPoly& f) {
    const auto& Fp = f.field_ptr();
    const std::uint64_t q = f.field().order();
    std::vector<std::pair<CenterPoly, unsigned>> out;
    CenterPoly rest = f;
    CenterPoly h = cp_mod(x_poly(Fp), rest);
    for (unsigned i = 1; rest.degree() >= 2 * static_cast<int>(i); ++i) {
        h = cp_powmod(h, q, rest);
        CenterPoly g = cp_gcd(h - x_poly(Fp), rest);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            rest = exact_div(rest, g);
            h = cp_mod(h, rest);
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
    return out;
}

void equal_degree(const CenterPoly& g, unsigned d, std::mt19937_64& rng, std::vector<CenterPoly>& out) {
    if (g.degree() == static_cast<int>(d)) {
        out.push_back(g);
        return;
    }
    const auto& Fp = g.field_ptr();
    const auto& F = g.field();
    const std::uint64_t q = F.order();
    std::uniform_int_distribution<std::uint32_t> coin(0, F.order() - 1);
    for (;;) {
        std::vector<FElem> v(static_cast<std::size_t>(g.degree()));
        for (auto& c : v) c = FElem{coin(rng)};
        CenterPoly a(Fp, std::move(v));
        if (a.degree() < 1) continue;
        CenterPoly b(Fp);
        if (q % 2 == 0) {
            // trace to F_2: sum_{i < k d} a^(2^i), q = 2^k
            const unsigned k = F.prime_degree();
            CenterPoly term = a;
            b = a;
            for (unsigned i = 1; i < k * d; ++i) {
                term = cp_mod(term * term, g);
                b = b + term;
            }
        } else {
            // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
            CenterPoly frob = a, norm = a;
            for (unsigned i = 1; i < d; ++i) {
                frob = cp_powmod(frob, q, g);
                norm = cp_mod(norm * frob, g);
            }
            b = cp_powmod(norm, (q - 1) / 2, g) - one_poly(Fp);
        }
        if (b.is_zero()) continue;
        CenterPoly u = cp_gcd(b, g);
        if (u.degree() > 0 && u.degree() < g.degree()) {
            equal_degree(u, d, rng, out);
            equal_degree(exact_div(g, u), d, rng, out);
            return;
        }
    }
}

}  // namespace

bool cp_is_irreducible(const CenterPoly& a) {
    if (a.degree() < 1) fail(ErrorCode::ConstantInput, "irreducibility of a constant");
    const auto& Fp = a.field_ptr();
    const CenterPoly f = a.monic();
    const auto d = static_cast<unsigned>(f.degree());
    if (d == 1) return true;
    const std::uint64_t q = f.field().order();
    // frob[i] = x^(q^i) mod f
    std::vector<CenterPoly> frob{cp_mod(x_poly(Fp), f)};
    for (unsigned i = 1; i <= d; ++i) frob.push_back(cp_powmod(frob.back(), q, f));
    if (!(frob[d] - frob[0]).is_zero()) return false;
    for (auto r : prime_divisors(d)) {
        const CenterPoly g = cp_gcd(frob[d / r] - frob[0], f);
        if (g.degree() != 0) return false;
    }
    return true;
}

std::vector<FactorPower> cp_factor(const CenterPoly& a, std::uint64_t seed) {
    if (a.degree() < 1) fail(ErrorCode::ConstantInput, "factorization of a constant");
    std::mt19937_64 rng(seed);
    std::vector<FactorPower> sqf;
    squarefree(a.monic(), 1, sqf);
    std::vector<FactorPower> out;
    for (const auto& [part, mult] : sqf)
        for (const auto& [block, d] : distinct_degree(part)) {
            std::vector<CenterPoly> irreducibles;
            equal_degree(block, d, rng, irreducibles);
            for (auto& g : irreducibles) out.push_back({std::move(g), mult});
        }
    std::sort(out.begin(), out.end(), [](const FactorPower& x, const FactorPower& y) {
        if (x.factor == y.factor) return x.multiplicity < y.multiplicity;
        return cp_less(x.factor, y.factor);
    });
    // the same irreducible can appear from different squarefree layers only in char p
    // when the layers are split by p-th roots; merge them
    std::vector<FactorPower> merged;
    for (auto& fp : out) {
        if (!merged.empty() && merged.back().factor == fp.factor)
            merged.back().multiplicity += fp.multiplicity;
        else
            merged.push_back(std::move(fp));
    }
    return merged;
}

FMatrix evaluate(const CenterPoly& p, const FMatrix& m) {
    FMatrix acc(m.field_ptr(), m.rows(), m.cols());
    const FMatrix id = FMatrix::identity(m.field_ptr(), m.rows());
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * m + id.scaled(p.coeffs()[i]);
    return acc;
}

CenterPoly min_poly_of_matrix(const FMatrix& m) {
    const auto& Fp = m.field_ptr();
    const auto& F = *Fp;
    const std::size_t D = m.rows();
    CenterPoly result = one_poly(Fp);
    SpanBuilder seen(Fp, D);
    for (std::size_t i = 0; i < D; ++i) {
        FVector e(D);
        e[i] = FElem{1};
        if (seen.contains(e)) continue;
        SpanBuilder local(Fp, D);
        FVector v = e;
        while (local.insert(v)) v = m * v;
        const auto c = *local.coordinates(v);
        std::vector<FElem> poly(c.size() + 1);
        for (std::size_t j = 0; j < c.size(); ++j) poly[j] = F.neg(c[j]);
        poly.back() = FElem{1};
        const CenterPoly local_min(Fp, std::move(poly));
        result = exact_div(result * local_min, cp_gcd(result, local_min));
        for (const auto& u : local.vectors()) seen.insert(u);
    }
    return result.monic();
}

}  // namespace skewlab
