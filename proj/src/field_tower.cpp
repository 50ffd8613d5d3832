#include "skewlab/field_tower.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "skewlab/center_poly.hpp"
#include "skewlab/error.hpp"

namespace skewlab {

namespace {

std::vector<std::uint32_t> to_raw(const std::vector<FElem>& v) {
    std::vector<std::uint32_t> out;
    for (auto x : v) out.push_back(x.v);
    return out;
}

// Least monic irreducible of the given degree; c_0 is the most significant position.
std::vector<FElem> least_irreducible(const std::shared_ptr<const GaloisField>& field, unsigned degree) {
    const std::uint64_t Q = field->order();
    std::uint64_t total = 1;
    for (unsigned i = 0; i < degree; ++i) total *= Q;
    for (std::uint64_t k = 0; k < total; ++k) {
        std::vector<FElem> c(degree + 1);
        std::uint64_t rest = k;
        for (unsigned j = 0; j < degree; ++j) {
            c[degree - 1 - j] = FElem{static_cast<std::uint32_t>(rest % Q)};
            rest /= Q;
        }
        c[degree] = FElem{1};
        if (cp_is_irreducible(CenterPoly(field, c))) return c;
    }
    throw std::logic_error("no irreducible polynomial found");
}

void check_modulus(const std::shared_ptr<const GaloisField>& field, const std::vector<FElem>& c,
                   unsigned degree, const char* what) {
    if (c.size() != degree + 1 || c.back().v != 1)
        fail(ErrorCode::DegreeMismatch,
             std::string(what) + " must be monic of degree " + std::to_string(degree));
    for (auto x : c)
        if (x.v >= field->order()) fail(ErrorCode::DegreeMismatch, std::string(what) + " has an out-of-range coefficient");
    if (!cp_is_irreducible(CenterPoly(field, c)))
        fail(ErrorCode::ReducibleModulus, std::string(what) + " is reducible");
}

}  // namespace

FieldTower::FieldTower(std::uint32_t p, unsigned e, unsigned n, std::vector<std::uint32_t> base_modulus,
                       std::vector<FElem> ext_modulus)
    : p_(p), e_(e), n_(n), base_modulus_(std::move(base_modulus)), ext_modulus_(std::move(ext_modulus)) {
    if (e < 1) fail(ErrorCode::DegreeMismatch, "e must be at least 1");
    if (n < 2) fail(ErrorCode::DegreeMismatch, "extension degree n must be at least 2");
    if (e == 1) base_modulus_ = {0, 1};  // F_p itself; any linear modulus gives the same field
    std::uint64_t size = 1;
    for (unsigned i = 0; i < e * n; ++i) {
        size *= p;
        if (size > GaloisField::kMaxOrder) fail(ErrorCode::FieldTooLarge, "q^n exceeds 2^20");
    }
    prime_ = GaloisField::prime(p);
    std::vector<FElem> bm;
    for (auto c : base_modulus_) bm.push_back(FElem{c});
    check_modulus(prime_, bm, e, "base modulus");
    base_ = e == 1 ? prime_ : GaloisField::extension(*prime_, base_modulus_);
    check_modulus(base_, ext_modulus_, n, "extension modulus");
    const auto raw = to_raw(ext_modulus_);
    ext_ = GaloisField::extension(*base_, raw);

    q_powers_.resize(n_);
    for (unsigned j = 0; j < n_; ++j) q_powers_[j] = j == 0 ? 1 : q_powers_[j - 1] * q();
    for (unsigned j = 0; j < n_; ++j) {
        std::vector<FVector> cols;
        KElem yi{1};
        for (unsigned i = 0; i < n_; ++i) {
            cols.push_back(coords(KElem{ext_->pow_raw(yi.v, q_powers_[j])}));
            yi = mul(yi, generator());
        }
        sigma_powers_.push_back(FMatrix::from_columns(base_, n_, cols));
    }
    // sigma has order exactly n and fixes F
    const KElem y = generator();
    if (frobenius(y, n_) != y) throw std::logic_error("sigma^n != id");
    for (unsigned d = 1; d < n_; ++d)
        if (n_ % d == 0 && frobenius(y, d) == y) throw std::logic_error("sigma has order < n");
    for (std::uint32_t c = 0; c < q(); ++c)
        if (frobenius(KElem{c}) != KElem{c}) throw std::logic_error("sigma does not fix F");
}

long FieldTower::reduce_exponent(long j) const noexcept {
    const long n = static_cast<long>(n_);
    return ((j % n) + n) % n;
}

KElem FieldTower::frobenius(KElem a, long j) const {
    if (!contains(a)) fail(ErrorCode::TowerMismatch, "element does not belong to this tower");
    return KElem{ext_->pow_raw(a.v, q_powers_[reduce_exponent(j)])};
}

std::vector<FElem> FieldTower::coords(KElem a) const {
    std::vector<FElem> c(n_);
    std::uint32_t rest = a.v;
    for (unsigned i = 0; i < n_; ++i) {
        c[i] = FElem{rest % q()};
        rest /= q();
    }
    return c;
}

KElem FieldTower::from_coords(std::span<const FElem> c) const {
    std::uint32_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * q() + c[i].v;
    return KElem{v};
}

const FMatrix& FieldTower::sigma_matrix(long j) const { return sigma_powers_[reduce_exponent(j)]; }

FMatrix FieldTower::mult_matrix(KElem a) const {
    std::vector<FVector> cols;
    KElem yi{1};
    for (unsigned i = 0; i < n_; ++i) {
        cols.push_back(coords(mul(a, yi)));
        yi = mul(yi, generator());
    }
    return FMatrix::from_columns(base_, n_, cols);
}

Subfield FieldTower::fixed_field(long d) const {
    FMatrix m = sigma_matrix(d) + FMatrix::identity(base_, n_).scaled(base_->neg(FElem{1}));
    Subfield s;
    s.d = d;
    s.degree_over_F = static_cast<unsigned>(std::gcd(static_cast<long>(n_), d));
    for (const auto& v : kernel(m)) s.basis.push_back(from_coords(v));
    if (s.basis.size() != s.degree_over_F) throw std::logic_error("fixed field has unexpected dimension");
    return s;
}

Subfield FieldTower::intersect_fixed_fields(std::span<const long> exponents) const {
    if (exponents.empty()) fail(ErrorCode::EmptyList, "no exponents given");
    long g = static_cast<long>(n_);
    for (long u : exponents) g = std::gcd(g, u);
    Subfield result = fixed_field(g);

    // literal intersection: stacked kernels
    FMatrix stacked(base_, n_ * exponents.size(), n_);
    const FMatrix id = FMatrix::identity(base_, n_);
    for (std::size_t k = 0; k < exponents.size(); ++k) {
        const FMatrix block = sigma_matrix(exponents[k]) + id.scaled(base_->neg(FElem{1}));
        for (unsigned r = 0; r < n_; ++r)
            for (unsigned c = 0; c < n_; ++c) stacked(k * n_ + r, c) = block(r, c);
    }
    std::vector<FVector> literal = kernel(stacked), closed;
    for (auto b : result.basis) closed.push_back(coords(b));
    if (!same_span(base_, n_, literal, closed))
        throw std::logic_error("fixed-field intersection disagrees with gcd rule");
    return result;
}

bool same_span(const std::shared_ptr<const GaloisField>& F, std::size_t dim, const std::vector<FVector>& a,
               const std::vector<FVector>& b) {
    SpanBuilder sa(F, dim), sb(F, dim);
    for (const auto& v : a) sa.insert(v);
    for (const auto& v : b) sb.insert(v);
    if (sa.size() != sb.size()) return false;
    for (const auto& v : b)
        if (!sa.contains(v)) return false;
    return true;
}

TowerPtr build_tower(std::uint32_t p, unsigned e, unsigned n, std::optional<std::vector<std::uint32_t>> base_modulus,
                     std::optional<std::vector<FElem>> ext_modulus) {
    if (!is_prime(p)) fail(ErrorCode::NonPrimeP, std::to_string(p) + " is not prime");
    if (e < 1 || n < 2) fail(ErrorCode::DegreeMismatch, "need e >= 1 and n >= 2");
    std::uint64_t size = 1;
    for (unsigned i = 0; i < e * n; ++i) {
        size *= p;
        if (size > GaloisField::kMaxOrder) fail(ErrorCode::FieldTooLarge, "q^n exceeds 2^20");
    }
    if (!base_modulus) base_modulus = to_raw(least_irreducible(GaloisField::prime(p), e));
    if (e == 1) base_modulus = std::vector<std::uint32_t>{0, 1};
    std::vector<FElem> bm;
    for (auto c : *base_modulus) bm.push_back(FElem{c});
    check_modulus(GaloisField::prime(p), bm, e, "base modulus");
    if (!ext_modulus) {
        auto prime = GaloisField::prime(p);
        auto base = e == 1 ? prime : GaloisField::extension(*prime, *base_modulus);
        ext_modulus = least_irreducible(base, n);
    }
    return std::make_shared<const FieldTower>(p, e, n, std::move(*base_modulus), std::move(*ext_modulus));
}

}  // namespace skewlab
