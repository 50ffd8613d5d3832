#ifndef SKEWLAB_FIELD_TOWER_HPP
#define SKEWLAB_FIELD_TOWER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "skewlab/galois_field.hpp"
#include "skewlab/linalg.hpp"

namespace skewlab {

/// Fix(sigma^d) as an F-subspace of K.
struct Subfield {
    long d = 1;
    unsigned degree_over_F = 1;  // gcd(n, d)
    std::vector<KElem> basis;
};

/// F = F_q (q = p^e) inside K = F_{q^n}, with sigma the q-power Frobenius.
///
/// K is F_q[y]/(ext_modulus) and F_q is F_p[z]/(base_modulus); a K element's value
/// encodes its power-basis coordinates, so F is exactly the values below q.
/// Immutable once built.
class FieldTower {
   public:
    FieldTower(std::uint32_t p, unsigned e, unsigned n, std::vector<std::uint32_t> base_modulus,
               std::vector<FElem> ext_modulus);

    std::uint32_t p() const noexcept { return p_; }
    unsigned e() const noexcept { return e_; }
    unsigned n() const noexcept { return n_; }
    std::uint32_t q() const noexcept { return base_->order(); }
    std::uint32_t order() const noexcept { return ext_->order(); }
    const std::vector<std::uint32_t>& base_modulus() const noexcept { return base_modulus_; }
    const std::vector<FElem>& ext_modulus() const noexcept { return ext_modulus_; }
    const GaloisField& base() const noexcept { return *base_; }
    const GaloisField& ext() const noexcept { return *ext_; }
    const std::shared_ptr<const GaloisField>& base_ptr() const noexcept { return base_; }

    KElem add(KElem a, KElem b) const noexcept { return ext_->add(a, b); }
    KElem sub(KElem a, KElem b) const noexcept { return ext_->sub(a, b); }
    KElem neg(KElem a) const noexcept { return ext_->neg(a); }
    KElem mul(KElem a, KElem b) const noexcept { return ext_->mul(a, b); }
    KElem inv(KElem a) const { return ext_->inv(a); }
    KElem div(KElem a, KElem b) const { return ext_->div(a, b); }

    /// sigma^j(a) = a^(q^j); j is taken mod n and may be negative. Throws TowerMismatch
    /// for values outside K.
    KElem frobenius(KElem a, long j = 1) const;

    /// The class of y in K.
    KElem generator() const noexcept { return KElem{q()}; }
    std::vector<FElem> coords(KElem a) const;
    KElem from_coords(std::span<const FElem> c) const;
    KElem embed(FElem c) const noexcept { return KElem{c.v}; }
    bool in_base(KElem a) const noexcept { return a.v < q(); }
    FElem to_base(KElem a) const noexcept { return FElem{a.v}; }
    bool contains(KElem a) const noexcept { return a.v < order(); }

    /// Matrix of sigma^j on K in the power basis (columns are images of y^i).
    const FMatrix& sigma_matrix(long j) const;
    /// Regular representation: matrix of x -> a*x.
    FMatrix mult_matrix(KElem a) const;

    bool in_fixed_field(KElem a, long d) const { return frobenius(a, d) == a; }
    Subfield fixed_field(long d) const;
    /// Fix(sigma^u1) cap ... cap Fix(sigma^uk) = Fix(sigma^gcd(u1..uk, n)). Throws EmptyList.
    Subfield intersect_fixed_fields(std::span<const long> exponents) const;

    friend bool operator==(const FieldTower& a, const FieldTower& b) noexcept {
        return a.p_ == b.p_ && a.e_ == b.e_ && a.n_ == b.n_ && a.base_modulus_ == b.base_modulus_ &&
               a.ext_modulus_ == b.ext_modulus_;
    }

   private:
    long reduce_exponent(long j) const noexcept;

    std::uint32_t p_;
    unsigned e_, n_;
    std::vector<std::uint32_t> base_modulus_;
    std::vector<FElem> ext_modulus_;
    std::shared_ptr<const GaloisField> prime_;
    std::shared_ptr<const GaloisField> base_;
    std::shared_ptr<const GaloisField> ext_;
    std::vector<std::uint64_t> q_powers_;  // q^j, j < n
    std::vector<FMatrix> sigma_powers_;
};

using TowerPtr = std::shared_ptr<const FieldTower>;

/// Validated tower. Omitted moduli default to the least monic irreducible polynomial,
/// ordering coefficient vectors lexicographically starting from the constant term.
/// Throws NonPrimeP, ReducibleModulus, DegreeMismatch, FieldTooLarge.
TowerPtr build_tower(std::uint32_t p, unsigned e, unsigned n,
                     std::optional<std::vector<std::uint32_t>> base_modulus = std::nullopt,
                     std::optional<std::vector<FElem>> ext_modulus = std::nullopt);

/// Same subspace of F^k (as column spans)?
bool same_span(const std::shared_ptr<const GaloisField>& F, std::size_t dim, const std::vector<FVector>& a,
               const std::vector<FVector>& b);

}  // namespace skewlab

#endif
