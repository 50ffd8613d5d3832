#ifndef SKEWLAB_CENTER_POLY_HPP
#define SKEWLAB_CENTER_POLY_HPP

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "skewlab/galois_field.hpp"
#include "skewlab/linalg.hpp"

namespace skewlab {

/// Commutative polynomial over F, lowest degree first, no trailing zeros.
/// Doubles as F[x] = C(K[t;sigma]) with x = t^n.
class CenterPoly {
   public:
    explicit CenterPoly(std::shared_ptr<const GaloisField> field, std::vector<FElem> coeffs = {});
    static CenterPoly constant(std::shared_ptr<const GaloisField> field, FElem c);
    static CenterPoly monomial(std::shared_ptr<const GaloisField> field, std::size_t degree, FElem c = FElem{1});

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().v == 1; }
    FElem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : FElem{}; }
    FElem lead() const noexcept { return coeffs_.empty() ? FElem{} : coeffs_.back(); }
    const std::vector<FElem>& coeffs() const noexcept { return coeffs_; }
    const GaloisField& field() const noexcept { return *field_; }
    const std::shared_ptr<const GaloisField>& field_ptr() const noexcept { return field_; }

    CenterPoly monic() const;
    CenterPoly derivative() const;
    FElem operator()(FElem x) const;

    friend CenterPoly operator+(const CenterPoly& a, const CenterPoly& b);
    friend CenterPoly operator-(const CenterPoly& a, const CenterPoly& b);
    friend CenterPoly operator*(const CenterPoly& a, const CenterPoly& b);
    friend bool operator==(const CenterPoly& a, const CenterPoly& b) noexcept { return a.coeffs_ == b.coeffs_; }

   private:
    void trim();
    std::shared_ptr<const GaloisField> field_;
    std::vector<FElem> coeffs_;
};

/// a = q*b + r with deg r < deg b. Throws DivisionByZero.
std::pair<CenterPoly, CenterPoly> cp_divmod(const CenterPoly& a, const CenterPoly& b);
CenterPoly cp_mod(const CenterPoly& a, const CenterPoly& b);
/// Monic gcd. Throws BothZero.
CenterPoly cp_gcd(const CenterPoly& a, const CenterPoly& b);
CenterPoly cp_powmod(const CenterPoly& base, std::uint64_t e, const CenterPoly& modulus);

/// Rabin's test. Throws ConstantInput for degree < 1.
bool cp_is_irreducible(const CenterPoly& a);

struct FactorPower {
    CenterPoly factor;
    unsigned multiplicity;
};

/// Complete factorization of a monic polynomial: squarefree decomposition, distinct-degree
/// splitting, then Cantor-Zassenhaus equal-degree splitting seeded by `seed`.
/// Factors are sorted by degree, then coefficients compared lowest first.
std::vector<FactorPower> cp_factor(const CenterPoly& a, std::uint64_t seed = 0);

/// Canonical ordering used for factor lists and default moduli.
bool cp_less(const CenterPoly& a, const CenterPoly& b) noexcept;

/// Monic generator of {p : p(M) = 0}, via Krylov sequences of the standard basis vectors.
CenterPoly min_poly_of_matrix(const FMatrix& m);
/// p(M) by Horner.
FMatrix evaluate(const CenterPoly& p, const FMatrix& m);

}  // namespace skewlab

#endif
