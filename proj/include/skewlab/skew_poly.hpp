#ifndef SKEWLAB_SKEW_POLY_HPP
#define SKEWLAB_SKEW_POLY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "skewlab/center_poly.hpp"
#include "skewlab/field_tower.hpp"

namespace skewlab {

/// Element of R = K[t; sigma] with t*a = sigma(a)*t. Coefficients are stored lowest
/// degree first and written to the left of the powers of t.
class SkewPoly {
   public:
    explicit SkewPoly(TowerPtr tower, std::vector<KElem> coeffs = {});
    static SkewPoly constant(TowerPtr tower, KElem c);
    /// c * t^k
    static SkewPoly monomial(TowerPtr tower, std::size_t k, KElem c = KElem{1});
    /// hhat(t^n), an element of the center F[t^n].
    static SkewPoly from_center(TowerPtr tower, const CenterPoly& hhat);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == KElem{1}; }
    KElem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : KElem{}; }
    KElem lead() const noexcept { return coeffs_.empty() ? KElem{} : coeffs_.back(); }
    const std::vector<KElem>& coeffs() const noexcept { return coeffs_; }
    const FieldTower& tower() const noexcept { return *tower_; }
    const TowerPtr& tower_ptr() const noexcept { return tower_; }

    /// Largest v with t^v a right factor (0 for the zero polynomial).
    std::size_t t_valuation() const noexcept;
    /// f = f~ * t^v; returns f~.
    SkewPoly strip_t() const;
    /// lead^-1 * f, same left ideal.
    SkewPoly monic() const;
    /// c * f
    SkewPoly left_scaled(KElem c) const;
    /// All coefficients in F?
    bool in_base_ring() const noexcept;

    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b);
    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b);
    friend SkewPoly operator-(const SkewPoly& a);
    /// Twisted convolution: (a*b)_k = sum_{i+j=k} a_i sigma^i(b_j).
    friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b);
    friend bool operator==(const SkewPoly& a, const SkewPoly& b) noexcept {
        return a.coeffs_ == b.coeffs_ && (a.tower_ == b.tower_ || *a.tower_ == *b.tower_);
    }

   private:
    void trim();
    TowerPtr tower_;
    std::vector<KElem> coeffs_;
};

void require_same_tower(const SkewPoly& a, const SkewPoly& b);

struct DivMod {
    SkewPoly quotient;
    SkewPoly remainder;
};

/// a = q*b + r, deg r < deg b. Throws DivisionByZero, TowerMismatch.
DivMod right_divmod(const SkewPoly& a, const SkewPoly& b);
/// a = b*q + r, deg r < deg b.
DivMod left_divmod(const SkewPoly& a, const SkewPoly& b);
SkewPoly mod_right(const SkewPoly& a, const SkewPoly& b);
/// d is a right divisor of a (a in R*d)?
bool right_divides(const SkewPoly& d, const SkewPoly& a);

/// Monic greatest common right divisor. Throws BothZero.
SkewPoly gcrd(const SkewPoly& a, const SkewPoly& b);
/// Monic least common left multiple. Throws ZeroInput.
SkewPoly lclm(const SkewPoly& a, const SkewPoly& b);

/// R*f two-sided, i.e. f = a * g(t) * t^v with g central.
bool is_right_invariant(const SkewPoly& f);
/// Commutes with t and all of K.
bool is_central(const SkewPoly& f);

struct MclmResult {
    SkewPoly h;             // hhat(t^n)
    CenterPoly hhat;        // monic
    SkewPoly cofactor;      // h = cofactor * f~
    std::size_t t_valuation = 0;  // f = f~ * t^v
};

/// Minimal central left multiple of f~ (f with its t-power right factor removed), read off
/// as the minimal polynomial over F of A = C^{sigma^{n-1}} ... C^{sigma} C, where C is the
/// companion matrix whose row i holds the coordinates of t * t^i mod_r f~.
/// Throws DegenerateInput (constant f), NotMonic.
MclmResult mclm(const SkewPoly& f);

/// The product A above, as a matrix over K (row-major, m x m).
std::vector<std::vector<KElem>> companion_product(const SkewPoly& f);
/// A flattened to an (mn) x (mn) matrix over F through the regular representation of K.
FMatrix flatten(const FieldTower& tower, const std::vector<std::vector<KElem>>& a);

/// Coordinates over F of a polynomial of degree < m: index i*n + k is coordinate k of a_i.
FVector to_vector(const SkewPoly& g, std::size_t m);
SkewPoly from_vector(const TowerPtr& tower, const FVector& v);

}  // namespace skewlab

#endif
