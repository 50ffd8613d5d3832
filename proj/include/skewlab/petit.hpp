#ifndef SKEWLAB_PETIT_HPP
#define SKEWLAB_PETIT_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "skewlab/center_poly.hpp"
#include "skewlab/field_tower.hpp"
#include "skewlab/skew_poly.hpp"

namespace skewlab {

/// S_f: polynomials of degree < m with g o h = g*h mod_r f.
class PetitAlgebra {
   public:
    /// Throws NotMonic, DegenerateInput (m < 2).
    explicit PetitAlgebra(SkewPoly f);

    const SkewPoly& f() const noexcept { return f_; }
    std::size_t m() const noexcept { return static_cast<std::size_t>(f_.degree()); }
    const FieldTower& tower() const noexcept { return f_.tower(); }
    const TowerPtr& tower_ptr() const noexcept { return f_.tower_ptr(); }
    /// Indices i < m with a_i != 0.
    const std::vector<std::size_t>& lambda_set() const noexcept { return lambda_; }

   private:
    SkewPoly f_;
    std::vector<std::size_t> lambda_;
};

/// Throws DegreeTooHigh if an operand has degree >= m.
SkewPoly petit_mul(const PetitAlgebra& A, const SkewPoly& g, const SkewPoly& h);
/// (x o y) o z - x o (y o z)
SkewPoly associator(const PetitAlgebra& A, const SkewPoly& x, const SkewPoly& y, const SkewPoly& z);

struct NucleusReport {
    long d = 0;  // gcd of the m - lambda_j and n
    Subfield subfield;
    unsigned degree_over_F = 0;
};

/// Closed form Fix(sigma^d). Throws RightInvariantInput.
NucleusReport nucleus(const PetitAlgebra& A);
/// {c in K : f*c in R f}, by solving the linear conditions directly. Throws TooLarge.
Subfield nucleus_bruteforce(const PetitAlgebra& A);

struct EigenringReport {
    SkewPoly f;
    std::vector<SkewPoly> basis;  // F-basis of the right nucleus
    std::size_t dim_over_F = 0;
    CenterPoly hhat;
    bool hhat_irreducible = false;
    int deg_h = 0;
    std::size_t t_valuation = 0;
    std::optional<unsigned> s;  // m / deg hhat when integral
    std::optional<unsigned> k;  // n / s' once l is known
    std::optional<unsigned> l;  // number of irreducible factors, set by the factorizer
    /// structure_constants[i][j] = coordinates of basis[i] o basis[j].
    std::vector<std::vector<FVector>> structure_constants;
    bool commutative = false;
    bool is_division = false;
};

/// Kernel of g -> f*g mod_r f, with mclm data attached.
EigenringReport eigenring(const PetitAlgebra& A);

/// Coordinates of an eigenring element in report.basis (nullopt if outside the span).
std::optional<FVector> eigen_coords(const EigenringReport& E, const SkewPoly& g);
SkewPoly eigen_element(const EigenringReport& E, const FVector& x);
FVector eigen_mul(const EigenringReport& E, const FVector& x, const FVector& y);
/// Matrix of y -> x*y on the eigenring.
FMatrix left_multiplication(const EigenringReport& E, const FVector& x);
FVector eigen_one(const EigenringReport& E);
FVector eigen_pow(const EigenringReport& E, FVector x, std::uint64_t e);

struct TPowerReport {
    bool member = false;                 // t^k in the eigenring
    bool coefficients_fixed = false;     // every a_i in Fix(sigma^k)
};

/// Requires 1 <= k < m (DegreeTooHigh otherwise).
TPowerReport t_power_in_nucr(const PetitAlgebra& A, std::size_t k);

struct SubalgebraBound {
    std::optional<std::size_t> c;  // least c in 1..m-1 with all a_i in Fix(sigma^c), c < n
    unsigned nucleus_degree = 0;   // [L:F]
    std::size_t bound = 0;
    std::size_t eigenring_dim = 0;
};

/// Lower bound on the right nucleus dimension from t-powers over the nucleus.
/// Throws RightInvariantInput.
SubalgebraBound subalgebra_lower_bound(const PetitAlgebra& A);

/// eigenring() plus the dimension checks available when hhat is irreducible. Requires
/// a_0 != 0 (TValuationNonzero). Pass l to also fill k.
EigenringReport diagnostics(const PetitAlgebra& A, std::optional<unsigned> l = std::nullopt);

}  // namespace skewlab

#endif
