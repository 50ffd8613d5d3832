#ifndef SKEWLAB_REDUCIBILITY_HPP
#define SKEWLAB_REDUCIBILITY_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "skewlab/petit.hpp"
#include "skewlab/skew_poly.hpp"

namespace skewlab {

enum class VerdictKind { ReducibleTrue, StopUndecided, IrreducibleCertified, RightInvariant, TrivialTFactor };

enum class Rule {
    CommutativeFactor,     // f in F[t] and reducible there
    CommutativeIrreducible,  // f in F[t] but irreducible there: stop
    NucleusTooLarge,       // [L:F] > m
    FixedFieldIsNucleus,   // Fix(sigma^c) = L
    ExactMultiple,         // m = qc, [L:F] > c
    WithRemainder,         // m = qc + r, [L:F] >= c
    Undecided,             // no rule applies: stop
    ZeroConstantTerm,
    RightInvariant,
    DegreeOne,
    BoundCertificate,      // deg h = mn, hhat irreducible
};

std::string_view to_string(VerdictKind k);
std::string_view to_string(Rule r);

struct Verdict {
    VerdictKind kind;
    Rule rule;
    int step = 0;  // algorithm step that fired, 0 outside the four steps
    std::optional<SkewPoly> witness;  // proper monic right factor
};

/// The four-step reducibility test. Requires f monic of degree >= 2 and n prime or
/// gcd(m, n) = 1 (HypothesisViolated). A TRUE verdict carries a witness whenever one
/// can be produced.
Verdict decide(const SkewPoly& f, std::uint64_t seed = 0);

/// Irreducibility certificate: degree one, or deg h = mn with hhat irreducible.
/// Requires a_0 != 0 when deg f >= 2 (TValuationNonzero).
std::optional<Verdict> certify_irreducible(const SkewPoly& f);

/// Nonzero q1, q2 in the eigenring with q1 o q2 = 0, or nullopt when the eigenring is a
/// division algebra. Throws TooLarge if the search space is exceeded.
std::optional<std::pair<SkewPoly, SkewPoly>> find_zero_divisor(const EigenringReport& E, std::uint64_t seed = 0);

enum class SplitRoute { TStrip, CentralFactor, ZeroDivisor, Exhaustive };
std::string_view to_string(SplitRoute r);

struct Split {
    SkewPoly left;   // f = left * right
    SkewPoly right;
    SplitRoute route;
};

/// Some f = g*h with both factors of positive degree, or nullopt when f is irreducible.
/// Throws Inconclusive when no route succeeds within the scan bounds.
std::optional<Split> proper_factor(const SkewPoly& f, std::uint64_t seed = 0);

/// Least monic right factor of degree in [1, m-1] (then least left factor), by scan.
/// Throws TooLarge when order^ceil(m/2) exceeds 2^24.
std::optional<Split> exhaustive_split(const SkewPoly& f);

struct Factorization {
    std::vector<SkewPoly> factors;  // monic irreducible
    KElem unit{1};                  // f = unit * factors[0] * ... * factors[l-1] * t^v
    std::size_t t_valuation = 0;
    std::size_t length() const noexcept { return factors.size() + t_valuation; }
};

/// Any f of degree >= 1; the leading coefficient becomes the unit.
Factorization factorize(const SkewPoly& f, std::uint64_t seed = 0);
SkewPoly recombine(const Factorization& fac, const TowerPtr& tower);

/// diagnostics() with l taken from a factorization.
EigenringReport diagnostics_with_factors(const PetitAlgebra& A, std::uint64_t seed = 0);

struct Recompressed {
    SkewPoly g;  // f = g(t^c) * t^r, g written in the variable t^c
    std::size_t r = 0;
};

/// Rewrite f as g(t^c) t^r when its support allows it.
std::optional<Recompressed> recompress(const SkewPoly& f, std::size_t c);

}  // namespace skewlab

#endif
