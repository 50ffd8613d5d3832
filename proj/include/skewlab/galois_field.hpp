#ifndef SKEWLAB_GALOIS_FIELD_HPP
#define SKEWLAB_GALOIS_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace skewlab {

/// Strongly typed field element. The value is the integer whose base-p digits are
/// the F_p-coordinates of the element (lowest power first).
template <class Tag>
struct Elem {
    std::uint32_t v = 0;
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

struct BaseFieldTag;
struct ExtFieldTag;
using FElem = Elem<BaseFieldTag>;  // element of F = F_q
using KElem = Elem<ExtFieldTag>;   // element of K = F_{q^n}

/// Table-driven arithmetic for a finite field of order p^k <= 2^20.
///
/// Elements of an extension E = B[y]/(mod) are encoded as sum c_i * |B|^i where c_i
/// are encodings of B-elements, so addition is always digitwise mod p and the
/// subfield B sits inside E as the values below |B|.
class GaloisField {
   public:
    static constexpr std::uint64_t kMaxOrder = 1u << 20;

    /// Prime field F_p. Throws NonPrimeP.
    static std::shared_ptr<const GaloisField> prime(std::uint32_t p);

    /// base[y]/(modulus). `modulus` is monic, lowest coefficient first, coefficients
    /// are raw base-field values. Irreducibility is the caller's responsibility.
    static std::shared_ptr<const GaloisField> extension(const GaloisField& base,
                                                        std::span<const std::uint32_t> modulus);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t order() const noexcept { return order_; }
    /// Dimension over F_p.
    unsigned prime_degree() const noexcept { return digits_; }

    std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t sub_raw(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t neg_raw(std::uint32_t a) const noexcept;
    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    std::uint32_t inv_raw(std::uint32_t a) const;
    std::uint32_t pow_raw(std::uint32_t a, std::uint64_t e) const noexcept;
    /// Multiplicative generator.
    std::uint32_t primitive_raw() const noexcept { return exp_[order_ > 2 ? 1 : 0]; }

    template <class E> E add(E a, E b) const noexcept { return E{add_raw(a.v, b.v)}; }
    template <class E> E sub(E a, E b) const noexcept { return E{sub_raw(a.v, b.v)}; }
    template <class E> E neg(E a) const noexcept { return E{neg_raw(a.v)}; }
    template <class E> E mul(E a, E b) const noexcept { return E{mul_raw(a.v, b.v)}; }
    template <class E> E inv(E a) const { return E{inv_raw(a.v)}; }
    template <class E> E div(E a, E b) const { return E{mul_raw(a.v, inv_raw(b.v))}; }
    template <class E> E pow(E a, std::uint64_t e) const noexcept { return E{pow_raw(a.v, e)}; }

   private:
    GaloisField() = default;
    void build_tables(const std::vector<std::uint32_t>& mul_by_gen_columns);
    std::uint32_t digit_axpy(std::uint32_t acc, std::uint32_t s, std::uint32_t x) const noexcept;

    std::uint32_t p_ = 0;
    unsigned digits_ = 0;
    std::uint32_t order_ = 0;
    std::vector<std::uint32_t> pw_;    // p^i
    std::vector<std::uint32_t> exp_;   // length 2*(order-1)
    std::vector<std::uint32_t> log_;   // log_[0] unused
};

bool is_prime(std::uint64_t n) noexcept;
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace skewlab

#endif
