#include "skewlab/galois_field.hpp"

#include <string>

#include "skewlab/error.hpp"

namespace skewlab {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NonPrimeP: return "NonPrimeP";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::FieldTooLarge: return "FieldTooLarge";
        case ErrorCode::TowerMismatch: return "TowerMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::BothZero: return "BothZero";
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::ConstantInput: return "ConstantInput";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
        case ErrorCode::EmptyList: return "EmptyList";
        case ErrorCode::RightInvariantInput: return "RightInvariantInput";
        case ErrorCode::TValuationNonzero: return "TValuationNonzero";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::Inconclusive: return "Inconclusive";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

// Multiplication in base[y]/(modulus) by schoolbook product and reduction. Only used
// while building tables.
struct SlowExtension {
    const GaloisField& base;
    std::span<const std::uint32_t> modulus;  // monic, size n+1
    std::size_t n;

    std::vector<std::uint32_t> split(std::uint32_t a) const {
        std::vector<std::uint32_t> c(n);
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = a % base.order();
            a /= base.order();
        }
        return c;
    }
    std::uint32_t join(const std::vector<std::uint32_t>& c) const {
        std::uint32_t a = 0;
        for (std::size_t i = n; i-- > 0;) a = a * base.order() + c[i];
        return a;
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        auto x = split(a), y = split(b);
        std::vector<std::uint32_t> prod(2 * n - 1, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                prod[i + j] = base.add_raw(prod[i + j], base.mul_raw(x[i], y[j]));
        for (std::size_t d = prod.size(); d-- > n;) {
            const std::uint32_t c = prod[d];
            if (c == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                prod[d - n + j] = base.sub_raw(prod[d - n + j], base.mul_raw(c, modulus[j]));
            prod[d] = 0;
        }
        prod.resize(n);
        return join(prod);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

}  // namespace

std::uint32_t GaloisField::digit_axpy(std::uint32_t acc, std::uint32_t s, std::uint32_t x) const noexcept {
    if (p_ == 2) return s ? acc ^ x : acc;
    std::uint32_t r = 0;
    for (unsigned i = 0; i < digits_; ++i) {
        const std::uint32_t da = acc % p_, dx = x % p_;
        acc /= p_;
        x /= p_;
        r += ((da + s * dx) % p_) * pw_[i];
    }
    return r;
}

void GaloisField::build_tables(const std::vector<std::uint32_t>& columns) {
    const std::uint32_t m = order_ - 1;
    exp_.assign(2 * std::size_t(m), 0);
    log_.assign(order_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        exp_[i] = x;
        log_[x] = i;
        // x <- generator * x, applied as an F_p-linear map on the digit vector
        std::uint32_t y = 0, rest = x;
        for (unsigned k = 0; k < digits_; ++k) {
            const std::uint32_t d = rest % p_;
            rest /= p_;
            if (d) y = digit_axpy(y, d, columns[k]);
        }
        x = y;
    }
    for (std::uint32_t i = 0; i < m; ++i) exp_[m + i] = exp_[i];
}

std::shared_ptr<const GaloisField> GaloisField::prime(std::uint32_t p) {
    if (!is_prime(p)) fail(ErrorCode::NonPrimeP, std::to_string(p) + " is not prime");
    if (p > kMaxOrder) fail(ErrorCode::FieldTooLarge, "prime exceeds 2^20");
    std::shared_ptr<GaloisField> f(new GaloisField());
    f->p_ = p;
    f->digits_ = 1;
    f->order_ = p;
    f->pw_ = {1};
    std::uint64_t g = 1;
    if (p > 2) {
        const auto divs = prime_divisors(p - 1);
        auto modpow = [p](std::uint64_t a, std::uint64_t e) {
            std::uint64_t r = 1;
            a %= p;
            while (e) {
                if (e & 1) r = r * a % p;
                a = a * a % p;
                e >>= 1;
            }
            return r;
        };
        for (g = 2; g < p; ++g) {
            bool ok = true;
            for (auto r : divs) ok = ok && modpow(g, (p - 1) / r) != 1;
            if (ok) break;
        }
    }
    f->build_tables({static_cast<std::uint32_t>(g)});
    return f;
}

std::shared_ptr<const GaloisField> GaloisField::extension(const GaloisField& base,
                                                          std::span<const std::uint32_t> modulus) {
    if (modulus.size() < 2 || modulus.back() != 1)
        fail(ErrorCode::DegreeMismatch, "extension modulus must be monic of degree >= 1");
    const std::size_t n = modulus.size() - 1;
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < n; ++i) {
        order *= base.order();
        if (order > kMaxOrder) fail(ErrorCode::FieldTooLarge, "field order exceeds 2^20");
    }
    std::shared_ptr<GaloisField> f(new GaloisField());
    f->p_ = base.characteristic();
    f->digits_ = base.prime_degree() * static_cast<unsigned>(n);
    f->order_ = static_cast<std::uint32_t>(order);
    f->pw_.resize(f->digits_);
    for (unsigned i = 0; i < f->digits_; ++i) f->pw_[i] = i == 0 ? 1 : f->pw_[i - 1] * f->p_;

    SlowExtension slow{base, modulus, n};
    const auto divs = prime_divisors(order - 1);
    std::uint32_t gen = 1;
    if (order > 2) {
        for (gen = 2; gen < order; ++gen) {
            bool ok = slow.pow(gen, order - 1) == 1;
            for (auto r : divs) ok = ok && slow.pow(gen, (order - 1) / r) != 1;
            if (ok) break;
        }
        if (gen == order) fail(ErrorCode::ReducibleModulus, "quotient ring is not a field");
    }
    std::vector<std::uint32_t> columns(f->digits_);
    for (unsigned k = 0; k < f->digits_; ++k) columns[k] = slow.mul(gen, f->pw_[k]);
    f->build_tables(columns);
    return f;
}

std::uint32_t GaloisField::add_raw(std::uint32_t a, std::uint32_t b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (digits_ == 1) return (a + b) % p_;
    std::uint32_t r = 0;
    for (unsigned i = 0; i < digits_; ++i) {
        r += ((a % p_ + b % p_) % p_) * pw_[i];
        a /= p_;
        b /= p_;
    }
    return r;
}

std::uint32_t GaloisField::neg_raw(std::uint32_t a) const noexcept {
    if (p_ == 2) return a;
    std::uint32_t r = 0;
    for (unsigned i = 0; i < digits_; ++i) {
        r += ((p_ - a % p_) % p_) * pw_[i];
        a /= p_;
    }
    return r;
}

std::uint32_t GaloisField::sub_raw(std::uint32_t a, std::uint32_t b) const noexcept {
    return add_raw(a, neg_raw(b));
}

std::uint32_t GaloisField::inv_raw(std::uint32_t a) const {
    if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
    const std::uint32_t m = order_ - 1;
    return exp_[(m - log_[a]) % m];
}

std::uint32_t GaloisField::pow_raw(std::uint32_t a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t m = order_ - 1;
    return exp_[(std::uint64_t(log_[a]) * (e % m)) % m];
}

}  // namespace skewlab
