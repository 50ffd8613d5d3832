#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

NaiveTower::NaiveTower(const skewlab::FieldTower& t)
    : p_(t.p()), e_(t.e()), n_(t.n()), base_mod_(t.base_modulus()) {
    q_ = 1;
    for (unsigned i = 0; i < e_; ++i) q_ *= p_;
    order_ = 1;
    for (unsigned i = 0; i < n_; ++i) order_ *= q_;
    for (auto c : t.ext_modulus()) ext_mod_.push_back(c.v);
}

std::vector<std::uint32_t> NaiveTower::digits(std::uint32_t v, std::uint32_t base, unsigned count) const {
    std::vector<std::uint32_t> d(count);
    for (unsigned i = 0; i < count; ++i) {
        d[i] = v % base;
        v /= base;
    }
    return d;
}

std::uint32_t NaiveTower::undigits(const std::vector<std::uint32_t>& d, std::uint32_t base) const {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * base + d[i];
    return v;
}

std::uint32_t NaiveTower::add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0, w = 1;
    while (a || b) {
        out += ((a % p_ + b % p_) % p_) * w;
        a /= p_;
        b /= p_;
        w *= p_;
    }
    return out;
}

std::uint32_t NaiveTower::neg(std::uint32_t a) const {
    std::uint32_t out = 0, w = 1;
    while (a) {
        out += ((p_ - a % p_) % p_) * w;
        a /= p_;
        w *= p_;
    }
    return out;
}

std::uint32_t NaiveTower::fmul(std::uint32_t a, std::uint32_t b) const {
    // F_p[z] product then reduction by base_mod
    auto da = digits(a, p_, e_), db = digits(b, p_, e_);
    std::vector<std::uint32_t> prod(2 * e_, 0);
    for (unsigned i = 0; i < e_; ++i)
        for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (std::size_t k = prod.size(); k-- > e_;) {
        const std::uint32_t c = prod[k];
        if (!c) continue;
        for (unsigned j = 0; j <= e_; ++j) {
            const std::size_t idx = k - e_ + j;
            prod[idx] = (prod[idx] + (p_ - (c * base_mod_[j]) % p_)) % p_;
        }
    }
    prod.resize(e_);
    return undigits(prod, p_);
}

std::uint32_t NaiveTower::mul(std::uint32_t a, std::uint32_t b) const {
    auto da = digits(a, q_, n_), db = digits(b, q_, n_);
    std::vector<std::uint32_t> prod(2 * n_, 0);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) prod[i + j] = add(prod[i + j], fmul(da[i], db[j]));
    for (std::size_t k = prod.size(); k-- > n_;) {
        const std::uint32_t c = prod[k];
        if (!c) continue;
        for (unsigned j = 0; j <= n_; ++j) {
            const std::size_t idx = k - n_ + j;
            prod[idx] = add(prod[idx], neg(fmul(c, ext_mod_[j])));
        }
    }
    prod.resize(n_);
    return undigits(prod, q_);
}

std::uint32_t NaiveTower::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t NaiveTower::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("oracle: inverse of zero");
    return pow(a, order_ - 2);
}

std::uint32_t NaiveTower::frob(std::uint32_t a, unsigned j) const {
    for (unsigned i = 0; i < j % n_; ++i) a = pow(a, q_);
    return a;
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly add(const NaiveTower& T, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = T.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

Poly sub(const NaiveTower& T, const Poly& a, const Poly& b) {
    Poly nb(b);
    for (auto& c : nb) c = T.neg(c);
    return add(T, a, nb);
}

Poly mul(const NaiveTower& T, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = T.add(r[i + j], T.mul(a[i], T.frob(b[j], static_cast<unsigned>(i))));
    trim(r);
    return r;
}

std::pair<Poly, Poly> right_divmod(const NaiveTower& T, Poly a, const Poly& b) {
    if (b.empty()) throw std::domain_error("oracle: division by zero");
    trim(a);
    Poly q;
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::size_t k = a.size() - 1 - db;
        Poly mono(k + 1, 0);
        mono[k] = T.mul(a.back(), T.inv(T.frob(b.back(), static_cast<unsigned>(k))));
        q = add(T, q, mono);
        a = sub(T, a, mul(T, mono, b));
    }
    return {q, a};
}

Poly mod_right(const NaiveTower& T, const Poly& a, const Poly& b) { return right_divmod(T, a, b).second; }

bool right_divides(const NaiveTower& T, const Poly& d, const Poly& a) { return mod_right(T, a, d).empty(); }

Poly to_poly(const skewlab::SkewPoly& f) {
    Poly p;
    for (auto c : f.coeffs()) p.push_back(c.v);
    return p;
}

skewlab::SkewPoly from_poly(const skewlab::TowerPtr& tower, const Poly& p) {
    std::vector<skewlab::KElem> c;
    for (auto v : p) c.push_back(skewlab::KElem{v});
    return skewlab::SkewPoly(tower, c);
}

void for_each_poly(const NaiveTower& T, std::size_t len, const std::function<void(const Poly&)>& fn) {
    Poly digits(len, 0);
    while (true) {
        Poly p = digits;
        trim(p);
        fn(p);
        std::size_t i = 0;
        while (i < len && ++digits[i] == T.order()) digits[i++] = 0;
        if (i == len) return;
    }
}

void for_each_monic(const NaiveTower& T, std::size_t degree, const std::function<void(const Poly&)>& fn) {
    Poly digits(degree, 0);
    while (true) {
        Poly p = digits;
        p.push_back(1);
        fn(p);
        std::size_t i = 0;
        while (i < degree && ++digits[i] == T.order()) digits[i++] = 0;
        if (i == degree) return;
    }
}

std::vector<Poly> eigenring_elements(const NaiveTower& T, const Poly& f) {
    std::vector<Poly> out;
    for_each_poly(T, f.size() - 1, [&](const Poly& g) {
        if (mod_right(T, mul(T, f, g), f).empty()) out.push_back(g);
    });
    return out;
}

std::vector<std::uint32_t> constant_eigen_elements(const NaiveTower& T, const Poly& f) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 0; d < T.order(); ++d) {
        Poly g{d};
        trim(g);
        if (mod_right(T, mul(T, f, g), f).empty()) out.push_back(d);
    }
    return out;
}

std::optional<Poly> some_right_factor(const NaiveTower& T, const Poly& f) {
    const std::size_t m = f.size() - 1;
    for (std::size_t d = 1; d < m; ++d) {
        std::optional<Poly> found;
        for_each_monic(T, d, [&](const Poly& g) {
            if (!found && right_divides(T, g, f)) found = g;
        });
        if (found) return found;
    }
    return std::nullopt;
}

bool is_irreducible(const NaiveTower& T, const Poly& f) { return !some_right_factor(T, f).has_value(); }

std::optional<std::vector<std::uint32_t>> mclm_bruteforce(const NaiveTower& T, const Poly& f, unsigned max_degree) {
    for (unsigned d = 1; d <= max_degree; ++d) {
        std::vector<std::uint32_t> c(d, 0);
        while (true) {
            Poly h(static_cast<std::size_t>(d) * T.n() + 1, 0);
            for (unsigned i = 0; i < d; ++i) h[i * T.n()] = c[i];
            h.back() = 1;
            if (right_divides(T, f, h)) {
                c.push_back(1);
                return c;
            }
            unsigned i = 0;
            while (i < d && ++c[i] == T.q()) c[i++] = 0;
            if (i == d) break;
        }
    }
    return std::nullopt;
}

std::vector<std::uint32_t> cp_mul(const NaiveTower& T, const std::vector<std::uint32_t>& a,
                                  const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = T.add(r[i + j], T.fmul(a[i], b[j]));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

bool cp_irreducible_bruteforce(const NaiveTower& T, const std::vector<std::uint32_t>& a) {
    // a monic; try every product of two monic polynomials of positive degree
    const std::size_t deg = a.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::vector<std::uint32_t> x(d, 0);
        while (true) {
            std::vector<std::uint32_t> mx = x;
            mx.push_back(1);
            std::vector<std::uint32_t> y(deg - d, 0);
            while (true) {
                std::vector<std::uint32_t> my = y;
                my.push_back(1);
                if (cp_mul(T, mx, my) == a) return false;
                std::size_t i = 0;
                while (i < y.size() && ++y[i] == T.q()) y[i++] = 0;
                if (i == y.size()) break;
            }
            std::size_t i = 0;
            while (i < d && ++x[i] == T.q()) x[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

}  // namespace oracle
