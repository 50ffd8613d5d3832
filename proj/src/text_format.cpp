#include "skewlab/text_format.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skewlab/error.hpp"

namespace skewlab {
namespace {

constexpr std::uint64_t kMaxExponent = 1u << 16;

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const std::string& what) {
    fail(ErrorCode::ParseError, what + " at position " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
}

// Recursive descent over + - * ^ ( ) [ , ] integers and single letters, evaluated in
// whatever ring the adaptor R describes.
template <class R>
class Parser {
   public:
    using V = typename R::Value;

    Parser(const R& ring, std::string_view text) : ring_(ring), text_(text) {}

    V run() {
        skip();
        if (pos_ == text_.size()) parse_fail(text_, pos_, "empty expression");
        V v = expr();
        skip();
        if (pos_ != text_.size()) parse_fail(text_, pos_, std::string("unexpected '") + text_[pos_] + "'");
        return v;
    }

   private:
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    V expr() {
        V acc = ring_.integer(0);
        bool first = true;
        for (;;) {
            skip();
            bool minus = false;
            if (eat('+')) {
            } else if (eat('-')) {
                minus = true;
            } else if (!first) {
                return acc;
            }
            V t = term();
            acc = minus ? ring_.sub(acc, t) : ring_.add(acc, t);
            first = false;
        }
    }

    V term() {
        V acc = power();
        while (eat('*')) acc = ring_.mul(acc, power());
        return acc;
    }

    V power() {
        V base = primary();
        if (!eat('^')) return base;
        skip();
        std::size_t at = pos_;
        std::uint64_t e = integer_literal();
        if (e > kMaxExponent) parse_fail(text_, at, "exponent too large");
        V result = ring_.integer(1);
        while (e) {
            if (e & 1) result = ring_.mul(result, base);
            e >>= 1;
            if (e) base = ring_.mul(base, base);
        }
        return result;
    }

    std::uint64_t integer_literal() {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
        if (ec == std::errc::result_out_of_range) parse_fail(text_, pos_, "integer too large");
        if (ec != std::errc()) parse_fail(text_, pos_, "expected an integer");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return v;
    }

    V primary() {
        skip();
        if (pos_ == text_.size()) parse_fail(text_, pos_, "unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return ring_.integer(integer_literal());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
                parse_fail(text_, pos_ - 1, "identifiers are single letters");
            auto v = ring_.variable(c);
            if (!v) parse_fail(text_, pos_ - 1, std::string("unknown symbol '") + c + "'");
            return *v;
        }
        if (c == '(') {
            ++pos_;
            V v = expr();
            if (!eat(')')) parse_fail(text_, pos_, "expected ')'");
            return v;
        }
        if (c == '[') {
            std::size_t start = ++pos_;
            int depth = 0;
            std::vector<std::string_view> parts;
            std::size_t item = start;
            for (;; ++pos_) {
                if (pos_ == text_.size()) parse_fail(text_, start - 1, "unterminated '['");
                char d = text_[pos_];
                if (d == '(' || d == '[') ++depth;
                else if ((d == ')' || d == ']') && depth > 0) --depth;
                else if (depth == 0 && (d == ',' || d == ']')) {
                    parts.push_back(text_.substr(item, pos_ - item));
                    item = pos_ + 1;
                    if (d == ']') break;
                }
            }
            ++pos_;
            auto v = ring_.coordinates(parts);
            if (!v) parse_fail(text_, start - 1, "coordinate vectors are not allowed here");
            return *v;
        }
        parse_fail(text_, pos_, std::string("unexpected '") + c + "'");
    }

    const R& ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

template <class R>
typename R::Value parse_with(const R& ring, std::string_view text) {
    return Parser<R>(ring, text).run();
}

// Elements of a GaloisField E built over F_p by one extension step, variable `letter`
// standing for the class of the extension variable (absent for prime fields).
struct FieldRing {
    using Value = std::uint32_t;
    const GaloisField& field;
    std::uint32_t p;
    std::optional<char> letter;
    std::uint32_t letter_value = 0;

    Value integer(std::uint64_t n) const { return static_cast<std::uint32_t>(n % p); }
    std::optional<Value> variable(char c) const {
        if (letter && c == *letter) return letter_value;
        return std::nullopt;
    }
    Value add(Value a, Value b) const { return field.add_raw(a, b); }
    Value sub(Value a, Value b) const { return field.sub_raw(a, b); }
    Value mul(Value a, Value b) const { return field.mul_raw(a, b); }
    std::optional<Value> coordinates(const std::vector<std::string_view>& parts) const {
        // digits over F_p, lowest first
        if (parts.size() > field.prime_degree()) return std::nullopt;
        std::uint64_t v = 0, w = 1;
        FieldRing prime{field, p, std::nullopt, 0};
        for (auto s : parts) {
            v += parse_with(prime, s) * w;
            w *= p;
        }
        return static_cast<Value>(v);
    }
};

FieldRing base_ring(const FieldTower& T) {
    FieldRing r{T.base(), T.p(), std::nullopt, 0};
    if (T.e() > 1) {
        r.letter = 'z';
        r.letter_value = T.p();
    }
    return r;
}

struct ExtRing {
    using Value = KElem;
    const TowerSpec& spec;

    Value integer(std::uint64_t n) const { return KElem{static_cast<std::uint32_t>(n % spec.tower->p())}; }
    std::optional<Value> variable(char c) const {
        if (c == spec.generator) return spec.tower->generator();
        if (c == 'z' && spec.tower->e() > 1) return KElem{spec.tower->p()};
        return std::nullopt;
    }
    Value add(Value a, Value b) const { return spec.tower->add(a, b); }
    Value sub(Value a, Value b) const { return spec.tower->sub(a, b); }
    Value mul(Value a, Value b) const { return spec.tower->mul(a, b); }
    std::optional<Value> coordinates(const std::vector<std::string_view>& parts) const {
        const FieldTower& T = *spec.tower;
        if (parts.empty() || parts.size() > T.n()) return std::nullopt;
        std::vector<FElem> c;
        for (auto s : parts) c.push_back(FElem{parse_with(base_ring(T), s)});
        c.resize(T.n());
        return T.from_coords(c);
    }
};

struct SkewRing {
    using Value = SkewPoly;
    const TowerSpec& spec;

    Value integer(std::uint64_t n) const { return SkewPoly::constant(spec.tower, ExtRing{spec}.integer(n)); }
    std::optional<Value> variable(char c) const {
        if (c == 't') return SkewPoly::monomial(spec.tower, 1);
        if (auto k = ExtRing{spec}.variable(c)) return SkewPoly::constant(spec.tower, *k);
        return std::nullopt;
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const {
        if (a.degree() + b.degree() > static_cast<int>(kMaxExponent)) fail(ErrorCode::ParseError, "degree too large");
        return a * b;
    }
    std::optional<Value> coordinates(const std::vector<std::string_view>& parts) const {
        if (auto k = ExtRing{spec}.coordinates(parts)) return SkewPoly::constant(spec.tower, *k);
        return std::nullopt;
    }
};

// Polynomials over a field given by a FieldRing, in one variable.
struct PolyRing {
    using Value = CenterPoly;
    std::shared_ptr<const GaloisField> field;
    FieldRing coeff;
    char variable_letter;

    Value integer(std::uint64_t n) const { return CenterPoly::constant(field, FElem{coeff.integer(n)}); }
    std::optional<Value> variable(char c) const {
        if (c == variable_letter) return CenterPoly::monomial(field, 1);
        if (auto v = coeff.variable(c)) return CenterPoly::constant(field, FElem{*v});
        return std::nullopt;
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const {
        if (a.degree() + b.degree() > static_cast<int>(kMaxExponent)) fail(ErrorCode::ParseError, "degree too large");
        return a * b;
    }
    std::optional<Value> coordinates(const std::vector<std::string_view>& parts) const {
        if (auto v = coeff.coordinates(parts)) return CenterPoly::constant(field, FElem{*v});
        return std::nullopt;
    }
};

// Polynomial printer: terms by decreasing degree, unit coefficients dropped, compound
// coefficients parenthesized.
std::string join_terms(std::size_t size, const std::function<std::string(std::size_t)>& coeff, std::string_view var) {
    std::string out;
    for (std::size_t i = size; i-- > 0;) {
        std::string c = coeff(i);
        if (c == "0") continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += c;
            continue;
        }
        if (c != "1") {
            if (c.find('+') != std::string::npos) out += "(" + c + ")";
            else out += c;
            out += '*';
        }
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

std::string format_digits(std::uint32_t v, std::uint32_t p, unsigned digits, std::string_view var) {
    std::vector<std::uint32_t> d(digits);
    for (unsigned i = 0; i < digits; ++i, v /= p) d[i] = v % p;
    return join_terms(digits, [&](std::size_t i) { return std::to_string(d[i]); }, var);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::uint64_t parse_small_int(std::string_view whole, std::string_view s, const char* what) {
    s = trim(s);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v > (1u << 20))
        fail(ErrorCode::ParseError, std::string("bad ") + what + " in tower spec \"" + std::string(whole) + "\"");
    return v;
}

// Position of the ')' closing the '(' at `open`.
std::size_t matching_paren(std::string_view s, std::size_t open) {
    int depth = 0;
    for (std::size_t i = open; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')' && --depth == 0) return i;
    }
    return std::string_view::npos;
}

}  // namespace

TowerSpec parse_tower(std::string_view text) {
    auto bad = [&](const std::string& what) {
        fail(ErrorCode::ParseError, what + " in tower spec \"" + std::string(text) + "\"");
    };
    std::string_view s = trim(text);
    char generator = 'g';
    if (auto semi = s.find(';'); semi != std::string_view::npos) {
        std::string_view opts = trim(s.substr(semi + 1));
        s = trim(s.substr(0, semi));
        if (opts.substr(0, 4) != "gen=") bad("unknown option");
        std::string_view letter = trim(opts.substr(4));
        if (letter.size() != 1 || !std::islower(static_cast<unsigned char>(letter[0])) ||
            std::string_view("txyz").find(letter[0]) != std::string_view::npos)
            bad("generator must be a lowercase letter other than t, x, y, z");
        generator = letter[0];
    }
    if (s.substr(0, 3) != "GF(") bad("expected 'GF('");
    std::size_t close = matching_paren(s, 2);
    if (close == std::string_view::npos) bad("unbalanced parentheses");
    std::string_view inner = s.substr(3, close - 3);
    std::string_view rest = trim(s.substr(close + 1));

    std::optional<std::string_view> base_text;
    if (auto slash = inner.find('/'); slash != std::string_view::npos) {
        base_text = inner.substr(slash + 1);
        inner = inner.substr(0, slash);
    }
    std::uint64_t p = 0, e = 1;
    if (auto caret = inner.find('^'); caret != std::string_view::npos) {
        p = parse_small_int(text, inner.substr(0, caret), "characteristic");
        e = parse_small_int(text, inner.substr(caret + 1), "base degree");
    } else {
        p = parse_small_int(text, inner, "characteristic");
    }
    if (!is_prime(p)) fail(ErrorCode::NonPrimeP, "p = " + std::to_string(p) + " is not prime");
    if (e < 1 || e > 20) fail(ErrorCode::DegreeMismatch, "base degree out of range");

    if (rest.empty() || rest[0] != '^') bad("expected '^n' after GF(...)");
    rest = rest.substr(1);
    std::optional<std::string_view> ext_text;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        ext_text = trim(rest.substr(slash + 1));
        rest = rest.substr(0, slash);
        if (ext_text->substr(0, 4) == "mod=") ext_text = trim(ext_text->substr(4));
    }
    std::uint64_t n = parse_small_int(text, rest, "extension degree");
    if (n < 2 || n > 20) fail(ErrorCode::DegreeMismatch, "extension degree out of range");

    auto Fp = GaloisField::prime(static_cast<std::uint32_t>(p));
    std::optional<std::vector<std::uint32_t>> base_mod;
    if (base_text) {
        PolyRing ring{Fp, FieldRing{*Fp, static_cast<std::uint32_t>(p), std::nullopt, 0}, 'z'};
        CenterPoly b = parse_with(ring, *base_text);
        std::vector<std::uint32_t> c;
        for (FElem x : b.coeffs()) c.push_back(x.v);
        base_mod = c;
    }
    auto unsigned_e = static_cast<unsigned>(e), unsigned_n = static_cast<unsigned>(n);
    TowerPtr tower = build_tower(static_cast<std::uint32_t>(p), unsigned_e, unsigned_n, base_mod);
    if (ext_text) {
        PolyRing ring{tower->base_ptr(), base_ring(*tower), 'y'};
        CenterPoly m = parse_with(ring, *ext_text);
        tower = build_tower(static_cast<std::uint32_t>(p), unsigned_e, unsigned_n, tower->base_modulus(), m.coeffs());
    }
    return TowerSpec{tower, generator};
}

std::string format_tower(const TowerSpec& spec) {
    const FieldTower& T = *spec.tower;
    std::string out = "GF(" + std::to_string(T.p());
    if (T.e() > 1) {
        const auto& b = T.base_modulus();
        out += "^" + std::to_string(T.e()) + "/" +
               join_terms(b.size(), [&](std::size_t i) { return std::to_string(b[i]); }, "z");
    }
    out += ")^" + std::to_string(T.n()) + "/";
    const auto& m = T.ext_modulus();
    out += join_terms(m.size(), [&](std::size_t i) { return format_base_element(T, m[i]); }, "y");
    if (spec.generator != 'g') out += std::string(";gen=") + spec.generator;
    return out;
}

FElem parse_base_element(const TowerSpec& spec, std::string_view text) {
    return FElem{parse_with(base_ring(*spec.tower), text)};
}

KElem parse_element(const TowerSpec& spec, std::string_view text) { return parse_with(ExtRing{spec}, text); }

SkewPoly parse_skew(const TowerSpec& spec, std::string_view text) { return parse_with(SkewRing{spec}, text); }

CenterPoly parse_center(const TowerSpec& spec, std::string_view text, char variable) {
    return parse_with(PolyRing{spec.tower->base_ptr(), base_ring(*spec.tower), variable}, text);
}

std::string format_base_element(const FieldTower& tower, FElem a) {
    if (tower.e() == 1) return std::to_string(a.v);
    return format_digits(a.v, tower.p(), tower.e(), "z");
}

std::string format_element(const TowerSpec& spec, KElem a) {
    const FieldTower& T = *spec.tower;
    auto c = T.coords(a);
    return join_terms(c.size(), [&](std::size_t i) { return format_base_element(T, c[i]); },
                      std::string(1, spec.generator));
}

std::string format_skew(const TowerSpec& spec, const SkewPoly& f) {
    return join_terms(f.coeffs().size(), [&](std::size_t i) { return format_element(spec, f.coeff(i)); }, "t");
}

std::string format_center(const FieldTower& tower, const CenterPoly& p, char variable) {
    return join_terms(p.coeffs().size(), [&](std::size_t i) { return format_base_element(tower, p.coeff(i)); },
                      std::string(1, variable));
}

}  // namespace skewlab
