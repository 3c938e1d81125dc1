#include "twistlcd/gf.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace twistlcd {

namespace {

constexpr std::uint64_t kTableLimit = 1u << 16;
constexpr std::uint64_t kPrimeLimit = std::uint64_t{1} << 32;

// Operands are residues below 2^32, so the product fits in 64 bits.
std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a * b % m;
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Polynomials over GF(p) as coefficient vectors, lowest degree first.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial b.
Poly poly_rem(Poly a, const Poly& b, std::uint64_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
        }
        trim(a);
    }
    return a;
}

Poly decode_poly(std::uint64_t code, std::uint64_t p, unsigned len) {
    Poly c(len);
    for (unsigned i = 0; i < len; ++i) {
        c[i] = code % p;
        code /= p;
    }
    return c;
}

// Monic polynomial of degree d whose lower coefficients encode `code`.
Poly monic_from_code(std::uint64_t code, std::uint64_t p, unsigned d) {
    Poly c = decode_poly(code, p, d);
    c.push_back(1);
    return c;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
    const unsigned m = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; d <= m / 2; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            if (poly_rem(f, monic_from_code(code, p, d), p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// ---------------------------------------------------------------------------
// Fe

const FieldCtx& Fe::field() const {
    if (!field_) throw Error(ErrorCode::MixedFields, "element is not attached to a field");
    return *field_;
}

namespace {

const FieldCtx& common_field(const Fe& a, const Fe& b) {
    if (!a.field_ptr() || !b.field_ptr() ||
        (a.field_ptr() != b.field_ptr() && !a.field_ptr()->same_field(*b.field_ptr()))) {
        throw Error(ErrorCode::MixedFields, "operands belong to different fields");
    }
    return *a.field_ptr();
}

}  // namespace

Fe Fe::operator-() const { return {field_, field().neg_raw(value_)}; }

Fe& Fe::operator+=(const Fe& rhs) {
    value_ = common_field(*this, rhs).add_raw(value_, rhs.value_);
    return *this;
}

Fe& Fe::operator-=(const Fe& rhs) {
    value_ = common_field(*this, rhs).sub_raw(value_, rhs.value_);
    return *this;
}

Fe& Fe::operator*=(const Fe& rhs) {
    value_ = common_field(*this, rhs).mul_raw(value_, rhs.value_);
    return *this;
}

Fe& Fe::operator/=(const Fe& rhs) {
    const FieldCtx& f = common_field(*this, rhs);
    value_ = f.mul_raw(value_, f.inv_raw(rhs.value_));
    return *this;
}

Fe Fe::inv() const { return {field_, field().inv_raw(value_)}; }

Fe Fe::pow(std::int64_t e) const {
    const FieldCtx& f = field();
    if (e < 0) {
        const std::uint32_t base = f.inv_raw(value_);
        // -e may overflow for INT64_MIN; reduce modulo q-1 first.
        const std::uint64_t mag = static_cast<std::uint64_t>(-(e + 1)) + 1;
        return {field_, f.pow_raw(base, mag % (f.order() - 1))};
    }
    return {field_, f.pow_raw(value_, static_cast<std::uint64_t>(e))};
}

std::string Fe::to_string() const { return field().format_raw(value_); }

bool operator==(const Fe& a, const Fe& b) {
    if (a.value_ != b.value_) return false;
    if (a.field_ == b.field_) return true;
    return a.field_ && b.field_ && a.field_->same_field(*b.field_);
}

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx::FieldCtx(std::uint64_t p, unsigned m) : p_(p), m_(m) {
    q_ = 1;
    for (unsigned i = 0; i < m; ++i) q_ *= p;
    order_factors_ = prime_factors(q_ - 1);
    if (m > 1) {
        for (std::uint64_t code = 0; code < q_; ++code) {
            Poly f = monic_from_code(code, p, m);
            if (f[0] != 0 && is_irreducible(f, p)) {
                modulus_.assign(f.begin(), f.end());
                break;
            }
        }
    }
    find_generator();
    if (q_ <= kTableLimit) build_tables();
}

Field field_new(std::uint64_t p, unsigned m) {
    if (m < 1) throw Error(ErrorCode::InvalidParams, "extension degree must be >= 1");
    if (p >= kPrimeLimit) throw Error(ErrorCode::FieldTooLarge, "characteristic must be below 2^32");
    if (!is_prime_u64(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
    if (m > 1) {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < m; ++i) {
            q *= p;
            if (q > kTableLimit) {
                throw Error(ErrorCode::FieldTooLarge, "extension fields are limited to q <= 2^16");
            }
        }
    }
    return Field(new FieldCtx(p, m));
}

Field parse_field(std::string_view spec) {
    auto parse_uint = [&](std::string_view s) -> std::uint64_t {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
            throw Error(ErrorCode::ParseError, "bad field spec '" + std::string(spec) + "'");
        }
        return v;
    };
    const auto caret = spec.find('^');
    if (caret == std::string_view::npos) return field_new(parse_uint(spec), 1);
    const std::uint64_t m = parse_uint(spec.substr(caret + 1));
    if (m > 64) throw Error(ErrorCode::FieldTooLarge, "extension degree too large");
    return field_new(parse_uint(spec.substr(0, caret)), static_cast<unsigned>(m));
}

std::uint32_t FieldCtx::poly_mulmod(std::uint32_t a, std::uint32_t b) const {
    Poly pa = decode_poly(a, p_, m_);
    Poly pb = decode_poly(b, p_, m_);
    Poly prod(2 * m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (!pa[i]) continue;
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
    }
    Poly mod(modulus_.begin(), modulus_.end());
    Poly r = poly_rem(std::move(prod), mod, p_);
    std::uint64_t code = 0;
    for (std::size_t i = r.size(); i-- > 0;) code = code * p_ + r[i];
    return static_cast<std::uint32_t>(code);
}

void FieldCtx::find_generator() {
    const std::uint64_t n = q_ - 1;
    for (std::uint64_t c = 1; c < q_; ++c) {
        const auto cand = static_cast<std::uint32_t>(c);
        bool primitive = true;
        for (std::uint64_t f : order_factors_) {
            if (pow_raw(cand, n / f) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            generator_ = cand;
            return;
        }
    }
}

void FieldCtx::build_tables() {
    const std::uint64_t n = q_ - 1;
    std::vector<std::uint32_t> exp(n);
    std::vector<std::uint32_t> log(q_, 0);
    std::uint32_t x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        exp[i] = x;
        log[x] = static_cast<std::uint32_t>(i);
        x = is_prime() ? static_cast<std::uint32_t>(mulmod64(x, generator_, p_)) : poly_mulmod(x, generator_);
    }
    exp_ = std::move(exp);
    log_ = std::move(log);
}

std::uint32_t FieldCtx::add_raw(std::uint32_t a, std::uint32_t b) const {
    if (is_prime()) {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    std::uint64_t out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a = static_cast<std::uint32_t>(a / p_);
        b = static_cast<std::uint32_t>(b / p_);
        scale *= p_;
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t FieldCtx::neg_raw(std::uint32_t a) const {
    if (is_prime()) return a == 0 ? 0 : static_cast<std::uint32_t>(p_ - a);
    std::uint64_t out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        const std::uint64_t c = a % p_;
        out += (c == 0 ? 0 : p_ - c) * scale;
        a = static_cast<std::uint32_t>(a / p_);
        scale *= p_;
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t FieldCtx::sub_raw(std::uint32_t a, std::uint32_t b) const { return add_raw(a, neg_raw(b)); }

std::uint32_t FieldCtx::mul_raw(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (is_prime()) return static_cast<std::uint32_t>(mulmod64(a, b, p_));
    if (has_tables()) {
        std::uint64_t e = std::uint64_t{log_[a]} + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    return poly_mulmod(a, b);
}

std::uint32_t FieldCtx::inv_raw(std::uint32_t a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    if (has_tables()) {
        const std::uint32_t l = log_[a];
        return exp_[l == 0 ? 0 : (q_ - 1) - l];
    }
    return pow_raw(a, q_ - 2);
}

std::uint32_t FieldCtx::pow_raw(std::uint32_t a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (has_tables()) {
        const std::uint64_t n = q_ - 1;
        const std::uint64_t idx = mulmod64(log_[a], e % n, n);
        return exp_[idx];
    }
    if (is_prime()) return static_cast<std::uint32_t>(powmod64(a, e, p_));
    std::uint32_t r = 1, base = a;
    while (e) {
        if (e & 1) r = poly_mulmod(r, base);
        base = poly_mulmod(base, base);
        e >>= 1;
    }
    return r;
}

Fe FieldCtx::from_int(std::int64_t v) const {
    const auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return {this, static_cast<std::uint32_t>(r)};
}

Fe FieldCtx::from_canonical(std::uint64_t code) const {
    if (code >= q_) throw Error(ErrorCode::IndexOutOfRange, "canonical code outside the field");
    return {this, static_cast<std::uint32_t>(code)};
}

Fe FieldCtx::parse(std::string_view text) const {
    auto strip = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    auto bad = [&]() { return Error(ErrorCode::ParseError, "bad field element '" + std::string(text) + "'"); };
    auto parse_int = [&](std::string_view s) -> std::int64_t {
        s = strip(s);
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw bad();
        return v;
    };

    text = strip(text);
    if (text.find('x') == std::string_view::npos) return from_int(parse_int(text));
    if (is_prime()) throw bad();

    // Sum of terms c, c*x, c*x^e (also x and x^e); '-' binds to the following term.
    std::vector<std::int64_t> coeffs(m_, 0);
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = pos + 1;
        while (next < text.size() && text[next] != '+' && text[next] != '-') ++next;
        std::string_view term = strip(text.substr(pos, next - pos));
        pos = next;
        bool negative = false;
        while (!term.empty() && (term.front() == '+' || term.front() == '-')) {
            negative ^= term.front() == '-';
            term = strip(term.substr(1));
        }
        if (term.empty()) throw bad();
        std::int64_t coef = 1;
        std::uint64_t exponent = 0;
        const auto xpos = term.find('x');
        if (xpos == std::string_view::npos) {
            coef = parse_int(term);
        } else {
            std::string_view head = strip(term.substr(0, xpos));
            if (!head.empty()) {
                if (head.back() != '*') throw bad();
                coef = parse_int(head.substr(0, head.size() - 1));
            }
            std::string_view tail = strip(term.substr(xpos + 1));
            exponent = 1;
            if (!tail.empty()) {
                if (tail.front() != '^') throw bad();
                const std::int64_t e = parse_int(tail.substr(1));
                if (e < 0) throw bad();
                exponent = static_cast<std::uint64_t>(e);
            }
        }
        if (exponent >= m_) throw bad();
        coeffs[exponent] += negative ? -coef : coef;
    }
    std::uint64_t code = 0;
    for (std::size_t i = m_; i-- > 0;) {
        const std::int64_t c = from_int(coeffs[i]).value();
        code = code * p_ + static_cast<std::uint64_t>(c);
    }
    return {this, static_cast<std::uint32_t>(code)};
}

std::uint64_t FieldCtx::element_order(const Fe& a) const {
    if (a.field_ptr() && !same_field(a.field())) throw Error(ErrorCode::MixedFields, "element of another field");
    if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero has no multiplicative order");
    std::uint64_t t = q_ - 1;
    for (std::uint64_t f : order_factors_) {
        while (t % f == 0 && pow_raw(a.value(), t / f) == 1) t /= f;
    }
    return t;
}

std::uint32_t FieldCtx::log(const Fe& a) const {
    if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "log of zero");
    if (!has_tables()) throw Error(ErrorCode::FieldTooLarge, "no log table for this field");
    return log_[a.value()];
}

Fe FieldCtx::exp(std::uint64_t e) const { return {this, pow_raw(generator_, e)}; }

std::vector<Fe> FieldCtx::elements() const {
    std::vector<Fe> out;
    out.reserve(q_);
    for (std::uint64_t c = 0; c < q_; ++c) out.emplace_back(this, static_cast<std::uint32_t>(c));
    return out;
}

std::vector<Fe> FieldCtx::nonzero_elements() const {
    std::vector<Fe> out;
    out.reserve(q_ - 1);
    for (std::uint64_t c = 1; c < q_; ++c) out.emplace_back(this, static_cast<std::uint32_t>(c));
    return out;
}

std::string FieldCtx::format_raw(std::uint32_t a) const {
    if (is_prime()) return std::to_string(a);
    std::ostringstream os;
    for (unsigned i = 0; i < m_; ++i) {
        if (i) os << '+';
        os << a % p_;
        if (i == 1) os << "*x";
        if (i > 1) os << "*x^" << i;
        a = static_cast<std::uint32_t>(a / p_);
    }
    return os.str();
}

std::string FieldCtx::describe() const {
    std::ostringstream os;
    os << "GF(" << p_;
    if (m_ > 1) os << '^' << m_;
    os << ')';
    return os.str();
}

}  // namespace twistlcd
