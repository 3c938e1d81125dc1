#pragma once

// Finite fields GF(p^m) for odd p.
//
// Prime fields (m = 1) use plain modular arithmetic and accept any odd prime
// p < 2^32. Extension fields are represented as GF(p)[x]/(f) with f the
// smallest monic irreducible of degree m; they require q = p^m <= 2^16 and
// multiply through discrete exp/log tables.
//
// An element's canonical form is a single integer: the residue for prime
// fields, and sum c_i p^i of its coefficient vector for extension fields.
// Ordering elements by this integer is the "canonical order" used throughout.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "twistlcd/error.hpp"

namespace twistlcd {

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

/// Element of a FieldCtx. Holds a non-owning pointer to its field; the Field
/// handle must outlive every element created from it.
class Fe {
public:
    Fe() = default;
    Fe(const FieldCtx* field, std::uint32_t value) : field_(field), value_(value) {}

    std::uint32_t value() const noexcept { return value_; }
    const FieldCtx& field() const;
    const FieldCtx* field_ptr() const noexcept { return field_; }
    bool is_zero() const noexcept { return value_ == 0; }
    bool is_one() const noexcept { return value_ == 1; }

    Fe operator-() const;
    Fe& operator+=(const Fe& rhs);
    Fe& operator-=(const Fe& rhs);
    Fe& operator*=(const Fe& rhs);
    Fe& operator/=(const Fe& rhs);

    Fe inv() const;
    Fe pow(std::int64_t e) const;

    std::string to_string() const;

    friend Fe operator+(Fe a, const Fe& b) { return a += b; }
    friend Fe operator-(Fe a, const Fe& b) { return a -= b; }
    friend Fe operator*(Fe a, const Fe& b) { return a *= b; }
    friend Fe operator/(Fe a, const Fe& b) { return a /= b; }
    friend bool operator==(const Fe& a, const Fe& b);

private:
    const FieldCtx* field_ = nullptr;
    std::uint32_t value_ = 0;
};

class FieldCtx {
public:
    std::uint64_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return m_; }
    std::uint64_t order() const noexcept { return q_; }
    bool is_prime() const noexcept { return m_ == 1; }
    bool has_tables() const noexcept { return !exp_.empty(); }

    /// Coefficients c_0..c_m of the monic modulus (empty for prime fields).
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    Fe zero() const { return {this, 0}; }
    Fe one() const { return {this, 1}; }
    Fe generator() const { return {this, generator_}; }

    /// Image of an integer under Z -> GF(p) -> GF(q).
    Fe from_int(std::int64_t v) const;
    /// Element whose canonical encoding is `code` (0 <= code < q).
    Fe from_canonical(std::uint64_t code) const;
    /// Parses "17", "-1", or "c0+c1*x+c2*x^2" (terms in any order).
    Fe parse(std::string_view text) const;

    /// Multiplicative order of a nonzero element.
    std::uint64_t element_order(const Fe& a) const;
    /// Discrete log to base generator(); requires tables and a != 0.
    std::uint32_t log(const Fe& a) const;
    Fe exp(std::uint64_t e) const;

    std::vector<Fe> elements() const;
    std::vector<Fe> nonzero_elements() const;

    std::string describe() const;

    /// True when both contexts describe the same GF(p^m).
    bool same_field(const FieldCtx& other) const noexcept { return p_ == other.p_ && m_ == other.m_; }

    // Raw arithmetic on canonical encodings. No field checks.
    std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub_raw(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_raw(std::uint32_t a) const;
    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv_raw(std::uint32_t a) const;
    std::uint32_t pow_raw(std::uint32_t a, std::uint64_t e) const;

    std::string format_raw(std::uint32_t a) const;

private:
    friend Field field_new(std::uint64_t p, unsigned m);
    FieldCtx(std::uint64_t p, unsigned m);

    std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b) const;
    void find_generator();
    void build_tables();

    std::uint64_t p_ = 0;
    unsigned m_ = 1;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint64_t> order_factors_;  // distinct primes dividing q-1
    std::uint32_t generator_ = 0;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

/// Constructs GF(p^m). Deterministic: the modulus and generator depend only on
/// (p, m).
Field field_new(std::uint64_t p, unsigned m = 1);

/// Parses "p" or "p^m".
Field parse_field(std::string_view spec);

bool is_prime_u64(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace twistlcd
