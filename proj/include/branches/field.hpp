#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "branches/errors.hpp"
#include "branches/rng.hpp"

namespace branches {

using big_int = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;

class field_element;

// Chooses the coefficient field once; every element carries its context and
// arithmetic between mismatched contexts throws.  p == 0 means the rationals,
// otherwise F_p for a word-sized prime p.
class field_context {
public:
    field_context() = default; // rationals

    static field_context rationals() { return field_context(); }
    static field_context prime(std::uint64_t p); // throws composite_modulus

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }

    friend bool operator==(const field_context&, const field_context&) = default;

    field_element zero() const;
    field_element one() const;
    field_element integer(std::int64_t n) const;
    field_element from_big(const big_rational& q) const; // reduces mod p when needed
    field_element ratio(std::int64_t num, std::int64_t den) const;

    // "a", "a/b" or "r mod p"; the trailing modulus must match the context
    field_element parse(std::string_view text) const;

    // Small-height nonzero sample; over F_p uniform on the nonzero residues.
    // Over Q there is no uniform choice, so draws are small positive integers
    // -- plenty for genericity, and heights stay tame downstream.
    field_element random_nonzero(seed_stream& rng) const;

    std::string describe() const; // "Q" or "F_p"

private:
    std::uint64_t p_ = 0;
};

class field_element {
public:
    field_element() = default; // rational zero

    const field_context& context() const { return ctx_; }

    bool is_zero() const;
    bool is_one() const;

    field_element operator-() const;
    field_element inverse() const; // throws division_by_zero on zero
    field_element pow(std::int64_t e) const;

    friend field_element operator+(const field_element& a, const field_element& b);
    friend field_element operator-(const field_element& a, const field_element& b);
    friend field_element operator*(const field_element& a, const field_element& b);
    friend field_element operator/(const field_element& a, const field_element& b);
    field_element& operator+=(const field_element& o) { return *this = *this + o; }
    field_element& operator-=(const field_element& o) { return *this = *this - o; }
    field_element& operator*=(const field_element& o) { return *this = *this * o; }

    friend bool operator==(const field_element& a, const field_element& b);
    friend bool operator!=(const field_element& a, const field_element& b) { return !(a == b); }

    // The wire format: "a" / "a/b" / "r mod p"
    std::string str() const;

    // Rational value; only meaningful in the rational context.
    const big_rational& rational_value() const;
    std::uint64_t residue_value() const { return res_; }

private:
    friend class field_context;
    static void require_same(const field_element& a, const field_element& b);

    field_context ctx_;
    big_rational rat_;
    std::uint64_t res_ = 0;
};

bool is_prime_u64(std::uint64_t n);

} // namespace branches
