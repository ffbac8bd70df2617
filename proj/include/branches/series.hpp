#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "branches/field.hpp"

namespace branches {

// Power series in x truncated at a precision cap T: coefficients for x^i with
// i < T are meaningful, everything at or above T is unknown.  Internally a
// dense coefficient vector of length <= T with trailing zeros trimmed;
// arithmetic skips zero slots, so sparse inputs (which towers are) stay cheap.
class x_series {
public:
    x_series() = default;
    x_series(field_context ctx, std::uint32_t prec) : ctx_(ctx), prec_(prec) {}

    static x_series monomial(field_context ctx, std::uint32_t exp, const field_element& c,
                             std::uint32_t prec);
    static x_series constant(field_context ctx, const field_element& c, std::uint32_t prec) {
        return monomial(ctx, 0, c, prec);
    }

    const field_context& context() const { return ctx_; }
    std::uint32_t precision() const { return prec_; }

    bool is_zero() const;
    std::optional<std::uint32_t> order() const;

    field_element at(std::uint32_t i) const;
    const std::vector<field_element>& coeffs() const { return c_; }
    void set(std::uint32_t i, const field_element& v);

    x_series truncated(std::uint32_t prec) const;      // lower the cap
    x_series with_precision(std::uint32_t prec) const; // move the cap (polynomial reading)
    x_series shifted_up(std::uint32_t k) const;        // * x^k, overflow into >= T dropped
    x_series shifted_down(std::uint32_t k) const;      // / x^k, requires the low k coeffs zero
    x_series scaled(const field_element& c) const;
    x_series inverse_unit() const; // requires order() == 0

    // in-place this -= c * x^shift * o, for the reduction inner loop
    void sub_scaled_shifted(const x_series& o, const field_element& c, std::uint32_t shift);

    friend x_series operator+(const x_series& a, const x_series& b);
    friend x_series operator-(const x_series& a, const x_series& b);
    friend x_series operator*(const x_series& a, const x_series& b);
    friend bool operator==(const x_series& a, const x_series& b);
    friend bool operator!=(const x_series& a, const x_series& b) { return !(a == b); }

    std::string str() const;

private:
    void trim();

    field_context ctx_;
    std::uint32_t prec_ = 0;
    std::vector<field_element> c_;
};

// Polynomial in y with x_series coefficients, not necessarily monic or
// distinguished.  Sums of branch polynomials land here.
class y_poly {
public:
    y_poly() = default;
    y_poly(field_context ctx, std::uint32_t prec) : ctx_(ctx), prec_(prec) {}

    static y_poly from_coeffs(field_context ctx, std::uint32_t prec, std::vector<x_series> coeffs);

    const field_context& context() const { return ctx_; }
    std::uint32_t precision() const { return prec_; }

    bool is_zero() const { return c_.empty(); }
    int ydeg() const { return static_cast<int>(c_.size()) - 1; } // -1 when zero

    x_series coeff(std::uint32_t j) const;
    const std::vector<x_series>& coeffs() const { return c_; }
    void set_coeff(std::uint32_t j, const x_series& s);

    // min over stored monomials c x^i y^j of i + j
    std::optional<std::uint32_t> order() const;
    // intersection multiplicity with the reference line x = 0: ord_y of f(0, y)
    std::optional<std::uint32_t> mult_x() const;
    x_series eval_y_zero() const { return coeff(0); }

    y_poly truncated(std::uint32_t prec) const;
    y_poly with_precision(std::uint32_t prec) const;
    y_poly shifted_y(std::uint32_t k) const; // * y^k
    y_poly scaled(const field_element& c) const;
    y_poly scaled_series(const x_series& s) const;
    y_poly mul_xpow(std::uint32_t k) const;
    y_poly pow(std::uint32_t k) const;

    // in-place helpers used by the intersection-number reduction
    void sub_scaled_xshift(const y_poly& o, const field_element& c, std::uint32_t xshift);
    void drop_y_factor();                // divide by y (requires coeff(0) == 0)
    void drop_x_content(std::uint32_t a); // divide by x^a

    friend y_poly operator+(const y_poly& a, const y_poly& b);
    friend y_poly operator-(const y_poly& a, const y_poly& b);
    friend y_poly operator*(const y_poly& a, const y_poly& b);
    friend bool operator==(const y_poly& a, const y_poly& b);
    friend bool operator!=(const y_poly& a, const y_poly& b) { return !(a == b); }

    std::string str() const;

private:
    void trim();

    field_context ctx_;
    std::uint32_t prec_ = 0;
    std::vector<x_series> c_; // c_[j] multiplies y^j
};

// Monic distinguished polynomial: y^n + c_{n-1}(x) y^{n-1} + ... + c_0(x) with
// every c_j of positive x-order.  This is the shape all branches are kept in;
// the leading 1 is implicit in storage and serialization.
class branch_poly {
public:
    branch_poly() = default;
    branch_poly(field_context ctx, std::uint32_t n, std::uint32_t prec);

    // validates monicity (exact leading 1) and positive order of the rest
    static branch_poly from_y_poly(const y_poly& p);

    const field_context& context() const { return ctx_; }
    std::uint32_t precision() const { return prec_; }
    std::uint32_t ydeg() const { return n_; }
    std::uint32_t mult_x() const { return n_; } // forced by distinguishedness

    x_series coeff(std::uint32_t j) const; // j <= n; coeff(n) is the implicit 1
    const std::vector<x_series>& lower_coeffs() const { return lower_; }
    void set_coeff(std::uint32_t j, const x_series& s); // j < n, order >= 1 enforced

    std::uint32_t order() const;
    x_series eval_y_zero() const { return coeff(0); }

    y_poly to_y_poly() const;
    branch_poly truncated(std::uint32_t prec) const;
    branch_poly with_precision(std::uint32_t prec) const;
    branch_poly pow(std::uint32_t k) const;

    friend branch_poly operator*(const branch_poly& a, const branch_poly& b);
    friend y_poly operator+(const branch_poly& a, const branch_poly& b) {
        return a.to_y_poly() + b.to_y_poly();
    }
    friend y_poly operator-(const branch_poly& a, const branch_poly& b) {
        return a.to_y_poly() - b.to_y_poly();
    }
    friend bool operator==(const branch_poly& a, const branch_poly& b);
    friend bool operator!=(const branch_poly& a, const branch_poly& b) { return !(a == b); }

    std::string str() const { return to_y_poly().str(); }

private:
    field_context ctx_;
    std::uint32_t n_ = 0;
    std::uint32_t prec_ = 0;
    std::vector<x_series> lower_; // size n_
};

// the smooth reference branch y
branch_poly y_branch(field_context ctx, std::uint32_t prec);

std::uint32_t common_precision(std::uint32_t a, std::uint32_t b);

} // namespace branches
