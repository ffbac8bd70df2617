#include "branches/field.hpp"

#include <cctype>

namespace branches {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(u128(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; p prime, 0 < a < p
    std::int64_t t = 0, nt = 1;
    std::uint64_t r = p, nr = a;
    while (nr != 0) {
        std::uint64_t q = r / nr;
        std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * nt;
        t = nt;
        nt = tmp_t;
        std::uint64_t tmp_r = r - q * nr;
        r = nr;
        nr = tmp_r;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_big_mod(const big_int& n, std::uint64_t p) {
    big_int m = n % p;
    if (m < 0) m += p;
    return m.convert_to<std::uint64_t>();
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        s++;
    }
    // deterministic Miller-Rabin base set for 64-bit inputs
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; i++) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

field_context field_context::prime(std::uint64_t p) {
    if (p >= (1ull << 62))
        throw bad_input("modulus " + std::to_string(p) + " too large (need p < 2^62)");
    if (!is_prime_u64(p))
        throw composite_modulus("modulus " + std::to_string(p) + " is not prime");
    field_context c;
    c.p_ = p;
    return c;
}

field_element field_context::zero() const { return integer(0); }

field_element field_context::one() const { return integer(1); }

field_element field_context::integer(std::int64_t n) const {
    field_element e;
    e.ctx_ = *this;
    if (is_rational()) {
        e.rat_ = n;
    } else {
        std::int64_t m = n % static_cast<std::int64_t>(p_);
        if (m < 0) m += static_cast<std::int64_t>(p_);
        e.res_ = static_cast<std::uint64_t>(m);
    }
    return e;
}

field_element field_context::from_big(const big_rational& q) const {
    field_element e;
    e.ctx_ = *this;
    if (is_rational()) {
        e.rat_ = q;
    } else {
        std::uint64_t den = reduce_big_mod(denominator(q), p_);
        if (den == 0)
            throw domain_error("NonUnitDenominator",
                               "denominator of " + q.str() + " vanishes mod " + std::to_string(p_));
        std::uint64_t num = reduce_big_mod(numerator(q), p_);
        e.res_ = mulmod(num, invmod(den, p_), p_);
    }
    return e;
}

field_element field_context::ratio(std::int64_t num, std::int64_t den) const {
    if (den == 0) throw division_by_zero("ratio with zero denominator");
    return integer(num) / integer(den);
}

field_element field_context::parse(std::string_view text) const {
    auto fail = [&] { throw bad_input("cannot parse field element '" + std::string(text) + "'"); };
    std::string s(text);
    // strip surrounding whitespace
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) fail();

    auto mod_pos = s.find(" mod ");
    if (mod_pos != std::string::npos) {
        if (is_rational())
            throw context_mismatch("residue literal '" + s + "' in a rational context");
        std::uint64_t p = 0;
        try {
            p = std::stoull(s.substr(mod_pos + 5));
        } catch (...) {
            fail();
        }
        if (p != p_)
            throw context_mismatch("residue literal '" + s + "' does not match modulus " +
                                   std::to_string(p_));
        s = s.substr(0, mod_pos);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    }

    big_int num, den = 1;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            num = big_int(s);
        } else {
            num = big_int(s.substr(0, slash));
            den = big_int(s.substr(slash + 1));
        }
    } catch (...) {
        fail();
    }
    if (den == 0) throw division_by_zero("parsed zero denominator in '" + s + "'");
    return from_big(big_rational(num, den));
}

field_element field_context::random_nonzero(seed_stream& rng) const {
    field_element e;
    e.ctx_ = *this;
    if (is_rational()) {
        // Small heights keep downstream coefficient growth in check: tower
        // constructions raise these draws to products of the n_k, so a large
        // range here would balloon exact-arithmetic costs for no gain in
        // genericity (degenerate choices are caught and resampled anyway).
        e.rat_ = rng.uniform(1, 997);
    } else if (p_ == 2) {
        e.res_ = 1;
    } else {
        e.res_ = static_cast<std::uint64_t>(rng.uniform(1, static_cast<std::int64_t>(p_ - 1)));
    }
    return e;
}

std::string field_context::describe() const {
    return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

void field_element::require_same(const field_element& a, const field_element& b) {
    if (!(a.ctx_ == b.ctx_))
        throw context_mismatch("mixing elements of " + a.ctx_.describe() + " and " +
                               b.ctx_.describe());
}

bool field_element::is_zero() const {
    return ctx_.is_rational() ? rat_.is_zero() : res_ == 0;
}

bool field_element::is_one() const {
    return ctx_.is_rational() ? rat_ == 1 : res_ == 1 % ctx_.characteristic();
}

field_element field_element::operator-() const {
    field_element r = *this;
    if (ctx_.is_rational()) {
        r.rat_ = -rat_;
    } else if (res_ != 0) {
        r.res_ = ctx_.characteristic() - res_;
    }
    return r;
}

field_element field_element::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero in " + ctx_.describe());
    field_element r = *this;
    if (ctx_.is_rational()) {
        r.rat_ = 1 / rat_;
    } else {
        r.res_ = invmod(res_, ctx_.characteristic());
    }
    return r;
}

field_element field_element::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    field_element base = *this;
    field_element acc = ctx_.one();
    std::uint64_t k = static_cast<std::uint64_t>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

field_element operator+(const field_element& a, const field_element& b) {
    field_element::require_same(a, b);
    field_element r = a;
    if (a.ctx_.is_rational()) {
        r.rat_ += b.rat_;
    } else {
        std::uint64_t p = a.ctx_.characteristic();
        std::uint64_t s = a.res_ + b.res_; // p word-sized, no overflow below 2^63; guard anyway
        r.res_ = s >= p ? s - p : s;
    }
    return r;
}

field_element operator-(const field_element& a, const field_element& b) { return a + (-b); }

field_element operator*(const field_element& a, const field_element& b) {
    field_element::require_same(a, b);
    field_element r = a;
    if (a.ctx_.is_rational()) {
        r.rat_ *= b.rat_;
    } else {
        r.res_ = mulmod(a.res_, b.res_, a.ctx_.characteristic());
    }
    return r;
}

field_element operator/(const field_element& a, const field_element& b) { return a * b.inverse(); }

bool operator==(const field_element& a, const field_element& b) {
    field_element::require_same(a, b);
    return a.ctx_.is_rational() ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

std::string field_element::str() const {
    if (ctx_.is_rational()) {
        std::string s = numerator(rat_).str();
        if (denominator(rat_) != 1) s += "/" + denominator(rat_).str();
        return s;
    }
    return std::to_string(res_) + " mod " + std::to_string(ctx_.characteristic());
}

const big_rational& field_element::rational_value() const {
    if (!ctx_.is_rational())
        throw context_mismatch("rational_value on an element of " + ctx_.describe());
    return rat_;
}

} // namespace branches
