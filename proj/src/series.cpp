#include "branches/series.hpp"

#include <algorithm>

namespace branches {

std::uint32_t common_precision(std::uint32_t a, std::uint32_t b) { return std::min(a, b); }

namespace {

void require_ctx(const field_context& a, const field_context& b) {
    if (!(a == b))
        throw context_mismatch("mixing series over " + a.describe() + " and " + b.describe());
}

} // namespace

// ---------------------------------------------------------------- x_series

void x_series::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

x_series x_series::monomial(field_context ctx, std::uint32_t exp, const field_element& c,
                            std::uint32_t prec) {
    x_series s(ctx, prec);
    if (exp < prec && !c.is_zero()) {
        s.c_.assign(exp + 1, ctx.zero());
        s.c_[exp] = c;
    }
    return s;
}

bool x_series::is_zero() const { return c_.empty(); }

std::optional<std::uint32_t> x_series::order() const {
    for (std::uint32_t i = 0; i < c_.size(); i++)
        if (!c_[i].is_zero()) return i;
    return std::nullopt;
}

field_element x_series::at(std::uint32_t i) const {
    if (i < c_.size()) return c_[i];
    return ctx_.zero();
}

void x_series::set(std::uint32_t i, const field_element& v) {
    if (i >= prec_) throw bad_input("coefficient index " + std::to_string(i) +
                                    " beyond precision " + std::to_string(prec_));
    if (i >= c_.size()) {
        if (v.is_zero()) return;
        c_.resize(i + 1, ctx_.zero());
    }
    c_[i] = v;
    trim();
}

x_series x_series::truncated(std::uint32_t prec) const {
    x_series r(ctx_, std::min(prec, prec_));
    r.c_.assign(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), r.prec_));
    r.trim();
    return r;
}

x_series x_series::with_precision(std::uint32_t prec) const {
    x_series r(ctx_, prec);
    r.c_.assign(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), prec));
    r.trim();
    return r;
}

x_series x_series::shifted_up(std::uint32_t k) const {
    x_series r(ctx_, prec_);
    if (k >= prec_) return r;
    std::size_t keep = std::min<std::size_t>(c_.size(), prec_ - k);
    r.c_.assign(k, ctx_.zero());
    r.c_.insert(r.c_.end(), c_.begin(), c_.begin() + keep);
    r.trim();
    return r;
}

x_series x_series::shifted_down(std::uint32_t k) const {
    for (std::uint32_t i = 0; i < k && i < c_.size(); i++)
        if (!c_[i].is_zero())
            throw bad_input("inexact division by x^" + std::to_string(k));
    x_series r(ctx_, prec_);
    if (k < c_.size()) r.c_.assign(c_.begin() + k, c_.end());
    return r;
}

x_series x_series::scaled(const field_element& c) const {
    x_series r(ctx_, prec_);
    if (c.is_zero()) return r;
    r.c_ = c_;
    for (auto& e : r.c_)
        if (!e.is_zero()) e = e * c;
    return r;
}

x_series x_series::inverse_unit() const {
    auto ord = order();
    if (!ord || *ord != 0)
        throw bad_input("series inverse requires a unit (nonzero constant term)");
    x_series r(ctx_, prec_);
    r.c_.assign(prec_, ctx_.zero());
    field_element u0 = c_[0].inverse();
    r.c_[0] = u0;
    for (std::uint32_t i = 1; i < prec_; i++) {
        field_element s = ctx_.zero();
        std::uint32_t jmax = std::min<std::uint32_t>(i, static_cast<std::uint32_t>(c_.size()) - 1);
        for (std::uint32_t j = 1; j <= jmax; j++) {
            if (c_[j].is_zero() || r.c_[i - j].is_zero()) continue;
            s += c_[j] * r.c_[i - j];
        }
        r.c_[i] = -(s * u0);
    }
    r.trim();
    return r;
}

void x_series::sub_scaled_shifted(const x_series& o, const field_element& c, std::uint32_t shift) {
    if (o.c_.empty() || c.is_zero() || shift >= prec_) return;
    std::size_t need = std::min<std::size_t>(o.c_.size() + shift, prec_);
    if (c_.size() < need) c_.resize(need, ctx_.zero());
    for (std::size_t i = 0; i + shift < need; i++) {
        if (o.c_[i].is_zero()) continue;
        c_[i + shift] -= c * o.c_[i];
    }
    trim();
}

x_series operator+(const x_series& a, const x_series& b) {
    require_ctx(a.ctx_, b.ctx_);
    x_series r(a.ctx_, common_precision(a.prec_, b.prec_));
    std::size_t n = std::min<std::size_t>(std::max(a.c_.size(), b.c_.size()), r.prec_);
    r.c_.assign(n, a.ctx_.zero());
    for (std::size_t i = 0; i < n; i++) {
        if (i < a.c_.size()) r.c_[i] += a.c_[i];
        if (i < b.c_.size()) r.c_[i] += b.c_[i];
    }
    r.trim();
    return r;
}

x_series operator-(const x_series& a, const x_series& b) { return a + b.scaled(a.ctx_.integer(-1)); }

x_series operator*(const x_series& a, const x_series& b) {
    require_ctx(a.ctx_, b.ctx_);
    x_series r(a.ctx_, common_precision(a.prec_, b.prec_));
    if (a.c_.empty() || b.c_.empty() || r.prec_ == 0) return r;
    std::size_t n = std::min<std::size_t>(a.c_.size() + b.c_.size() - 1, r.prec_);
    r.c_.assign(n, a.ctx_.zero());
    for (std::size_t i = 0; i < a.c_.size() && i < n; i++) {
        if (a.c_[i].is_zero()) continue;
        std::size_t jend = std::min<std::size_t>(b.c_.size(), n - i);
        for (std::size_t j = 0; j < jend; j++) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

bool operator==(const x_series& a, const x_series& b) {
    require_ctx(a.ctx_, b.ctx_);
    return a.prec_ == b.prec_ && a.c_ == b.c_;
}

std::string x_series::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::uint32_t i = 0; i < c_.size(); i++) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string coeff = c_[i].str();
        if (i == 0) {
            s += coeff;
        } else {
            if (coeff != "1") s += "(" + coeff + ")*";
            s += "x^" + std::to_string(i);
        }
    }
    return s + " + O(x^" + std::to_string(prec_) + ")";
}

// ------------------------------------------------------------------ y_poly

void y_poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

y_poly y_poly::from_coeffs(field_context ctx, std::uint32_t prec, std::vector<x_series> coeffs) {
    y_poly p(ctx, prec);
    for (auto& s : coeffs) {
        require_ctx(ctx, s.context());
        p.c_.push_back(s.truncated(prec));
    }
    p.trim();
    return p;
}

x_series y_poly::coeff(std::uint32_t j) const {
    if (j < c_.size()) return c_[j];
    return x_series(ctx_, prec_);
}

void y_poly::set_coeff(std::uint32_t j, const x_series& s) {
    require_ctx(ctx_, s.context());
    if (j >= c_.size()) {
        if (s.is_zero()) return;
        c_.resize(j + 1, x_series(ctx_, prec_));
    }
    c_[j] = s.truncated(prec_);
    trim();
}

std::optional<std::uint32_t> y_poly::order() const {
    std::optional<std::uint32_t> best;
    for (std::uint32_t j = 0; j < c_.size(); j++) {
        auto o = c_[j].order();
        if (!o) continue;
        std::uint32_t total = *o + j;
        if (!best || total < *best) best = total;
    }
    return best;
}

std::optional<std::uint32_t> y_poly::mult_x() const {
    for (std::uint32_t j = 0; j < c_.size(); j++)
        if (!c_[j].at(0).is_zero()) return j;
    return std::nullopt;
}

y_poly y_poly::truncated(std::uint32_t prec) const {
    y_poly r(ctx_, std::min(prec, prec_));
    for (const auto& s : c_) r.c_.push_back(s.truncated(r.prec_));
    r.trim();
    return r;
}

y_poly y_poly::with_precision(std::uint32_t prec) const {
    y_poly r(ctx_, prec);
    for (const auto& s : c_) r.c_.push_back(s.with_precision(prec));
    r.trim();
    return r;
}

y_poly y_poly::shifted_y(std::uint32_t k) const {
    y_poly r(ctx_, prec_);
    if (c_.empty()) return r;
    r.c_.assign(k, x_series(ctx_, prec_));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

y_poly y_poly::scaled(const field_element& c) const {
    y_poly r(ctx_, prec_);
    if (c.is_zero()) return r;
    for (const auto& s : c_) r.c_.push_back(s.scaled(c));
    r.trim();
    return r;
}

y_poly y_poly::scaled_series(const x_series& s) const {
    y_poly r(ctx_, common_precision(prec_, s.precision()));
    for (const auto& t : c_) r.c_.push_back(t * s);
    r.trim();
    return r;
}

y_poly y_poly::mul_xpow(std::uint32_t k) const {
    y_poly r(ctx_, prec_);
    for (const auto& s : c_) r.c_.push_back(s.shifted_up(k));
    r.trim();
    return r;
}

void y_poly::sub_scaled_xshift(const y_poly& o, const field_element& c, std::uint32_t xshift) {
    require_ctx(ctx_, o.ctx_);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), x_series(ctx_, prec_));
    for (std::size_t j = 0; j < o.c_.size(); j++)
        c_[j].sub_scaled_shifted(o.c_[j], c, xshift);
    trim();
}

void y_poly::drop_y_factor() {
    assert(!c_.empty() && c_.front().is_zero());
    c_.erase(c_.begin());
    trim();
}

void y_poly::drop_x_content(std::uint32_t a) {
    for (auto& s : c_) s = s.shifted_down(a);
    trim();
}

y_poly operator+(const y_poly& a, const y_poly& b) {
    require_ctx(a.ctx_, b.ctx_);
    y_poly r(a.ctx_, common_precision(a.prec_, b.prec_));
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    for (std::size_t j = 0; j < n; j++)
        r.c_.push_back((a.coeff(j) + b.coeff(j)).truncated(r.prec_));
    r.trim();
    return r;
}

y_poly operator-(const y_poly& a, const y_poly& b) { return a + b.scaled(a.ctx_.integer(-1)); }

y_poly operator*(const y_poly& a, const y_poly& b) {
    require_ctx(a.ctx_, b.ctx_);
    y_poly r(a.ctx_, common_precision(a.prec_, b.prec_));
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, x_series(a.ctx_, r.prec_));
    for (std::size_t i = 0; i < a.c_.size(); i++) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); j++) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
    }
    for (auto& s : r.c_) s = s.truncated(r.prec_);
    r.trim();
    return r;
}

y_poly y_poly::pow(std::uint32_t k) const {
    y_poly acc(ctx_, prec_);
    acc.c_.assign(1, x_series::constant(ctx_, ctx_.one(), prec_));
    y_poly base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        if (k >>= 1) base = base * base;
    }
    return acc;
}

bool operator==(const y_poly& a, const y_poly& b) {
    require_ctx(a.ctx_, b.ctx_);
    return a.prec_ == b.prec_ && a.c_ == b.c_;
}

std::string y_poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t j = c_.size(); j-- > 0;) {
        if (c_[j].is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (j == 0) {
            s += c_[j].str();
        } else {
            s += "(" + c_[j].str() + ")*y^" + std::to_string(j);
        }
    }
    return s;
}

// ------------------------------------------------------------- branch_poly

branch_poly::branch_poly(field_context ctx, std::uint32_t n, std::uint32_t prec)
    : ctx_(ctx), n_(n), prec_(prec), lower_(n, x_series(ctx, prec)) {
    if (n == 0) throw bad_input("branch polynomial must have positive y-degree");
}

branch_poly branch_poly::from_y_poly(const y_poly& p) {
    if (p.ydeg() < 1) throw bad_input("branch polynomial must have positive y-degree");
    std::uint32_t n = static_cast<std::uint32_t>(p.ydeg());
    x_series top = p.coeff(n);
    x_series one = x_series::constant(p.context(), p.context().one(), p.precision());
    if (!(top == one))
        throw bad_input("polynomial is not monic in y");
    branch_poly b(p.context(), n, p.precision());
    for (std::uint32_t j = 0; j < n; j++) {
        x_series c = p.coeff(j);
        auto o = c.order();
        if (o && *o == 0)
            throw bad_input("coefficient of y^" + std::to_string(j) +
                            " has a constant term; polynomial is not distinguished");
        b.lower_[j] = c;
    }
    return b;
}

x_series branch_poly::coeff(std::uint32_t j) const {
    if (j == n_) return x_series::constant(ctx_, ctx_.one(), prec_);
    if (j < n_) return lower_[j];
    return x_series(ctx_, prec_);
}

void branch_poly::set_coeff(std::uint32_t j, const x_series& s) {
    if (j >= n_) throw bad_input("coefficient index out of range");
    auto o = s.order();
    if (o && *o == 0)
        throw bad_input("distinguished coefficient needs positive x-order");
    lower_[j] = s.truncated(prec_);
}

std::uint32_t branch_poly::order() const {
    std::uint32_t best = n_;
    for (std::uint32_t j = 0; j < n_; j++) {
        auto o = lower_[j].order();
        if (o && *o + j < best) best = *o + j;
    }
    return best;
}

y_poly branch_poly::to_y_poly() const {
    std::vector<x_series> coeffs = lower_;
    coeffs.push_back(x_series::constant(ctx_, ctx_.one(), prec_));
    return y_poly::from_coeffs(ctx_, prec_, std::move(coeffs));
}

branch_poly branch_poly::truncated(std::uint32_t prec) const {
    branch_poly r(ctx_, n_, std::min(prec, prec_));
    for (std::uint32_t j = 0; j < n_; j++) r.lower_[j] = lower_[j].truncated(r.prec_);
    return r;
}

branch_poly branch_poly::with_precision(std::uint32_t prec) const {
    branch_poly r(ctx_, n_, prec);
    for (std::uint32_t j = 0; j < n_; j++) r.lower_[j] = lower_[j].with_precision(prec);
    return r;
}

branch_poly branch_poly::pow(std::uint32_t k) const {
    if (k == 0) throw bad_input("branch_poly::pow needs a positive exponent");
    return from_y_poly(to_y_poly().pow(k));
}

branch_poly operator*(const branch_poly& a, const branch_poly& b) {
    return branch_poly::from_y_poly(a.to_y_poly() * b.to_y_poly());
}

bool operator==(const branch_poly& a, const branch_poly& b) {
    return a.n_ == b.n_ && a.prec_ == b.prec_ && a.lower_ == b.lower_;
}

branch_poly y_branch(field_context ctx, std::uint32_t prec) {
    return branch_poly(ctx, 1, prec);
}

} // namespace branches
