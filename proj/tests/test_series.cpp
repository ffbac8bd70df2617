#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "branches/errors.hpp"
#include "branches/rng.hpp"
#include "branches/series.hpp"

using namespace branches;

namespace {

x_series xpow(const field_context& ctx, std::uint32_t e, std::int64_t c, std::uint32_t prec) {
    return x_series::monomial(ctx, e, ctx.integer(c), prec);
}

// y^2 + x^3 at the given precision
branch_poly cusp(const field_context& ctx, std::uint32_t prec) {
    branch_poly f(ctx, 2, prec);
    f.set_coeff(0, xpow(ctx, 3, 1, prec));
    return f;
}

} // namespace

TEST_CASE("x_series addition and precision rule") {
    auto q = field_context::rationals();
    auto a = xpow(q, 3, 1, 10);
    CHECK((a + a) == xpow(q, 3, 2, 10));
    CHECK((a + x_series(q, 10)) == a);

    auto b = xpow(q, 2, 1, 5);
    auto c = xpow(q, 7, 1, 9);
    CHECK((b + c) == b.truncated(5)); // x^7 is beyond the min precision 5
    CHECK((b + c).precision() == 5);
}

TEST_CASE("x_series multiplication and order") {
    auto q = field_context::rationals();
    auto a = xpow(q, 2, 3, 20) + xpow(q, 5, 1, 20);
    auto b = xpow(q, 1, 2, 20);
    auto p = a * b;
    CHECK(p.at(3) == q.integer(6));
    CHECK(p.at(6) == q.integer(2));
    CHECK(p.order().value() == 3);
    CHECK(x_series(q, 20).order() == std::nullopt);

    seed_stream rng(3);
    for (int trial = 0; trial < 30; trial++) {
        auto u = xpow(q, static_cast<std::uint32_t>(rng.uniform(0, 6)), 1, 40) +
                 xpow(q, static_cast<std::uint32_t>(rng.uniform(0, 6)), 1, 40);
        auto v = xpow(q, static_cast<std::uint32_t>(rng.uniform(0, 6)), 1, 40) +
                 xpow(q, static_cast<std::uint32_t>(rng.uniform(0, 6)), 1, 40);
        if (u.is_zero() || v.is_zero()) continue;
        CHECK((u * v).order().value() == u.order().value() + v.order().value());
        CHECK(u * v == v * u);
    }
}

TEST_CASE("x_series shifts and scaling") {
    auto q = field_context::rationals();
    auto a = xpow(q, 2, 5, 8);
    CHECK(a.shifted_up(3) == xpow(q, 5, 5, 8));
    CHECK(a.shifted_up(6).is_zero()); // pushed past the cap
    CHECK(a.shifted_down(2) == xpow(q, 0, 5, 8));
    CHECK(a.scaled(q.integer(2)) == xpow(q, 2, 10, 8));
}

TEST_CASE("inverse of a unit series") {
    auto q = field_context::rationals();
    auto u = xpow(q, 0, 1, 12) + xpow(q, 1, 1, 12); // 1 + x
    auto inv = u.inverse_unit();
    CHECK((u * inv) == xpow(q, 0, 1, 12));
    for (std::uint32_t i = 0; i < 12; i++)
        CHECK(inv.at(i) == (i % 2 ? q.integer(-1) : q.integer(1)));
    CHECK_THROWS_AS(xpow(q, 1, 1, 12).inverse_unit(), bad_input);
}

TEST_CASE("y_poly multiplication identities") {
    auto q = field_context::rationals();
    auto f = cusp(q, 10).to_y_poly();
    auto one = y_poly::from_coeffs(q, 10, {xpow(q, 0, 1, 10)});
    CHECK(f * one == f);

    // (y + x)(y - x) = y^2 - x^2
    auto yplusx = y_poly::from_coeffs(q, 10, {xpow(q, 1, 1, 10), xpow(q, 0, 1, 10)});
    auto yminusx = y_poly::from_coeffs(q, 10, {xpow(q, 1, -1, 10), xpow(q, 0, 1, 10)});
    auto prod = yplusx * yminusx;
    CHECK(prod.ydeg() == 2);
    CHECK(prod.coeff(0) == xpow(q, 2, -1, 10));
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2) == xpow(q, 0, 1, 10));
}

TEST_CASE("pow expands the standard cusp square") {
    auto q = field_context::rationals();
    auto f = cusp(q, 16);
    auto f2 = f.pow(2);
    CHECK(f2.ydeg() == 4);
    CHECK(f2.coeff(0) == xpow(q, 6, 1, 16)); // x^6
    CHECK(f2.coeff(1).is_zero());
    CHECK(f2.coeff(2) == xpow(q, 3, 2, 16)); // 2 x^3 y^2
    CHECK(f2.coeff(3).is_zero());
    auto yp = f.to_y_poly();
    CHECK(yp.pow(0) == y_poly::from_coeffs(q, 16, {xpow(q, 0, 1, 16)}));
    CHECK(yp.pow(1) == yp);
}

TEST_CASE("order and mult_x on the frozen examples") {
    auto q = field_context::rationals();
    auto f1 = cusp(q, 20);
    CHECK(f1.order() == 2);
    CHECK(f1.mult_x() == 2);
    CHECK(f1.eval_y_zero() == xpow(q, 3, 1, 20));

    // f2 = (y^2 + x^3)^2 + x^5 y
    auto f2y = f1.pow(2).to_y_poly();
    f2y.set_coeff(1, xpow(q, 5, 1, 20));
    auto f2 = branch_poly::from_y_poly(f2y);
    CHECK(f2.order() == 4);
    CHECK(f2.mult_x() == 4);
    CHECK(f2.eval_y_zero() == xpow(q, 6, 1, 20));

    auto line = y_branch(q, 20);
    CHECK(line.order() == 1);
    CHECK(line.mult_x() == 1);
    CHECK(line.eval_y_zero().is_zero());

    // y + x^7: order 1 even though the series part is deep
    branch_poly high(q, 1, 20);
    high.set_coeff(0, xpow(q, 7, 1, 20));
    CHECK(high.order() == 1);

    // order <= mult_x always
    CHECK(f2.order() <= f2.mult_x());
}

TEST_CASE("branch_poly validation") {
    auto q = field_context::rationals();
    // y + 1 is not distinguished (constant term is a unit)
    auto bad = y_poly::from_coeffs(q, 10, {xpow(q, 0, 1, 10), xpow(q, 0, 1, 10)});
    CHECK_THROWS_AS(branch_poly::from_y_poly(bad), bad_input);
    // 2y + x is not monic
    auto nonmonic = y_poly::from_coeffs(q, 10, {xpow(q, 1, 1, 10), xpow(q, 0, 2, 10)});
    CHECK_THROWS_AS(branch_poly::from_y_poly(nonmonic), bad_input);
    // zero polynomial
    CHECK_THROWS_AS(branch_poly::from_y_poly(y_poly(q, 10)), bad_input);

    auto good = branch_poly::from_y_poly(cusp(q, 10).to_y_poly());
    CHECK(good == cusp(q, 10));
}

TEST_CASE("unit normalization recovers a monic associate") {
    auto q = field_context::rationals();
    // g = y^2 + x^3 + x^2 y^2 = (1 + x^2) y^2 + x^3
    auto g = cusp(q, 12).to_y_poly();
    g.set_coeff(2, g.coeff(2) + xpow(q, 2, 1, 12));
    CHECK(g.mult_x().value() == 2);

    auto unit_inv = g.coeff(2).inverse_unit();
    auto monic = branch_poly::from_y_poly(g.scaled_series(unit_inv));
    CHECK(monic.ydeg() == 2);
    // coefficient of y^0 is x^3 (1 + x^2)^{-1} = x^3 - x^5 + x^7 - ...
    CHECK(monic.coeff(0).at(3) == q.integer(1));
    CHECK(monic.coeff(0).at(5) == q.integer(-1));
    CHECK(monic.coeff(0).at(7) == q.integer(1));
}

TEST_CASE("precision propagates as the minimum") {
    auto q = field_context::rationals();
    auto a = cusp(q, 10).to_y_poly();
    auto b = cusp(q, 5).to_y_poly();
    CHECK((a * b).precision() == 5);
    CHECK((a + b).precision() == 5);
    CHECK((a - b).precision() == 5);
    CHECK(common_precision(10, 5) == 5);
}

TEST_CASE("mixed contexts are rejected") {
    auto q = field_context::rationals();
    auto f = field_context::prime(101);
    CHECK_THROWS_AS(xpow(q, 1, 1, 10) + xpow(f, 1, 1, 10), context_mismatch);
    CHECK_THROWS_AS(cusp(q, 10).to_y_poly() * cusp(f, 10).to_y_poly(), context_mismatch);
}

TEST_CASE("prime field series arithmetic") {
    auto f5 = field_context::prime(5);
    auto a = xpow(f5, 1, 3, 10);
    auto b = xpow(f5, 1, 2, 10);
    CHECK((a + b).is_zero()); // 3 + 2 = 0 mod 5
    auto c = cusp(f5, 10);
    CHECK((c.pow(2)).coeff(2) == xpow(f5, 3, 2, 10));
}

TEST_CASE("in-place reduction helpers") {
    auto q = field_context::rationals();
    // drop_y_factor on y^3 + x y^2 gives y^2 + x y
    auto p = y_poly::from_coeffs(
        q, 10, {x_series(q, 10), x_series(q, 10), xpow(q, 1, 1, 10), xpow(q, 0, 1, 10)});
    p.drop_y_factor();
    CHECK(p.ydeg() == 2);
    CHECK(p.coeff(1) == xpow(q, 1, 1, 10));

    // drop_x_content on x^2 y + x^3
    auto r = y_poly::from_coeffs(q, 10, {xpow(q, 3, 1, 10), xpow(q, 2, 1, 10)});
    r.drop_x_content(2);
    CHECK(r.coeff(0) == xpow(q, 1, 1, 10));
    CHECK(r.coeff(1) == xpow(q, 0, 1, 10));

    // sub_scaled_xshift: (y^2 + x^3) - 1 * x * (y^2 + x^3) has coeff0 = x^3 - x^4
    auto s = cusp(q, 10).to_y_poly();
    s.sub_scaled_xshift(cusp(q, 10).to_y_poly(), q.integer(1), 1);
    CHECK(s.coeff(0) == xpow(q, 3, 1, 10) - xpow(q, 4, 1, 10));
    CHECK(s.coeff(2) == xpow(q, 0, 1, 10) - xpow(q, 1, 1, 10));
}
