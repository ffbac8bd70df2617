#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "branches/errors.hpp"
#include "branches/oracle.hpp"
#include "branches/rng.hpp"
#include "branches/series.hpp"

using namespace branches;

namespace {

x_series xpow(const field_context& ctx, std::uint32_t e, std::int64_t c, std::uint32_t prec) {
    return x_series::monomial(ctx, e, ctx.integer(c), prec);
}

branch_poly cusp(const field_context& ctx, std::uint32_t prec, std::int64_t xi = 1) {
    branch_poly f(ctx, 2, prec);
    f.set_coeff(0, xpow(ctx, 3, xi, prec));
    return f;
}

// (y^2 + x^3)^2 + x^5 y, the standard (4,6,13) branch
branch_poly tower4613(const field_context& ctx, std::uint32_t prec) {
    auto f2y = cusp(ctx, prec).pow(2).to_y_poly();
    f2y.set_coeff(1, xpow(ctx, 5, 1, prec));
    return branch_poly::from_y_poly(f2y);
}

} // namespace

TEST_CASE("resultant on the frozen 2x2 and 3x1 examples") {
    auto q = field_context::rationals();
    auto f = cusp(q, 10);
    auto line = y_branch(q, 10);
    auto r1 = resultant_y(f, line);
    CHECK(r1.order().value() == 3); // Res_y(y^2 + x^3, y) = x^3 up to sign

    auto yplusx = y_poly::from_coeffs(q, 10, {xpow(q, 1, 1, 10), xpow(q, 0, 1, 10)});
    auto yminusx = y_poly::from_coeffs(q, 10, {xpow(q, 1, -1, 10), xpow(q, 0, 1, 10)});
    auto r2 = resultant_y(yminusx, yplusx);
    CHECK(r2.order().value() == 1); // 2x up to sign
    CHECK((r2 == xpow(q, 1, 2, 10) || r2 == xpow(q, 1, -2, 10)));

    CHECK(resultant_y(f, f).is_zero());
}

TEST_CASE("intersection numbers of the frozen examples") {
    auto q = field_context::rationals();
    auto f = cusp(q, 64);
    auto r = intersection_number(f, y_branch(q, 64));
    REQUIRE_FALSE(r.exhausted);
    CHECK(r.value == 3);

    auto g = cusp(q, 64, 2);
    auto r2 = intersection_number(f, g);
    REQUIRE_FALSE(r2.exhausted);
    CHECK(r2.value == 6);

    auto f2 = tower4613(q, 64);
    auto r3 = intersection_number(f2, f);
    REQUIRE_FALSE(r3.exhausted);
    CHECK(r3.value == 13);

    auto self = intersection_number(f, f);
    CHECK(self.exhausted);

    CHECK_THROWS_AS(intersection_number(f, g, 0), invalid_cap);
}

TEST_CASE("intersection agrees with the resultant order") {
    auto q = field_context::rationals();
    auto f2 = tower4613(q, 40);
    auto f1 = cusp(q, 40);
    auto res = resultant_y(f2, f1);
    CHECK(res.order().value() == 13);
    auto line = y_branch(q, 40);
    CHECK(resultant_y(f2, line).order().value() == 6);
}

TEST_CASE("symmetry and multiplicativity") {
    auto q = field_context::rationals();
    auto f = tower4613(q, 96);
    auto g = cusp(q, 96);
    auto line = y_branch(q, 96);

    CHECK(intersection_number(f, g).value == intersection_number(g, f).value);
    CHECK(intersection_number(f, line).value == intersection_number(line, f).value);

    // i_0(f, g * line) = i_0(f, g) + i_0(f, line)
    auto prod = g * line;
    CHECK(intersection_number(f, prod).value == 13 + 6);

    auto yplusx = y_poly::from_coeffs(q, 96, {xpow(q, 1, 1, 96), xpow(q, 0, 1, 96)});
    auto prod2 = g.to_y_poly() * yplusx;
    CHECK(intersection_number(f.to_y_poly(), prod2).value ==
          intersection_number(f, g).value +
              intersection_number(f.to_y_poly(), yplusx).value);
}

TEST_CASE("lower bound by product of orders") {
    auto q = field_context::rationals();
    auto f = cusp(q, 64);
    auto g = cusp(q, 64, 5);
    CHECK(intersection_number(f, g).value >= 4);
    // distinct tangent lines meet a branch with multiplicity ord*ord
    auto rot = y_poly::from_coeffs(q, 64, {xpow(q, 1, 1, 64), xpow(q, 0, 1, 64)});
    CHECK(intersection_number(f.to_y_poly(), rot).value == 2);
}

TEST_CASE("dx on the frozen examples") {
    auto q = field_context::rationals();
    auto f = cusp(q, 64);
    CHECK(contact_dx(f.to_y_poly(), y_branch(q, 64).to_y_poly()) == big_rational(3, 2));
    CHECK(contact_dx(f, cusp(q, 64, 2)) == big_rational(3, 2)); // 6 / (2*2)
    CHECK(contact_dx(tower4613(q, 64), f) == big_rational(13, 8));
}

TEST_CASE("logdist on the frozen examples") {
    auto q = field_context::rationals();
    auto f = cusp(q, 64);
    CHECK(logdist(f.to_y_poly(), y_branch(q, 64).to_y_poly()) == big_rational(3, 2));
    // distinct tangents: d = i0 / (ord ord) = 2 / 2 = 1
    auto rot = y_poly::from_coeffs(q, 64, {xpow(q, 1, 1, 64), xpow(q, 0, 1, 64)});
    CHECK(logdist(f.to_y_poly(), rot) == big_rational(1, 1));
    CHECK(logdist(tower4613(q, 64), f) == big_rational(13, 8));
}

TEST_CASE("derived ratios reject degenerate inputs") {
    auto q = field_context::rationals();
    auto f = cusp(q, 32).to_y_poly();
    // x * y has no mult_x (x divides it)
    auto xy = y_poly::from_coeffs(q, 32, {x_series(q, 32), xpow(q, 1, 1, 32)});
    CHECK_THROWS_AS(contact_dx(f, xy), bad_input);
    // a unit has order 0
    auto unit = y_poly::from_coeffs(q, 32, {xpow(q, 0, 1, 32)});
    CHECK_THROWS_AS(logdist(f, unit), bad_input);
    CHECK_THROWS_AS(contact_dx(f, unit), bad_input);
    // exhausted propagates as an error for the checked variant
    CHECK_THROWS_AS(intersection_number_checked(f, f), precision_exhausted_error);
}

TEST_CASE("precision soundness: doubled precision does not move finite answers") {
    auto q = field_context::rationals();
    auto f = tower4613(q, 200);
    auto g = cusp(q, 200);
    auto a = intersection_number(f.truncated(64), g.truncated(64));
    auto b = intersection_number(f.truncated(128), g.truncated(128));
    REQUIRE_FALSE(a.exhausted);
    REQUIRE_FALSE(b.exhausted);
    CHECK(a.value == b.value);
}

TEST_CASE("oracle over a prime field") {
    auto f101 = field_context::prime(101);
    auto f = cusp(f101, 64);
    CHECK(intersection_number(f, y_branch(f101, 64)).value == 3);
    CHECK(intersection_number(tower4613(f101, 64), f).value == 13);

    auto f5 = field_context::prime(5);
    CHECK(intersection_number(cusp(f5, 64), y_branch(f5, 64)).value == 3);
    // p | v_0 case: characteristic 2 with the (2,3) cusp
    auto f2ctx = field_context::prime(2);
    CHECK(intersection_number(cusp(f2ctx, 64), y_branch(f2ctx, 64)).value == 3);
}

TEST_CASE("reduction and resultant agree on random perturbed pairs") {
    auto q = field_context::rationals();
    seed_stream rng(17);
    for (int trial = 0; trial < 12; trial++) {
        auto f = tower4613(q, 48);
        // random low perturbation of the second cusp factor
        auto g = cusp(q, 48, 1 + static_cast<std::int64_t>(rng.uniform(1, 7)));
        std::uint32_t a = static_cast<std::uint32_t>(rng.uniform(4, 9));
        auto gy = g.to_y_poly();
        gy.set_coeff(1, gy.coeff(1) + xpow(q, a, 1, 48));
        auto gb = branch_poly::from_y_poly(gy);
        auto fast = intersection_number(f, gb);
        REQUIRE_FALSE(fast.exhausted);
        auto slow = resultant_y(f.truncated(fast.value + 2), gb.truncated(fast.value + 2));
        CHECK(slow.order().value() == fast.value);
    }
}
