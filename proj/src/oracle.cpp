#include "branches/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <vector>

#include "branches/errors.hpp"

namespace branches {

namespace {

// x-content of a nonzero y-polynomial: min over nonzero coefficients of
// their x-order
std::uint32_t x_content(const y_poly& f) {
    std::uint32_t best = f.precision();
    for (const auto& s : f.coeffs()) {
        auto o = s.order();
        if (o && *o < best) best = *o;
        if (best == 0) break;
    }
    return best;
}

// Exact local intersection number of the polynomial representatives,
// by repeated elimination:
//   * a unit factor ends the recursion with 0,
//   * x^a | g contributes a * ord_y f(0, y), then is stripped,
//   * y | g contributes ord_x f(x, 0), then is stripped,
//   * otherwise subtract c x^d f from g to raise ord_x g(x, 0); this leaves
//     the ideal (f, g) unchanged.
// Work happens at an internal cap W = 2T + 4 so that the total x-content
// stripped (at most the accumulated answer, i.e. < T on any accepted run)
// never lets truncation noise reach degrees the answer depends on.  A
// returned value < T is therefore the exact i_0 of any series pair agreeing
// with the inputs mod x^T.  nullopt means "not resolved at this precision":
// either a shared factor of the representatives or an accumulated value
// reaching T.
std::optional<std::int64_t> reduce_at(const y_poly& f_in, const y_poly& g_in, std::uint32_t T) {
    const std::uint32_t W = 2 * T + 4;
    y_poly F = f_in.truncated(T).with_precision(W);
    y_poly G = g_in.truncated(T).with_precision(W);
    std::int64_t acc = 0;

    // every pass either strips a factor (bounded by total y-degree plus the
    // accumulated answer) or raises ord_x of a coefficient (bounded by W)
    long guard = static_cast<long>(F.ydeg() + G.ydeg() + 4) * (W + 4);
    while (guard-- > 0) {
        if (F.is_zero() || G.is_zero()) return std::nullopt;
        if (!F.coeff(0).at(0).is_zero() || !G.coeff(0).at(0).is_zero()) return acc;

        std::uint32_t aF = x_content(F);
        std::uint32_t aG = x_content(G);
        if (aF > 0 && aG > 0) return std::nullopt; // x divides both representatives
        if (aF > 0 || aG > 0) {
            if (aF > 0) {
                F.drop_x_content(aF);
                acc += static_cast<std::int64_t>(aF) * *G.mult_x();
            } else {
                G.drop_x_content(aG);
                acc += static_cast<std::int64_t>(aG) * *F.mult_x();
            }
            if (acc >= static_cast<std::int64_t>(T)) return std::nullopt;
            continue;
        }

        const bool yF = F.coeff(0).is_zero();
        const bool yG = G.coeff(0).is_zero();
        if (yF && yG) return std::nullopt; // y divides both representatives
        if (yF || yG) {
            if (yF) {
                F.drop_y_factor();
                acc += *G.coeff(0).order();
            } else {
                G.drop_y_factor();
                acc += *F.coeff(0).order();
            }
            if (acc >= static_cast<std::int64_t>(T)) return std::nullopt;
            continue;
        }

        std::uint32_t r = *F.coeff(0).order();
        std::uint32_t s = *G.coeff(0).order();
        if (r > s) {
            std::swap(F, G);
            std::swap(r, s);
        }
        field_element c = G.coeff(0).at(s) / F.coeff(0).at(r);
        G.sub_scaled_xshift(F, c, s - r);
    }
    assert(false && "reduction failed to make progress");
    return std::nullopt;
}

intersection_result ladder(const y_poly& f, const y_poly& g, std::uint32_t cap,
                           std::uint32_t floor = 0) {
    if (cap < 1) throw invalid_cap("precision cap must be positive");
    std::uint32_t t_in = common_precision(f.precision(), g.precision());
    if (t_in == 0) throw bad_input("inputs carry no precision");
    if (f.is_zero() || g.is_zero()) throw bad_input("intersection number with the zero polynomial");

    std::uint32_t T = std::min(oracle_initial_precision, t_in);
    while (T <= floor && T < t_in && T < cap) T = std::min(T * 2, t_in);
    for (;;) {
        auto r = reduce_at(f, g, T);
        if (r && *r < static_cast<std::int64_t>(T)) return {false, *r, T};
        if (T >= t_in || T >= cap) return {true, 0, T};
        T = std::min(T * 2, t_in);
    }
}

} // namespace

intersection_result intersection_number(const y_poly& f, const y_poly& g, std::uint32_t cap,
                                        std::uint32_t floor) {
    return ladder(f, g, cap, floor);
}

intersection_result intersection_number(const branch_poly& f, const branch_poly& g,
                                        std::uint32_t cap, std::uint32_t floor) {
    return ladder(f.to_y_poly(), g.to_y_poly(), cap, floor);
}

intersection_result intersection_number(const branch_poly& f, const y_poly& g, std::uint32_t cap,
                                        std::uint32_t floor) {
    return ladder(f.to_y_poly(), g, cap, floor);
}

std::int64_t intersection_number_checked(const y_poly& f, const y_poly& g, std::uint32_t cap) {
    auto r = intersection_number(f, g, cap);
    if (r.exhausted)
        throw precision_exhausted_error("intersection number not resolved below precision " +
                                            std::to_string(r.precision_used),
                                        r.precision_used);
    return r.value;
}

std::int64_t intersection_number_checked(const branch_poly& f, const branch_poly& g,
                                         std::uint32_t cap) {
    return intersection_number_checked(f.to_y_poly(), g.to_y_poly(), cap);
}

// ------------------------------------------------------------- resultant

namespace {

int xdeg(const x_series& s) {
    int d = -1;
    for (std::size_t i = 0; i < s.coeffs().size(); i++)
        if (!s.coeffs()[i].is_zero()) d = static_cast<int>(i);
    return d;
}

// exact polynomial division, descending long division; remainder must vanish
x_series poly_divide_exact(const x_series& a, const x_series& b) {
    int db = xdeg(b);
    if (db < 0) throw division_by_zero("polynomial division by zero");
    x_series rem = a;
    x_series quot(a.context(), a.precision());
    field_element lead = b.at(static_cast<std::uint32_t>(db));
    for (int da = xdeg(rem); da >= db; da = xdeg(rem)) {
        field_element q = rem.at(static_cast<std::uint32_t>(da)) / lead;
        std::uint32_t shift = static_cast<std::uint32_t>(da - db);
        quot.set(static_cast<std::uint32_t>(shift), q);
        rem.sub_scaled_shifted(b, q, shift);
    }
    if (!rem.is_zero()) throw bad_input("inexact polynomial division in determinant");
    return quot;
}

} // namespace

x_series resultant_y(const y_poly& f, const y_poly& g) {
    const std::uint32_t T = common_precision(f.precision(), g.precision());
    const field_context ctx = f.context();
    if (f.is_zero() || g.is_zero()) return x_series(ctx, T);
    const int n = f.ydeg();
    const int m = g.ydeg();
    if (n == 0 && m == 0) return x_series::constant(ctx, ctx.one(), T);

    // exact arithmetic head-room: every minor degree stays below dim * (entry degree)
    const std::uint32_t D = static_cast<std::uint32_t>(n + m) * T + 2;
    auto lift = [&](const x_series& s) { return s.truncated(T).with_precision(D); };

    if (n == 0) {
        x_series acc = x_series::constant(ctx, ctx.one(), D);
        for (int j = 0; j < m; j++) acc = acc * lift(f.coeff(0));
        return acc.truncated(T);
    }
    if (m == 0) {
        x_series acc = x_series::constant(ctx, ctx.one(), D);
        for (int j = 0; j < n; j++) acc = acc * lift(g.coeff(0));
        return acc.truncated(T);
    }

    const int dim = n + m;
    std::vector<std::vector<x_series>> M(
        static_cast<std::size_t>(dim),
        std::vector<x_series>(static_cast<std::size_t>(dim), x_series(ctx, D)));
    for (int i = 0; i < m; i++)
        for (int t = 0; t <= n; t++) M[i][i + t] = lift(f.coeff(static_cast<std::uint32_t>(n - t)));
    for (int i = 0; i < n; i++)
        for (int t = 0; t <= m; t++)
            M[m + i][i + t] = lift(g.coeff(static_cast<std::uint32_t>(m - t)));

    // fraction-free elimination: after step k every entry is a (k+2)x(k+2)
    // minor of the original matrix, and the division by the previous pivot is
    // exact in the polynomial ring
    x_series prev = x_series::constant(ctx, ctx.one(), D);
    bool negate = false;
    for (int k = 0; k < dim - 1; k++) {
        int pivot = -1;
        for (int r = k; r < dim; r++)
            if (!M[r][k].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return x_series(ctx, T); // determinant vanishes
        if (pivot != k) {
            std::swap(M[pivot], M[k]);
            negate = !negate;
        }
        for (int i = k + 1; i < dim; i++) {
            for (int j = k + 1; j < dim; j++)
                M[i][j] = poly_divide_exact(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
            M[i][k] = x_series(ctx, D);
        }
        prev = M[k][k];
    }
    x_series det = M[dim - 1][dim - 1];
    if (negate) det = det.scaled(ctx.integer(-1));
    return det.truncated(T);
}

x_series resultant_y(const branch_poly& f, const branch_poly& g) {
    return resultant_y(f.to_y_poly(), g.to_y_poly());
}

// --------------------------------------------------- derived contact values

namespace {

std::int64_t mult_x_or_throw(const y_poly& f) {
    auto m = f.mult_x();
    if (!m) throw bad_input("multiplicity with respect to x undefined: x divides the polynomial");
    if (*m == 0) throw bad_input("multiplicity with respect to x is zero: polynomial is a unit");
    return static_cast<std::int64_t>(*m);
}

std::int64_t order_or_throw(const y_poly& f) {
    auto o = f.order();
    if (!o) throw bad_input("order of the zero polynomial");
    if (*o == 0) throw bad_input("order zero: polynomial is a unit");
    return static_cast<std::int64_t>(*o);
}

} // namespace

big_rational contact_dx(const y_poly& f, const y_poly& g, std::uint32_t cap) {
    std::int64_t mf = mult_x_or_throw(f);
    std::int64_t mg = mult_x_or_throw(g);
    std::int64_t i0 = intersection_number_checked(f, g, cap);
    return big_rational(i0, mf * mg);
}

big_rational contact_dx(const branch_poly& f, const branch_poly& g, std::uint32_t cap) {
    return contact_dx(f.to_y_poly(), g.to_y_poly(), cap);
}

big_rational logdist(const y_poly& f, const y_poly& g, std::uint32_t cap) {
    std::int64_t of = order_or_throw(f);
    std::int64_t og = order_or_throw(g);
    std::int64_t i0 = intersection_number_checked(f, g, cap);
    return big_rational(i0, of * og);
}

big_rational logdist(const branch_poly& f, const branch_poly& g, std::uint32_t cap) {
    return logdist(f.to_y_poly(), g.to_y_poly(), cap);
}

} // namespace branches
