#include "branches/contact.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "branches/errors.hpp"

namespace branches {

namespace {

// bound_k = inf{ e'_{k-1} v_k, e_{k-1} v'_k }, infinity-aware in both v's
ext_int contact_bound(const char_sequence& s, const char_sequence& t, int k) {
    return min(ext_int(t.e(k - 1)) * s.v_ext(k), ext_int(s.e(k - 1)) * t.v_ext(k));
}

// i_0(f_lf, g_lg) measured twice, through each tower's own certificate.  The
// two key expansions share no data beyond the pair itself, so exact agreement
// is a strong consistency check on both certificates.  Direct elimination is
// avoided on purpose: its cost explodes for pairs of high contact, while the
// expansions stay as cheap as the separated case.
intersection_result paired_valuation(const key_tower& F, const key_tower& G, int lf, int lg,
                                     std::uint32_t cap) {
    auto a = key_valuation(G, lg, F.poly(lf).to_y_poly(), cap);
    auto b = key_valuation(F, lf, G.poly(lg).to_y_poly(), cap);
    if (a.exhausted != b.exhausted || (!a.exhausted && a.value != b.value))
        throw tower_verification_failed(
            "the two key expansions disagree on i_0; a tower certificate is inconsistent");
    return a;
}

} // namespace

contact_report analyze_pair(const key_tower& F, const key_tower& G, std::uint32_t cap) {
    const char_sequence& s = F.seq();
    const char_sequence& t = G.seq();
    if (F.branch() == G.branch())
        throw bad_input("analyze_pair: the two branches are identical");

    auto top = paired_valuation(F, G, F.h(), G.h(), cap);
    if (top.exhausted)
        throw precision_exhausted_error(
            "analyze_pair: i_0(f, g) did not resolve below precision " +
                std::to_string(top.precision_used),
            top.precision_used);

    contact_report r;
    r.i0 = top.value;

    const int kmax = std::min(s.h(), t.h()) + 1;
    int k = 0;
    for (int cand = 1; cand <= kmax; cand++)
        if (ext_int(r.i0) <= contact_bound(s, t, cand)) {
            k = cand;
            break;
        }
    if (k == 0)
        throw no_contact_index("no contact index k <= " + std::to_string(kmax) +
                               " admits i_0 = " + std::to_string(r.i0) +
                               "; the intersection formula fails for this pair");
    r.k = k;
    r.bound_k = contact_bound(s, t, k);
    r.equality_case = ext_int(r.i0) == r.bound_k;

    // (a) the characteristic profiles are proportional below k
    r.ratios_ok = true;
    for (int i = 1; i < k; i++)
        if (s.v(i) * t.v(0) != t.v(i) * s.v(0)) r.ratios_ok = false;

    // (b) holds by construction of k; recorded for the report
    r.bound_ok = ext_int(r.i0) <= r.bound_k;

    // (c) strict case: the pair defers to the previous key level
    if (r.equality_case) {
        r.strict_product_ok = true;
    } else {
        const std::int64_t m = s.e(k - 1) * t.e(k - 1);
        const bool divisible = r.i0 % m == 0;
        if (F.poly(k - 1) == G.poly(k - 1)) {
            // equal truncations have unresolvable contact, which can never
            // match the finite value clause (c) demands
            r.strict_product_ok = false;
        } else {
            auto sub = paired_valuation(F, G, k - 1, k - 1, cap);
            if (!sub.exhausted) {
                r.sub_i0 = sub.value;
                r.strict_product_ok = divisible && r.i0 == m * sub.value;
            } else {
                r.strict_product_ok = false;
            }
        }
    }

    // (d) minimality against the previous bound (both arms finite for k > 1)
    r.previous_bound_ok = k == 1 || ext_int(r.i0) > contact_bound(s, t, k - 1);

    // f_0..f_{k-2} are key polynomials of g: their intersection numbers with
    // g match the defining values v'_1..v'_{k-1}
    r.sharing_ok = true;
    for (int i = 0; i + 2 <= k; i++) {
        auto m = key_valuation(G, F.poly(i).to_y_poly(), cap);
        if (m.exhausted || m.value != t.v(i + 1)) r.sharing_ok = false;
    }

    return r;
}

bool ratio_consequences(const key_tower& F, const key_tower& G, const contact_report& r) {
    const char_sequence& s = F.seq();
    const char_sequence& t = G.seq();
    for (int i = 1; i < r.k; i++) {
        if (s.v(0) * t.e(i) != t.v(0) * s.e(i)) return false;       // n/e_i == n'/e'_i
        if (s.n(i) != t.n(i)) return false;                          // n_i == n'_i
        if (t.e(i - 1) * s.v(i) != s.e(i - 1) * t.v(i)) return false; // e'_{i-1} v_i == e_{i-1} v'_i
    }
    return true;
}

namespace {

congruence_witness make_witness(std::int64_t n, std::int64_t nprime, std::int64_t i0) {
    congruence_witness w;
    w.i0 = i0;
    w.n = n;
    w.nprime = nprime;
    w.d = std::gcd(w.n, w.nprime);
    const std::int64_t mf = w.n / w.d;
    const std::int64_t mg = w.nprime / w.d;
    const bool by_f = w.i0 % mf == 0;
    const bool by_g = w.i0 % mg == 0;
    if (!by_f && !by_g)
        throw congruence_falsified("i_0 = " + std::to_string(w.i0) +
                                   " is divisible by neither " + std::to_string(mf) +
                                   " nor " + std::to_string(mg) +
                                   "; the congruence fails for this pair");
    if (by_f && (!by_g || mf >= mg)) {
        w.modulus = mf;
        w.via_f = true;
    } else {
        w.modulus = mg;
        w.via_f = false;
    }
    return w;
}

} // namespace

congruence_witness congruence_check(const branch_poly& f, const branch_poly& g,
                                    std::uint32_t cap) {
    if (f == g) throw bad_input("congruence_check: the two branches are identical");

    auto top = intersection_number(f, g, cap);
    if (top.exhausted)
        throw precision_exhausted_error(
            "congruence_check: i_0(f, g) did not resolve below precision " +
                std::to_string(top.precision_used),
            top.precision_used);
    return make_witness(static_cast<std::int64_t>(f.mult_x()),
                        static_cast<std::int64_t>(g.mult_x()), top.value);
}

congruence_witness congruence_check(const key_tower& F, const key_tower& G,
                                    std::uint32_t cap) {
    if (F.branch() == G.branch())
        throw bad_input("congruence_check: the two branches are identical");

    auto top = paired_valuation(F, G, F.h(), G.h(), cap);
    if (top.exhausted)
        throw precision_exhausted_error(
            "congruence_check: i_0(f, g) did not resolve below precision " +
                std::to_string(top.precision_used),
            top.precision_used);
    return make_witness(F.seq().v(0), G.seq().v(0), top.value);
}

bool sti_check(const branch_poly& f, const branch_poly& g, const branch_poly& h,
               std::uint32_t cap) {
    std::array<big_rational, 3> d = {contact_dx(f, g, cap), contact_dx(f, h, cap),
                                     contact_dx(g, h, cap)};
    std::sort(d.begin(), d.end());
    return d[0] == d[1];
}

bool sti_check(const key_tower& F, const key_tower& G, const key_tower& H, std::uint32_t cap) {
    const key_tower* t[3] = {&F, &G, &H};
    std::array<big_rational, 3> d;
    int slot = 0;
    for (int a = 0; a < 3; a++)
        for (int b = a + 1; b < 3; b++) {
            if (t[a]->branch() == t[b]->branch())
                throw bad_input("sti_check: two of the branches are identical");
            auto r = paired_valuation(*t[a], *t[b], t[a]->h(), t[b]->h(), cap);
            if (r.exhausted)
                throw precision_exhausted_error(
                    "sti_check: a pairwise i_0 did not resolve below precision " +
                        std::to_string(r.precision_used),
                    r.precision_used);
            d[static_cast<std::size_t>(slot++)] =
                big_rational(r.value, t[a]->seq().v(0) * t[b]->seq().v(0));
        }
    std::sort(d.begin(), d.end());
    return d[0] == d[1];
}

} // namespace branches
