#include "branches/tower.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <string>
#include <utility>

#include "branches/errors.hpp"

namespace branches {

std::int64_t perturbation_term::weight(const char_sequence& s) const {
    assert(static_cast<int>(a.size()) == s.h() + 1);
    std::int64_t w = 0;
    for (int i = 0; i <= s.h(); i++) w += a[static_cast<std::size_t>(i)] * s.v(i);
    return w;
}

std::int64_t am_bound(const char_sequence& seq) {
    if (seq.h() == 0) return 0;
    return seq.e(seq.h() - 1) * seq.v(seq.h());
}

std::uint32_t tower_precision(const char_sequence& seq, std::int64_t max_weight) {
    std::int64_t c = conductor(seq);
    std::int64_t top = am_bound(seq);
    // every exact answer the construction itself certifies (chain values up to
    // e_{h-1}v_h, perturbation weights up to max_weight) must sit strictly
    // below the carried precision; the conductor term adds slack so callers
    // comparing against nearby branches stay in the exact regime too
    std::int64_t t = std::max<std::int64_t>(c + seq.v(0) + 1, c + top + max_weight + 8);
    return static_cast<std::uint32_t>(t);
}

namespace {

// coeff * x^{a_0} * chain[0]^{a_1} * ... * chain[m-1]^{a_m} at precision T
y_poly chain_monomial(const std::vector<branch_poly>& chain, const field_element& coeff,
                      const std::vector<std::int64_t>& a, std::uint32_t T) {
    const field_context& ctx = chain[0].context();
    y_poly term(ctx, T);
    term.set_coeff(0, x_series::monomial(ctx, static_cast<std::uint32_t>(a[0]), coeff, T));
    for (std::size_t j = 1; j < a.size(); j++)
        for (std::int64_t rep = 0; rep < a[j]; rep++)
            term = term * chain[j - 1].to_y_poly();
    return term;
}

} // namespace

branch_poly standard_step(const char_sequence& seq, int i,
                          const std::vector<branch_poly>& chain, const field_element& xi) {
    assert(i >= 1 && i <= seq.h());
    assert(static_cast<int>(chain.size()) >= i);
    if (xi.is_zero()) throw bad_input("chain coefficient xi must be nonzero");
    const std::uint32_t T = chain[static_cast<std::size_t>(i - 1)].precision();

    auto digits = bezout_relation(seq, i); // a_0 .. a_{i-1}
    y_poly term = chain_monomial(chain, xi, digits, T);
    auto body = chain[static_cast<std::size_t>(i - 1)].pow(
                    static_cast<std::uint32_t>(seq.n(i))).to_y_poly() + term;
    return branch_poly::from_y_poly(body);
}

branch_poly perturb_branch(const char_sequence& seq, const std::vector<branch_poly>& chain,
                           const std::vector<perturbation_term>& terms) {
    assert(static_cast<int>(chain.size()) == seq.h() + 1);
    const branch_poly& top = chain.back();
    const field_context& ctx = top.context();
    const std::uint32_t T = top.precision();
    const std::int64_t n = top.ydeg();

    y_poly g = top.to_y_poly();
    for (const auto& t : terms) {
        if (static_cast<int>(t.a.size()) != seq.h() + 1)
            throw invalid_perturbation("term has " + std::to_string(t.a.size()) +
                                       " exponents, expected " + std::to_string(seq.h() + 1));
        if (t.a[0] < 1) throw invalid_perturbation("perturbation needs a_0 >= 1");
        for (std::int64_t e : t.a)
            if (e < 0) throw invalid_perturbation("negative exponent");
        if (t.coeff.is_zero()) throw invalid_perturbation("zero coefficient");
        std::int64_t ydeg = 0;
        for (int i = 1; i <= seq.h(); i++)
            ydeg += t.a[static_cast<std::size_t>(i)] * (seq.v(0) / seq.e(i - 1));
        if (ydeg > n)
            throw invalid_perturbation("term y-degree " + std::to_string(ydeg) +
                                       " exceeds the branch degree " + std::to_string(n));

        g = g + chain_monomial(chain, t.coeff, t.a, T);
    }

    // terms of full y-degree turn the leading coefficient into a unit series
    // 1 + O(x); divide it back out to stay monic distinguished
    auto lead = g.coeff(static_cast<std::uint32_t>(n));
    if (!(lead == x_series::monomial(ctx, 0, ctx.one(), T)))
        g = g.scaled_series(lead.inverse_unit());
    return branch_poly::from_y_poly(g);
}

namespace {

// Acceptance gate for a top perturbation: every term must clear the
// Abhyankar-Moh threshold strictly.  Above the threshold the criterion
// certifies irreducibility and the same semigroup, and the strict clearance
// is also what keeps the maximal-contact composition in assemble_tower valid
// for the perturbed top (the extra terms sit strictly above the recursion
// residual in the valuation of f_{h-1}, or vanish modulo it).
void check_perturbation_gate(const char_sequence& seq,
                             const std::vector<perturbation_term>& terms) {
    std::int64_t bound = am_bound(seq);
    for (const auto& t : terms) {
        if (static_cast<int>(t.a.size()) != seq.h() + 1)
            throw invalid_perturbation("term exponent count mismatch");
        if (t.weight(seq) <= bound)
            throw invalid_perturbation(
                "perturbation weight " + std::to_string(t.weight(seq)) +
                " does not exceed the certification threshold e_{h-1} v_h = " +
                std::to_string(bound) + "; the result could change the equisingularity class");
    }
}

// the construction loop shared by build_tower and spec-based reverification
std::vector<branch_poly> construct_chain(const branch_spec& spec, std::uint32_t T) {
    const char_sequence& seq = spec.seq;
    const int h = seq.h();
    if (static_cast<int>(spec.xi.size()) != h)
        throw bad_input("spec has " + std::to_string(spec.xi.size()) + " xi values, expected " +
                        std::to_string(h));
    std::vector<branch_poly> chain;
    chain.push_back(y_branch(spec.ctx, T));
    for (int i = 1; i <= h; i++)
        chain.push_back(standard_step(seq, i, chain, spec.xi[static_cast<std::size_t>(i - 1)]));
    if (!spec.perturbation.empty()) {
        check_perturbation_gate(seq, spec.perturbation);
        chain.back() = perturb_branch(seq, chain, spec.perturbation);
    }
    return chain;
}

// confirm chain[i] == chain[i-1]^{n_i} + xi * x^{a_0} f_0^{a_1} ... for some
// nonzero xi, recovering xi from the residual itself
void check_standard_residual(const char_sequence& seq, int i,
                             const std::vector<branch_poly>& chain) {
    const std::uint32_t T = chain[static_cast<std::size_t>(i)].precision();
    auto digits = bezout_relation(seq, i);
    y_poly M = chain_monomial(chain, chain[0].context().one(), digits, T);
    y_poly D = chain[static_cast<std::size_t>(i)].to_y_poly() -
               chain[static_cast<std::size_t>(i - 1)]
                   .pow(static_cast<std::uint32_t>(seq.n(i)))
                   .to_y_poly();
    field_element xi;
    for (std::uint32_t j = 0; static_cast<int>(j) <= M.ydeg() && xi.is_zero(); j++) {
        auto o = M.coeff(j).order();
        if (o) xi = D.coeff(j).at(*o) / M.coeff(j).at(*o);
    }
    if (xi.is_zero() || !(D == M.scaled(xi)))
        throw tower_verification_failed("level " + std::to_string(i) +
                                        " does not follow the standard recursion");
}

} // namespace

key_tower assemble_tower(const char_sequence& seq, std::vector<branch_poly> chain,
                         std::optional<branch_spec> spec, chain_trust trust) {
    const int h = seq.h();
    if (static_cast<int>(chain.size()) != h + 1)
        throw tower_verification_failed("chain has " + std::to_string(chain.size()) +
                                        " levels, expected " + std::to_string(h + 1));
    // mult_x = ydeg for a distinguished polynomial, so the degree check is
    // also the mult_x check at every level
    for (int k = 0; k <= h; k++) {
        std::int64_t want = seq.v(0) / seq.e(k);
        if (static_cast<std::int64_t>(chain[static_cast<std::size_t>(k)].ydeg()) != want)
            throw tower_verification_failed("level " + std::to_string(k) + " has y-degree " +
                                            std::to_string(chain[static_cast<std::size_t>(k)].ydeg()) +
                                            ", expected " + std::to_string(want));
    }

    if (trust == chain_trust::reverify) {
        if (spec.has_value()) {
            if (!(spec->seq == seq))
                throw tower_verification_failed("spec sequence differs from the assembly sequence");
            auto rebuilt = construct_chain(*spec, chain[0].precision());
            for (int i = 0; i <= h; i++)
                if (!(rebuilt[static_cast<std::size_t>(i)] == chain[static_cast<std::size_t>(i)]))
                    throw tower_verification_failed("level " + std::to_string(i) +
                                                    " differs from its spec reconstruction");
        } else {
            for (int i = 1; i <= h; i++) check_standard_residual(seq, i, chain);
        }
    } else if (spec.has_value() && !spec->perturbation.empty()) {
        check_perturbation_gate(seq, spec->perturbation);
    }

    // Contact certification, level by level.  row[j] carries the verified
    // i_0(f_i, f_j); prev holds the same for f_{i-1} and feeds the
    // maximal-contact composition (see the declaration for why that entry is
    // composed rather than eliminated directly).
    std::vector<std::int64_t> prev;
    for (int i = 1; i <= h; i++) {
        const branch_poly& fi = chain[static_cast<std::size_t>(i)];
        std::vector<std::int64_t> row(static_cast<std::size_t>(i));
        for (int j = 0; j + 1 < i; j++) {
            std::int64_t pred = seq.v(j + 1) / seq.e(i);
            auto r = intersection_number(fi, chain[static_cast<std::size_t>(j)],
                                         oracle_default_cap, static_cast<std::uint32_t>(pred));
            if (r.exhausted || r.value != pred)
                throw tower_verification_failed(
                    "i_0(f_" + std::to_string(i) + ", f_" + std::to_string(j) + ") = " +
                    (r.exhausted ? std::string("unresolved") : std::to_string(r.value)) +
                    ", expected " + std::to_string(pred));
            row[static_cast<std::size_t>(j)] = r.value;
        }
        std::int64_t pred = seq.v(i) / seq.e(i);
        std::int64_t got;
        if (i == 1) {
            auto r = intersection_number(fi, chain[0], oracle_default_cap,
                                         static_cast<std::uint32_t>(pred));
            got = r.exhausted ? -1 : r.value;
        } else {
            auto digits = bezout_relation(seq, i);
            got = digits[0] * (seq.v(0) / seq.e(i - 1));
            for (int t = 1; t < i; t++)
                got += digits[static_cast<std::size_t>(t)] * prev[static_cast<std::size_t>(t - 1)];
        }
        if (got != pred)
            throw tower_verification_failed(
                "i_0(f_" + std::to_string(i) + ", f_" + std::to_string(i - 1) + ") = " +
                std::to_string(got) + ", expected " + std::to_string(pred));
        row.back() = got;
        prev = std::move(row);
    }

    key_tower t;
    t.seq_ = seq;
    t.polys_ = std::move(chain);
    t.spec_ = std::move(spec);
    return t;
}

key_tower build_tower(const branch_spec& spec, std::uint32_t precision) {
    std::int64_t max_weight = 0;
    for (const auto& t : spec.perturbation) {
        if (static_cast<int>(t.a.size()) != spec.seq.h() + 1)
            throw invalid_perturbation("term exponent count mismatch");
        max_weight = std::max(max_weight, t.weight(spec.seq));
    }
    std::uint32_t T = std::max(precision, tower_precision(spec.seq, max_weight));
    auto chain = construct_chain(spec, T);
    return assemble_tower(spec.seq, std::move(chain), spec, chain_trust::as_built);
}

key_tower subtower(const key_tower& t, int k) {
    if (k < 0 || k > t.h()) throw bad_input("subtower level out of range");
    char_sequence scaled = t.seq().scaled_prefix(k);
    std::vector<branch_poly> chain(t.polys().begin(), t.polys().begin() + k + 1);
    std::optional<branch_spec> spec;
    if (k == t.h()) {
        spec = t.spec();
    } else if (t.spec().has_value()) {
        spec = branch_spec{t.context(), scaled,
                           {t.spec()->xi.begin(), t.spec()->xi.begin() + k}, {}};
    }
    return assemble_tower(scaled, std::move(chain), std::move(spec));
}

bool key3_bound_check(const key_tower& f, const y_poly& g, int k, std::uint32_t cap) {
    if (k < 0 || k > f.h()) throw bad_input("key3 level out of range");
    std::int64_t want = f.seq().v(0) / f.seq().e(k);
    if (g.ydeg() != want)
        throw bad_input("g has y-degree " + std::to_string(g.ydeg()) + ", expected " +
                        std::to_string(want));
    auto r = intersection_number(f.branch().to_y_poly(), g, cap);
    ext_int bound = f.seq().v_ext(k + 1);
    if (r.exhausted) return bound.is_infinite();
    return ext_int(r.value) <= bound;
}

namespace {

// P = Q * D + R with deg_y R < deg_y D; exact because D is monic in y, so no
// coefficient is ever divided and truncation is the only precision effect
std::pair<y_poly, y_poly> divmod_monic(y_poly P, const y_poly& D) {
    const int dd = D.ydeg();
    y_poly Q(P.context(), P.precision());
    while (!P.is_zero() && P.ydeg() >= dd) {
        const std::uint32_t t = static_cast<std::uint32_t>(P.ydeg() - dd);
        x_series c = P.coeff(static_cast<std::uint32_t>(P.ydeg()));
        Q.set_coeff(t, c);
        P = P - D.scaled_series(c).shifted_y(t);
    }
    return {std::move(Q), std::move(P)};
}

// Minimum valuation over the terms of the expansion of P in the digit-bounded
// basis x^a g_0^{b_0} ... g_j^{b_j}; acc carries the value of the digits
// already peeled off.  Terms whose coefficient truncates to zero are skipped:
// their value is at least precision * x_value, which the caller's acceptance
// threshold accounts for.
void min_expansion_value(const y_poly& P, int j, std::int64_t acc,
                         const std::vector<y_poly>& keys,
                         const std::vector<std::int64_t>& key_value, std::int64_t x_value,
                         std::optional<std::int64_t>& best) {
    if (P.is_zero()) return;
    if (j < 0) {
        auto o = P.coeff(0).order();
        if (!o) return;
        std::int64_t val = acc + static_cast<std::int64_t>(*o) * x_value;
        if (!best.has_value() || val < *best) best = val;
        return;
    }
    y_poly rest = P;
    std::int64_t digit = 0;
    while (!rest.is_zero()) {
        auto [q, r] = divmod_monic(std::move(rest), keys[static_cast<std::size_t>(j)]);
        min_expansion_value(r, j - 1, acc + digit * key_value[static_cast<std::size_t>(j)], keys,
                            key_value, x_value, best);
        rest = std::move(q);
        digit++;
    }
}

} // namespace

intersection_result key_valuation(const key_tower& G, int level, const y_poly& P,
                                  std::uint32_t cap) {
    if (cap < 1) throw invalid_cap("precision cap must be positive");
    if (level < 0 || level > G.h()) throw bad_input("key_valuation level out of range");
    if (P.is_zero()) throw bad_input("key valuation of the zero polynomial");
    const std::uint32_t t_in = common_precision(P.precision(), G.precision());
    if (t_in == 0) throw bad_input("inputs carry no precision");
    const std::uint32_t L = std::min(t_in, cap);

    const char_sequence& t = G.seq();
    const std::int64_t eL = t.e(level);
    const std::int64_t x_value = t.v(0) / eL;
    std::vector<y_poly> keys;
    std::vector<std::int64_t> key_value;
    for (int i = 0; i < level; i++) {
        keys.push_back(G.poly(i).to_y_poly().truncated(L));
        key_value.push_back(t.v(i + 1) / eL);
    }
    // the quotient part q * g_level has infinite valuation along g_level, so
    // only the remainder contributes
    y_poly rem = divmod_monic(P.truncated(L), G.poly(level).to_y_poly().truncated(L)).second;
    std::optional<std::int64_t> best;
    min_expansion_value(rem, level - 1, 0, keys, key_value, x_value, best);
    if (best.has_value() && *best < static_cast<std::int64_t>(L)) return {false, *best, L};
    return {true, 0, L};
}

intersection_result key_valuation(const key_tower& G, const y_poly& P, std::uint32_t cap) {
    return key_valuation(G, G.h(), P, cap);
}

am_token am_criterion(const key_tower& f, const y_poly& g, std::uint32_t cap) {
    am_token tok;
    tok.bound = am_bound(f.seq());
    auto m = g.mult_x();
    tok.mult_ok = m.has_value() &&
                  static_cast<std::int64_t>(*m) == f.seq().v(0);
    if (!tok.mult_ok) return tok;
    auto r = intersection_number(f.branch().to_y_poly(), g, cap);
    if (r.exhausted) return tok; // inconclusive, not an error
    tok.i0_finite = true;
    tok.i0 = r.value;
    if (tok.i0 > tok.bound) tok.status = am_status::certified_equisingular;
    return tok;
}

} // namespace branches
