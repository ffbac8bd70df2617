#pragma once

#include <cstdint>
#include <optional>

#include "branches/extint.hpp"
#include "branches/oracle.hpp"
#include "branches/tower.hpp"

namespace branches {

// Verdict of the intersection-formula analyzer for a pair of branches f, g
// with characteristic sequences (v_0..v_h), (v'_0..v'_{h'}).  The contact
// index k is the smallest 0 < k <= min(h,h')+1 with
//
//   i_0(f, g) <= bound_k := inf{ e'_{k-1} v_k, e_{k-1} v'_k }
//
// (infinity-aware: v_k = infinity past the last characteristic exponent).
// The clause fields record, for that k:
//   ratios_ok          (a) v_i / v_0 == v'_i / v'_0 for 0 < i < k
//   bound_ok           (b) i_0(f, g) <= bound_k
//   strict_product_ok  (c) if strict, i_0(f, g) == e_{k-1} e'_{k-1} i_0(f_{k-1}, g_{k-1})
//                          with the sub-intersection recomputed by the oracle
//   previous_bound_ok  (d) if k > 1, i_0(f, g) > bound_{k-1}
//   sharing_ok             f_0..f_{k-2} behave as key polynomials of g:
//                          i_0(g, f_i) == v'_{i+1} for i <= k-2
// Conditional clauses record true when their premise is absent.  A report
// with any false field is a falsification of the formula, never a soft
// failure; campaigns assert all_ok().
struct contact_report {
    int k = 0;
    std::int64_t i0 = 0;
    ext_int bound_k;
    bool equality_case = false;              // i0 == bound_k
    std::optional<std::int64_t> sub_i0;      // i_0(f_{k-1}, g_{k-1}), strict case only

    bool ratios_ok = false;
    bool bound_ok = false;
    bool strict_product_ok = false;
    bool previous_bound_ok = false;
    bool sharing_ok = false;

    bool all_ok() const {
        return ratios_ok && bound_ok && strict_product_ok && previous_bound_ok && sharing_ok;
    }
};

// Runs the analyzer on a pair of certified towers.  The top intersection
// number and every clause ingredient are measured, not predicted: i_0 values
// come from key_valuation, evaluated twice (once through each tower's
// certificate) with exact agreement required, so the report is an independent
// check of the formula rather than a restatement of it.  Nothing here
// consults the formula being verified; the measurement rests only on the
// identities certified at tower assembly plus the uniqueness of digit
// expansions.
// Throws bad_input when the branches coincide, precision_exhausted_error when
// i_0 does not resolve below the cap, and no_contact_index when no admissible
// k exists -- the latter would falsify the formula and is never swallowed.
contact_report analyze_pair(const key_tower& F, const key_tower& G,
                            std::uint32_t cap = oracle_default_cap);

// Arithmetic consequences of clause (a) for the report's contact index:
// n/e_i == n'/e'_i, n_i == n'_i and e'_{i-1} v_i == e_{i-1} v'_i for
// 0 < i < k (vacuously true at k = 1).  Pure integer arithmetic on the two
// characteristic sequences; returns the conjunction.
bool ratio_consequences(const key_tower& F, const key_tower& G, const contact_report& r);

// Witness for the congruence i_0(f, g) == 0 mod (n/d or n'/d), where
// n = i_0(f, x), n' = i_0(g, x) and d = gcd(n, n').  The reference smooth
// branch is fixed to l = x: every branch_poly is distinguished in y, so its
// multiplicity along x is just the y-degree.
struct congruence_witness {
    std::int64_t i0 = 0;
    std::int64_t n = 0;       // i_0(f, x)
    std::int64_t nprime = 0;  // i_0(g, x)
    std::int64_t d = 1;       // gcd(n, n')
    std::int64_t modulus = 1; // the witnessing modulus
    bool via_f = true;        // true when modulus == n/d, false when n'/d
};

// Measures i_0(f, g) and returns which modulus divides it; when both do, the
// larger (more informative) one is reported.  Throws bad_input on identical
// branches, precision_exhausted_error when the oracle cannot resolve the
// pair, and congruence_falsified if neither modulus divides -- which would
// falsify the congruence and is never swallowed.
congruence_witness congruence_check(const branch_poly& f, const branch_poly& g,
                                    std::uint32_t cap = oracle_default_cap);
congruence_witness congruence_check(const key_tower& F, const key_tower& G,
                                    std::uint32_t cap = oracle_default_cap);

// Strong triangle inequality for the contact d_x: of the three pairwise
// contacts of distinct branches, the two smallest must be equal.  Computes
// all three exactly and returns the comparison; propagates
// precision_exhausted_error from the underlying intersection numbers.
// The branch_poly overload measures by elimination; the key_tower overload
// measures through the certified key expansions, which stays cheap for
// triples of high pairwise contact.
bool sti_check(const branch_poly& f, const branch_poly& g, const branch_poly& h,
               std::uint32_t cap = oracle_default_cap);
bool sti_check(const key_tower& F, const key_tower& G, const key_tower& H,
               std::uint32_t cap = oracle_default_cap);

} // namespace branches
