#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "branches/charseq.hpp"
#include "branches/oracle.hpp"
#include "branches/series.hpp"

namespace branches {

// One additive term coeff * x^{a_0} f_0^{a_1} ... f_{h-1}^{a_h} added on top
// of a finished chain; a has exactly h+1 entries and a_0 >= 1.
struct perturbation_term {
    std::vector<std::int64_t> a;
    field_element coeff;

    std::int64_t weight(const char_sequence& s) const; // a_0 v_0 + ... + a_h v_h
};

// Constructive recipe for a branch: the characteristic data plus the xi
// coefficients of each chain step and an optional top perturbation.
struct branch_spec {
    field_context ctx;
    char_sequence seq;
    std::vector<field_element> xi; // xi_1 .. xi_h, all nonzero
    std::vector<perturbation_term> perturbation;
};

// How much of the chain's construction assemble_tower re-derives before
// certifying it.  as_built is for chains the caller has just produced with
// standard_step / perturb_branch, where the recursion shape holds by
// construction; reverify recomputes that shape (from the spec when present,
// otherwise by recovering each step's residual) and rejects anything that
// does not match.
enum class chain_trust { as_built, reverify };

// A verified realization of a characteristic sequence: the chain f_0, ..., f_h
// with f_h the branch itself.  Every constructor in this module certifies the
// contact values i_0(f_i, f_j) = v_{j+1}/e_i for all j < i before handing the
// object out, so holding a key_tower is holding a certificate.  Contacts of
// branches that diverge below their top level are measured directly by the
// elimination oracle; each maximal-contact value i_0(f_i, f_{i-1}) is instead
// composed from the oracle-measured contacts of f_{i-1} through the recursion
// residual (see assemble_tower), because direct elimination on a
// maximal-contact pair is exponentially expensive over the rationals.
class key_tower {
public:
    const char_sequence& seq() const { return seq_; }
    const std::vector<branch_poly>& polys() const { return polys_; }
    const branch_poly& poly(int k) const { return polys_.at(static_cast<std::size_t>(k)); }
    const branch_poly& branch() const { return polys_.back(); }
    int h() const { return seq_.h(); }
    std::uint32_t precision() const { return polys_.back().precision(); }
    const field_context& context() const { return polys_.back().context(); }

    // present when the tower came from build_tower; chains assembled level by
    // level (realizers) have no single-spec description
    const std::optional<branch_spec>& spec() const { return spec_; }

private:
    friend key_tower assemble_tower(const char_sequence&, std::vector<branch_poly>,
                                    std::optional<branch_spec>, chain_trust);

    char_sequence seq_{std::vector<std::int64_t>{1}};
    std::vector<branch_poly> polys_;
    std::optional<branch_spec> spec_;
};

// default working precision for towers of this sequence; the second argument
// is the largest perturbation weight that will ride on top (0 for none)
std::uint32_t tower_precision(const char_sequence& seq, std::int64_t max_weight);

// the Abhyankar-Moh threshold e_{h-1} v_h (0 when h = 0: any positive
// intersection with a smooth reference certifies a smooth branch)
std::int64_t am_bound(const char_sequence& seq);

// f_i = f_{i-1}^{n_i} + xi x^{a_0} f_0^{a_1} ... f_{i-2}^{a_{i-1}} with the
// digits from bezout_relation(seq, i); chain holds f_0 .. f_{i-1}
branch_poly standard_step(const char_sequence& seq, int i,
                          const std::vector<branch_poly>& chain, const field_element& xi);

// top-level additive perturbation of a finished chain; when a term reaches
// y-degree v_0 the leading coefficient becomes a unit series and the result
// is normalized back to its monic distinguished associate
branch_poly perturb_branch(const char_sequence& seq, const std::vector<branch_poly>& chain,
                           const std::vector<perturbation_term>& terms);

// Verify the chain invariants and wrap the chain; throws
// tower_verification_failed.  Checks, per level i:
//   * y-degree and mult_x equal v_0/e_i;
//   * i_0(f_i, f_j) = v_{j+1}/e_i for j <= i-2, measured by the oracle (these
//     pairs separate early, so elimination is cheap);
//   * i_0(f_i, f_{i-1}) = v_i/e_i, composed as a_0 i_0(f_{i-1}, x) +
//     sum_t a_t i_0(f_{i-1}, f_{t-1}) over the Bezout digits of step i — valid
//     because f_i reduces to xi_i x^{a_0} f_0^{a_1} ... f_{i-2}^{a_{i-1}}
//     modulo f_{i-1}, i_0 is invariant under adding multiples of one argument
//     and additive on products, and every ingredient is one of the measured
//     values of the previous level.  (A perturbed top contributes only terms
//     that vanish modulo f_{h-1} or carry weight strictly above e_{h-1}v_h by
//     the acceptance gate, so the same composition applies.)
// With chain_trust::reverify the recursion shape those compositions rest on
// is recomputed first: from the spec when one is given, otherwise by
// recovering xi_i from each level's residual (which then admits no
// perturbation anywhere).
key_tower assemble_tower(const char_sequence& seq, std::vector<branch_poly> chain,
                         std::optional<branch_spec> spec = std::nullopt,
                         chain_trust trust = chain_trust::reverify);

// build and verify the full tower of a spec; precision 0 means the default.
// Perturbed specs additionally pass the Abhyankar-Moh gate against the
// unperturbed chain, which is what makes the certificate sound; perturbations
// too small for that gate are rejected as invalid_perturbation.
key_tower build_tower(const branch_spec& spec, std::uint32_t precision = 0);

// the chain f_0 .. f_k as a tower in its own right, re-verified against the
// scaled characteristic sequence (v_0/e_k, ..., v_k/e_k)
key_tower subtower(const key_tower& t, int k);

// (key 3): i_0(f, g) <= v_{k+1} for any monic g of degree v_0/e_k
bool key3_bound_check(const key_tower& f, const y_poly& g, int k,
                      std::uint32_t cap = oracle_default_cap);

// Exact intersection number i_0(g_level, P), computed through the key
// expansion of P instead of elimination.  Write P = q g_level + r (the
// quotient part has infinite valuation along g_level) and expand r uniquely
// in the digit-bounded basis x^a g_0^{b_0} .. g_{level-1}^{b_{level-1}} with
// b_i < n_{i+1}.  Each basis monomial takes the value
// a v_0/e_level + sum_i b_i v_{i+1}/e_level under the valuation of g_level --
// these are the identities certified for every level pair at assembly time --
// and distinct digit tuples take distinct values (uniqueness of the digit
// representation in the value semigroup), so the terms cannot cancel and the
// minimum term value is i_0(g_level, P) exactly.  No elimination is run,
// which keeps pairs of high contact as cheap as separated ones.
// The value is certified when strictly below min(common precision, cap);
// otherwise the exhausted marker is returned, as with intersection_number.
intersection_result key_valuation(const key_tower& G, int level, const y_poly& P,
                                  std::uint32_t cap = oracle_default_cap);
intersection_result key_valuation(const key_tower& G, const y_poly& P,
                                  std::uint32_t cap = oracle_default_cap);

enum class am_status { certified_equisingular, inconclusive };

struct am_token {
    am_status status = am_status::inconclusive;
    bool mult_ok = false;         // mult_x(g) == v_0
    bool i0_finite = false;
    std::int64_t i0 = 0;          // meaningful iff i0_finite
    std::int64_t bound = 0;       // e_{h-1} v_h
};

// Abhyankar-Moh criterion: mult_x(g) = v_0 and i_0(f, g) > e_{h-1} v_h force
// g irreducible with the same semigroup as f
am_token am_criterion(const key_tower& f, const y_poly& g,
                      std::uint32_t cap = oracle_default_cap);

} // namespace branches
