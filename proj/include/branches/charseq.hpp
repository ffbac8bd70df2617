#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "branches/errors.hpp"
#include "branches/extint.hpp"
#include "branches/rng.hpp"

namespace branches {

// A characteristic sequence (v_0, ..., v_h) with respect to the reference
// line x = 0, together with the derived gcd chain e_k = gcd(v_0..v_k) and the
// quotients n_k = e_{k-1}/e_k.  Validity:
//   (1) the e-chain is strictly decreasing and ends at e_h = 1
//   (2) e_{k-1} v_k < e_k v_{k+1} for 1 <= k <= h-1
// Note v_1 < v_0 is allowed; only the two conditions above are law.
class char_sequence {
public:
    explicit char_sequence(const std::vector<std::int64_t>& raw) { *this = validate(raw); }

    // throws char1_violation / char2_violation
    static char_sequence validate(const std::vector<std::int64_t>& raw);

    int h() const { return static_cast<int>(v_.size()) - 1; }
    const std::vector<std::int64_t>& v() const { return v_; }
    const std::vector<std::int64_t>& e() const { return e_; }

    std::int64_t v(int k) const { return v_.at(k); }
    // v_k with the convention v_{h+1} = +infinity
    ext_int v_ext(int k) const;
    // e_k with the convention e_{-1} = 0
    std::int64_t e(int k) const;
    std::int64_t n(int k) const; // n_k = e_{k-1}/e_k, 1 <= k <= h

    // characteristic sequence of the degree-(v_0/e_k) truncation level:
    // (v_0/e_k, ..., v_k/e_k)
    char_sequence scaled_prefix(int k) const;

    friend bool operator==(const char_sequence&, const char_sequence&) = default;

private:
    char_sequence() = default;

    std::vector<std::int64_t> v_;
    std::vector<std::int64_t> e_;
};

// the unique (a_0, ..., a_{k-1}) with n_k v_k = sum a_i v_i, a_0 > 0 and
// 0 <= a_i < n_i for i >= 1
std::vector<std::int64_t> bezout_relation(const char_sequence& s, int k);

std::int64_t conductor(const char_sequence& s);

// membership in the value semigroup generated by v_0, ..., v_h
bool semigroup_contains(const char_sequence& s, std::int64_t N);

std::vector<std::int64_t> gaps(const char_sequence& s);

// checks that each v_k (k >= 1) is the smallest semigroup element outside
// <v_0, ..., v_{k-1}>, and that v_0 is the smallest positive element
bool minimal_generators_check(const char_sequence& s);

// Writes N = a_0 v_0 + ... + a_h v_h with a_0 > 0, picking the
// lexicographically smallest (a_h, ..., a_1) and then a_0.  Tuples whose
// matching key-polynomial product would reach y-degree above v_0 are skipped
// so the result can always be added to a monic branch polynomial.
// Returns nullopt when no such decomposition exists.
std::optional<std::vector<std::int64_t>> weight_decomposition(const char_sequence& s,
                                                              std::int64_t N);

// Apery-style table: for the generators gens and modulus m, entry r holds the
// least nonnegative-combination value congruent to r mod m (infinite when the
// residue class is unreachable).
std::vector<ext_int> apery_table(std::int64_t m, const std::vector<std::int64_t>& gens);

struct charseq_options {
    int max_h = 3;
    std::int64_t max_v0 = 12;
    std::vector<std::int64_t> n_pool = {2, 3};
    std::int64_t window = 6;          // slack above each forced lower bound
    bool require_transverse = false;  // force v_1 > v_0
    double smooth_probability = 0.0;  // chance of returning (1)
};

char_sequence random_charseq(seed_stream& rng, const charseq_options& opt = {});

} // namespace branches
