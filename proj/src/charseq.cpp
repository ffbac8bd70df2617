#include "branches/charseq.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

namespace branches {

char_sequence char_sequence::validate(const std::vector<std::int64_t>& raw) {
    if (raw.empty()) throw char1_violation("empty sequence");
    for (std::int64_t x : raw) {
        if (x <= 0) throw char1_violation("entries must be positive");
        if (x > 1000000) throw char1_violation("entry " + std::to_string(x) + " out of range");
    }
    char_sequence s;
    s.v_ = raw;
    s.e_.resize(raw.size());
    s.e_[0] = raw[0];
    for (std::size_t k = 1; k < raw.size(); k++) {
        s.e_[k] = std::gcd(s.e_[k - 1], raw[k]);
        if (s.e_[k] >= s.e_[k - 1])
            throw char1_violation("gcd chain does not strictly decrease at index " +
                                  std::to_string(k));
    }
    if (s.e_.back() != 1)
        throw char1_violation("gcd chain ends at " + std::to_string(s.e_.back()) + ", not 1");
    for (int k = 1; k + 1 <= s.h(); k++) {
        if (s.e_[k - 1] * s.v_[k] >= s.e_[k] * s.v_[k + 1])
            throw char2_violation("growth condition fails at k = " + std::to_string(k), k);
    }
    return s;
}

ext_int char_sequence::v_ext(int k) const {
    if (k == h() + 1) return ext_int::infinity();
    return ext_int(v_.at(k));
}

std::int64_t char_sequence::e(int k) const {
    if (k == -1) return 0;
    return e_.at(k);
}

std::int64_t char_sequence::n(int k) const {
    assert(k >= 1 && k <= h());
    return e_[k - 1] / e_[k];
}

char_sequence char_sequence::scaled_prefix(int k) const {
    assert(k >= 0 && k <= h());
    std::vector<std::int64_t> w;
    for (int i = 0; i <= k; i++) w.push_back(v_[i] / e_[k]);
    return validate(w);
}

std::vector<std::int64_t> bezout_relation(const char_sequence& s, int k) {
    if (k < 1 || k > s.h()) throw bad_input("bezout index k out of range");
    std::int64_t N = s.n(k) * s.v(k);
    std::vector<std::int64_t> a(k, 0);
    for (int i = k - 1; i >= 1; i--) {
        // unique digit in [0, n_i) with N - a_i v_i divisible by e_{i-1}
        bool found = false;
        for (std::int64_t d = 0; d < s.n(i); d++) {
            if ((N - d * s.v(i)) % s.e(i - 1) == 0) {
                a[i] = d;
                N -= d * s.v(i);
                found = true;
                break;
            }
        }
        assert(found);
        (void)found;
    }
    assert(N % s.v(0) == 0);
    a[0] = N / s.v(0);
    assert(a[0] > 0);
    return a;
}

std::int64_t conductor(const char_sequence& s) {
    std::int64_t c = 1 - s.v(0);
    for (int k = 1; k <= s.h(); k++) c += (s.n(k) - 1) * s.v(k);
    return c;
}

std::vector<ext_int> apery_table(std::int64_t m, const std::vector<std::int64_t>& gens) {
    assert(m >= 1);
    std::vector<ext_int> least(static_cast<std::size_t>(m), ext_int::infinity());
    least[0] = ext_int(0);
    // saturating relaxation; m is tiny here so no need for anything smarter
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::int64_t r = 0; r < m; r++) {
            if (least[r].is_infinite()) continue;
            for (std::int64_t g : gens) {
                std::int64_t nr = (r + g) % m;
                ext_int cand = ext_int(least[r].value() + g);
                if (cand < least[nr]) {
                    least[nr] = cand;
                    changed = true;
                }
            }
        }
    }
    return least;
}

bool semigroup_contains(const char_sequence& s, std::int64_t N) {
    if (N < 0) return false;
    static thread_local std::vector<std::int64_t> cached_v;
    static thread_local std::vector<ext_int> cached_table;
    if (cached_v != s.v()) {
        cached_v = s.v();
        std::vector<std::int64_t> gens(s.v().begin() + 1, s.v().end());
        cached_table = apery_table(s.v(0), gens);
    }
    const ext_int& least = cached_table[static_cast<std::size_t>(N % s.v(0))];
    return ext_int(N) >= least;
}

std::vector<std::int64_t> gaps(const char_sequence& s) {
    std::vector<std::int64_t> out;
    std::int64_t c = conductor(s);
    for (std::int64_t t = 1; t < c; t++)
        if (!semigroup_contains(s, t)) out.push_back(t);
    return out;
}

bool minimal_generators_check(const char_sequence& s) {
    // (gen 1) pins v_0 to i_0(f, x), not to the semigroup minimum, so v_1 < v_0
    // is fine; only the k >= 1 minimality conditions are checked
    for (int k = 1; k <= s.h(); k++) {
        std::vector<std::int64_t> prefix(s.v().begin(), s.v().begin() + k);
        std::vector<std::int64_t> gens(prefix.begin() + 1, prefix.end());
        auto table = apery_table(prefix[0], gens);
        auto in_prefix = [&](std::int64_t N) {
            return ext_int(N) >= table[static_cast<std::size_t>(N % prefix[0])];
        };
        for (std::int64_t t = 1; t <= s.v(k); t++) {
            if (semigroup_contains(s, t) && !in_prefix(t)) {
                if (t != s.v(k)) return false;
                break;
            }
        }
        if (in_prefix(s.v(k))) return false;
    }
    return true;
}

std::optional<std::vector<std::int64_t>> weight_decomposition(const char_sequence& s,
                                                              std::int64_t N) {
    if (N <= 0) return std::nullopt;
    const int h = s.h();
    // y-degree contributed by one power of the level-(i-1) key polynomial
    std::vector<std::int64_t> ydeg(h + 1, 0);
    for (int i = 1; i <= h; i++) ydeg[i] = s.v(0) / s.e(i - 1);

    std::vector<std::int64_t> a(h + 1, 0);
    // odometer over (a_h, ..., a_1) in ascending lexicographic order
    while (true) {
        std::int64_t used = 0, deg = 0;
        for (int i = 1; i <= h; i++) {
            used += a[i] * s.v(i);
            deg += a[i] * ydeg[i];
        }
        if (used <= N - s.v(0) && deg < s.v(0) && (N - used) % s.v(0) == 0) {
            a[0] = (N - used) / s.v(0);
            return a;
        }
        // advance: a_1 is the least significant digit, so (a_h, ..., a_1)
        // runs in ascending lexicographic order
        int i = 1;
        while (i <= h) {
            a[i]++;
            if (a[i] * s.v(i) <= N && a[i] * ydeg[i] < s.v(0)) break;
            a[i] = 0;
            i++;
        }
        if (i > h) return std::nullopt;
    }
}

char_sequence random_charseq(seed_stream& rng, const charseq_options& opt) {
    if (opt.smooth_probability > 0 && rng.coin(opt.smooth_probability))
        return char_sequence::validate({1});

    for (int attempt = 0; attempt < 1000; attempt++) {
        int h = static_cast<int>(rng.uniform(1, opt.max_h));
        std::vector<std::int64_t> n(h + 1, 1);
        std::int64_t v0 = 1;
        bool ok = true;
        for (int k = 1; k <= h; k++) {
            n[k] = opt.n_pool[static_cast<std::size_t>(
                rng.uniform(0, static_cast<std::int64_t>(opt.n_pool.size()) - 1))];
            v0 *= n[k];
        }
        if (v0 > opt.max_v0) continue;
        std::vector<std::int64_t> e(h + 1, 1);
        for (int k = h - 1; k >= 0; k--) e[k] = e[k + 1] * n[k + 1];
        assert(e[0] == v0);

        std::vector<std::int64_t> v(h + 1);
        v[0] = v0;
        for (int k = 1; k <= h && ok; k++) {
            // (char 2) at k-1 forces v_k > n_{k-1} v_{k-1}; transversality
            // (when asked) forces v_1 > v_0
            std::int64_t lo = 0;
            if (k >= 2) lo = n[k - 1] * v[k - 1];
            if (k == 1 && opt.require_transverse) lo = v0;
            std::int64_t mlo = lo / e[k] + 1;
            bool got = false;
            for (int tries = 0; tries < 50; tries++) {
                std::int64_t m = rng.uniform(std::max<std::int64_t>(1, mlo), mlo + opt.window);
                if (std::gcd(m, n[k]) != 1) continue;
                v[k] = e[k] * m;
                if (v[k] <= lo) continue;
                got = true;
                break;
            }
            if (!got) ok = false;
        }
        if (!ok) continue;
        return char_sequence::validate(v);
    }
    throw domain_error("GeneratorStuck", "random_charseq failed to produce a sequence");
}

} // namespace branches
