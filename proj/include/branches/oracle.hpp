#pragma once

#include <cstdint>

#include "branches/series.hpp"

namespace branches {

// Ground truth for the whole library: the intersection multiplicity
// i_0(f, g) = ord_x Res_y(f, g) at the origin, evaluated exactly on the
// truncated representatives.  An answer is only reported when it is strictly
// below the working precision, which makes it exact for the underlying
// series; otherwise the working precision is doubled, and past the cap (or
// the precision the inputs carry) the marker result is returned.
struct intersection_result {
    bool exhausted = false;
    std::int64_t value = 0;        // meaningful iff !exhausted
    std::uint32_t precision_used = 0;

    bool operator==(const intersection_result&) const = default;
};

inline constexpr std::uint32_t oracle_initial_precision = 64;
inline constexpr std::uint32_t oracle_default_cap = 4096;

// floor > 0 starts the precision ladder just above that value instead of at
// the bottom rung; useful when the caller already knows a lower bound for the
// answer (the result is identical, the low rungs are simply skipped)
intersection_result intersection_number(const y_poly& f, const y_poly& g,
                                        std::uint32_t cap = oracle_default_cap,
                                        std::uint32_t floor = 0);
intersection_result intersection_number(const branch_poly& f, const branch_poly& g,
                                        std::uint32_t cap = oracle_default_cap,
                                        std::uint32_t floor = 0);
intersection_result intersection_number(const branch_poly& f, const y_poly& g,
                                        std::uint32_t cap = oracle_default_cap,
                                        std::uint32_t floor = 0);

// same, but PrecisionExhausted becomes a thrown error
std::int64_t intersection_number_checked(const y_poly& f, const y_poly& g,
                                         std::uint32_t cap = oracle_default_cap);
std::int64_t intersection_number_checked(const branch_poly& f, const branch_poly& g,
                                         std::uint32_t cap = oracle_default_cap);

// Sylvester resultant with respect to y, computed as an exact fraction-free
// (Bareiss) determinant over the polynomial ring in x and truncated to the
// common precision at the end.  Used as the independent cross-check for the
// reduction behind intersection_number; quadratic-ish degree growth makes it
// the slow path, so nothing hot calls it.
x_series resultant_y(const y_poly& f, const y_poly& g);
x_series resultant_y(const branch_poly& f, const branch_poly& g);

// contact measured against the reference line x = 0:
//   dx(f, g) = i_0(f, g) / (i_0(f, x) i_0(g, x))
big_rational contact_dx(const y_poly& f, const y_poly& g, std::uint32_t cap = oracle_default_cap);
big_rational contact_dx(const branch_poly& f, const branch_poly& g,
                        std::uint32_t cap = oracle_default_cap);

// coordinate-free logarithmic distance i_0(f, g) / (ord f * ord g)
big_rational logdist(const y_poly& f, const y_poly& g, std::uint32_t cap = oracle_default_cap);
big_rational logdist(const branch_poly& f, const branch_poly& g,
                     std::uint32_t cap = oracle_default_cap);

} // namespace branches
