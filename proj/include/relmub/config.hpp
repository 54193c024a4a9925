#pragma once

#include <cstdint>

namespace relmub::limits {

// Oracle-style checks blow up exponentially; these caps make them fail
// loudly instead of hanging.  All values are compile-time defaults and
// every capped entry point also accepts an explicit override.

// verify_frobenius builds n^2 x n^3 boolean matrices.
inline constexpr int frobenius_max_n = 8;

// Subset-scan oracles iterate all 2^n - 1 nonempty subsets.
inline constexpr int oracle_max_n = 12;

// Fast-mode unbiased-point enumeration emits one transversal per element
// of the cartesian product of the blocks.
inline constexpr std::uint64_t transversal_enum_cap = 1u << 20;

// Finite-field Latin square generation.
inline constexpr int gf_order_cap = 16;

// Exhaustive square enumeration / orthogonal-mate search.
inline constexpr int square_order_cap = 7;

// max_mccs works through the MOLS reduction up to this set size.
inline constexpr int mccs_set_size_cap = 49;

// Direct search over partition families.
inline constexpr int direct_mccs_cap = 9;

}  // namespace relmub::limits
