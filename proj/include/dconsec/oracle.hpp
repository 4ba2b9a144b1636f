#ifndef DCONSEC_ORACLE_HPP
#define DCONSEC_ORACLE_HPP

#include <stdexcept>

#include "dconsec/int_types.hpp"

namespace dconsec {

// Raised instead of starting a search that would run for hours; the force
// flag overrides it.
struct OracleBoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Largest n the oracle accepts without force.
inline constexpr int kOraclePracticalBound = 13;

/* Exhaustive count by pruned backtracking, filling positions left to right.
 *
 * d >= 1 (linear): placing v at position p is rejected when p > d and
 * |v - pi(p-d)| = d.
 * d == 0 (circular): |pi(i+1) - pi(i)| must avoid {1, n-1} for all i
 * cyclically; the wrap pair is checked when the last seat is filled. A lone
 * diner (n = 1) counts as 1.
 *
 * n above the practical bound throws OracleBoundError unless force is set;
 * n > 20 always throws (the subtree counters are 64-bit).
 */
Int oracle_count(int n, int d, bool force = false);

// Same value: the tree is split into the independent subtrees below every
// valid prefix of length split_depth (clamped to n) and the subtree counts,
// taken in deterministic lexicographic order, are summed by `workers`
// threads.
Int oracle_count_parallel(int n, int d, int split_depth, int workers, bool force = false);

// Permutations satisfying the inverse-form condition |pi^{-1}(i+d) -
// pi^{-1}(i)| != d for 1 <= i <= n-d (values d apart never sit d apart);
// d >= 1. Equinumerous with oracle_count via pi -> pi^{-1}, counted
// independently as a check of that bijection.
Int inverse_condition_count(int n, int d, bool force = false);

}  // namespace dconsec

#endif
