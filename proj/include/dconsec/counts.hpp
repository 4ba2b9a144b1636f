#ifndef DCONSEC_COUNTS_HPP
#define DCONSEC_COUNTS_HPP

#include <vector>

#include "dconsec/int_types.hpp"

namespace dconsec {

// One counting instance: permutations pi of {1..n} with |pi(i+d) - pi(i)| != d
// for 1 <= i <= n-d. d == 0 selects the circular-adjacency variant instead of
// the degenerate distance-0 reading.
struct CountSpec {
    int n = 1;
    int d = 0;
};

// sizes[k-1] = |{1 <= i <= n : i == k (mod d)}| for k = 1..d, the class k = d
// collecting the multiples of d. Requires n >= 1 and d >= 1 (the circular
// case has no residue decomposition).
std::vector<int> residue_profile(int n, int d);

/* The redistribution kernel q_{n,d}(L): summed over all assignments of the c
 * parts of L to the d residue classes (classes may be empty) that fit, the
 * number of ordered placements, i.e. prod_k C(n_k - s_k, b_k) * b_k! where
 * block k received b_k parts of total size s_k and assignments with
 * s_k > n_k are skipped. Depends on L only through its multiset of parts;
 * parts must be >= 1; the empty list gives 1.
 *
 * Production path: dynamic program distributing the part multiset block by
 * block, memoized on (n, d, sorted parts). Safe to call concurrently.
 */
Int q_value(int n, int d, const std::vector<int>& parts);

// Same value by literal enumeration of all d^c block assignments. Exponential
// in c; reference path for cross-checking (fine for c <= 10).
Int q_value_by_enumeration(int n, int d, const std::vector<int>& parts);

// Circular case, the alternating double sum with the exact-rational factor
// (n/(n-r))^2. count_d0_formula evaluates the sum verbatim and asserts
// integrality; it matches the true counts only from n = 3 on (it yields -1
// and -2 at n = 1, 2). count_d0 special-cases n <= 2 to the true 1 and 0.
Int count_d0_formula(int n);
Int count_d0(int n);

// Linear d = 1 double sum (all-integer arithmetic).
Int count_d1(int n);

/* General case 2 <= d <= n-1: per residue class k, sum over r_k in
 * [0, n_k - 1], c_k in [0, r_k] and the compositions of r_k into c_k positive
 * parts, of (-1)^r 2^c (n-r-c)! prod_k C(n_k - r_k, c_k) q_{n,d}(L).
 *
 * count_general collapses the composition sums to partitions weighted by the
 * number of orderings (the kernel only sees the part multiset);
 * count_general_by_compositions walks the literal compositions with the
 * enumerated kernel so the two routes cross-check.
 */
Int count_general(int n, int d);
Int count_general_by_compositions(int n, int d);

// Dispatcher: d = 0 circular, d = 1 linear, 2 <= d <= n-1 the general
// theorem, and d >= n free (the condition range is empty, so n!).
Int count_exact(const CountSpec& spec);
Int count_exact(int n, int d);

}  // namespace dconsec

#endif
