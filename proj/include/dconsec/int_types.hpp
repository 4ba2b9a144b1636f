#ifndef DCONSEC_INT_TYPES_HPP
#define DCONSEC_INT_TYPES_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace dconsec {

// Exact arithmetic used everywhere. Counts stay within a few hundred bits at
// the sizes we enumerate (64! ~ 10^89); cpp_int grows as needed.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binomial coefficient with the index conventions the counting formulas rely
// on: C(a,-1) = 0 except C(-1,-1) = 1, and 0 whenever b < -1 or b > a >= 0.
// Upper indices below -1 never occur in a correct formula, so they throw
// std::domain_error instead of extending the convention.
Int binomial(long long a, long long b);

// Exact m!, m >= 0. Negative m throws std::domain_error.
Int factorial(long long m);

}  // namespace dconsec

#endif
