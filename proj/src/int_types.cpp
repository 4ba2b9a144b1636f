#include "dconsec/int_types.hpp"

#include <algorithm>
#include <stdexcept>

namespace dconsec {

Int binomial(long long a, long long b)
{
    if (a < -1)
        throw std::domain_error("binomial: upper index below -1");
    if (b == -1)
        return a == -1 ? 1 : 0;
    if (b < 0 || a == -1 || b > a)
        return 0;
    b = std::min(b, a - b);
    // multiplicative form; every intermediate quotient is exact
    Int result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;
    }
    return result;
}

Int factorial(long long m)
{
    if (m < 0)
        throw std::domain_error("factorial: negative argument");
    Int result = 1;
    for (long long i = 2; i <= m; ++i)
        result *= i;
    return result;
}

}  // namespace dconsec
