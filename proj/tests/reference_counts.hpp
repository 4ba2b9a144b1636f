#ifndef DCONSEC_TESTS_REFERENCE_COUNTS_HPP
#define DCONSEC_TESTS_REFERENCE_COUNTS_HPP

// Known counts for distances 0..3 and n = 1..16. Columns d = 0, 1, 2 are
// OEIS A089222, A002464 and A110128; the d = 3 column extends the family.
inline constexpr long long kReferenceCounts[16][4] = {
    {1, 1, 1, 1},
    {0, 0, 2, 2},
    {0, 0, 4, 6},
    {0, 2, 16, 20},
    {10, 14, 44, 80},
    {36, 90, 200, 384},
    {322, 646, 1288, 2240},
    {2832, 5242, 9512, 15424},
    {27954, 47622, 78652, 123456},
    {299260, 479306, 744360, 1110928},
    {3474482, 5296790, 7867148, 11287232},
    {43546872, 63779034, 91310696, 127016304},
    {586722162, 831283558, 1154292796, 1565107248},
    {8463487844, 11661506218, 15784573160, 20935873872},
    {130214368530, 175203184374, 232050062524, 301974271248},
    {2129319003680, 2806878055610, 3648471927912, 4669727780624},
};

inline constexpr long long reference_count(int n, int d)
{
    return kReferenceCounts[n - 1][d];
}

#endif
