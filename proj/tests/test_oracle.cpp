#include <doctest.h>

#include <stdexcept>

#include "dconsec/int_types.hpp"
#include "dconsec/oracle.hpp"
#include "reference_counts.hpp"

using dconsec::factorial;
using dconsec::Int;
using dconsec::inverse_condition_count;
using dconsec::kOraclePracticalBound;
using dconsec::oracle_count;
using dconsec::oracle_count_parallel;
using dconsec::OracleBoundError;

TEST_CASE("oracle_count: reference values")
{
    CHECK(oracle_count(8, 2) == 9512);
    CHECK(oracle_count(5, 0) == 10);
    CHECK(oracle_count(6, 3) == 384);
    CHECK(oracle_count(1, 0) == 1);
}

TEST_CASE("oracle_count: first ten rows of the four known columns")
{
    for (int n = 1; n <= 10; ++n)
        for (int d = 0; d <= 3; ++d)
            CHECK(oracle_count(n, d) == reference_count(n, d));
}

TEST_CASE("oracle_count: free case")
{
    for (int n = 1; n <= 9; ++n) {
        CHECK(oracle_count(n, n) == factorial(n));
        CHECK(oracle_count(n, n + 2) == factorial(n));
    }
}

TEST_CASE("oracle_count: practical bound refusal")
{
    CHECK_THROWS_AS(oracle_count(kOraclePracticalBound + 1, 1), OracleBoundError);
    CHECK_THROWS_AS(oracle_count_parallel(kOraclePracticalBound + 1, 1, 2, 4), OracleBoundError);
    CHECK_THROWS_AS(inverse_condition_count(kOraclePracticalBound + 1, 1), OracleBoundError);
    CHECK_THROWS_AS(oracle_count(25, 1, true), std::domain_error);  // beyond the 64-bit counter
    CHECK_THROWS_AS(oracle_count(0, 1), std::domain_error);
}

TEST_CASE("oracle_count_parallel: reference values")
{
    CHECK(oracle_count_parallel(8, 2, 2, 4) == 9512);
    CHECK(oracle_count_parallel(10, 1, 3, 8) == 479306);
    CHECK(oracle_count_parallel(6, 2, 0, 1) == oracle_count(6, 2));
}

TEST_CASE("oracle_count_parallel: equals sequential on a grid")
{
    for (int n = 1; n <= 7; ++n)
        for (int d = 0; d <= 4; ++d) {
            const Int expected = oracle_count(n, d);
            for (int split = 0; split <= 3; ++split)
                for (int workers : {1, 2, 4})
                    CHECK(oracle_count_parallel(n, d, split, workers) == expected);
        }
    // split deeper than the board
    CHECK(oracle_count_parallel(5, 2, 9, 3) == oracle_count(5, 2));
}

TEST_CASE("inverse_condition_count: reference values")
{
    CHECK(inverse_condition_count(8, 2) == 9512);
    CHECK(inverse_condition_count(4, 1) == 2);
    CHECK(inverse_condition_count(1, 1) == 1);
    CHECK_THROWS_AS(inverse_condition_count(5, 0), std::domain_error);
}

TEST_CASE("inverse_condition_count: equals the positional count")
{
    for (int n = 1; n <= 8; ++n)
        for (int d = 1; d <= n; ++d)
            CHECK(inverse_condition_count(n, d) == oracle_count(n, d));
}
