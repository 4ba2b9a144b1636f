// Acceptance suite: one check per numbered criterion, one PASS/FAIL line
// each. Run with a criterion number (1..10) or no argument for all. Exits
// nonzero when any requested criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "dconsec/asymptotics.hpp"
#include "dconsec/compositions.hpp"
#include "dconsec/counts.hpp"
#include "dconsec/int_types.hpp"
#include "dconsec/oracle.hpp"
#include "reference_counts.hpp"

using namespace dconsec;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args)
{
    const std::string command = std::string(DCONSEC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr)
        return {};
    CliResult result;
    char buffer[4096];
    size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.out.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

double to_double(const Rational& q)
{
    return static_cast<double>(numerator(q)) / static_cast<double>(denominator(q));
}

// ---- criteria -------------------------------------------------------------

bool criterion_table_reproduction(std::string& detail)
{
    const auto start = Clock::now();
    const CliResult result = run_cli("table --n-max 16 --d-list 0,1,2,3 --format csv");
    const double elapsed = seconds_since(start);
    if (result.exit_code != 0) {
        detail = "table command exited with " + std::to_string(result.exit_code);
        return false;
    }
    std::ostringstream expected;
    expected << "n,d0,d1,d2,d3\n";
    for (int n = 1; n <= 16; ++n) {
        expected << n;
        for (int d = 0; d <= 3; ++d)
            expected << ',' << reference_count(n, d);
        expected << '\n';
    }
    std::ostringstream note;
    note << "64/64 grid values, " << elapsed << "s";
    detail = note.str();
    if (result.out != expected.str()) {
        detail = "table output differs from the 16x4 reference grid";
        return false;
    }
    return elapsed < 60.0;
}

bool criterion_oracle_equivalence(std::string& detail)
{
    const auto start = Clock::now();
    int cells = 0;
    for (int n = 1; n <= 10; ++n)
        for (int d = 0; d <= n + 1; ++d) {
            ++cells;
            if (count_exact(n, d) != oracle_count(n, d)) {
                detail = "mismatch at n=" + std::to_string(n) + " d=" + std::to_string(d);
                return false;
            }
        }
    const double elapsed = seconds_since(start);
    std::ostringstream note;
    note << cells << " cells exact, " << elapsed << "s";
    detail = note.str();
    return elapsed < 120.0;
}

bool criterion_named_values(std::string& detail)
{
    detail = "n=8: d=0 gives 2832, d=1 gives 5242, d=2 gives 9512";
    return count_exact(8, 0) == 2832 && count_exact(8, 1) == 5242 && count_exact(8, 2) == 9512;
}

bool criterion_robbins_reduction(std::string& detail)
{
    int checked = 0;
    for (int n = 1; n <= 12; ++n)
        for (int r = 1; r <= n; ++r)
            for (int c = 1; c <= r; ++c) {
                Int sum = 0;
                for (const Composition& parts : CompositionRange(r, c))
                    sum += q_value(n, 1, parts);
                if (sum != binomial(r - 1, c - 1) * binomial(n - r, c) * factorial(c)) {
                    detail = "identity broken at n=" + std::to_string(n) + " r=" + std::to_string(r)
                             + " c=" + std::to_string(c);
                    return false;
                }
                ++checked;
            }
    detail = std::to_string(checked) + " (n,r,c) triples exact";
    return true;
}

bool criterion_d0_validity_domain(std::string& detail)
{
    if (count_d0_formula(1) != -1 || count_d0_formula(2) != -2) {
        detail = "raw sum no longer yields -1, -2 at n = 1, 2";
        return false;
    }
    if (count_d0(1) != 1 || count_d0(2) != 0) {
        detail = "dispatcher special cases broken";
        return false;
    }
    for (int n = 3; n <= 10; ++n)
        if (count_d0_formula(n) != oracle_count(n, 0)) {
            detail = "raw sum diverges from brute force at n=" + std::to_string(n);
            return false;
        }
    detail = "raw sum = brute force on 3..10; -1/-2 at n=1,2 as documented";
    return true;
}

bool criterion_free_case(std::string& detail)
{
    for (int n = 1; n <= 12; ++n) {
        const Int expected = factorial(n);
        for (int d : {n, n + 1, 2 * n, 63})
            if (count_exact(n, d) != expected) {
                detail = "free case broken at n=" + std::to_string(n) + " d=" + std::to_string(d);
                return false;
            }
    }
    detail = "count = n! for d >= n, n <= 12";
    return true;
}

bool criterion_first_order(std::string& detail)
{
    std::ostringstream note;
    for (int d : {2, 3}) {
        const auto rows = convergence_report(d, {8, 16}, 30);
        if (!rows[1].distance.certainly_less(rows[0].distance)) {
            detail = "distance to 4(d-1) did not shrink for d=" + std::to_string(d);
            return false;
        }
        note << "d=" << d << ": " << to_double(rows[0].distance.value()) << " -> "
             << to_double(rows[1].distance.value()) << "  ";
    }
    detail = note.str();
    return true;
}

bool criterion_series_decay(std::string& detail)
{
    bool ok = true;
    std::ostringstream note;
    for (int d : {0, 1}) {
        const HighPrecisionReal scaled8 = exact_ratio_scaled(8, d, 40);
        const HighPrecisionReal scaled16 = exact_ratio_scaled(16, d, 40);
        const Rational err8 = abs(scaled8.value() - series_bracket(d, 8, 5));
        const Rational err16 = abs(scaled16.value() - series_bracket(d, 16, 5));
        const Rational err8_low = err8 - scaled8.error_bound();
        const Rational err16_high = err16 + scaled16.error_bound();
        const bool branch = err16_high * 32 <= err8_low;
        note << "d=" << d << ": err(8)=" << to_double(err8) << " err(16)=" << to_double(err16)
             << " ratio=" << to_double(err8 / err16) << (branch ? " ok" : " BELOW 32") << "  ";
        ok = ok && branch;
    }
    detail = note.str();
    return ok;
}

bool criterion_parallel_determinism(std::string& detail)
{
    int runs = 0;
    for (int n = 1; n <= 9; ++n)
        for (int d = 0; d <= 4; ++d) {
            const Int expected = oracle_count(n, d);
            for (int split = 0; split <= 3; ++split)
                for (int workers : {1, 2, 4}) {
                    ++runs;
                    if (oracle_count_parallel(n, d, split, workers) != expected) {
                        detail = "divergence at n=" + std::to_string(n) + " d=" + std::to_string(d)
                                 + " split=" + std::to_string(split)
                                 + " workers=" + std::to_string(workers);
                        return false;
                    }
                }
        }
    detail = std::to_string(runs) + " parallel runs equal sequential";
    return true;
}

bool criterion_inversion_symmetry(std::string& detail)
{
    int cells = 0;
    for (int n = 1; n <= 9; ++n)
        for (int d = 1; d <= n; ++d) {
            ++cells;
            if (inverse_condition_count(n, d) != oracle_count(n, d)) {
                detail = "inverse count differs at n=" + std::to_string(n) + " d="
                         + std::to_string(d);
                return false;
            }
        }
    detail = std::to_string(cells) + " cells exact";
    return true;
}

struct Criterion {
    int number;
    const char* name;
    bool (*check)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "table reproduction (n<=16, d=0..3, <60s)", criterion_table_reproduction},
    {2, "formula = brute force (n<=10, d<=n+1, <120s)", criterion_oracle_equivalence},
    {3, "classic n=8 counts across topologies", criterion_named_values},
    {4, "composition sums of the d=1 kernel", criterion_robbins_reduction},
    {5, "circular sum validity domain", criterion_d0_validity_domain},
    {6, "free case n! for d >= n", criterion_free_case},
    {7, "first-order convergence (d=2,3)", criterion_first_order},
    {8, "order-5 series decay (d=0,1)", criterion_series_decay},
    {9, "parallel oracle determinism", criterion_parallel_determinism},
    {10, "inversion symmetry", criterion_inversion_symmetry},
};

}  // namespace

int main(int argc, char** argv)
{
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > 10) {
            std::cerr << "usage: acceptance [1..10]\n";
            return 2;
        }
    }

    int failures = 0;
    for (const Criterion& criterion : kCriteria) {
        if (only != 0 && criterion.number != only)
            continue;
        std::string detail;
        const bool ok = criterion.check(detail);
        failures += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << criterion.number << ". " << criterion.name
                  << "  [" << detail << "]\n";
    }
    return failures == 0 ? 0 : 1;
}
