#ifndef DCONSEC_REPORT_HPP
#define DCONSEC_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "dconsec/int_types.hpp"

namespace dconsec {

class ResultCache;

enum class TableFormat { csv, markdown };

/* Grid of exact counts, one row per n = 1..n_max, one column per requested d.
 * CSV is the stable wire format: header "n,d0,d1,...", decimal cells, one
 * "\n" per row. Markdown is cosmetic (aligned pipes).
 */
std::string render_table(int n_max, const std::vector<int>& d_list, TableFormat format,
                         ResultCache* cache = nullptr);

struct VerificationEntry {
    int n = 0;
    int d = 0;
    Int formula_value;
    Int oracle_value;
    bool match = false;
};

struct VerificationReport {
    std::vector<VerificationEntry> entries;
    bool all_match = true;
};

// Formula vs brute force over the grid 1 <= n <= n_max, 0 <= d <= d_max,
// ordered by (n, d).
VerificationReport run_verification(int n_max, int d_max, bool force = false);

// OEIS b-file: ascending "n a(n)" lines from n = 1, single space, no header,
// every line newline-terminated, no trailing blank line.
void write_bfile(int d, int n_max, std::ostream& out, ResultCache* cache = nullptr);

// Convergence table for the first-order law: per n the scaled ratio
// (a_{n,d}/n!) e^2, the coefficient estimate e_n = n (ratio - 1), the limit
// 4(d-1) and the distance to it, at 25 significant digits.
std::string render_asym_report(int d, const std::vector<int>& n_list,
                               int digits = 30);

}  // namespace dconsec

#endif
