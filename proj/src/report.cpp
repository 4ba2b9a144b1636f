#include "dconsec/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dconsec/asymptotics.hpp"
#include "dconsec/cache.hpp"
#include "dconsec/counts.hpp"
#include "dconsec/oracle.hpp"

namespace dconsec {

namespace {

std::vector<std::vector<std::string>> table_cells(int n_max, const std::vector<int>& d_list,
                                                  ResultCache* cache)
{
    if (n_max < 1)
        throw std::domain_error("table: n_max must be >= 1");
    if (d_list.empty())
        throw std::domain_error("table: need at least one d column");
    std::vector<std::vector<std::string>> rows;
    rows.reserve(static_cast<size_t>(n_max) + 1);

    std::vector<std::string> header{"n"};
    for (int d : d_list)
        header.push_back("d" + std::to_string(d));
    rows.push_back(std::move(header));

    for (int n = 1; n <= n_max; ++n) {
        std::vector<std::string> row{std::to_string(n)};
        for (int d : d_list)
            row.push_back(count_with_cache(n, d, cache).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string render_table(int n_max, const std::vector<int>& d_list, TableFormat format,
                         ResultCache* cache)
{
    const auto rows = table_cells(n_max, d_list, cache);
    std::string out;
    if (format == TableFormat::csv) {
        for (const auto& row : rows) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (i > 0)
                    out += ',';
                out += row[i];
            }
            out += '\n';
        }
        return out;
    }

    std::vector<size_t> width(rows[0].size(), 0);
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    for (size_t r = 0; r < rows.size(); ++r) {
        out += '|';
        for (size_t i = 0; i < rows[r].size(); ++i) {
            out += ' ';
            out.append(width[i] - rows[r][i].size(), ' ');
            out += rows[r][i];
            out += " |";
        }
        out += '\n';
        if (r == 0) {
            out += '|';
            for (size_t i = 0; i < rows[0].size(); ++i) {
                out.append(width[i] + 1, '-');
                out += "-|";
            }
            out += '\n';
        }
    }
    return out;
}

VerificationReport run_verification(int n_max, int d_max, bool force)
{
    if (n_max < 1 || d_max < 0)
        throw std::domain_error("verify: need n_max >= 1 and d_max >= 0");
    VerificationReport report;
    for (int n = 1; n <= n_max; ++n) {
        for (int d = 0; d <= d_max; ++d) {
            VerificationEntry entry;
            entry.n = n;
            entry.d = d;
            entry.formula_value = count_exact(n, d);
            entry.oracle_value = oracle_count(n, d, force);
            entry.match = entry.formula_value == entry.oracle_value;
            report.all_match = report.all_match && entry.match;
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

void write_bfile(int d, int n_max, std::ostream& out, ResultCache* cache)
{
    if (n_max < 1)
        throw std::domain_error("bfile: n_max must be >= 1");
    for (int n = 1; n <= n_max; ++n)
        out << n << ' ' << count_with_cache(n, d, cache).str() << '\n';
}

std::string render_asym_report(int d, const std::vector<int>& n_list, int digits)
{
    constexpr int kPrinted = 25;  // significant digits in the report
    const auto rows = convergence_report(d, n_list, digits);
    const std::string target = std::to_string(4 * (d - 1));
    std::ostringstream out;
    out << "n scaled_ratio e_n target distance\n";
    for (const auto& row : rows) {
        const HighPrecisionReal scaled = exact_ratio_scaled(row.n, d, digits);
        out << row.n << ' ' << scaled.to_string(kPrinted) << ' ' << row.e_n.to_string(kPrinted)
            << ' ' << target << ' ' << row.distance.to_string(kPrinted) << '\n';
    }
    return out.str();
}

}  // namespace dconsec
