// dconsec: exact counts of permutations with no value pair at distance d in
// positions at distance d (d = 0: circular neighbor avoidance).
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 oracle refused (n above the practical bound without --force), 4 I/O error.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dconsec/asymptotics.hpp"
#include "dconsec/cache.hpp"
#include "dconsec/counts.hpp"
#include "dconsec/oracle.hpp"
#include "dconsec/report.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;
constexpr int kExitIo = 4;

struct CacheSession {
    std::string path;
    std::unique_ptr<dconsec::ResultCache> cache;

    void open(const std::string& p)
    {
        path = p;
        cache = std::make_unique<dconsec::ResultCache>(dconsec::ResultCache::load(p));
    }
    void close() const
    {
        if (cache)
            cache->save(path);
    }
    dconsec::ResultCache* get() const { return cache.get(); }
};

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact enumeration of distance-d non-consecutive permutations"};
    app.require_subcommand(1);

    // ---- count ----
    auto* cmd_count = app.add_subcommand("count", "print a single count a(n,d)");
    int count_n = 0;
    int count_d = 0;
    std::string method = "auto";
    std::string cache_path;
    bool force = false;
    cmd_count->add_option("--n", count_n, "number of seats")->required()->check(CLI::PositiveNumber);
    cmd_count->add_option("--d", count_d, "distance (0 = circular)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd_count->add_option("--method", method, "formula|oracle|auto (auto never runs the oracle)")
        ->check(CLI::IsMember({"formula", "oracle", "auto"}));
    cmd_count->add_option("--cache", cache_path, "JSON result cache")->envname("DCONSEC_CACHE");
    cmd_count->add_flag("--force", force, "run the oracle beyond its practical bound");

    // ---- table ----
    auto* cmd_table = app.add_subcommand("table", "grid of counts for several d");
    int n_max = 0;
    std::vector<int> d_list;
    std::string format = "csv";
    cmd_table->add_option("--n-max", n_max, "largest n")->required()->check(CLI::PositiveNumber);
    cmd_table->add_option("--d-list", d_list, "comma-separated distances")
        ->required()
        ->delimiter(',')
        ->check(CLI::NonNegativeNumber);
    cmd_table->add_option("--format", format, "csv|markdown")
        ->check(CLI::IsMember({"csv", "markdown"}));
    cmd_table->add_option("--cache", cache_path, "JSON result cache")->envname("DCONSEC_CACHE");

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "formula vs brute force over a grid");
    int verify_n_max = 9;
    int verify_d_max = 5;
    cmd_verify->add_option("--n-max", verify_n_max, "largest n (default 9)")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--d-max", verify_d_max, "largest d (default 5)")
        ->check(CLI::NonNegativeNumber);
    cmd_verify->add_flag("--force", force, "allow oracle runs beyond the practical bound");

    // ---- bfile ----
    auto* cmd_bfile = app.add_subcommand("bfile", "write an OEIS b-file");
    int bfile_d = 0;
    int bfile_n_max = 0;
    std::string out_path;
    cmd_bfile->add_option("--d", bfile_d, "distance")->required()->check(CLI::NonNegativeNumber);
    cmd_bfile->add_option("--n-max", bfile_n_max, "largest n")->required()->check(CLI::PositiveNumber);
    cmd_bfile->add_option("--out", out_path, "output path")->required();
    cmd_bfile->add_option("--cache", cache_path, "JSON result cache")->envname("DCONSEC_CACHE");

    // ---- asym ----
    auto* cmd_asym = app.add_subcommand("asym", "first-order asymptotics report");
    int asym_d = 0;
    std::vector<int> asym_n_list;
    int digits = dconsec::kDefaultDigits;
    cmd_asym->add_option("--d", asym_d, "distance")->required()->check(CLI::NonNegativeNumber);
    cmd_asym->add_option("--n-list", asym_n_list, "comma-separated n values")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    cmd_asym->add_option("--digits", digits, "working precision in decimal digits")
        ->check(CLI::Range(25, 200));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)  // --help
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        CacheSession session;
        if (!cache_path.empty())
            session.open(cache_path);

        if (cmd_count->parsed()) {
            dconsec::Int value = (method == "oracle")
                                     ? dconsec::oracle_count(count_n, count_d, force)
                                     : dconsec::count_with_cache(count_n, count_d, session.get());
            std::cout << value.str() << '\n';
            session.close();
            return 0;
        }

        if (cmd_table->parsed()) {
            const auto fmt = (format == "markdown") ? dconsec::TableFormat::markdown
                                                    : dconsec::TableFormat::csv;
            std::cout << dconsec::render_table(n_max, d_list, fmt, session.get());
            session.close();
            return 0;
        }

        if (cmd_verify->parsed()) {
            const auto report = dconsec::run_verification(verify_n_max, verify_d_max, force);
            for (const auto& entry : report.entries)
                if (!entry.match)
                    std::cout << "n=" << entry.n << " d=" << entry.d
                              << " formula=" << entry.formula_value.str()
                              << " oracle=" << entry.oracle_value.str() << " MISMATCH\n";
            std::cout << "checked " << report.entries.size() << " cells: "
                      << (report.all_match ? "all match" : "MISMATCHES FOUND") << '\n';
            return report.all_match ? 0 : kExitMismatch;
        }

        if (cmd_bfile->parsed()) {
            std::ofstream out(out_path);
            if (!out.is_open()) {
                std::cerr << "cannot open " << out_path << " for writing\n";
                return kExitIo;
            }
            dconsec::write_bfile(bfile_d, bfile_n_max, out, session.get());
            out.flush();
            if (!out) {
                std::cerr << "failed writing " << out_path << '\n';
                return kExitIo;
            }
            session.close();
            return 0;
        }

        if (cmd_asym->parsed()) {
            std::cout << dconsec::render_asym_report(asym_d, asym_n_list, digits);
            return 0;
        }
    } catch (const dconsec::OracleBoundError& e) {
        std::cerr << e.what() << '\n';
        return kExitRefused;
    } catch (const dconsec::CacheIoError& e) {
        std::cerr << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
