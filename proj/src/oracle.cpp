#include "dconsec/oracle.hpp"

#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace dconsec {

namespace {

void check_bounds(int n, int d, bool force)
{
    if (n < 1)
        throw std::domain_error("oracle: n must be >= 1");
    if (d < 0)
        throw std::domain_error("oracle: d must be >= 0");
    if (n > 20)
        throw std::domain_error("oracle: n > 20 overflows the 64-bit search counters");
    if (n > kOraclePracticalBound && !force)
        throw OracleBoundError("oracle: n = " + std::to_string(n) + " exceeds the practical bound "
                               + std::to_string(kOraclePracticalBound)
                               + "; pass force to run anyway");
}

struct Search {
    int n;
    int d;  // 0 means circular
    uint64_t all_values;
    std::vector<uint64_t> partner;  // partner[v]: values that may not follow v

    Search(int n_, int d_) : n(n_), d(d_), all_values((n_ == 64) ? ~uint64_t(0) : ((uint64_t(1) << n_) - 1)),
                             partner(static_cast<size_t>(n_) + 1, 0)
    {
        const auto bit = [](int v) { return uint64_t(1) << (v - 1); };
        const int gap = (d >= 1) ? d : 1;
        for (int w = 1; w <= n; ++w) {
            if (w - gap >= 1)
                partner[static_cast<size_t>(w)] |= bit(w - gap);
            if (w + gap <= n)
                partner[static_cast<size_t>(w)] |= bit(w + gap);
            if (d == 0 && n >= 2) {  // cyclic values: |diff| = n-1 is the pair {1, n}
                if (w == 1)
                    partner[static_cast<size_t>(w)] |= bit(n);
                if (w == n)
                    partner[static_cast<size_t>(w)] |= bit(1);
            }
        }
    }

    // values admissible at 1-based position p given the prefix placed[0..p-2]
    uint64_t admissible(const std::vector<int>& placed, int p, uint64_t used) const
    {
        uint64_t avail = ~used & all_values;
        if (d >= 1) {
            if (p > d)
                avail &= ~partner[static_cast<size_t>(placed[static_cast<size_t>(p - d) - 1])];
        } else {
            if (p >= 2)
                avail &= ~partner[static_cast<size_t>(placed[static_cast<size_t>(p) - 2])];
            if (p == n && n >= 2)
                avail &= ~partner[static_cast<size_t>(placed[0])];  // wrap pair
        }
        return avail;
    }

    uint64_t count_completions(std::vector<int>& placed, uint64_t used, int p) const
    {
        const uint64_t avail = admissible(placed, p, used);
        if (p == n)
            return static_cast<uint64_t>(std::popcount(avail));
        uint64_t count = 0;
        uint64_t rest = avail;
        while (rest) {
            const int v = std::countr_zero(rest) + 1;
            rest &= rest - 1;
            placed[static_cast<size_t>(p) - 1] = v;
            count += count_completions(placed, used | (uint64_t(1) << (v - 1)), p + 1);
        }
        return count;
    }

    // all valid prefixes of length `depth`, in lexicographic order
    void collect_prefixes(std::vector<int>& placed, uint64_t used, int p, int depth,
                          std::vector<std::vector<int>>& out) const
    {
        if (p > depth) {
            out.emplace_back(placed.begin(), placed.begin() + depth);
            return;
        }
        uint64_t avail = admissible(placed, p, used);
        while (avail) {
            const int v = std::countr_zero(avail) + 1;
            avail &= avail - 1;
            placed[static_cast<size_t>(p) - 1] = v;
            collect_prefixes(placed, used | (uint64_t(1) << (v - 1)), p + 1, depth, out);
        }
    }
};

}  // namespace

Int oracle_count(int n, int d, bool force)
{
    check_bounds(n, d, force);
    Search search(n, d);
    std::vector<int> placed(static_cast<size_t>(n), 0);
    return Int(search.count_completions(placed, 0, 1));
}

Int oracle_count_parallel(int n, int d, int split_depth, int workers, bool force)
{
    check_bounds(n, d, force);
    if (split_depth < 0)
        throw std::domain_error("oracle: split_depth must be >= 0");
    if (workers < 1)
        throw std::domain_error("oracle: workers must be >= 1");

    const int depth = std::min(split_depth, n);
    Search search(n, d);
    std::vector<std::vector<int>> prefixes;
    {
        std::vector<int> placed(static_cast<size_t>(n), 0);
        search.collect_prefixes(placed, 0, 1, depth, prefixes);
    }

    const size_t thread_count =
        std::min<size_t>(static_cast<size_t>(workers), std::max<size_t>(prefixes.size(), 1));
    std::atomic<size_t> next{0};
    std::vector<uint64_t> partial(thread_count, 0);

    auto work = [&](size_t slot) {
        std::vector<int> placed(static_cast<size_t>(n), 0);
        uint64_t sum = 0;
        for (size_t i = next.fetch_add(1); i < prefixes.size(); i = next.fetch_add(1)) {
            const std::vector<int>& prefix = prefixes[i];
            uint64_t used = 0;
            for (size_t j = 0; j < prefix.size(); ++j) {
                placed[j] = prefix[j];
                used |= uint64_t(1) << (prefix[j] - 1);
            }
            sum += (depth == n) ? 1 : search.count_completions(placed, used, depth + 1);
        }
        partial[slot] = sum;
    };

    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (size_t t = 0; t < thread_count; ++t)
        pool.emplace_back(work, t);
    for (std::thread& t : pool)
        t.join();

    Int total = 0;
    for (uint64_t p : partial)
        total += p;
    return total;
}

Int inverse_condition_count(int n, int d, bool force)
{
    if (d < 1)
        throw std::domain_error("inverse_condition_count: d must be >= 1");
    check_bounds(n, d, force);

    const uint64_t all_values = (n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    std::vector<int> position_of(static_cast<size_t>(n) + 1, 0);

    // place positions left to right; value v is admissible at position p when
    // neither partner value v +- d already sits d seats away
    auto dfs = [&](auto&& self, uint64_t used, int p) -> uint64_t {
        if (p > n)
            return 1;
        uint64_t count = 0;
        uint64_t rest = ~used & all_values;
        while (rest) {
            const int v = std::countr_zero(rest) + 1;
            rest &= rest - 1;
            const int lo = v - d;
            const int hi = v + d;
            if (lo >= 1 && position_of[static_cast<size_t>(lo)] != 0
                && std::abs(p - position_of[static_cast<size_t>(lo)]) == d)
                continue;
            if (hi <= n && position_of[static_cast<size_t>(hi)] != 0
                && std::abs(p - position_of[static_cast<size_t>(hi)]) == d)
                continue;
            position_of[static_cast<size_t>(v)] = p;
            count += self(self, used | (uint64_t(1) << (v - 1)), p + 1);
            position_of[static_cast<size_t>(v)] = 0;
        }
        return count;
    };
    return Int(dfs(dfs, 0, 1));
}

}  // namespace dconsec
