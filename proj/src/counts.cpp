#include "dconsec/counts.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "dconsec/compositions.hpp"

namespace dconsec {

namespace {

void check_instance(int n, int d)
{
    if (n < 1)
        throw std::domain_error("count: n must be >= 1");
    if (d < 0)
        throw std::domain_error("count: d must be >= 0");
}

std::vector<Int> factorial_table(int up_to)
{
    std::vector<Int> table(static_cast<size_t>(up_to) + 1);
    table[0] = 1;
    for (int i = 1; i <= up_to; ++i)
        table[static_cast<size_t>(i)] = table[static_cast<size_t>(i) - 1] * i;
    return table;
}

// ---- q kernel -------------------------------------------------------------

using PartMultiset = std::vector<std::pair<int, int>>;  // (value, multiplicity)

PartMultiset to_multiset(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end());
    PartMultiset ms;
    for (int p : parts) {
        if (!ms.empty() && ms.back().first == p)
            ++ms.back().second;
        else
            ms.emplace_back(p, 1);
    }
    return ms;
}

// Sum over distributions of `rem` to blocks k..d-1. `pick` walks the distinct
// part values, building the sub-multiset handed to block k together with the
// number of ways to choose which copies go there.
Int q_distribute(const std::vector<int>& class_sizes, size_t k, PartMultiset& rem);

Int q_pick(const std::vector<int>& class_sizes, size_t k, PartMultiset& rem, size_t vi,
           int picked_count, int picked_sum, const Int& pick_ways)
{
    const int capacity = class_sizes[k];
    if (vi == rem.size()) {
        Int placements = binomial(capacity - picked_sum, picked_count) * factorial(picked_count);
        if (placements == 0)
            return 0;
        return pick_ways * placements * q_distribute(class_sizes, k + 1, rem);
    }
    const auto [value, avail] = rem[vi];
    Int total = 0;
    Int choose = 1;  // C(avail, take), built incrementally
    for (int take = 0; take <= avail; ++take) {
        if (take > 0)
            choose = choose * (avail - take + 1) / take;
        const int sum = picked_sum + take * value;
        if (sum > capacity)
            break;  // larger takes only grow the sum
        rem[vi].second = avail - take;
        total += q_pick(class_sizes, k, rem, vi + 1, picked_count + take, sum, pick_ways * choose);
        rem[vi].second = avail;
    }
    return total;
}

Int q_distribute(const std::vector<int>& class_sizes, size_t k, PartMultiset& rem)
{
    if (k == class_sizes.size()) {
        for (const auto& [value, count] : rem)
            if (count != 0)
                return 0;  // unassigned parts: not a full distribution
        return 1;
    }
    return q_pick(class_sizes, k, rem, 0, 0, 0, 1);
}

using QKey = std::tuple<int, int, std::vector<int>>;
std::map<QKey, Int> q_cache;          // NOLINT: deliberate shared cache
std::mutex q_cache_mutex;

void check_parts(const std::vector<int>& parts)
{
    for (int p : parts)
        if (p < 1)
            throw std::domain_error("q_value: parts must be >= 1");
}

// ---- general-count traversals ----------------------------------------------

// Nonincreasing partitions of `total` into exactly `parts` parts <= max_part.
template <typename Visitor>
void for_each_partition(int total, int parts, int max_part, std::vector<int>& scratch,
                        Visitor&& visit)
{
    if (parts == 0) {
        if (total == 0)
            visit(scratch);
        return;
    }
    const int lo = (total + parts - 1) / parts;          // keep the suffix feasible
    const int hi = std::min(max_part, total - (parts - 1));
    for (int p = hi; p >= lo; --p) {
        scratch.push_back(p);
        for_each_partition(total - p, parts - 1, p, scratch, visit);
        scratch.pop_back();
    }
}

// Orderings of a nonincreasing part list: parts! / prod (multiplicity!).
Int ordering_count(const std::vector<int>& sorted_parts)
{
    Int ways = factorial(static_cast<long long>(sorted_parts.size()));
    size_t run = 1;
    for (size_t i = 1; i <= sorted_parts.size(); ++i) {
        if (i < sorted_parts.size() && sorted_parts[i] == sorted_parts[i - 1]) {
            ++run;
        } else {
            ways /= factorial(static_cast<long long>(run));
            run = 1;
        }
    }
    return ways;
}

struct GeneralSum {
    int n = 0;
    int d = 0;
    bool collapse = true;  // partitions weighted by orderings vs literal compositions
    std::vector<int> class_sizes;
    std::vector<Int> factorials;
    Int total = 0;

    void run()
    {
        std::vector<int> parts;
        parts.reserve(static_cast<size_t>(n));
        descend(0, 0, 0, Int(1), parts);
    }

    // Accumulate over residue classes k..d-1; `prefix_weight` carries the
    // binomials C(n_k - r_k, c_k) and any ordering multiplicities so far.
    void descend(size_t k, int r, int c, const Int& prefix_weight, std::vector<int>& parts)
    {
        if (k == class_sizes.size()) {
            Int term = prefix_weight * (Int(1) << c) * factorials[static_cast<size_t>(n - r - c)];
            term *= collapse ? q_value(n, d, parts) : q_value_by_enumeration(n, d, parts);
            total += (r % 2 == 0) ? term : -term;
            return;
        }
        const int nk = class_sizes[k];
        for (int rk = 0; rk <= nk - 1; ++rk) {
            for (int ck = 0; ck <= rk; ++ck) {
                const Int slots = binomial(nk - rk, ck);
                if (slots == 0)
                    continue;  // the class cannot host ck components of total size rk
                if (collapse) {
                    std::vector<int> scratch;
                    for_each_partition(rk, ck, rk, scratch, [&](const std::vector<int>& shape) {
                        const size_t base = parts.size();
                        parts.insert(parts.end(), shape.begin(), shape.end());
                        descend(k + 1, r + rk, c + ck, prefix_weight * slots * ordering_count(shape),
                                parts);
                        parts.resize(base);
                    });
                } else {
                    for (const Composition& comp : CompositionRange(rk, ck)) {
                        const size_t base = parts.size();
                        parts.insert(parts.end(), comp.begin(), comp.end());
                        descend(k + 1, r + rk, c + ck, prefix_weight * slots, parts);
                        parts.resize(base);
                    }
                }
            }
        }
    }
};

Int count_general_impl(int n, int d, bool collapse)
{
    check_instance(n, d);
    if (d < 2 || d > n - 1)
        throw std::domain_error("count_general: requires 2 <= d <= n-1");
    GeneralSum sum;
    sum.n = n;
    sum.d = d;
    sum.collapse = collapse;
    sum.class_sizes = residue_profile(n, d);
    sum.factorials = factorial_table(n);
    sum.run();
    return sum.total;
}

}  // namespace

std::vector<int> residue_profile(int n, int d)
{
    check_instance(n, d);
    if (d == 0)
        throw std::domain_error("residue_profile: circular case has no residue classes");
    std::vector<int> sizes(static_cast<size_t>(d), 0);
    for (int k = 1; k <= d; ++k)
        if (k <= n)
            sizes[static_cast<size_t>(k) - 1] = (n - k) / d + 1;
    return sizes;
}

Int q_value(int n, int d, const std::vector<int>& parts)
{
    check_instance(n, d);
    if (d == 0)
        throw std::domain_error("q_value: d must be >= 1");
    check_parts(parts);
    if (parts.empty())
        return 1;

    std::vector<int> sorted = parts;
    std::sort(sorted.begin(), sorted.end());
    QKey key{n, d, sorted};
    {
        std::lock_guard<std::mutex> lock(q_cache_mutex);
        auto it = q_cache.find(key);
        if (it != q_cache.end())
            return it->second;
    }

    const std::vector<int> class_sizes = residue_profile(n, d);
    PartMultiset rem = to_multiset(sorted);
    Int value = q_distribute(class_sizes, 0, rem);

    std::lock_guard<std::mutex> lock(q_cache_mutex);
    return q_cache.emplace(std::move(key), std::move(value)).first->second;
}

Int q_value_by_enumeration(int n, int d, const std::vector<int>& parts)
{
    check_instance(n, d);
    if (d == 0)
        throw std::domain_error("q_value: d must be >= 1");
    check_parts(parts);

    const std::vector<int> class_sizes = residue_profile(n, d);
    const int c = static_cast<int>(parts.size());
    Int total = 0;
    std::vector<int> block_sum(static_cast<size_t>(d));
    std::vector<int> block_count(static_cast<size_t>(d));
    for (const BlockAssignment& assign : BlockAssignmentRange(c, d)) {
        std::fill(block_sum.begin(), block_sum.end(), 0);
        std::fill(block_count.begin(), block_count.end(), 0);
        for (int i = 0; i < c; ++i) {
            block_sum[static_cast<size_t>(assign[static_cast<size_t>(i)])] += parts[static_cast<size_t>(i)];
            ++block_count[static_cast<size_t>(assign[static_cast<size_t>(i)])];
        }
        bool fits = true;
        for (int k = 0; k < d; ++k)
            if (block_sum[static_cast<size_t>(k)] > class_sizes[static_cast<size_t>(k)]) {
                fits = false;
                break;
            }
        if (!fits)
            continue;
        Int product = 1;
        for (int k = 0; k < d && product != 0; ++k)
            product *= binomial(class_sizes[static_cast<size_t>(k)] - block_sum[static_cast<size_t>(k)],
                                block_count[static_cast<size_t>(k)])
                       * factorial(block_count[static_cast<size_t>(k)]);
        total += product;
    }
    return total;
}

Int count_d0_formula(int n)
{
    check_instance(n, 0);
    const std::vector<Int> facts = factorial_table(n);
    Rational total = 0;
    for (int r = 0; r <= n - 1; ++r) {
        Int row = 0;
        for (int c = 0; c <= r; ++c)
            row += (Int(1) << c) * binomial(r - 1, c - 1) * binomial(n - r, c);
        Rational term(row * facts[static_cast<size_t>(n - r)]);
        term *= Rational(Int(n) * n, Int(n - r) * (n - r));
        total += (r % 2 == 0) ? term : -term;
    }
    total += (n % 2 == 0 ? 1 : -1) * 2 * n;
    if (denominator(total) != 1)
        throw std::logic_error("count_d0_formula: sum did not reduce to an integer");
    return numerator(total);
}

Int count_d0(int n)
{
    check_instance(n, 0);
    // the displayed sum is off by 2n at n = 1 and 2; true values are 1 and 0
    if (n == 1)
        return 1;
    if (n == 2)
        return 0;
    return count_d0_formula(n);
}

Int count_d1(int n)
{
    check_instance(n, 1);
    const std::vector<Int> facts = factorial_table(n);
    Int total = 0;
    for (int r = 0; r <= n - 1; ++r) {
        Int row = 0;
        for (int c = 0; c <= r; ++c)
            row += (Int(1) << c) * binomial(r - 1, c - 1) * binomial(n - r, c);
        row *= facts[static_cast<size_t>(n - r)];
        total += (r % 2 == 0) ? row : -row;
    }
    return total;
}

Int count_general(int n, int d)
{
    return count_general_impl(n, d, /*collapse=*/true);
}

Int count_general_by_compositions(int n, int d)
{
    return count_general_impl(n, d, /*collapse=*/false);
}

Int count_exact(const CountSpec& spec)
{
    return count_exact(spec.n, spec.d);
}

Int count_exact(int n, int d)
{
    check_instance(n, d);
    if (d == 0)
        return count_d0(n);
    if (d == 1)
        return count_d1(n);
    if (d >= n)
        return factorial(n);  // the condition range 1 <= i <= n-d is empty
    return count_general(n, d);
}

}  // namespace dconsec
