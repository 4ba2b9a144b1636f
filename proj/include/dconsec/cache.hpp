#ifndef DCONSEC_CACHE_HPP
#define DCONSEC_CACHE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "dconsec/int_types.hpp"

namespace dconsec {

struct CacheIoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* On-disk result cache: one JSON object mapping "n:d" keys to decimal string
 * values. Strings rather than numbers because the counts outgrow 64-bit
 * integers from n = 21 on, and decimal keeps the file diffable.
 */
class ResultCache {
public:
    // Missing file loads as an empty cache; unreadable or malformed files
    // throw CacheIoError.
    static ResultCache load(const std::string& path);

    void save(const std::string& path) const;

    std::optional<Int> lookup(int n, int d) const;
    void store(int n, int d, const Int& value);

    size_t size() const { return entries_.size(); }

private:
    std::map<std::string, std::string> entries_;
};

// Cache-aware count: serve from cache when present, otherwise compute with
// count_exact and record. A null cache just computes.
Int count_with_cache(int n, int d, ResultCache* cache);

}  // namespace dconsec

#endif
