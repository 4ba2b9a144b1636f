#include "dconsec/cache.hpp"

#include <fstream>

#include <json.hpp>

#include "dconsec/counts.hpp"

namespace dconsec {

namespace {

std::string cache_key(int n, int d)
{
    return std::to_string(n) + ":" + std::to_string(d);
}

}  // namespace

ResultCache ResultCache::load(const std::string& path)
{
    ResultCache cache;
    std::ifstream in(path);
    if (!in.is_open())
        return cache;  // absent file: start empty
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw CacheIoError("cache file " + path + " is not valid JSON: " + e.what());
    }
    if (!doc.is_object())
        throw CacheIoError("cache file " + path + " must hold a single JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_string())
            throw CacheIoError("cache file " + path + ": value for " + key + " is not a string");
        cache.entries_[key] = value.get<std::string>();
    }
    return cache;
}

void ResultCache::save(const std::string& path) const
{
    nlohmann::json doc = nlohmann::json::object();
    for (const auto& [key, value] : entries_)
        doc[key] = value;
    std::ofstream out(path);
    if (!out.is_open())
        throw CacheIoError("cannot open cache file " + path + " for writing");
    out << doc.dump(2) << '\n';
    if (!out)
        throw CacheIoError("failed writing cache file " + path);
}

std::optional<Int> ResultCache::lookup(int n, int d) const
{
    auto it = entries_.find(cache_key(n, d));
    if (it == entries_.end())
        return std::nullopt;
    return Int(it->second);
}

void ResultCache::store(int n, int d, const Int& value)
{
    entries_[cache_key(n, d)] = value.str();
}

Int count_with_cache(int n, int d, ResultCache* cache)
{
    if (cache != nullptr) {
        if (auto hit = cache->lookup(n, d))
            return *hit;
    }
    Int value = count_exact(n, d);
    if (cache != nullptr)
        cache->store(n, d, value);
    return value;
}

}  // namespace dconsec
