#include "wildmass/padic/cache.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wildmass/errors.hpp"

namespace wildmass::padic {

namespace {

using nlohmann::json;

std::uint64_t fnv1a(std::string const& s)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex(std::uint64_t x)
{
    std::ostringstream out;
    out << std::hex << x;
    return out.str();
}

json record(LocalFieldExt const& x, std::size_t index, std::size_t count)
{
    return json{{"p", x.p},           {"f", x.f},         {"e", x.e},     {"d", x.d},
                {"aut", x.aut_count}, {"coeffs", x.defining.coeffs}, {"B", x.precision},
                {"label", x.label},   {"index", index},   {"count", count}};
}

LocalFieldExt parse_record(json const& j, CacheKey const& key, std::size_t index, std::filesystem::path const& file)
{
    auto bad = [&](std::string const& why) {
        return corrupt_cache(file.string() + ": line " + std::to_string(index + 1) + ": " + why);
    };
    json body = j;
    if (!body.contains("check") || !body["check"].is_string())
        throw bad("missing checksum");
    std::string check = body["check"];
    body.erase("check");
    if (hex(fnv1a(body.dump())) != check)
        throw bad("checksum mismatch");
    LocalFieldExt x;
    try {
        x.p = body.at("p").get<long>();
        x.f = body.at("f").get<int>();
        x.e = body.at("e").get<int>();
        x.d = body.at("d").get<int>();
        x.aut_count = body.at("aut").get<int>();
        x.precision = body.at("B").get<int>();
        x.label = body.at("label").get<std::string>();
        x.defining = EisensteinPoly{x.p, x.f, body.at("coeffs").get<std::vector<std::vector<std::int64_t>>>()};
        if (body.at("index").get<std::size_t>() != index)
            throw bad("record out of order");
    } catch (json::exception const& e) {
        throw bad(e.what());
    }
    if (x.p != key.p || x.f != key.f || x.e != key.e)
        throw bad("record belongs to another key");
    return x;
}

}  // namespace

ExtensionCache::ExtensionCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ExtensionCache::file_for(CacheKey const& key) const
{
    return dir_ / ("ext-" + std::to_string(key.p) + "-" + std::to_string(key.f) + "-" + std::to_string(key.e) + ".jsonl");
}

std::optional<std::vector<LocalFieldExt>> ExtensionCache::load(CacheKey const& key) const
{
    auto file = file_for(key);
    std::ifstream in(file);
    if (!in)
        return std::nullopt;
    std::vector<LocalFieldExt> out;
    std::optional<std::size_t> count;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            throw corrupt_cache(file.string() + ": unparsable line " + std::to_string(out.size() + 1));
        std::size_t c = j.value("count", std::size_t{0});
        if (count && *count != c)
            throw corrupt_cache(file.string() + ": inconsistent record count");
        count = c;
        out.push_back(parse_record(j, key, out.size(), file));
    }
    if (!count || *count != out.size())
        throw corrupt_cache(file.string() + ": truncated file");
    return out;
}

void ExtensionCache::store(CacheKey const& key, std::vector<LocalFieldExt> const& extensions) const
{
    std::lock_guard lock(write_mutex_);
    std::filesystem::create_directories(dir_);
    auto file = file_for(key);
    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw error("cannot write cache file " + tmp.string());
        for (std::size_t i = 0; i < extensions.size(); ++i) {
            json j = record(extensions[i], i, extensions.size());
            j["check"] = hex(fnv1a(j.dump()));
            out << j.dump() << '\n';
        }
        if (!out)
            throw error("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

std::optional<std::vector<LocalFieldExt>> cache_load(ExtensionCache const& cache, CacheKey const& key)
{
    return cache.load(key);
}

void cache_store(ExtensionCache const& cache, CacheKey const& key, std::vector<LocalFieldExt> const& extensions)
{
    cache.store(key, extensions);
}

std::vector<LocalFieldExt> enumerate_extensions_cached(long p, int f, int e, EnumerationOptions const& options,
                                                       ExtensionCache const* cache)
{
    CacheKey key{p, f, e};
    if (cache)
        if (auto hit = cache->load(key))
            return *hit;
    auto result = enumerate_extensions(p, f, e, options);
    if (cache)
        cache->store(key, result);
    return result;
}

}  // namespace wildmass::padic
