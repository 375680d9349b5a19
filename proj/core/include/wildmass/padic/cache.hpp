#pragma once

// On-disk cache of extension lists, one JSON-lines file per (p, f, e).

#include <filesystem>
#include <mutex>
#include <optional>
#include <vector>

#include "wildmass/padic/extensions.hpp"

namespace wildmass::padic {

struct CacheKey {
    long p = 2;
    int f = 1;
    int e = 1;
};

class ExtensionCache {
  public:
    explicit ExtensionCache(std::filesystem::path dir);

    std::filesystem::path const& directory() const { return dir_; }
    std::filesystem::path file_for(CacheKey const& key) const;

    /* nullopt when no file exists; throws corrupt_cache on any mismatch */
    std::optional<std::vector<LocalFieldExt>> load(CacheKey const& key) const;
    void store(CacheKey const& key, std::vector<LocalFieldExt> const& extensions) const;

  private:
    std::filesystem::path dir_;
    mutable std::mutex write_mutex_;
};

std::optional<std::vector<LocalFieldExt>> cache_load(ExtensionCache const& cache, CacheKey const& key);
void cache_store(ExtensionCache const& cache, CacheKey const& key, std::vector<LocalFieldExt> const& extensions);

/* Loads from the cache when present, otherwise enumerates and stores. */
std::vector<LocalFieldExt> enumerate_extensions_cached(long p, int f, int e, EnumerationOptions const& options,
                                                       ExtensionCache const* cache);

}  // namespace wildmass::padic
