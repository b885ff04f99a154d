#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dwind/complex.hpp"

namespace dwind::cli {

/// Environment variable naming the default cache file.
inline constexpr const char* kCacheEnv = "DWIND_CACHE";

const char* tool_version();

/// Persistent map from canonical expression strings to V-sequences.
///
/// File layout: {"tool_version": "...", "entries": {"T(2,3)": [1, 0], ...}}.
class ResultCache {
public:
    using Entries = std::map<std::string, std::vector<std::int64_t>>;

    explicit ResultCache(std::filesystem::path path);

    /// Reads the file if present. Corrupt or version-mismatched files are
    /// reported on warn and leave the cache empty.
    void load(std::ostream& warn);
    /// Writes atomically through a temporary file. Returns false and reports
    /// on warn when the write fails.
    bool store(std::ostream& warn);

    const std::filesystem::path& path() const { return path_; }
    const Entries& entries() const { return entries_; }
    bool dirty() const { return dirty_; }

    std::optional<VSequence> find(const std::string& key) const;
    void insert(const std::string& key, const VSequence& v);

private:
    std::filesystem::path path_;
    Entries entries_;
    bool dirty_ = false;
};

/// Serialized form written by ResultCache::store.
std::string serialize_cache(const ResultCache::Entries& entries, const std::string& version);

/// VSource backed by a ResultCache; misses are computed and recorded.
class CachedVSource : public VSource {
public:
    explicit CachedVSource(ResultCache& cache, const VSource& fallback = default_v_source());

    VSequence sequence(const KnotExpression& expr) const override;
    std::int64_t v0(const KnotExpression& expr) const override;

private:
    ResultCache& cache_;
    const VSource& fallback_;
};

}  // namespace dwind::cli
