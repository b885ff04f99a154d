#include "dwind/cli/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include <json.hpp>

#include "dwind/errors.hpp"

namespace dwind::cli {

using json = nlohmann::ordered_json;

const char* tool_version() { return DWIND_VERSION; }

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

void ResultCache::load(std::ostream& warn) {
    entries_.clear();
    std::error_code ec;
    if (!std::filesystem::exists(path_, ec)) return;

    std::ifstream in(path_);
    if (!in) {
        warn << "warning: cannot read cache " << path_.string() << "; continuing without it\n";
        return;
    }
    Entries loaded;
    try {
        const json doc = json::parse(in);
        const auto version = doc.at("tool_version").get<std::string>();
        if (version != tool_version()) {
            warn << "warning: cache " << path_.string() << " was written by version " << version
                 << "; its entries are ignored\n";
            dirty_ = true;
            return;
        }
        for (const auto& [key, values] : doc.at("entries").items())
            loaded[key] = VSequence(values.get<std::vector<std::int64_t>>()).values();
    } catch (const std::exception& e) {
        warn << "warning: ignoring corrupt cache " << path_.string() << " (" << e.what() << ")\n";
        dirty_ = true;
        return;
    }
#ifndef NDEBUG
    // Spot-check one positive torus knot entry against a fresh computation.
    for (const auto& [key, values] : loaded) {
        if (key.find('#') != std::string::npos || key.front() != 'T') continue;
        int p = 0, q = 0;
        if (std::sscanf(key.c_str(), "T(%d,%d)", &p, &q) != 2) continue;
        if (!(v_sequence_torus(TorusKnot(p, q)) == VSequence(values))) {
            warn << "warning: cache entry " << key << " disagrees with recomputation; cache ignored\n";
            dirty_ = true;
            return;
        }
        break;
    }
#endif
    entries_ = std::move(loaded);
}

std::string serialize_cache(const ResultCache::Entries& entries, const std::string& version) {
    json doc;
    doc["tool_version"] = version;
    doc["entries"] = json::object();
    for (const auto& [key, values] : entries) doc["entries"][key] = values;
    return doc.dump(2) + "\n";
}

bool ResultCache::store(std::ostream& warn) {
    auto tmp = path_;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << serialize_cache(entries_, tool_version());
        out.flush();
        if (!out) {
            warn << "warning: cannot write cache " << tmp.string() << "\n";
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            return false;
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_, ec);
    if (ec) {
        warn << "warning: cannot replace cache " << path_.string() << " (" << ec.message() << ")\n";
        std::filesystem::remove(tmp, ec);
        return false;
    }
    dirty_ = false;
    return true;
}

std::optional<VSequence> ResultCache::find(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return VSequence(it->second);
}

void ResultCache::insert(const std::string& key, const VSequence& v) {
    auto& slot = entries_[key];
    if (slot != v.values()) {
        slot = v.values();
        dirty_ = true;
    }
}

CachedVSource::CachedVSource(ResultCache& cache, const VSource& fallback) : cache_(cache), fallback_(fallback) {}

VSequence CachedVSource::sequence(const KnotExpression& expr) const {
    const auto key = expr.str();
    if (auto hit = cache_.find(key)) return *hit;
    auto v = fallback_.sequence(expr);
    cache_.insert(key, v);
    return v;
}

std::int64_t CachedVSource::v0(const KnotExpression& expr) const {
    if (auto hit = cache_.find(expr.str())) return hit->at(0);
    // A full sequence is as cheap as V_0 for the unknot and single torus knots.
    if (expr.is_unknot() || expr.is_positive_torus_knot()) return sequence(expr).at(0);
    return fallback_.v0(expr);
}

}  // namespace dwind::cli
