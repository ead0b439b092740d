#include "prymbn/count_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "prymbn/shifted_tableaux.hpp"

#include "json.hpp"

namespace prymbn {

CountCache::CountCache(std::filesystem::path file, std::string tool_version)
    : file_(std::move(file)), version_(std::move(tool_version)) {
    load();
}

void CountCache::load() {
    std::error_code ec;
    if (!std::filesystem::exists(file_, ec)) return;
    std::ifstream in(file_);
    if (!in) {
        std::cerr << "warning: cannot read cache file " << file_ << "; ignoring it\n";
        return;
    }
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        for (const auto& [key, value] : j.at("entries").items()) {
            entries_[key] = Entry{value.at("count").get<std::string>(),
                                  value.at("tool_version").get<std::string>()};
        }
    } catch (const std::exception& e) {
        std::cerr << "warning: corrupt cache file " << file_ << " (" << e.what()
                  << "); treating as empty\n";
        entries_.clear();
    }
}

std::optional<Int> CountCache::get(const StrictPartition& shape) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(shape.str());
    if (it == entries_.end() || it->second.tool_version != version_) return std::nullopt;
    return Int(it->second.count);
}

void CountCache::put(const StrictPartition& shape, const Int& count) {
    std::lock_guard<std::mutex> lock(mu_);
    entries_[shape.str()] = Entry{count.get_str(), version_};
    write_locked();
}

void CountCache::write_locked() const {
    nlohmann::json entries = nlohmann::json::object();
    for (const auto& [key, entry] : entries_) {
        entries[key] = {{"count", entry.count}, {"tool_version", entry.tool_version}};
    }
    nlohmann::json j = {{"schema", 1}, {"entries", entries}};

    std::error_code ec;
    std::filesystem::create_directories(file_.parent_path(), ec);
    std::filesystem::path tmp = file_;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) {
            std::cerr << "warning: cannot write cache file " << tmp << "; proceeding uncached\n";
            return;
        }
        out << j.dump(2) << "\n";
        if (!out.good()) {
            std::cerr << "warning: short write to cache file " << tmp << "; proceeding uncached\n";
            return;
        }
    }
    std::filesystem::rename(tmp, file_, ec);
    if (ec) {
        std::cerr << "warning: cannot replace cache file " << file_ << " (" << ec.message()
                  << "); proceeding uncached\n";
    }
}

std::filesystem::path CountCache::default_path() {
    if (const char* dir = std::getenv("PRYMBN_CACHE_DIR")) {
        return std::filesystem::path(dir) / "sst_counts.json";
    }
    if (const char* xdg = std::getenv("XDG_DATA_HOME")) {
        return std::filesystem::path(xdg) / "prymbn" / "sst_counts.json";
    }
    if (const char* home = std::getenv("HOME")) {
        return std::filesystem::path(home) / ".local" / "share" / "prymbn" / "sst_counts.json";
    }
    return std::filesystem::path("sst_counts.json");
}

Int cached_count_sst_bruteforce(const StrictPartition& shape, int bound, CountCache* cache,
                                bool allow_read) {
    if (cache != nullptr && allow_read) {
        if (auto hit = cache->get(shape)) return *hit;
    }
    Int count = count_sst_bruteforce(shape, bound);
    if (cache != nullptr) cache->put(shape, count);
    return count;
}

}  // namespace prymbn
