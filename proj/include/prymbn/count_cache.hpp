/*
 * On-disk memo of brute-force tableau counts.
 *
 * A single human-inspectable JSON file keyed by the shape's canonical
 * string. Only enumeration results are ever stored, never formula values,
 * so a stale or poisoned cache cannot mask a formula bug in verification
 * runs (those recompute unless explicitly told to trust the cache).
 * Writes are whole-file, write-temp-then-rename. The cache is a pure
 * accelerator: outputs must be identical with it enabled, disabled or
 * deleted.
 */
#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "prymbn/rational.hpp"
#include "prymbn/strict_partition.hpp"

namespace prymbn {

class CountCache {
public:
    // Loads the file if present. A corrupt file produces a warning on
    // stderr and is treated as empty.
    CountCache(std::filesystem::path file, std::string tool_version);

    const std::filesystem::path& path() const { return file_; }

    // Recorded count, if present and recorded by the same tool version.
    std::optional<Int> get(const StrictPartition& shape) const;

    // Records the count and atomically replaces the cache file. An
    // unwritable path warns and leaves the computation unaffected.
    void put(const StrictPartition& shape, const Int& count);

    // $PRYMBN_CACHE_DIR, else $XDG_DATA_HOME/prymbn, else
    // ~/.local/share/prymbn; file name sst_counts.json.
    static std::filesystem::path default_path();

private:
    struct Entry {
        std::string count;         // decimal
        std::string tool_version;
    };

    void load();
    void write_locked() const;

    std::filesystem::path file_;
    std::string version_;
    std::map<std::string, Entry> entries_;
    mutable std::mutex mu_;
};

// Brute-force count through the cache: serves a version-compatible hit when
// reads are allowed, otherwise enumerates; stores fresh results when a cache
// is given. cache == nullptr means plain enumeration.
Int cached_count_sst_bruteforce(const StrictPartition& shape, int bound,
                                CountCache* cache, bool allow_read = true);

}  // namespace prymbn
