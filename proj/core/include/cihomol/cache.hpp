#pragma once

#include <filesystem>
#include <map>
#include <optional>

#include "cihomol/homalg.hpp"

namespace cihomol {

/// Resolution cache: in-memory memo keyed by module content hash, with an
/// optional disk directory (one file per hash, format "cihomol-cache/1").
/// A disk entry whose checksum or stored module does not match is treated
/// as a miss. The cache is an optimization only; results are bit-identical
/// with it disabled.
class Cache {
public:
    Cache() = default;                                // memory-only
    explicit Cache(std::filesystem::path dir);        // disk-backed

    std::optional<Resolution> lookup(const Module& m);
    void store(const Module& m, const Resolution& r);

    /// Disk hygiene: drop files that fail validation (bad version, bad
    /// checksum, hash/name mismatch). Returns the number removed.
    std::size_t gc();

    const std::optional<std::filesystem::path>& dir() const { return dir_; }

private:
    std::optional<std::filesystem::path> dir_;
    std::map<std::string, Resolution> memo_;

    std::optional<Resolution> load_disk(const Module& m, const std::string& hash);
    void store_disk(const Module& m, const Resolution& r, const std::string& hash);
};

} // namespace cihomol
