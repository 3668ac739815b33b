#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

namespace rootmaps {

class AsymptoticConstants;
class GenusSeries;
class RecurrenceEngine;

inline constexpr int kCacheSchemaVersion = 1;
inline constexpr const char* kCacheFileName = "cache.json";

/// Unreadable, malformed, or wrong-version cache documents.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The memoized state that a cache document carries.
struct CacheState {
  RecurrenceEngine& engine;
  GenusSeries& series;
  AsymptoticConstants& constants;
};

/// Canonical JSON text: sorted keys, no whitespace, every big number as a
/// decimal string. Tables: Q, Qpoly, M, R_g, tau.
std::string dump_cache(const CacheState& state);

/// Replaces the tables in `state` with the document's. Throws CacheError on a
/// version mismatch or malformed document.
void load_cache(const std::string& text, const CacheState& state);

/// Loads <dir>/cache.json when it exists; returns whether it did.
bool read_cache_dir(const std::filesystem::path& dir, const CacheState& state);

/// Writes <dir>/cache.json through a temporary file and a rename.
void write_cache_dir(const std::filesystem::path& dir, const CacheState& state);

}  // namespace rootmaps
