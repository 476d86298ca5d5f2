#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace signet {

struct DatasetEntry {
  std::string name;
  std::string url;  // http(s)://, file://, or a local path; empty = must be configured
  std::uint64_t expected_edges = 0;
};

/// Named dataset sources with their expected edge counts after normalization.
class DatasetRegistry {
 public:
  /// wikipedia, slashdot, epinions. The wikipedia entry ships without a URL:
  /// the upstream dump needs a one-time external conversion, so its source
  /// must point at a preconverted edge list (see README).
  static DatasetRegistry builtin();

  void set(DatasetEntry entry);
  bool contains(const std::string& name) const;
  /// Throws std::invalid_argument listing the valid names.
  const DatasetEntry& get(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, DatasetEntry> entries_;
};

struct NormalizeStats {
  std::uint64_t kept = 0;
  std::uint64_t self_loops = 0;
  std::uint64_t duplicates = 0;
};

/// Converts a raw SNAP-style signed edge list to the canonical format:
/// comments dropped, self-loops dropped, later duplicates of an ordered pair
/// dropped (first occurrence wins), whitespace canonicalized.
NormalizeStats normalize_edge_list(std::istream& raw, std::ostream& out);

/// $SIGNET_CACHE_DIR if set, else ~/.cache/signet.
std::filesystem::path default_cache_dir();

class FetchError : public std::runtime_error {
 public:
  explicit FetchError(const std::string& what) : std::runtime_error(what) {}
};

/// Returns the cached canonical edge list for `name`, downloading,
/// decompressing (.gz), and normalizing it first when missing. Fails with
/// FetchError when the normalized edge count does not match the registry
/// (corrupt or format-drifted download). Idempotent: a second call is a
/// cache hit and touches no network.
std::filesystem::path fetch_dataset(const DatasetRegistry& registry, const std::string& name,
                                    const std::filesystem::path& cache_dir);

/// Simple `key = value` config: `cache_dir`, `dataset.<name>.url`,
/// `dataset.<name>.edges`. Unknown keys are an error.
struct CliConfig {
  std::filesystem::path cache_dir = default_cache_dir();
  DatasetRegistry registry = DatasetRegistry::builtin();
};

CliConfig load_config(std::istream& in);
CliConfig load_config_file(const std::filesystem::path& path);

/// zlib-backed gzip decompression of a whole buffer.
std::string gunzip(const std::string& bytes);

/// GET with redirects; http and https. Throws FetchError on failure.
std::string http_get(const std::string& url);

}  // namespace signet
