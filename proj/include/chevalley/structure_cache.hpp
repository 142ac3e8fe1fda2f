#pragma once

// Process-wide memo of Chevalley structures, optionally backed by JSON files
// in the directory named by CHEVALLEY_CACHE_DIR.

#include <filesystem>
#include <memory>
#include <optional>

#include <nlohmann/json.hpp>

#include "chevalley/root_data.hpp"

namespace chevalley {

inline constexpr const char* kCacheEnvVar = "CHEVALLEY_CACHE_DIR";

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// FNV-1a over the nonzero table entries in row-major order.
std::uint64_t table_checksum(const BracketTable& t);

nlohmann::json structure_to_json(const ChevalleyStructure& cs);
// Rejects a checksum mismatch and re-runs the antisymmetry and Jacobi checks.
ChevalleyStructure structure_from_json(const nlohmann::json& j);

std::filesystem::path cache_file(const std::filesystem::path& dir, const RootSystemSpec& spec);
void save_structure(const ChevalleyStructure& cs, const std::filesystem::path& dir);
// nullopt when there is no file; throws CacheError on a corrupt one.
std::optional<ChevalleyStructure> load_structure(const RootSystemSpec& spec,
                                                 const std::filesystem::path& dir);

std::optional<std::filesystem::path> cache_dir_from_env();

// Built once per process. Consults and fills the disk cache when the
// environment variable is set; a corrupt file is rebuilt and overwritten.
std::shared_ptr<const ChevalleyStructure> chevalley_structure(const RootSystemSpec& spec);

}  // namespace chevalley
