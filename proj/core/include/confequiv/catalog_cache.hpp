#pragma once

#include <filesystem>
#include <optional>

#include "confequiv/equivalence.hpp"

namespace confequiv {

/// On-disk store of computed catalogs, one JSON file per
/// (group fingerprint, bounds, kind). Loading a stored catalog yields the
/// same serialization as recomputing it.
class CatalogCache {
 public:
  explicit CatalogCache(std::filesystem::path dir);

  /// Directory from CONFEQUIV_CACHE_DIR, if set and nonempty.
  static std::optional<CatalogCache> from_environment();

  const std::filesystem::path& directory() const noexcept { return dir_; }
  std::filesystem::path path_for(std::uint64_t fingerprint, CatalogBounds bounds, ConfigKind kind) const;

  /// Stored catalog, or nullopt when absent. A file that fails to parse or
  /// whose header does not match the key is treated as absent.
  std::optional<ConfigurationCatalog> load(std::uint64_t fingerprint, CatalogBounds bounds, ConfigKind kind) const;
  void store(const ConfigurationCatalog& catalog) const;

 private:
  std::filesystem::path dir_;
};

struct CachedCatalog {
  ConfigurationCatalog catalog;
  bool cache_hit = false;
};

/// Catalog lookup through an optional cache; computes and stores on a miss.
CachedCatalog cached_catalog(const FiniteGroup& group, CatalogBounds bounds, ConfigKind kind,
                             const CatalogOptions& options, const CatalogCache* cache);

}  // namespace confequiv
