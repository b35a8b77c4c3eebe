#include "confequiv/catalog_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "confequiv/io.hpp"

namespace confequiv {

CatalogCache::CatalogCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<CatalogCache> CatalogCache::from_environment() {
  const char* env = std::getenv("CONFEQUIV_CACHE_DIR");
  if (!env || !*env) return std::nullopt;
  return CatalogCache(env);
}

std::filesystem::path CatalogCache::path_for(std::uint64_t fingerprint, CatalogBounds bounds,
                                             ConfigKind kind) const {
  std::ostringstream name;
  name << "catalog-v" << io::kCatalogFormatVersion << '-' << std::hex << fingerprint << std::dec << "-n"
       << bounds.max_n << "-m" << bounds.max_m << '-' << io::to_string(kind) << ".json";
  return dir_ / name.str();
}

std::optional<ConfigurationCatalog> CatalogCache::load(std::uint64_t fingerprint, CatalogBounds bounds,
                                                       ConfigKind kind) const {
  std::ifstream in(path_for(fingerprint, bounds, kind));
  if (!in) return std::nullopt;
  try {
    auto catalog = io::catalog_from_json(io::json::parse(in));
    if (catalog.fingerprint() != fingerprint || !(catalog.bounds() == bounds) || catalog.kind() != kind)
      return std::nullopt;
    return catalog;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void CatalogCache::store(const ConfigurationCatalog& catalog) const {
  std::filesystem::create_directories(dir_);
  const auto target = path_for(catalog.fingerprint(), catalog.bounds(), catalog.kind());
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << io::to_json(catalog).dump() << '\n';
  }
  std::filesystem::rename(tmp, target);
}

CachedCatalog cached_catalog(const FiniteGroup& group, CatalogBounds bounds, ConfigKind kind,
                             const CatalogOptions& options, const CatalogCache* cache) {
  if (cache) {
    if (auto hit = cache->load(group.fingerprint(), bounds, kind)) return {std::move(*hit), true};
  }
  auto computed = catalog(group, bounds, kind, options);
  if (cache) cache->store(computed);
  return {std::move(computed), false};
}

}  // namespace confequiv
