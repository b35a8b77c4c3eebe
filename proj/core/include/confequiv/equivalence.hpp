#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "confequiv/configuration.hpp"
#include "confequiv/finite_group.hpp"
#include "confequiv/partition.hpp"

namespace confequiv {

// Enumeration ----------------------------------------------------------------

/// All ordered tuples of distinct elements of size 1..max_n whose closure is
/// the group, by size then lexicographically by index. The identity may
/// appear unless `allow_identity` is false.
std::vector<std::vector<FiniteIndex>> enumerate_generating_tuples(const FiniteGroup& group, std::size_t max_n,
                                                                  bool allow_identity = true);

struct EnumerationGuards {
  std::size_t max_order = 12;
  std::size_t max_colors = 5;
  bool override_guards = false;
};

/// Every set partition of `universe_size` points into 1..max_m blocks, once
/// each, blocks ordered by least element (restricted growth strings).
/// Throws TooLarge beyond the guards.
std::vector<Partition> enumerate_partitions(std::size_t universe_size, std::size_t max_m,
                                            const EnumerationGuards& guards = {});

/// Lexicographically least recoloring of the set over all m! color permutations.
ConfigurationSet canonical_form(const ConfigurationSet& cs);

// Catalogs -------------------------------------------------------------------

struct CatalogBounds {
  std::size_t max_n = 1;
  std::size_t max_m = 1;
  friend bool operator==(const CatalogBounds&, const CatalogBounds&) = default;
};

/// Canonical configuration sets of all (generating tuple, partition) pairs
/// within bounds, sorted by (n, m, tuples).
class ConfigurationCatalog {
 public:
  ConfigurationCatalog(std::string group_id, std::uint64_t fingerprint, CatalogBounds bounds, ConfigKind kind,
                       std::vector<ConfigurationSet> sets);

  const std::string& group_id() const noexcept { return group_id_; }
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }
  const CatalogBounds& bounds() const noexcept { return bounds_; }
  ConfigKind kind() const noexcept { return kind_; }
  const std::vector<ConfigurationSet>& sets() const noexcept { return sets_; }
  bool contains(const ConfigurationSet& canonical) const;

 private:
  std::string group_id_;
  std::uint64_t fingerprint_;
  CatalogBounds bounds_;
  ConfigKind kind_;
  std::vector<ConfigurationSet> sets_;
};

bool catalog_order(const ConfigurationSet& a, const ConfigurationSet& b);

struct CatalogOptions {
  EnumerationGuards guards;
  unsigned threads = 1;
  bool allow_identity = true;
};

/// Runs every pair within bounds, parallel over generating tuples; the
/// result does not depend on the thread count.
ConfigurationCatalog catalog(const FiniteGroup& group, CatalogBounds bounds, ConfigKind kind,
                             const CatalogOptions& options = {});

enum class CatalogRelation { equal, strictly_contained, contains, incomparable };
std::string_view to_string(CatalogRelation r) noexcept;

/// Comparison of bounded catalogs. Inequality proves non-equivalence;
/// equality only holds within the bounds.
struct CatalogComparison {
  CatalogRelation relation = CatalogRelation::equal;
  CatalogBounds bounds;
  std::vector<ConfigurationSet> only_in_first;
  std::vector<ConfigurationSet> only_in_second;
};

/// Throws ShapeMismatch when bounds or kinds differ.
CatalogComparison compare_catalogs(const ConfigurationCatalog& a, const ConfigurationCatalog& b);

// Conjugacy invariants -------------------------------------------------------

struct ClassData {
  std::vector<std::vector<FiniteIndex>> classes;  ///< each sorted; ordered by least element
  std::size_t class_number = 0;
  std::vector<FiniteIndex> center;
};

ClassData class_data(const FiniteGroup& group);

/// S is a union of conjugacy classes (g S g^-1 = S for all g).
bool is_normal_set(const FiniteGroup& group, std::span<const FiniteIndex> set);

}  // namespace confequiv
