#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "confequiv/finite_group.hpp"
#include "confequiv/group.hpp"
#include "confequiv/partition.hpp"

namespace confequiv {

enum class ConfigKind { one_sided, two_sided };

/// Colors are 1-based block indices. A one-sided configuration of x is
/// (color(x), color(g_1 x), ..., color(g_n x)); the two-sided one appends
/// (color(x g_1), ..., color(x g_n)).
using ColorTuple = std::vector<std::uint32_t>;

/// How a configuration set was obtained. Observed sets are
/// under-approximations computed on a ball; `stable` records whether the
/// set stopped changing for `stable_span` consecutive radii starting at
/// `radius`.
struct Exactness {
  bool exact = true;
  std::size_t radius = 0;
  std::size_t stable_span = 0;
  bool stable = false;

  static Exactness exact_set() { return {}; }
  static Exactness observed(std::size_t radius, std::size_t span, bool stable) {
    return {false, radius, span, stable};
  }
  friend bool operator==(const Exactness&, const Exactness&) = default;
};

class ConfigurationSet {
 public:
  /// Sorts and deduplicates. Checks tuple lengths and color ranges; for exact
  /// sets additionally checks that every color occurs as c_0.
  ConfigurationSet(ConfigKind kind, std::size_t n, std::size_t m, std::vector<ColorTuple> tuples,
                   Exactness exactness = Exactness::exact_set());

  ConfigKind kind() const noexcept { return kind_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  const std::vector<ColorTuple>& tuples() const noexcept { return tuples_; }
  const Exactness& exactness() const noexcept { return exactness_; }
  std::size_t size() const noexcept { return tuples_.size(); }
  bool contains(const ColorTuple& t) const;
  bool is_subset_of(const ConfigurationSet& other) const;

  /// Color k becomes sigma[k-1]+1 in every coordinate.
  ConfigurationSet recolored(std::span<const std::uint32_t> sigma) const;

  /// Equality of kind, n, m and tuples (the exactness tag is metadata).
  friend bool operator==(const ConfigurationSet& a, const ConfigurationSet& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.m_ == b.m_ && a.tuples_ == b.tuples_;
  }

 private:
  ConfigKind kind_;
  std::size_t n_;
  std::size_t m_;
  std::vector<ColorTuple> tuples_;
  Exactness exactness_;
};

std::size_t tuple_width(ConfigKind kind, std::size_t n) noexcept;

// Finite groups ------------------------------------------------------------

ColorTuple configuration_of(const FiniteGroup& group, std::span<const FiniteIndex> gens, const Partition& p,
                            FiniteIndex x, ConfigKind kind = ConfigKind::one_sided);

/// Exact configuration set over all x in the group.
ConfigurationSet configurations(const FiniteGroup& group, std::span<const FiniteIndex> gens, const Partition& p,
                                ConfigKind kind = ConfigKind::one_sided);

inline ConfigurationSet two_sided_configurations(const FiniteGroup& group, std::span<const FiniteIndex> gens,
                                                 const Partition& p) {
  return configurations(group, gens, p, ConfigKind::two_sided);
}

// Arbitrary views ------------------------------------------------------------

/// Configuration of x under an oracle partition (any view).
ColorTuple configuration_of(const GroupView& view, std::span<const Element> gens, const PartitionOracle& p,
                            const Element& x, ConfigKind kind = ConfigKind::one_sided);

/// Configuration of x under a partition materialized on a universe; throws
/// ScopeViolation when x or some g_i x (x g_i) falls outside it.
ColorTuple configuration_of(const GroupView& view, std::span<const Element> gens, const Universe& universe,
                            const Partition& p, const Element& x, ConfigKind kind = ConfigKind::one_sided);

/// Observed set at radius R >= 1: x ranges over ball(R-1) in `gens`.
ConfigurationSet observed_configurations(const GroupView& view, std::span<const Element> gens,
                                         const PartitionOracle& p, std::size_t radius,
                                         ConfigKind kind = ConfigKind::one_sided);

/// Observed sets at radii 1..max_radius; returns the first set that stays
/// unchanged for `span` consecutive radii (tagged stable at its first radius)
/// or the max_radius set tagged unstable. span must be >= 2.
ConfigurationSet stabilized_configurations(const GroupView& view, std::span<const Element> gens,
                                           const PartitionOracle& p, std::size_t max_radius, std::size_t span,
                                           ConfigKind kind = ConfigKind::one_sided);

}  // namespace confequiv
