#include "confequiv/configuration.hpp"

#include <algorithm>
#include <set>

#include "confequiv/errors.hpp"

namespace confequiv {

std::size_t tuple_width(ConfigKind kind, std::size_t n) noexcept {
  return kind == ConfigKind::one_sided ? n + 1 : 2 * n + 1;
}

ConfigurationSet::ConfigurationSet(ConfigKind kind, std::size_t n, std::size_t m, std::vector<ColorTuple> tuples,
                                   Exactness exactness)
    : kind_(kind), n_(n), m_(m), tuples_(std::move(tuples)), exactness_(exactness) {
  const std::size_t width = tuple_width(kind, n);
  for (const auto& t : tuples_) {
    if (t.size() != width)
      throw Error(ErrorKind::InvalidInput, "configuration has length " + std::to_string(t.size()) + ", expected " +
                                               std::to_string(width));
    for (auto c : t)
      if (c < 1 || c > m) throw Error(ErrorKind::InvalidInput, "color " + std::to_string(c) + " outside 1..m");
  }
  std::sort(tuples_.begin(), tuples_.end());
  tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
  if (exactness_.exact) {
    std::vector<bool> seen(m, false);
    for (const auto& t : tuples_) seen[t[0] - 1] = true;
    for (std::size_t c = 0; c < m; ++c)
      if (!seen[c]) throw Error(ErrorKind::InvalidInput, "color " + std::to_string(c + 1) + " never occurs as c0");
  }
}

bool ConfigurationSet::contains(const ColorTuple& t) const {
  return std::binary_search(tuples_.begin(), tuples_.end(), t);
}

bool ConfigurationSet::is_subset_of(const ConfigurationSet& other) const {
  return kind_ == other.kind_ && n_ == other.n_ &&
         std::includes(other.tuples_.begin(), other.tuples_.end(), tuples_.begin(), tuples_.end());
}

ConfigurationSet ConfigurationSet::recolored(std::span<const std::uint32_t> sigma) const {
  if (sigma.size() != m_) throw Error(ErrorKind::ShapeMismatch, "recoloring must permute all colors");
  std::vector<ColorTuple> out = tuples_;
  for (auto& t : out)
    for (auto& c : t) c = sigma[c - 1] + 1;
  return ConfigurationSet(kind_, n_, m_, std::move(out), exactness_);
}

// ---------------------------------------------------------------------------
// Finite groups

ColorTuple configuration_of(const FiniteGroup& group, std::span<const FiniteIndex> gens, const Partition& p,
                            FiniteIndex x, ConfigKind kind) {
  if (p.size() != group.size()) throw Error(ErrorKind::ScopeViolation, "partition is not over this group");
  ColorTuple t;
  t.reserve(tuple_width(kind, gens.size()));
  t.push_back(p.color(x) + 1);
  for (auto g : gens) t.push_back(p.color(group.mul(g, x)) + 1);
  if (kind == ConfigKind::two_sided)
    for (auto g : gens) t.push_back(p.color(group.mul(x, g)) + 1);
  return t;
}

ConfigurationSet configurations(const FiniteGroup& group, std::span<const FiniteIndex> gens, const Partition& p,
                                ConfigKind kind) {
  if (p.size() != group.size()) throw Error(ErrorKind::ScopeViolation, "partition is not over this group");
  for (auto g : gens)
    if (g >= group.size()) throw Error(ErrorKind::InvalidInput, "generator outside group");
  std::vector<ColorTuple> tuples;
  tuples.reserve(group.size());
  for (FiniteIndex x = 0; x < group.size(); ++x) tuples.push_back(configuration_of(group, gens, p, x, kind));
  return ConfigurationSet(kind, gens.size(), p.block_count(), std::move(tuples));
}

// ---------------------------------------------------------------------------
// Arbitrary views

namespace {

template <typename ColorFn>
ColorTuple configuration_with(const GroupView& view, std::span<const Element> gens, const Element& x,
                              ConfigKind kind, ColorFn&& color) {
  ColorTuple t;
  t.reserve(tuple_width(kind, gens.size()));
  t.push_back(color(x) + 1);
  for (const auto& g : gens) t.push_back(color(view.multiply(g, x)) + 1);
  if (kind == ConfigKind::two_sided)
    for (const auto& g : gens) t.push_back(color(view.multiply(x, g)) + 1);
  return t;
}

}  // namespace

ColorTuple configuration_of(const GroupView& view, std::span<const Element> gens, const PartitionOracle& p,
                            const Element& x, ConfigKind kind) {
  return configuration_with(view, gens, x, kind, [&p](const Element& y) {
    const auto c = p.color(y);
    if (c >= p.blocks) throw Error(ErrorKind::ScopeViolation, "oracle color out of range");
    return c;
  });
}

ColorTuple configuration_of(const GroupView& view, std::span<const Element> gens, const Universe& universe,
                            const Partition& p, const Element& x, ConfigKind kind) {
  if (p.size() != universe.size()) throw Error(ErrorKind::ScopeViolation, "partition is not over this universe");
  return configuration_with(view, gens, x, kind,
                            [&](const Element& y) { return p.color(universe.require(y)); });
}

ConfigurationSet observed_configurations(const GroupView& view, std::span<const Element> gens,
                                         const PartitionOracle& p, std::size_t radius, ConfigKind kind) {
  if (radius < 1) throw Error(ErrorKind::InvalidInput, "observation radius must be >= 1");
  std::vector<ColorTuple> tuples;
  for (const auto& entry : ball(view, gens, radius - 1))
    tuples.push_back(configuration_of(view, gens, p, entry.element, kind));
  return ConfigurationSet(kind, gens.size(), p.blocks, std::move(tuples),
                          Exactness::observed(radius, 0, false));
}

ConfigurationSet stabilized_configurations(const GroupView& view, std::span<const Element> gens,
                                           const PartitionOracle& p, std::size_t max_radius, std::size_t span,
                                           ConfigKind kind) {
  if (span < 2) throw Error(ErrorKind::InvalidInput, "stable span must be >= 2");
  if (max_radius < 1) throw Error(ErrorKind::InvalidInput, "max radius must be >= 1");

  const auto entries = ball(view, gens, max_radius - 1);
  std::set<ColorTuple> current;
  std::size_t next = 0;
  std::size_t run_start = 1;
  std::size_t run_length = 0;
  std::set<ColorTuple> run_set;

  for (std::size_t r = 1; r <= max_radius; ++r) {
    // Observed set at radius r adds x with |x| = r - 1.
    for (; next < entries.size() && entries[next].radius <= r - 1; ++next)
      current.insert(configuration_of(view, gens, p, entries[next].element, kind));
    if (run_length > 0 && current == run_set) {
      ++run_length;
    } else {
      run_start = r;
      run_length = 1;
      run_set = current;
    }
    if (run_length >= span)
      return ConfigurationSet(kind, gens.size(), p.blocks, {run_set.begin(), run_set.end()},
                              Exactness::observed(run_start, span, true));
  }
  return ConfigurationSet(kind, gens.size(), p.blocks, {current.begin(), current.end()},
                          Exactness::observed(max_radius, span, false));
}

}  // namespace confequiv
