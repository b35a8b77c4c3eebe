#include "confequiv/equivalence.hpp"

#include <algorithm>
#include <compare>
#include <numeric>
#include <set>
#include <thread>

#include "confequiv/errors.hpp"

namespace confequiv {

// ---------------------------------------------------------------------------
// Enumeration

std::vector<std::vector<FiniteIndex>> enumerate_generating_tuples(const FiniteGroup& group, std::size_t max_n,
                                                                  bool allow_identity) {
  std::vector<std::vector<FiniteIndex>> out;
  const std::size_t order = group.size();
  std::vector<FiniteIndex> current;
  std::vector<bool> used(order, false);

  auto extend = [&](auto&& self, std::size_t target) -> void {
    if (current.size() == target) {
      if (group.generates(current)) out.push_back(current);
      return;
    }
    for (FiniteIndex x = 0; x < order; ++x) {
      if (used[x] || (!allow_identity && x == group.identity_index())) continue;
      used[x] = true;
      current.push_back(x);
      self(self, target);
      current.pop_back();
      used[x] = false;
    }
  };
  for (std::size_t n = 1; n <= std::min(max_n, order); ++n) extend(extend, n);
  return out;
}

std::vector<Partition> enumerate_partitions(std::size_t universe_size, std::size_t max_m,
                                            const EnumerationGuards& guards) {
  if (!guards.override_guards && universe_size > guards.max_order)
    throw Error(ErrorKind::TooLarge, "partition enumeration limited to groups of order <= " +
                                         std::to_string(guards.max_order));
  if (!guards.override_guards && max_m > guards.max_colors)
    throw Error(ErrorKind::TooLarge, "partition enumeration limited to <= " + std::to_string(guards.max_colors) +
                                         " colors");
  std::vector<Partition> out;
  if (universe_size == 0 || max_m == 0) return out;
  std::vector<std::uint32_t> rgs(universe_size, 0);
  auto fill = [&](auto&& self, std::size_t pos, std::uint32_t blocks) -> void {
    if (pos == universe_size) {
      out.push_back(Partition::from_colors(rgs));
      return;
    }
    for (std::uint32_t c = 0; c <= blocks && c < max_m; ++c) {
      rgs[pos] = c;
      self(self, pos + 1, std::max(blocks, c + 1));
    }
  };
  fill(fill, 1, 1);
  return out;
}

namespace {

std::vector<std::vector<std::uint32_t>> all_permutations(std::size_t m) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0U);
  do out.push_back(sigma);
  while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace

ConfigurationSet canonical_form(const ConfigurationSet& cs) {
  std::optional<ConfigurationSet> best;
  for (const auto& sigma : all_permutations(cs.m())) {
    ConfigurationSet candidate = cs.recolored(sigma);
    if (!best || candidate.tuples() < best->tuples()) best = std::move(candidate);
  }
  return *best;
}

// ---------------------------------------------------------------------------
// Catalogs

bool catalog_order(const ConfigurationSet& a, const ConfigurationSet& b) {
  if (a.n() != b.n()) return a.n() < b.n();
  if (a.m() != b.m()) return a.m() < b.m();
  return a.tuples() < b.tuples();
}

ConfigurationCatalog::ConfigurationCatalog(std::string group_id, std::uint64_t fingerprint, CatalogBounds bounds,
                                           ConfigKind kind, std::vector<ConfigurationSet> sets)
    : group_id_(std::move(group_id)), fingerprint_(fingerprint), bounds_(bounds), kind_(kind), sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end(), catalog_order);
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool ConfigurationCatalog::contains(const ConfigurationSet& canonical) const {
  return std::binary_search(sets_.begin(), sets_.end(), canonical, catalog_order);
}

namespace {

// Rows of width <= 8 packed big-endian into one word, so integer order is
// lexicographic tuple order. Colors are 0-based here.
struct PackedKey {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  std::vector<std::uint64_t> rows;
  auto operator<=>(const PackedKey&) const = default;
};

constexpr std::size_t kMaxPackedWidth = 8;

std::uint64_t remap_row(std::uint64_t row, std::size_t width, const std::vector<std::uint32_t>& sigma) {
  std::uint64_t out = 0;
  for (std::size_t b = 0; b < width; ++b) {
    const unsigned shift = static_cast<unsigned>(8 * (width - 1 - b));
    out |= static_cast<std::uint64_t>(sigma[(row >> shift) & 0xFFU]) << shift;
  }
  return out;
}

ConfigurationSet unpack(const PackedKey& key, ConfigKind kind) {
  const std::size_t width = tuple_width(kind, key.n);
  std::vector<ColorTuple> tuples;
  tuples.reserve(key.rows.size());
  for (auto row : key.rows) {
    ColorTuple t(width);
    for (std::size_t b = 0; b < width; ++b)
      t[b] = static_cast<std::uint32_t>((row >> (8 * (width - 1 - b))) & 0xFFU) + 1;
    tuples.push_back(std::move(t));
  }
  return ConfigurationSet(kind, key.n, key.m, std::move(tuples));
}

struct CatalogWorker {
  const FiniteGroup& group;
  const std::vector<Partition>& partitions;
  const std::vector<std::vector<std::vector<std::uint32_t>>>& perms;  // by m
  ConfigKind kind;

  std::set<PackedKey> packed;
  std::vector<ConfigurationSet> generic;

  void run(const std::vector<FiniteIndex>& gens) {
    const std::size_t width = tuple_width(kind, gens.size());
    if (width > kMaxPackedWidth) {
      for (const auto& p : partitions) generic.push_back(canonical_form(configurations(group, gens, p, kind)));
      return;
    }
    const std::size_t order = group.size();
    std::vector<std::uint64_t> rows(order), mapped;
    for (const auto& p : partitions) {
      const auto& colors = p.colors();
      for (FiniteIndex x = 0; x < order; ++x) {
        std::uint64_t row = colors[x];
        for (auto g : gens) row = (row << 8U) | colors[group.mul(g, x)];
        if (kind == ConfigKind::two_sided)
          for (auto g : gens) row = (row << 8U) | colors[group.mul(x, g)];
        rows[x] = row;
      }
      std::vector<std::uint64_t> base(rows);
      std::sort(base.begin(), base.end());
      base.erase(std::unique(base.begin(), base.end()), base.end());

      PackedKey best{static_cast<std::uint32_t>(gens.size()), p.block_count(), base};
      for (const auto& sigma : perms[p.block_count()]) {
        mapped.resize(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) mapped[i] = remap_row(base[i], width, sigma);
        std::sort(mapped.begin(), mapped.end());
        if (mapped < best.rows) best.rows = mapped;
      }
      packed.insert(std::move(best));
    }
  }
};

}  // namespace

ConfigurationCatalog catalog(const FiniteGroup& group, CatalogBounds bounds, ConfigKind kind,
                             const CatalogOptions& options) {
  const auto partitions = enumerate_partitions(group.size(), bounds.max_m, options.guards);
  const auto tuples = enumerate_generating_tuples(group, bounds.max_n, options.allow_identity);

  std::vector<std::vector<std::vector<std::uint32_t>>> perms(bounds.max_m + 1);
  for (std::size_t m = 1; m <= bounds.max_m; ++m) perms[m] = all_permutations(m);

  const unsigned threads = std::max(1U, options.threads);
  std::vector<CatalogWorker> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) workers.push_back({group, partitions, perms, kind, {}, {}});

  if (threads == 1) {
    for (const auto& g : tuples) workers[0].run(g);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < tuples.size(); i += threads) workers[t].run(tuples[i]);
      });
  }

  std::set<PackedKey> packed;
  std::vector<ConfigurationSet> sets;
  for (auto& w : workers) {
    packed.merge(w.packed);
    for (auto& cs : w.generic) sets.push_back(std::move(cs));
  }
  for (const auto& key : packed) sets.push_back(unpack(key, kind));
  return ConfigurationCatalog(group.describe(), group.fingerprint(), bounds, kind, std::move(sets));
}

std::string_view to_string(CatalogRelation r) noexcept {
  switch (r) {
    case CatalogRelation::equal: return "equal";
    case CatalogRelation::strictly_contained: return "strictly-contained";
    case CatalogRelation::contains: return "contains";
    case CatalogRelation::incomparable: return "incomparable";
  }
  return "unknown";
}

CatalogComparison compare_catalogs(const ConfigurationCatalog& a, const ConfigurationCatalog& b) {
  if (!(a.bounds() == b.bounds()) || a.kind() != b.kind())
    throw Error(ErrorKind::ShapeMismatch, "catalogs must share bounds and kind");
  CatalogComparison out;
  out.bounds = a.bounds();
  std::set_difference(a.sets().begin(), a.sets().end(), b.sets().begin(), b.sets().end(),
                      std::back_inserter(out.only_in_first), catalog_order);
  std::set_difference(b.sets().begin(), b.sets().end(), a.sets().begin(), a.sets().end(),
                      std::back_inserter(out.only_in_second), catalog_order);
  if (out.only_in_first.empty() && out.only_in_second.empty())
    out.relation = CatalogRelation::equal;
  else if (out.only_in_first.empty())
    out.relation = CatalogRelation::strictly_contained;
  else if (out.only_in_second.empty())
    out.relation = CatalogRelation::contains;
  else
    out.relation = CatalogRelation::incomparable;
  return out;
}

// ---------------------------------------------------------------------------
// Conjugacy

ClassData class_data(const FiniteGroup& group) {
  ClassData out;
  std::vector<bool> assigned(group.size(), false);
  for (FiniteIndex x = 0; x < group.size(); ++x) {
    if (assigned[x]) continue;
    std::vector<FiniteIndex> cls;
    for (FiniteIndex g = 0; g < group.size(); ++g) {
      const FiniteIndex y = group.mul(group.mul(g, x), group.inv(g));
      if (!assigned[y]) {
        assigned[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    if (cls.size() == 1) out.center.push_back(x);
    out.classes.push_back(std::move(cls));
  }
  out.class_number = out.classes.size();
  return out;
}

bool is_normal_set(const FiniteGroup& group, std::span<const FiniteIndex> set) {
  std::vector<bool> in(group.size(), false);
  for (auto x : set) {
    if (x >= group.size()) throw Error(ErrorKind::ScopeViolation, "set element outside group");
    in[x] = true;
  }
  for (FiniteIndex g = 0; g < group.size(); ++g)
    for (auto x : set)
      if (!in[group.mul(group.mul(g, x), group.inv(g))]) return false;
  return true;
}

}  // namespace confequiv
