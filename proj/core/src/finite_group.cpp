#include "confequiv/finite_group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>

#include "confequiv/errors.hpp"

namespace confequiv {

namespace {

constexpr std::size_t kAssociativityCheckLimit = 256;

std::string power_name(const std::string& base, std::size_t i) {
  if (i == 0) return "";
  if (i == 1) return base;
  return base + "^" + std::to_string(i);
}

std::string cycle_notation(const std::vector<std::size_t>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == start) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += " ";
      out += std::to_string(x);
      first = false;
      x = perm[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// Group on permutations given explicitly (already closed); product applies
// the left factor first: (p*q)(x) = q(p(x)).
FiniteGroup from_permutations(GroupKind kind, std::string description,
                              const std::vector<std::vector<std::size_t>>& perms,
                              const std::vector<FiniteIndex>& standard) {
  const std::size_t n = perms.size();
  std::map<std::vector<std::size_t>, FiniteIndex> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(perms[i], static_cast<FiniteIndex>(i));
  std::vector<FiniteIndex> table(n * n);
  const std::size_t degree = perms.empty() ? 0 : perms.front().size();
  std::vector<std::size_t> prod(degree);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t x = 0; x < degree; ++x) prod[x] = perms[j][perms[i][x]];
      auto it = index.find(prod);
      if (it == index.end()) throw Error(ErrorKind::InvalidGroupSpec, "permutation set not closed");
      table[i * n + j] = it->second;
    }
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& p : perms) names.push_back(cycle_notation(p));
  return FiniteGroup(kind, std::move(description), std::move(names), std::move(table), standard);
}

}  // namespace

FiniteGroup::FiniteGroup(GroupKind kind, std::string description, std::vector<std::string> names,
                         std::vector<FiniteIndex> table, std::vector<FiniteIndex> standard_generators)
    : kind_(kind),
      description_(std::move(description)),
      names_(std::move(names)),
      table_(std::move(table)),
      standard_generators_(std::move(standard_generators)),
      size_(names_.size()) {
  const std::size_t n = size_;
  if (n == 0) throw Error(ErrorKind::InvalidGroupSpec, "group must have at least one element");
  if (table_.size() != n * n)
    throw Error(ErrorKind::InvalidGroupSpec, "multiplication table must be " + std::to_string(n) + "x" +
                                                 std::to_string(n));
  for (auto v : table_)
    if (v >= n) throw Error(ErrorKind::InvalidGroupSpec, "table entry out of range");

  // Latin square: every row and every column is a permutation.
  std::vector<bool> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[table_[i * n + j]])
        throw Error(ErrorKind::InvalidGroupSpec, "table is not a Latin square (row " + std::to_string(i) + ")");
      seen[table_[i * n + j]] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[table_[j * n + i]])
        throw Error(ErrorKind::InvalidGroupSpec, "table is not a Latin square (column " + std::to_string(i) + ")");
      seen[table_[j * n + i]] = true;
    }
  }

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table_[e * n + x] == x && table_[x * n + e] == x;
    if (ok) {
      identity_ = static_cast<FiniteIndex>(e);
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::InvalidGroupSpec, "table has no two-sided identity");

  if (n <= kAssociativityCheckLimit) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (table_[table_[x * n + y] * n + z] != table_[x * n + table_[y * n + z]])
            throw Error(ErrorKind::InvalidGroupSpec, "table is not associative");
  }

  inverse_.resize(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (table_[x * n + y] == identity_) inverse_[x] = static_cast<FiniteIndex>(y);

  for (std::size_t i = 0; i < n; ++i) {
    if (!by_name_.emplace(names_[i], static_cast<FiniteIndex>(i)).second)
      throw Error(ErrorKind::InvalidGroupSpec, "duplicate element name '" + names_[i] + "'");
  }
  for (auto g : standard_generators_)
    if (g >= n) throw Error(ErrorKind::InvalidGroupSpec, "standard generator out of range");
}

FiniteIndex as_index(const Element& x) {
  if (const auto* i = std::get_if<FiniteIndex>(&x)) return *i;
  throw Error(ErrorKind::InvalidInput, "element is not a finite-group handle");
}

std::vector<FiniteIndex> as_indices(std::span<const Element> xs) {
  std::vector<FiniteIndex> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(as_index(x));
  return out;
}

Element FiniteGroup::multiply(const Element& x, const Element& y) const {
  const auto i = as_index(x), j = as_index(y);
  if (i >= size_ || j >= size_) throw Error(ErrorKind::InvalidInput, "element index out of range");
  return mul(i, j);
}

Element FiniteGroup::inverse(const Element& x) const {
  const auto i = as_index(x);
  if (i >= size_) throw Error(ErrorKind::InvalidInput, "element index out of range");
  return inv(i);
}

std::vector<Element> FiniteGroup::elements() const {
  std::vector<Element> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.emplace_back(static_cast<FiniteIndex>(i));
  return out;
}

std::string FiniteGroup::format(const Element& x) const { return name(as_index(x)); }

Element FiniteGroup::parse(std::string_view name) const { return index_of(name); }

FiniteIndex FiniteGroup::index_of(std::string_view name) const {
  if (auto it = by_name_.find(std::string(name)); it != by_name_.end()) return it->second;
  if (name.size() > 1 && name.front() == '#') {
    std::size_t k = 0;
    auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
    if (ec == std::errc() && p == name.data() + name.size() && k < size_) return static_cast<FiniteIndex>(k);
  }
  throw Error(ErrorKind::InvalidInput, "no element named '" + std::string(name) + "' in " + description_);
}

std::vector<Element> FiniteGroup::default_generators() const {
  return {standard_generators_.begin(), standard_generators_.end()};
}

FiniteIndex FiniteGroup::element_order(FiniteIndex x) const {
  FiniteIndex k = 1;
  for (FiniteIndex p = x; p != identity_; p = mul(p, x)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (std::size_t x = 0; x < size_; ++x)
    for (std::size_t y = x + 1; y < size_; ++y)
      if (table_[x * size_ + y] != table_[y * size_ + x]) return false;
  return true;
}

std::vector<bool> FiniteGroup::closure_mask(std::span<const FiniteIndex> gens) const {
  std::vector<bool> in(size_, false);
  std::vector<FiniteIndex> stack{identity_};
  in[identity_] = true;
  while (!stack.empty()) {
    const FiniteIndex x = stack.back();
    stack.pop_back();
    for (auto g : gens) {
      const FiniteIndex y = mul(x, g);
      if (!in[y]) {
        in[y] = true;
        stack.push_back(y);
      }
    }
  }
  return in;
}

bool FiniteGroup::generates(std::span<const FiniteIndex> gens) const {
  const auto mask = closure_mask(gens);
  return std::all_of(mask.begin(), mask.end(), [](bool b) { return b; });
}

std::uint64_t FiniteGroup::fingerprint() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::uint32_t v) {
    for (int b = 0; b < 4; ++b) {
      h ^= (v >> (8 * b)) & 0xFFU;
      h *= 0x100000001b3ULL;
    }
  };
  feed(static_cast<std::uint32_t>(size_));
  for (auto v : table_) feed(v);
  return h;
}

// ---------------------------------------------------------------------------
// Families

FiniteGroup cyclic_group(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidGroupSpec, "cyclic group order must be >= 1");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(i == 0 ? "e" : power_name("a", i));
  std::vector<FiniteIndex> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = static_cast<FiniteIndex>((i + j) % k);
  return FiniteGroup(GroupKind::finite_table, "Z" + std::to_string(k), std::move(names), std::move(table),
                     {static_cast<FiniteIndex>(k == 1 ? 0 : 1)});
}

FiniteGroup dihedral_group(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidGroupSpec, "dihedral parameter must be >= 1");
  const std::size_t n = 2 * k;
  std::vector<std::string> names(n);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < k; ++i) {
      std::string nm = power_name("r", i) + (j ? "s" : "");
      names[i + k * j] = nm.empty() ? "e" : nm;
    }
  std::vector<FiniteIndex> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t i1 = x % k, j1 = x / k, i2 = y % k, j2 = y / k;
      // r^i1 s^j1 r^i2 s^j2 = r^(i1 +- i2) s^(j1+j2)
      const std::size_t i = j1 ? (i1 + k - i2) % k : (i1 + i2) % k;
      table[x * n + y] = static_cast<FiniteIndex>(i + k * ((j1 + j2) % 2));
    }
  std::vector<FiniteIndex> gens;
  if (k > 1) gens.push_back(1);
  gens.push_back(static_cast<FiniteIndex>(k));
  return FiniteGroup(GroupKind::finite_table, "D" + std::to_string(k), std::move(names), std::move(table),
                     std::move(gens));
}

FiniteGroup quaternion_group() {
  // Index 2u + s encodes (-1)^s * unit[u], unit = 1, i, j, k.
  static constexpr int kUnitProduct[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kUnitSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  const std::vector<std::string> units{"1", "i", "j", "k"};
  std::vector<std::string> names(8);
  for (int u = 0; u < 4; ++u) {
    names[2 * u] = units[u];
    names[2 * u + 1] = "-" + units[u];
  }
  std::vector<FiniteIndex> table(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int ux = x / 2, sx = x % 2, uy = y / 2, sy = y % 2;
      const int sign = (sx + sy + kUnitSign[ux][uy]) % 2;
      table[x * 8 + y] = static_cast<FiniteIndex>(2 * kUnitProduct[ux][uy] + sign);
    }
  return FiniteGroup(GroupKind::finite_table, "Q8", std::move(names), std::move(table), {2, 4});
}

FiniteGroup symmetric_group(std::size_t k) {
  if (k == 0 || k > 7) throw Error(ErrorKind::InvalidGroupSpec, "symmetric group degree must be in 1..7");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<FiniteIndex> gens;
  auto find = [&perms](const std::vector<std::size_t>& q) {
    return static_cast<FiniteIndex>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  if (k == 1) {
    gens.push_back(0);
  } else {
    std::vector<std::size_t> swap(k), cycle(k);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (std::size_t i = 0; i < k; ++i) cycle[i] = (i + 1) % k;
    gens.push_back(find(swap));
    if (k > 2) gens.push_back(find(cycle));
  }
  return from_permutations(GroupKind::permutation, "S" + std::to_string(k), perms, gens);
}

FiniteGroup permutation_group(std::size_t degree, const std::vector<std::vector<std::size_t>>& generators) {
  if (degree == 0) throw Error(ErrorKind::InvalidGroupSpec, "permutation degree must be >= 1");
  for (const auto& g : generators) {
    if (g.size() != degree)
      throw Error(ErrorKind::InvalidGroupSpec, "generator has " + std::to_string(g.size()) +
                                                   " images, expected degree " + std::to_string(degree));
    std::vector<bool> hit(degree, false);
    for (auto v : g) {
      if (v >= degree || hit[v]) throw Error(ErrorKind::InvalidGroupSpec, "generator is not a permutation");
      hit[v] = true;
    }
  }
  std::vector<std::size_t> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<std::size_t>> perms{id};
  std::map<std::vector<std::size_t>, FiniteIndex> index{{id, 0}};
  for (std::size_t head = 0; head < perms.size(); ++head) {
    if (perms.size() > 5040) throw Error(ErrorKind::TooLarge, "permutation group larger than 5040 elements");
    for (const auto& g : generators) {
      std::vector<std::size_t> q(degree);
      for (std::size_t x = 0; x < degree; ++x) q[x] = g[perms[head][x]];
      if (index.emplace(q, static_cast<FiniteIndex>(perms.size())).second) perms.push_back(std::move(q));
    }
  }
  std::vector<FiniteIndex> gens;
  for (const auto& g : generators) {
    const FiniteIndex gi = index.at(g);
    if (std::find(gens.begin(), gens.end(), gi) == gens.end()) gens.push_back(gi);
  }
  if (gens.empty()) gens.push_back(0);
  return from_permutations(GroupKind::permutation, "perm(" + std::to_string(degree) + ")", perms, gens);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) names[i * nb + j] = "(" + a.name(i) + "," + b.name(j) + ")";
  std::vector<FiniteIndex> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table[x * n + y] =
          static_cast<FiniteIndex>(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
  std::vector<FiniteIndex> gens;
  for (const auto& g : a.default_generators())
    if (as_index(g) != a.identity_index()) gens.push_back(static_cast<FiniteIndex>(as_index(g) * nb + b.identity_index()));
  for (const auto& g : b.default_generators())
    if (as_index(g) != b.identity_index()) gens.push_back(static_cast<FiniteIndex>(a.identity_index() * nb + as_index(g)));
  if (gens.empty()) gens.push_back(static_cast<FiniteIndex>(a.identity_index() * nb + b.identity_index()));
  return FiniteGroup(GroupKind::product, a.describe() + "x" + b.describe(), std::move(names), std::move(table),
                     std::move(gens));
}

FiniteGroup table_group(std::vector<std::string> names, const std::vector<std::vector<FiniteIndex>>& rows) {
  const std::size_t n = names.size();
  if (rows.size() != n) throw Error(ErrorKind::InvalidGroupSpec, "table must have one row per element");
  std::vector<FiniteIndex> table;
  table.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorKind::InvalidGroupSpec, "table rows must have one entry per element");
    table.insert(table.end(), row.begin(), row.end());
  }
  FiniteGroup probe(GroupKind::finite_table, "table", names, table);
  // Standard generators: greedy over element order.
  std::vector<FiniteIndex> gens;
  for (FiniteIndex x = 0; x < n && !probe.generates(gens); ++x)
    if (x != probe.identity_index() && !probe.closure_mask(gens)[x]) gens.push_back(x);
  if (gens.empty()) gens.push_back(probe.identity_index());
  return FiniteGroup(GroupKind::finite_table, "table(" + std::to_string(n) + ")", std::move(names),
                     std::move(table), std::move(gens));
}

FiniteGroup named_group(std::string_view name) {
  if (auto pos = name.find('x'); pos != std::string_view::npos)
    return direct_product(named_group(name.substr(0, pos)), named_group(name.substr(pos + 1)));
  if (auto pos = name.find('^'); pos != std::string_view::npos) {
    std::size_t k = 0;
    const auto tail = name.substr(pos + 1);
    auto [p, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), k);
    if (ec != std::errc() || p != tail.data() + tail.size() || k == 0 || k > 8)
      throw Error(ErrorKind::InvalidGroupSpec, "bad power in group name '" + std::string(name) + "'");
    FiniteGroup base = named_group(name.substr(0, pos));
    FiniteGroup acc = base;
    for (std::size_t i = 1; i < k; ++i) acc = direct_product(acc, base);
    return acc;
  }
  if (name == "V4") return direct_product(cyclic_group(2), cyclic_group(2));
  if (name == "Q8") return quaternion_group();
  if (name.size() >= 2) {
    std::size_t k = 0;
    const auto tail = name.substr(1);
    auto [p, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), k);
    if (ec == std::errc() && p == tail.data() + tail.size()) {
      switch (name.front()) {
        case 'Z':
        case 'C': return cyclic_group(k);
        case 'D': return dihedral_group(k);
        case 'S': return symmetric_group(k);
        default: break;
      }
    }
  }
  throw Error(ErrorKind::InvalidGroupSpec, "unknown group name '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Homomorphisms

FiniteHomomorphism FiniteHomomorphism::from_images(std::shared_ptr<const FiniteGroup> source,
                                                   std::shared_ptr<const FiniteGroup> target,
                                                   std::span<const FiniteIndex> domain,
                                                   std::span<const FiniteIndex> images) {
  if (domain.size() != images.size())
    throw Error(ErrorKind::InvalidInput, "homomorphism needs one image per listed element");
  const FiniteGroup& s = *source;
  const FiniteGroup& t = *target;
  constexpr FiniteIndex kUnset = static_cast<FiniteIndex>(-1);
  std::vector<FiniteIndex> map(s.size(), kUnset);
  map[s.identity_index()] = t.identity_index();
  std::deque<FiniteIndex> queue{s.identity_index()};
  // phi(x g) = phi(x) phi(g), BFS from the identity.
  while (!queue.empty()) {
    const FiniteIndex x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < domain.size(); ++k) {
      const FiniteIndex y = s.mul(x, domain[k]);
      const FiniteIndex img = t.mul(map[x], images[k]);
      if (map[y] == kUnset) {
        map[y] = img;
        queue.push_back(y);
      } else if (map[y] != img) {
        throw Error(ErrorKind::NotEpimorphism, "assignment is not a well-defined homomorphism");
      }
    }
  }
  if (std::find(map.begin(), map.end(), kUnset) != map.end())
    throw Error(ErrorKind::NotEpimorphism, "listed elements do not generate the source group");
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y)
      if (map[s.mul(x, y)] != t.mul(map[x], map[y]))
        throw Error(ErrorKind::NotEpimorphism, "map is not multiplicative");
  return FiniteHomomorphism(std::move(source), std::move(target), std::move(map));
}

bool FiniteHomomorphism::is_surjective() const {
  std::vector<bool> hit(target_->size(), false);
  for (auto v : map_) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace confequiv
