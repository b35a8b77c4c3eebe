#include "confequiv/partition.hpp"

#include <algorithm>
#include <map>

#include "confequiv/errors.hpp"

namespace confequiv {

// ---------------------------------------------------------------------------
// Universe

Universe::Universe(std::vector<Element> elements, Scope scope)
    : elements_(std::move(elements)), scope_(scope) {
  position_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) position_.emplace(elements_[i], i);
}

Universe Universe::whole(const GroupView& view) { return Universe(view.elements(), Scope::full()); }

Universe Universe::ball(const GroupView& view, std::span<const Element> gens, std::size_t radius) {
  std::vector<Element> elements;
  for (auto& entry : confequiv::ball(view, gens, radius)) elements.push_back(std::move(entry.element));
  return Universe(std::move(elements), Scope::ball_of(radius));
}

std::optional<std::size_t> Universe::position(const Element& x) const {
  if (auto it = position_.find(x); it != position_.end()) return it->second;
  return std::nullopt;
}

std::size_t Universe::require(const Element& x) const {
  if (auto p = position(x)) return *p;
  throw Error(ErrorKind::ScopeViolation, "element outside the working scope");
}

// ---------------------------------------------------------------------------
// Partition

Partition Partition::from_colors(std::vector<std::uint32_t> colors, Scope scope) {
  std::uint32_t m = 0;
  for (auto c : colors) m = std::max(m, c + 1);
  std::vector<bool> used(m, false);
  for (auto c : colors) used[c] = true;
  for (std::uint32_t k = 0; k < m; ++k)
    if (!used[k]) throw Error(ErrorKind::ScopeViolation, "block " + std::to_string(k + 1) + " is empty on scope");
  return Partition(std::move(colors), m, scope);
}

Partition Partition::from_blocks(std::size_t universe_size, const std::vector<std::vector<std::size_t>>& blocks,
                                 Scope scope) {
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> colors(universe_size, kUnset);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].empty()) throw Error(ErrorKind::ScopeViolation, "block " + std::to_string(k + 1) + " is empty");
    for (auto pos : blocks[k]) {
      if (pos >= universe_size) throw Error(ErrorKind::ScopeViolation, "block element outside scope");
      if (colors[pos] != kUnset)
        throw Error(ErrorKind::ScopeViolation, "blocks " + std::to_string(colors[pos] + 1) + " and " +
                                                   std::to_string(k + 1) + " overlap");
      colors[pos] = static_cast<std::uint32_t>(k);
    }
  }
  if (std::find(colors.begin(), colors.end(), kUnset) != colors.end())
    throw Error(ErrorKind::ScopeViolation, "blocks do not cover the scope");
  return Partition(std::move(colors), static_cast<std::uint32_t>(blocks.size()), scope);
}

Partition Partition::singletons(std::size_t universe_size, Scope scope) {
  std::vector<std::uint32_t> colors(universe_size);
  for (std::size_t i = 0; i < universe_size; ++i) colors[i] = static_cast<std::uint32_t>(i);
  return Partition(std::move(colors), static_cast<std::uint32_t>(universe_size), scope);
}

Partition Partition::trivial(std::size_t universe_size, Scope scope) {
  return Partition(std::vector<std::uint32_t>(universe_size, 0), universe_size ? 1U : 0U, scope);
}

std::vector<std::vector<std::size_t>> Partition::blocks() const {
  std::vector<std::vector<std::size_t>> out(blocks_);
  for (std::size_t i = 0; i < colors_.size(); ++i) out[colors_[i]].push_back(i);
  return out;
}

Partition Partition::canonical_order() const {
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> relabel(blocks_, kUnset);
  std::uint32_t next = 0;
  std::vector<std::uint32_t> colors(colors_.size());
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    auto& r = relabel[colors_[i]];
    if (r == kUnset) r = next++;
    colors[i] = r;
  }
  return Partition(std::move(colors), blocks_, scope_);
}

Partition Partition::recolored(std::span<const std::uint32_t> sigma) const {
  if (sigma.size() != blocks_) throw Error(ErrorKind::ShapeMismatch, "recoloring must permute all blocks");
  std::vector<std::uint32_t> colors(colors_.size());
  for (std::size_t i = 0; i < colors_.size(); ++i) colors[i] = sigma[colors_[i]];
  return from_colors(std::move(colors), scope_);
}

// ---------------------------------------------------------------------------
// Oracles

PartitionOracle trivial_oracle() {
  return {"trivial", 1, [](const Element&) { return 0U; }};
}

PartitionOracle oracle_of(const Partition& p) {
  return {"explicit", p.block_count(), [colors = p.colors()](const Element& x) { return colors.at(as_index(x)); }};
}

PartitionOracle pullback_oracle(const PartitionOracle& f, std::function<Element(const Element&)> q) {
  return {f.name + "-pullback", f.blocks,
          [color = f.color, q = std::move(q)](const Element& x) { return color(q(x)); }};
}

Partition materialize(const Universe& universe, const PartitionOracle& oracle) {
  std::vector<std::uint32_t> colors(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    colors[i] = oracle.color(universe.element(i));
    if (colors[i] >= oracle.blocks) throw Error(ErrorKind::ScopeViolation, "oracle color out of range");
  }
  auto p = Partition::from_colors(std::move(colors), universe.scope());
  if (p.block_count() != oracle.blocks)
    throw Error(ErrorKind::ScopeViolation, "oracle block " + std::to_string(oracle.blocks) + " is empty on scope");
  return p;
}

// ---------------------------------------------------------------------------
// Sigma-algebra operations

Partition atoms(std::size_t universe_size, const std::vector<std::vector<std::size_t>>& sets, Scope scope) {
  std::vector<std::vector<bool>> signature(universe_size, std::vector<bool>(sets.size(), false));
  for (std::size_t s = 0; s < sets.size(); ++s)
    for (auto pos : sets[s]) {
      if (pos >= universe_size) throw Error(ErrorKind::ScopeViolation, "set element outside scope");
      signature[pos][s] = true;
    }
  // Descending signature order puts 1-bits first and the complement last.
  std::map<std::vector<bool>, std::uint32_t, std::greater<>> classes;
  for (const auto& sig : signature) classes.emplace(sig, 0);
  std::uint32_t k = 0;
  for (auto& [sig, idx] : classes) idx = k++;
  std::vector<std::uint32_t> colors(universe_size);
  for (std::size_t i = 0; i < universe_size; ++i) colors[i] = classes.at(signature[i]);
  return Partition::from_colors(std::move(colors), scope);
}

Partition atoms(const Universe& universe, const std::vector<std::vector<Element>>& sets) {
  std::vector<std::vector<std::size_t>> positions;
  positions.reserve(sets.size());
  for (const auto& set : sets) {
    auto& out = positions.emplace_back();
    for (const auto& x : set) out.push_back(universe.require(x));
  }
  return atoms(universe.size(), positions, universe.scope());
}

Partition meet(const Partition& p, const Partition& q) {
  if (p.size() != q.size() || !(p.scope() == q.scope()))
    throw Error(ErrorKind::ScopeViolation, "meet of partitions over different scopes");
  auto sets = p.blocks();
  for (auto& b : q.blocks()) sets.push_back(std::move(b));
  return atoms(p.size(), sets, p.scope());
}

bool is_refinement(const Partition& fine, const Partition& coarse) {
  if (fine.size() != coarse.size()) throw Error(ErrorKind::ScopeViolation, "partitions over different scopes");
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> owner(fine.block_count(), kUnset);
  for (std::size_t i = 0; i < fine.size(); ++i) {
    auto& o = owner[fine.color(i)];
    if (o == kUnset)
      o = coarse.color(i);
    else if (o != coarse.color(i))
      return false;
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> incidence(const Partition& fine, const Partition& coarse) {
  if (fine.size() != coarse.size()) throw Error(ErrorKind::ScopeViolation, "partitions over different scopes");
  std::vector<std::vector<bool>> hit(fine.block_count(), std::vector<bool>(coarse.block_count(), false));
  for (std::size_t i = 0; i < fine.size(); ++i) hit[fine.color(i)][coarse.color(i)] = true;
  std::vector<std::vector<std::uint32_t>> out(fine.block_count());
  for (std::size_t j = 0; j < hit.size(); ++j)
    for (std::uint32_t i = 0; i < hit[j].size(); ++i)
      if (hit[j][i]) out[j].push_back(i);
  return out;
}

SimilarityResult similar(const PartitionPair& a, const PartitionPair& b) {
  if (a.refined.block_count() != b.refined.block_count() || a.coarse.block_count() != b.coarse.block_count())
    throw Error(ErrorKind::ShapeMismatch, "similar pairs need equal refined and coarse block counts");
  if (!is_refinement(a.refined, a.coarse) || !is_refinement(b.refined, b.coarse))
    throw Error(ErrorKind::InvalidInput, "each pair must be (refinement, coarse partition)");
  SimilarityResult r;
  r.witness.incidence_a = incidence(a.refined, a.coarse);
  r.witness.incidence_b = incidence(b.refined, b.coarse);
  for (std::size_t j = 0; j < r.witness.incidence_a.size(); ++j)
    if (r.witness.incidence_a[j] != r.witness.incidence_b[j]) {
      r.witness.first_mismatch = j;
      break;
    }
  r.similar = !r.witness.first_mismatch.has_value();
  return r;
}

Partition pullback_partition(const FiniteHomomorphism& q, const Partition& f) {
  if (f.size() != q.target().size())
    throw Error(ErrorKind::ScopeViolation, "partition is not over the homomorphism's target");
  if (!q.is_surjective()) throw Error(ErrorKind::NotEpimorphism, "quotient map is not surjective");
  std::vector<std::uint32_t> colors(q.source().size());
  for (std::size_t x = 0; x < colors.size(); ++x) colors[x] = f.color(q(static_cast<FiniteIndex>(x)));
  return Partition::from_colors(std::move(colors));
}

std::vector<FiniteIndex> n_extension(const FiniteGroup& group, std::span<const FiniteIndex> normal_subgroup,
                                     std::span<const FiniteIndex> g_mod) {
  std::vector<bool> in_n(group.size(), false);
  for (auto x : normal_subgroup) {
    if (x >= group.size()) throw Error(ErrorKind::ScopeViolation, "subgroup element outside group");
    in_n[x] = true;
  }
  if (!in_n[group.identity_index()]) throw Error(ErrorKind::NotNormal, "N does not contain the identity");
  for (auto x : normal_subgroup)
    for (auto y : normal_subgroup)
      if (!in_n[group.mul(x, y)]) throw Error(ErrorKind::NotNormal, "N is not closed under products");
  for (FiniteIndex g = 0; g < group.size(); ++g)
    for (auto x : normal_subgroup)
      if (!in_n[group.mul(group.mul(g, x), group.inv(g))])
        throw Error(ErrorKind::NotNormal, "N is not invariant under conjugation by " + group.name(g));

  // The image of g_mod generates G/N iff <g_mod, N> = G.
  std::vector<FiniteIndex> with_n(g_mod.begin(), g_mod.end());
  with_n.insert(with_n.end(), normal_subgroup.begin(), normal_subgroup.end());
  if (!group.generates(with_n)) throw Error(ErrorKind::NotGenerating, "image of tuple does not generate G/N");

  std::vector<FiniteIndex> result(g_mod.begin(), g_mod.end());
  std::vector<FiniteIndex> n_gens;
  for (auto g : g_mod)
    if (in_n[g]) n_gens.push_back(g);
  for (FiniteIndex x = 0; x < group.size(); ++x) {
    if (!in_n[x] || x == group.identity_index()) continue;
    if (group.closure_mask(n_gens)[x]) continue;
    n_gens.push_back(x);
    result.push_back(x);
  }
  return result;
}

}  // namespace confequiv
