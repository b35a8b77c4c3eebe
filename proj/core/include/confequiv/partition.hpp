#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "confequiv/finite_group.hpp"
#include "confequiv/group.hpp"

namespace confequiv {

/// Where a partition lives: the whole (finite) group, or a working ball of a
/// ball-enumerable group on which disjointness and cover were checked.
struct Scope {
  enum class Kind { full_group, ball } kind = Kind::full_group;
  std::size_t radius = 0;

  static Scope full() { return {}; }
  static Scope ball_of(std::size_t r) { return {Kind::ball, r}; }
  friend bool operator==(const Scope&, const Scope&) = default;
};

/// Finite enumerated universe: either all elements of a finite view or a
/// ball. Positions 0..size()-1 are the coordinates partitions are stored in.
class Universe {
 public:
  static Universe whole(const GroupView& view);
  static Universe ball(const GroupView& view, std::span<const Element> gens, std::size_t radius);

  std::size_t size() const noexcept { return elements_.size(); }
  const Element& element(std::size_t pos) const { return elements_.at(pos); }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::optional<std::size_t> position(const Element& x) const;
  /// Position of x; throws ScopeViolation when x is outside the universe.
  std::size_t require(const Element& x) const;
  const Scope& scope() const noexcept { return scope_; }

 private:
  Universe(std::vector<Element> elements, Scope scope);

  std::vector<Element> elements_;
  ElementMap<std::size_t> position_;
  Scope scope_;
};

/// Ordered partition of a finite universe into m nonempty blocks. Block order
/// is the coloring: block k has color k+1.
class Partition {
 public:
  /// colors[pos] is the 0-based block of position pos; every block
  /// 0..m-1 must occur. Throws ScopeViolation on an empty block.
  static Partition from_colors(std::vector<std::uint32_t> colors, Scope scope = Scope::full());
  /// Blocks as position lists; checked pairwise disjoint, covering, nonempty.
  static Partition from_blocks(std::size_t universe_size, const std::vector<std::vector<std::size_t>>& blocks,
                               Scope scope = Scope::full());
  static Partition singletons(std::size_t universe_size, Scope scope = Scope::full());
  static Partition trivial(std::size_t universe_size, Scope scope = Scope::full());

  std::size_t size() const noexcept { return colors_.size(); }
  std::uint32_t block_count() const noexcept { return blocks_; }
  std::uint32_t color(std::size_t pos) const { return colors_.at(pos); }
  const std::vector<std::uint32_t>& colors() const noexcept { return colors_; }
  std::vector<std::vector<std::size_t>> blocks() const;
  const Scope& scope() const noexcept { return scope_; }

  /// Renumbers blocks by increasing least position (the unordered-partition
  /// canonical form).
  Partition canonical_order() const;
  /// Block k becomes block sigma[k].
  Partition recolored(std::span<const std::uint32_t> sigma) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.colors_ == b.colors_ && a.scope_ == b.scope_;
  }

 private:
  Partition(std::vector<std::uint32_t> colors, std::uint32_t blocks, Scope scope)
      : colors_(std::move(colors)), blocks_(blocks), scope_(scope) {}

  std::vector<std::uint32_t> colors_;
  std::uint32_t blocks_ = 0;
  Scope scope_;
};

/// Partition of an infinite (or finite) view given by a membership function.
/// `color` returns a 0-based block index < blocks.
struct PartitionOracle {
  std::string name;
  std::uint32_t blocks = 1;
  std::function<std::uint32_t(const Element&)> color;
};

PartitionOracle trivial_oracle();
/// Oracle view of a finite partition over the whole of a finite group.
PartitionOracle oracle_of(const Partition& p);
/// Oracle x -> F(q(x)).
PartitionOracle pullback_oracle(const PartitionOracle& f, std::function<Element(const Element&)> q);
/// Materializes an oracle on a universe; the result is tagged with the
/// universe's scope. Throws ScopeViolation if a block is empty there.
Partition materialize(const Universe& universe, const PartitionOracle& oracle);

// Sigma-algebra operations -------------------------------------------------

/// Atoms of the sigma algebra generated by `sets` (each a list of positions):
/// positions grouped by their membership signature. Blocks are ordered by
/// signature, most significant bit = first set and 1 before 0, so the
/// all-zero signature (the common complement) comes last.
Partition atoms(std::size_t universe_size, const std::vector<std::vector<std::size_t>>& sets,
                Scope scope = Scope::full());
/// Same, with sets given as elements of a universe (ScopeViolation if outside).
Partition atoms(const Universe& universe, const std::vector<std::vector<Element>>& sets);

/// Common refinement: atoms(blocks(p) ++ blocks(q)).
Partition meet(const Partition& p, const Partition& q);

/// Every fine block lies inside exactly one coarse block.
bool is_refinement(const Partition& fine, const Partition& coarse);

/// incidence[j] = sorted 0-based indices i with fine_j meeting coarse_i.
std::vector<std::vector<std::uint32_t>> incidence(const Partition& fine, const Partition& coarse);

struct PartitionPair {
  Partition refined;
  Partition coarse;
};

struct SimilarityWitness {
  std::vector<std::vector<std::uint32_t>> incidence_a;
  std::vector<std::vector<std::uint32_t>> incidence_b;
  /// First refined block index whose incidence sets differ, if any.
  std::optional<std::size_t> first_mismatch;
};

struct SimilarityResult {
  bool similar = false;
  SimilarityWitness witness;
};

/// (R', R) ~ (S', S): incidence sets agree block by block. Throws
/// ShapeMismatch when block counts differ and InvalidInput when a pair is not
/// a refinement.
SimilarityResult similar(const PartitionPair& a, const PartitionPair& b);

/// Blocks q^-1(F_j), order inherited from F. Throws NotEpimorphism if q is
/// not onto F's universe.
Partition pullback_partition(const FiniteHomomorphism& q, const Partition& f);

/// Normal-subgroup extension of a tuple: g_mod followed by a greedy
/// generating tuple of N (skipping elements already generated). Throws
/// NotNormal / NotGenerating.
std::vector<FiniteIndex> n_extension(const FiniteGroup& group, std::span<const FiniteIndex> normal_subgroup,
                                     std::span<const FiniteIndex> g_mod);

}  // namespace confequiv
