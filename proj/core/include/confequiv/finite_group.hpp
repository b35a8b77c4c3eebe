#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "confequiv/group.hpp"

namespace confequiv {

/// Finite group stored as a Cayley table. Every finite family (explicit
/// tables, permutation groups, cyclic/dihedral/quaternion/symmetric groups
/// and direct products) is materialized into this form; element handles are
/// row indices.
class FiniteGroup final : public GroupView {
 public:
  /// Validates the table: square, Latin, has a two-sided identity, and is
  /// associative. Throws InvalidGroupSpec otherwise.
  FiniteGroup(GroupKind kind, std::string description, std::vector<std::string> names,
              std::vector<FiniteIndex> table, std::vector<FiniteIndex> standard_generators = {});

  // GroupView
  GroupKind kind() const noexcept override { return kind_; }
  std::optional<std::size_t> order() const noexcept override { return size_; }
  Element identity() const override { return identity_; }
  Element multiply(const Element& x, const Element& y) const override;
  Element inverse(const Element& x) const override;
  std::vector<Element> elements() const override;
  std::string format(const Element& x) const override;
  Element parse(std::string_view name) const override;
  std::vector<Element> default_generators() const override;
  std::string describe() const override { return description_; }

  // Index-level fast path.
  std::size_t size() const noexcept { return size_; }
  FiniteIndex identity_index() const noexcept { return identity_; }
  FiniteIndex mul(FiniteIndex x, FiniteIndex y) const noexcept { return table_[x * size_ + y]; }
  FiniteIndex inv(FiniteIndex x) const noexcept { return inverse_[x]; }
  const std::string& name(FiniteIndex x) const { return names_.at(x); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<FiniteIndex>& table() const noexcept { return table_; }
  FiniteIndex index_of(std::string_view name) const;  ///< by name or "#k"; throws InvalidInput
  FiniteIndex element_order(FiniteIndex x) const;
  bool is_abelian() const noexcept;

  /// Membership mask of the subgroup generated by `gens`.
  std::vector<bool> closure_mask(std::span<const FiniteIndex> gens) const;
  bool generates(std::span<const FiniteIndex> gens) const;

  /// Stable 64-bit fingerprint of the table (FNV-1a), used as a cache key.
  std::uint64_t fingerprint() const noexcept;

 private:
  GroupKind kind_;
  std::string description_;
  std::vector<std::string> names_;
  std::vector<FiniteIndex> table_;
  std::vector<FiniteIndex> inverse_;
  std::vector<FiniteIndex> standard_generators_;
  std::unordered_map<std::string, FiniteIndex> by_name_;
  std::size_t size_ = 0;
  FiniteIndex identity_ = 0;
};

FiniteIndex as_index(const Element& x);
std::vector<FiniteIndex> as_indices(std::span<const Element> xs);

// Named families ----------------------------------------------------------

/// Cyclic group of order k; elements e, a, a^2, ...; index i is a^i.
FiniteGroup cyclic_group(std::size_t k);
/// Dihedral group of order 2k: <r, s | r^k, s^2, srs = r^-1>; index i + k*j is r^i s^j.
FiniteGroup dihedral_group(std::size_t k);
/// Quaternion group {1,-1,i,-i,j,-j,k,-k}.
FiniteGroup quaternion_group();
/// Symmetric group on k points, elements in lexicographic order of image sequences.
FiniteGroup symmetric_group(std::size_t k);
/// Group generated by permutations of {0..degree-1} given as image sequences;
/// elements in BFS order from the identity. Throws InvalidGroupSpec on
/// inconsistent degree or a non-bijective image sequence.
FiniteGroup permutation_group(std::size_t degree, const std::vector<std::vector<std::size_t>>& generators);
/// Direct product; index i*|b| + j is (a_i, b_j).
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// Explicit multiplication table over named elements.
FiniteGroup table_group(std::vector<std::string> names, const std::vector<std::vector<FiniteIndex>>& rows);

/// Parses short names: "Zk" / "Ck", "V4", "Dk" (order 2k), "Q8", "Sk", and
/// products joined with 'x' ("Z2xZ4") or powers ("Z2^3"). Throws InvalidGroupSpec.
FiniteGroup named_group(std::string_view name);

// Homomorphisms -----------------------------------------------------------

/// Homomorphism between finite groups, stored as an image table.
class FiniteHomomorphism {
 public:
  /// Extends generator images to the whole source. Throws NotEpimorphism when
  /// the assignment is not a well-defined homomorphism or does not cover every
  /// source element (the listed elements must generate the source).
  static FiniteHomomorphism from_images(std::shared_ptr<const FiniteGroup> source,
                                        std::shared_ptr<const FiniteGroup> target,
                                        std::span<const FiniteIndex> domain, std::span<const FiniteIndex> images);

  const FiniteGroup& source() const noexcept { return *source_; }
  const FiniteGroup& target() const noexcept { return *target_; }
  FiniteIndex operator()(FiniteIndex x) const { return map_.at(x); }
  const std::vector<FiniteIndex>& table() const noexcept { return map_; }
  bool is_surjective() const;

 private:
  FiniteHomomorphism(std::shared_ptr<const FiniteGroup> s, std::shared_ptr<const FiniteGroup> t,
                     std::vector<FiniteIndex> map)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(map)) {}

  std::shared_ptr<const FiniteGroup> source_;
  std::shared_ptr<const FiniteGroup> target_;
  std::vector<FiniteIndex> map_;
};

}  // namespace confequiv
