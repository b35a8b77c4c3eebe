#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "confequiv/group.hpp"
#include "confequiv/partition.hpp"

namespace confequiv {

/// Free group of rank r on generators named a, b, c, d, f, g, ... ('e' is
/// reserved for the identity). Inverses print in upper case, so "aB" is
/// a b^-1. Elements are freely reduced words.
class FreeGroup final : public GroupView {
 public:
  explicit FreeGroup(std::size_t rank);

  GroupKind kind() const noexcept override { return GroupKind::free_group; }
  std::optional<std::size_t> order() const noexcept override { return std::nullopt; }
  Element identity() const override { return FreeWord{}; }
  Element multiply(const Element& x, const Element& y) const override;
  Element inverse(const Element& x) const override;
  std::string format(const Element& x) const override;
  Element parse(std::string_view name) const override;
  std::vector<Element> default_generators() const override;
  std::string describe() const override { return "F" + std::to_string(rank_); }

  std::size_t rank() const noexcept { return rank_; }
  char letter_name(std::int32_t letter) const;
  FreeWord word(std::string_view text) const;  ///< parse + reduce
  std::string to_text(const FreeWord& w) const;

 private:
  std::size_t rank_;
};

const FreeWord& as_word(const Element& x);

/// Concatenate and freely reduce.
FreeWord reduce_concat(const FreeWord& x, const FreeWord& y);
FreeWord word_inverse(const FreeWord& x);
bool is_reduced(const FreeWord& w);
bool has_prefix(const FreeWord& w, const FreeWord& prefix);

/// Partition of F_r by first letter: blocks {e}, S(a), S(a^-1), S(b), S(b^-1), ...
PartitionOracle first_letter_partition(std::size_t rank);

}  // namespace confequiv
