#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "confequiv/k_element.hpp"

namespace confequiv {

/// Handle of an element in a finite group: its row in the Cayley table.
using FiniteIndex = std::uint32_t;

/// Reduced word in a free group. Letter +k is generator k (1-based), -k its
/// inverse. No letter is ever adjacent to its own inverse.
struct FreeWord {
  std::vector<std::int32_t> letters;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  /// Shortlex order.
  friend bool operator<(const FreeWord& x, const FreeWord& y) {
    if (x.letters.size() != y.letters.size()) return x.letters.size() < y.letters.size();
    return x.letters < y.letters;
  }
};

/// Canonical element handle. Which alternative is used depends on the view:
/// finite groups use table indices, free groups reduced words, and the
/// matrix group K (and its quotients) reduced KElements. Two handles from the
/// same view are equal iff they denote the same element.
using Element = std::variant<FiniteIndex, FreeWord, KElement>;

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

template <typename T>
using ElementMap = std::unordered_map<Element, T, ElementHash>;

enum class GroupKind { finite_table, permutation, product, free_group, paper_k, paper_g, paper_h };

std::string_view to_string(GroupKind kind) noexcept;

/// Uniform interface over finite groups and ball-enumerable infinite groups.
/// Views are immutable after construction, so every member is safe to call
/// concurrently.
class GroupView {
 public:
  virtual ~GroupView() = default;

  virtual GroupKind kind() const noexcept = 0;
  /// Group order, or nullopt for infinite groups.
  virtual std::optional<std::size_t> order() const noexcept = 0;
  bool is_finite() const noexcept { return order().has_value(); }

  virtual Element identity() const = 0;
  virtual Element multiply(const Element& x, const Element& y) const = 0;
  virtual Element inverse(const Element& x) const = 0;
  bool equal(const Element& x, const Element& y) const { return x == y; }

  /// Full element list in canonical order; throws UnsupportedOnInfinite.
  virtual std::vector<Element> elements() const;

  virtual std::string format(const Element& x) const = 0;
  /// Inverse of format() for element names; throws InvalidInput.
  virtual Element parse(std::string_view name) const = 0;

  /// A distinguished generating tuple (the family's standard generators).
  virtual std::vector<Element> default_generators() const = 0;
  virtual std::vector<std::string> generator_names() const;

  virtual std::string describe() const = 0;
};

/// Ordered generating tuple with pairwise distinct entries. For finite views
/// generation is checked by closure; for infinite views it is taken on trust
/// and `verified()` is false.
class GeneratingTuple {
 public:
  struct Policy {
    bool allow_identity = true;
    bool require_generation = true;
  };

  static GeneratingTuple make(const GroupView& view, std::vector<Element> entries, Policy policy);
  static GeneratingTuple make(const GroupView& view, std::vector<Element> entries) {
    return make(view, std::move(entries), Policy{});
  }

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<Element>& entries() const noexcept { return entries_; }
  const Element& operator[](std::size_t i) const { return entries_[i]; }
  bool verified() const noexcept { return verified_; }

 private:
  GeneratingTuple(std::vector<Element> entries, bool verified)
      : entries_(std::move(entries)), verified_(verified) {}

  std::vector<Element> entries_;
  bool verified_ = false;
};

/// Word W(J, rho; g) = prod_i g_{J(i)}^{rho(i)}, J 1-based. The empty pair
/// denotes the empty product.
struct RepresentativePair {
  std::vector<std::size_t> J;
  std::vector<int> rho;

  std::size_t length() const noexcept { return J.size(); }
  friend bool operator==(const RepresentativePair&, const RepresentativePair&) = default;

  /// Concatenation (word product).
  friend RepresentativePair operator+(RepresentativePair lhs, const RepresentativePair& rhs);
};

/// Evaluates the word left to right. Throws BadRepresentativePair on an index
/// outside 1..gens.size(), an exponent other than +-1, or mismatched lengths.
Element eval_word(const GroupView& view, std::span<const Element> gens, const RepresentativePair& pair);

struct BallEntry {
  Element element;
  RepresentativePair witness;  ///< one shortest word reaching the element
  std::size_t radius = 0;      ///< word length of the witness
};

/// Breadth-first ball of words of length <= radius. Order is BFS order with
/// neighbours x*g_1, x*g_1^-1, x*g_2, ... so the first witness found for an
/// element is shortest and tie-broken by generator index then sign.
std::vector<BallEntry> ball(const GroupView& view, std::span<const Element> gens, std::size_t radius);

/// Subgroup generated by `entries`, sorted. Throws UnsupportedOnInfinite.
std::vector<Element> closure(const GroupView& view, std::span<const Element> entries);

}  // namespace confequiv
