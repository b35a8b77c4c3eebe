#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "confequiv/group.hpp"

namespace confequiv {

struct ExplicitSet {
  std::vector<Element> elements;
};

/// Reduced words of a free group starting with one of the prefixes. The
/// empty prefix matches everything.
struct PrefixSet {
  std::vector<FreeWord> prefixes;
};

using SetDescription = std::variant<ExplicitSet, PrefixSet>;

struct Piece {
  RepresentativePair translator;  ///< word in the claim's alphabet; empty = identity
  SetDescription set;
};

/// groups[i] lists the (translator, set) pieces whose translates must cover
/// the group. All sets across all groups must be pairwise disjoint.
struct DecompositionClaim {
  std::vector<Element> alphabet;  ///< translator generators; empty = view's standard generators
  std::vector<std::vector<Piece>> groups;
};

struct DecompositionVerdict {
  enum class Violation { none, overlap, not_covered };

  bool valid = true;
  Violation violation = Violation::none;
  std::optional<Element> witness;
  std::string condition;
  std::optional<std::size_t> disjointness_radius;  ///< ball scope only
  std::optional<std::size_t> cover_radius;         ///< ball scope only
};

/// Checks (a) pairwise disjointness of all sets on the scope and (b) that
/// each group's translates cover the scope. With a radius the scope is a ball
/// in the alphabet; covering is then checked on the ball shrunk by the
/// longest translator so every membership query is answered on a fully known
/// reduced word. Without a radius the view must be finite. The witness is the
/// first violating element in scope order. Prefix sets on a non-free view
/// throw UnsupportedDescription.
DecompositionVerdict verify_decomposition(const GroupView& view, const DecompositionClaim& claim,
                                          std::optional<std::size_t> radius = std::nullopt);

/// Total number of pieces; an upper bound on the Tarski number (two groups)
/// or on tau_n (n groups) when the claim verifies.
std::size_t pieces_bound(const DecompositionClaim& claim);

}  // namespace confequiv
