#include "confequiv/decomposition.hpp"

#include <algorithm>
#include <unordered_set>

#include "confequiv/errors.hpp"
#include "confequiv/free_group.hpp"

namespace confequiv {

namespace {

class Membership {
 public:
  Membership(const GroupView& view, const SetDescription& set) {
    if (const auto* ex = std::get_if<ExplicitSet>(&set)) {
      explicit_.insert(ex->elements.begin(), ex->elements.end());
      return;
    }
    if (view.kind() != GroupKind::free_group)
      throw Error(ErrorKind::UnsupportedDescription, "prefix sets are only defined on free groups");
    prefixes_ = std::get<PrefixSet>(set).prefixes;
    for (const auto& p : prefixes_)
      if (!is_reduced(p)) throw Error(ErrorKind::InvalidInput, "prefix words must be reduced");
    is_prefix_ = true;
  }

  bool contains(const Element& x) const {
    if (!is_prefix_) return explicit_.contains(x);
    const auto& w = as_word(x);
    return std::any_of(prefixes_.begin(), prefixes_.end(), [&w](const FreeWord& p) { return has_prefix(w, p); });
  }

 private:
  bool is_prefix_ = false;
  std::unordered_set<Element, ElementHash> explicit_;
  std::vector<FreeWord> prefixes_;
};

std::string piece_label(std::size_t group, std::size_t piece) {
  return "group " + std::to_string(group + 1) + " piece " + std::to_string(piece + 1);
}

}  // namespace

DecompositionVerdict verify_decomposition(const GroupView& view, const DecompositionClaim& claim,
                                          std::optional<std::size_t> radius) {
  const std::vector<Element> alphabet = claim.alphabet.empty() ? view.default_generators() : claim.alphabet;

  struct Compiled {
    std::size_t group, piece;
    Element translator_inverse;
    Membership members;
  };
  std::vector<Compiled> pieces;
  std::size_t max_len = 0;
  for (std::size_t g = 0; g < claim.groups.size(); ++g)
    for (std::size_t k = 0; k < claim.groups[g].size(); ++k) {
      const auto& piece = claim.groups[g][k];
      max_len = std::max(max_len, piece.translator.length());
      pieces.push_back({g, k, view.inverse(eval_word(view, alphabet, piece.translator)), Membership(view, piece.set)});
    }

  DecompositionVerdict verdict;
  std::vector<Element> disjoint_scope, cover_scope;
  if (radius) {
    if (*radius < max_len)
      throw Error(ErrorKind::InvalidInput, "ball radius smaller than the longest translator");
    for (auto& e : ball(view, alphabet, *radius)) {
      if (e.radius + max_len <= *radius) cover_scope.push_back(e.element);
      disjoint_scope.push_back(std::move(e.element));
    }
    verdict.disjointness_radius = *radius;
    verdict.cover_radius = *radius - max_len;
  } else {
    if (!view.is_finite())
      throw Error(ErrorKind::UnsupportedOnInfinite, "infinite views need a ball radius");
    disjoint_scope = view.elements();
    cover_scope = disjoint_scope;
  }

  for (const auto& x : disjoint_scope) {
    const Compiled* owner = nullptr;
    for (const auto& p : pieces) {
      if (!p.members.contains(x)) continue;
      if (owner) {
        verdict.valid = false;
        verdict.violation = DecompositionVerdict::Violation::overlap;
        verdict.witness = x;
        verdict.condition = piece_label(owner->group, owner->piece) + " and " + piece_label(p.group, p.piece) +
                            " share " + view.format(x);
        return verdict;
      }
      owner = &p;
    }
  }

  for (std::size_t g = 0; g < claim.groups.size(); ++g) {
    for (const auto& y : cover_scope) {
      const bool covered = std::any_of(pieces.begin(), pieces.end(), [&](const Compiled& p) {
        return p.group == g && p.members.contains(view.multiply(p.translator_inverse, y));
      });
      if (!covered) {
        verdict.valid = false;
        verdict.violation = DecompositionVerdict::Violation::not_covered;
        verdict.witness = y;
        verdict.condition = "group " + std::to_string(g + 1) + " does not cover " + view.format(y);
        return verdict;
      }
    }
  }
  return verdict;
}

std::size_t pieces_bound(const DecompositionClaim& claim) {
  std::size_t total = 0;
  for (const auto& g : claim.groups) total += g.size();
  return total;
}

}  // namespace confequiv
