#include "confequiv/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "confequiv/errors.hpp"

namespace confequiv {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidGroupSpec: return "InvalidGroupSpec";
    case ErrorKind::UnsupportedOnInfinite: return "UnsupportedOnInfinite";
    case ErrorKind::BadRepresentativePair: return "BadRepresentativePair";
    case ErrorKind::ScopeViolation: return "ScopeViolation";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotEpimorphism: return "NotEpimorphism";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::UnsupportedKind: return "UnsupportedKind";
    case ErrorKind::UnsupportedDescription: return "UnsupportedDescription";
    case ErrorKind::UnsupportedOnQuotient: return "UnsupportedOnQuotient";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Error";
}

std::string_view to_string(GroupKind kind) noexcept {
  switch (kind) {
    case GroupKind::finite_table: return "finite-table";
    case GroupKind::permutation: return "permutation";
    case GroupKind::product: return "product";
    case GroupKind::free_group: return "free-group";
    case GroupKind::paper_k: return "paper-K";
    case GroupKind::paper_g: return "paper-G";
    case GroupKind::paper_h: return "paper-H";
  }
  return "unknown";
}

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  struct Visitor {
    std::size_t operator()(FiniteIndex i) const noexcept { return std::hash<FiniteIndex>{}(i); }
    std::size_t operator()(const FreeWord& w) const noexcept {
      std::size_t h = w.letters.size();
      for (auto l : w.letters) h = h * 1000003U ^ static_cast<std::size_t>(l + 64);
      return h;
    }
    std::size_t operator()(const KElement& k) const noexcept { return k.hash(); }
  };
  return std::visit(Visitor{}, e) ^ (e.index() << 60U);
}

std::vector<Element> GroupView::elements() const {
  throw Error(ErrorKind::UnsupportedOnInfinite, "element enumeration of infinite group " + describe());
}

std::vector<std::string> GroupView::generator_names() const {
  std::vector<std::string> names;
  for (const auto& g : default_generators()) names.push_back(format(g));
  return names;
}

GeneratingTuple GeneratingTuple::make(const GroupView& view, std::vector<Element> entries, Policy policy) {
  if (entries.empty()) throw Error(ErrorKind::InvalidInput, "generating tuple must be nonempty");
  const Element e = view.identity();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!policy.allow_identity && entries[i] == e)
      throw Error(ErrorKind::InvalidInput, "identity not allowed in strict generating tuple");
    for (std::size_t j = 0; j < i; ++j)
      if (entries[i] == entries[j])
        throw Error(ErrorKind::InvalidInput,
                    "generating tuple entries must be distinct (" + view.format(entries[i]) + " repeated)");
  }
  if (!view.is_finite()) return GeneratingTuple(std::move(entries), false);
  if (policy.require_generation && closure(view, entries).size() != *view.order())
    throw Error(ErrorKind::NotGenerating, "tuple does not generate " + view.describe());
  return GeneratingTuple(std::move(entries), policy.require_generation);
}

RepresentativePair operator+(RepresentativePair lhs, const RepresentativePair& rhs) {
  lhs.J.insert(lhs.J.end(), rhs.J.begin(), rhs.J.end());
  lhs.rho.insert(lhs.rho.end(), rhs.rho.begin(), rhs.rho.end());
  return lhs;
}

Element eval_word(const GroupView& view, std::span<const Element> gens, const RepresentativePair& pair) {
  if (pair.J.size() != pair.rho.size())
    throw Error(ErrorKind::BadRepresentativePair, "J and rho have different lengths");
  Element acc = view.identity();
  for (std::size_t i = 0; i < pair.J.size(); ++i) {
    const std::size_t j = pair.J[i];
    if (j < 1 || j > gens.size())
      throw Error(ErrorKind::BadRepresentativePair,
                  "index " + std::to_string(j) + " outside 1.." + std::to_string(gens.size()));
    if (pair.rho[i] != 1 && pair.rho[i] != -1)
      throw Error(ErrorKind::BadRepresentativePair, "exponents must be +1 or -1");
    const Element& g = gens[j - 1];
    acc = view.multiply(acc, pair.rho[i] == 1 ? g : view.inverse(g));
  }
  return acc;
}

std::vector<BallEntry> ball(const GroupView& view, std::span<const Element> gens, std::size_t radius) {
  std::vector<Element> steps;
  steps.reserve(2 * gens.size());
  for (const auto& g : gens) {
    steps.push_back(g);
    steps.push_back(view.inverse(g));
  }

  std::vector<BallEntry> out;
  ElementMap<std::size_t> seen;
  out.push_back({view.identity(), {}, 0});
  seen.emplace(out.front().element, 0);

  std::size_t frontier_begin = 0;
  for (std::size_t r = 1; r <= radius; ++r) {
    const std::size_t frontier_end = out.size();
    for (std::size_t idx = frontier_begin; idx < frontier_end; ++idx) {
      for (std::size_t s = 0; s < steps.size(); ++s) {
        Element y = view.multiply(out[idx].element, steps[s]);
        if (seen.contains(y)) continue;
        RepresentativePair w = out[idx].witness;
        w.J.push_back(s / 2 + 1);
        w.rho.push_back(s % 2 == 0 ? 1 : -1);
        seen.emplace(y, out.size());
        out.push_back({std::move(y), std::move(w), r});
      }
    }
    if (out.size() == frontier_end) break;
    frontier_begin = frontier_end;
  }
  return out;
}

std::vector<Element> closure(const GroupView& view, std::span<const Element> entries) {
  if (!view.is_finite()) {
    if (entries.empty()) return {view.identity()};
    throw Error(ErrorKind::UnsupportedOnInfinite, "closure on infinite group " + view.describe());
  }
  std::set<Element> members{view.identity()};
  std::deque<Element> queue{view.identity()};
  while (!queue.empty()) {
    Element x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : entries) {
      Element y = view.multiply(x, g);
      if (members.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return {members.begin(), members.end()};
}

}  // namespace confequiv
