#pragma once

#include <memory>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "confequiv/amenability.hpp"
#include "confequiv/configuration.hpp"
#include "confequiv/decomposition.hpp"
#include "confequiv/equivalence.hpp"
#include "confequiv/finite_group.hpp"
#include "confequiv/group.hpp"
#include "confequiv/k_element.hpp"
#include "confequiv/partition.hpp"

namespace confequiv::io {

using nlohmann::json;

inline constexpr int kCatalogFormatVersion = 1;

// Groups ---------------------------------------------------------------------
//
// Group-definition records:
//   {"kind":"cyclic","order":k}            {"kind":"dihedral","n":k}   (order 2k)
//   {"kind":"quaternion"}                  {"kind":"symmetric","degree":k}
//   {"kind":"product","factors":[g,...]}   {"kind":"named","name":"Z2xZ4"}
//   {"kind":"table","elements":[names],"table":[[names or indices]]}
//   {"kind":"permutation","degree":d,"generators":[[images],...]}
//   {"kind":"free","rank":r}
//   {"kind":"paper-K"} | {"kind":"paper-G"} | {"kind":"paper-H"}
// A bare JSON string is shorthand for a named group ("Z4", "V4", "D4", ...).

std::shared_ptr<const GroupView> build_group(const json& spec);
/// Accepts inline JSON, a path to a JSON file, or a bare group name.
std::shared_ptr<const GroupView> build_group_from_text(std::string_view text);

/// Element from a name ("a^2", "aB", "k1") or, for the matrix group, a literal
/// {"a": int, "B": {"deg": coeff}, "C": ..., "D": ...}.
Element parse_element(const GroupView& view, const json& j);
json element_to_json(const GroupView& view, const Element& x);

KElement k_element_from_json(const json& j);
json to_json(const KElement& x);
json to_json(const LaurentPoly& p);

/// Comma-separated element names (commas inside parentheses do not split) or a
/// JSON list; "#k" selects element index k on finite groups.
std::vector<Element> parse_element_list(const GroupView& view, std::string_view text);

// Partitions -----------------------------------------------------------------

/// Finite partition from a JSON list of blocks (element names), or a builtin
/// name: "singletons", "trivial".
Partition parse_partition(const FiniteGroup& group, const json& j);
Partition parse_partition_text(const FiniteGroup& group, std::string_view text);
/// Oracle partition builtins: "first-letter" (free groups), "a-sign" (matrix
/// groups), "trivial"; finite views also accept anything parse_partition does.
PartitionOracle parse_oracle(const GroupView& view, std::string_view text);
json partition_to_json(const FiniteGroup& group, const Partition& p);

// Configuration sets -----------------------------------------------------------

json to_json(const Exactness& e);
json to_json(const ConfigurationSet& cs);
ConfigurationSet configuration_set_from_json(const json& j);

// Amenability ------------------------------------------------------------------

/// Rationals are written as "p/q" strings ("p" when the denominator is 1).
json rational_to_json(const Rational& q);
json to_json(const AmenabilitySystem& system);
json to_json(const FeasibilityVerdict& verdict);

// Decompositions ---------------------------------------------------------------

/// Claim record:
///   {"alphabet": ["a","b"],            (optional; default = standard generators)
///    "groups": [[{"translator": "a", "set": {"prefixes": ["A"]}},
///                {"translator": "e", "set": {"elements": ["e", "a"]}}], ...]}
/// Translators are words over the alphabet: compact ("aB", upper case =
/// inverse), space-separated tokens ("r s^-1"), or a JSON list of tokens for
/// names that contain spaces (["(0 1)", "(0 1 2)^-1"]); "e" is the empty word.
DecompositionClaim claim_from_json(const GroupView& view, const json& j);
RepresentativePair parse_word(const GroupView& view, const std::vector<std::string>& alphabet,
                              std::string_view text);
/// Each token is an alphabet name, optionally suffixed "^-1".
RepresentativePair parse_word_tokens(const std::vector<std::string>& alphabet, const std::vector<std::string>& tokens);
json to_json(const GroupView& view, const DecompositionVerdict& verdict);

// Catalogs and invariants ------------------------------------------------------

json to_json(const ConfigurationCatalog& catalog);
ConfigurationCatalog catalog_from_json(const json& j);
json to_json(const CatalogComparison& cmp);
json to_json(const FiniteGroup& group, const ClassData& data);
json to_json(const SimilarityResult& result);

std::string_view to_string(ConfigKind kind) noexcept;

}  // namespace confequiv::io
