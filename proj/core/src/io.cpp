#include "confequiv/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "confequiv/errors.hpp"
#include "confequiv/free_group.hpp"
#include "confequiv/paper_groups.hpp"

namespace confequiv::io {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::size_t get_size(const json& spec, const char* key) {
  if (!spec.contains(key) || !spec.at(key).is_number_integer() || spec.at(key).get<long long>() < 0)
    throw Error(ErrorKind::InvalidGroupSpec, std::string("group record needs a nonnegative integer '") + key + "'");
  return spec.at(key).get<std::size_t>();
}

FiniteGroup build_finite(const json& spec);

FiniteGroup build_table(const json& spec) {
  if (!spec.contains("elements") || !spec.contains("table"))
    throw Error(ErrorKind::InvalidGroupSpec, "table group needs 'elements' and 'table'");
  auto names = spec.at("elements").get<std::vector<std::string>>();
  std::unordered_map<std::string, FiniteIndex> by_name;
  for (std::size_t i = 0; i < names.size(); ++i) by_name.emplace(names[i], static_cast<FiniteIndex>(i));
  std::vector<std::vector<FiniteIndex>> rows;
  for (const auto& row : spec.at("table")) {
    auto& out = rows.emplace_back();
    for (const auto& cell : row) {
      if (cell.is_number_integer()) {
        const auto v = cell.get<long long>();
        if (v < 0 || static_cast<std::size_t>(v) >= names.size())
          throw Error(ErrorKind::InvalidGroupSpec, "table index out of range");
        out.push_back(static_cast<FiniteIndex>(v));
      } else {
        auto it = by_name.find(cell.get<std::string>());
        if (it == by_name.end()) throw Error(ErrorKind::InvalidGroupSpec, "table names unknown element");
        out.push_back(it->second);
      }
    }
  }
  return table_group(std::move(names), rows);
}

FiniteGroup build_finite(const json& spec) {
  if (spec.is_string()) return named_group(spec.get<std::string>());
  const std::string kind = spec.value("kind", "");
  if (kind == "cyclic") return cyclic_group(get_size(spec, "order"));
  if (kind == "dihedral") return dihedral_group(get_size(spec, "n"));
  if (kind == "quaternion") return quaternion_group();
  if (kind == "symmetric") return symmetric_group(get_size(spec, "degree"));
  if (kind == "named") return named_group(spec.at("name").get<std::string>());
  if (kind == "table") return build_table(spec);
  if (kind == "permutation") {
    return permutation_group(get_size(spec, "degree"),
                             spec.at("generators").get<std::vector<std::vector<std::size_t>>>());
  }
  if (kind == "product") {
    const auto& factors = spec.at("factors");
    if (!factors.is_array() || factors.empty())
      throw Error(ErrorKind::InvalidGroupSpec, "product needs a nonempty 'factors' list");
    FiniteGroup acc = build_finite(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i) acc = direct_product(acc, build_finite(factors[i]));
    return acc;
  }
  throw Error(ErrorKind::InvalidGroupSpec, "unknown finite group kind '" + kind + "'");
}

}  // namespace

std::shared_ptr<const GroupView> build_group(const json& spec) {
  try {
    if (spec.is_object()) {
      const std::string kind = spec.value("kind", "");
      if (kind == "free") return std::make_shared<FreeGroup>(get_size(spec, "rank"));
      if (kind == "paper-K") return std::make_shared<PaperGroupView>(QuotientMode::none);
      if (kind == "paper-G") return std::make_shared<PaperGroupView>(QuotientMode::mod_n0);
      if (kind == "paper-H") return std::make_shared<PaperGroupView>(QuotientMode::mod_2z_n1);
    }
    return std::make_shared<FiniteGroup>(build_finite(spec));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidGroupSpec, e.what());
  }
}

std::shared_ptr<const GroupView> build_group_from_text(std::string_view text) {
  const std::string t = trim(text);
  if (!t.empty() && (t.front() == '{' || t.front() == '"')) {
    try {
      return build_group(json::parse(t));
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::InvalidGroupSpec, e.what());
    }
  }
  if (std::ifstream in{t}; in) {
    try {
      return build_group(json::parse(in));
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::InvalidGroupSpec, e.what());
    }
  }
  return build_group(json(t));
}

// ---------------------------------------------------------------------------
// Elements

json to_json(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [d, c] : p.terms()) {
    if (c.fits_slong_p())
      out[std::to_string(d)] = c.get_si();
    else
      out[std::to_string(d)] = c.get_str();
  }
  return out;
}

namespace {

LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly out;
  if (j.is_null()) return out;
  if (j.is_number_integer()) return LaurentPoly::constant(j.get<long>());
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "Laurent polynomial must be {degree: coefficient}");
  for (const auto& [key, value] : j.items()) {
    LaurentPoly::Degree d = 0;
    try {
      d = std::stoll(key);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "bad degree '" + key + "'");
    }
    mpz_class c;
    if (value.is_number_integer())
      c = value.get<long>();
    else if (value.is_string() && c.set_str(value.get<std::string>(), 10) == 0) {
    } else
      throw Error(ErrorKind::InvalidInput, "bad coefficient for degree " + key);
    out += LaurentPoly::monomial(d, c);
  }
  return out;
}

}  // namespace

KElement k_element_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "matrix-group element must be a JSON object");
  KElement x;
  x.a = j.value("a", 0LL);
  x.B = laurent_from_json(j.value("B", json()));
  x.C = laurent_from_json(j.value("C", json()));
  x.D = laurent_from_json(j.value("D", json()));
  return x;
}

json to_json(const KElement& x) {
  return {{"a", x.a}, {"B", to_json(x.B)}, {"C", to_json(x.C)}, {"D", to_json(x.D)}};
}

Element parse_element(const GroupView& view, const json& j) {
  if (j.is_string()) return view.parse(j.get<std::string>());
  if (j.is_object()) {
    if (const auto* paper = dynamic_cast<const PaperGroupView*>(&view))
      return paper->canonical(k_element_from_json(j));
  }
  if (j.is_number_integer() && view.is_finite()) return view.parse("#" + std::to_string(j.get<long long>()));
  throw Error(ErrorKind::InvalidInput, "cannot read element " + j.dump() + " of " + view.describe());
}

json element_to_json(const GroupView& view, const Element& x) {
  if (const auto* k = std::get_if<KElement>(&x)) return to_json(*k);
  return view.format(x);
}

std::vector<Element> parse_element_list(const GroupView& view, std::string_view text) {
  std::vector<Element> out;
  std::string t = trim(text);
  if (!t.empty() && t.front() == '[') {
    for (const auto& item : json::parse(t)) out.push_back(parse_element(view, item));
    return out;
  }
  // Split on commas outside parentheses so product names like "(a,e)" survive.
  int depth = 0;
  std::string item;
  auto flush = [&] {
    item = trim(item);
    if (!item.empty()) out.push_back(view.parse(item));
    item.clear();
  };
  for (char ch : t) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0)
      flush();
    else
      item += ch;
  }
  flush();
  return out;
}

// ---------------------------------------------------------------------------
// Partitions

Partition parse_partition(const FiniteGroup& group, const json& j) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "singletons") return Partition::singletons(group.size());
    if (name == "trivial" || name == "one-block") return Partition::trivial(group.size());
    throw Error(ErrorKind::InvalidInput, "unknown builtin partition '" + name + "' for a finite group");
  }
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "partition must be a list of blocks");
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& block : j) {
    auto& out = blocks.emplace_back();
    for (const auto& item : block) out.push_back(as_index(parse_element(group, item)));
  }
  return Partition::from_blocks(group.size(), blocks);
}

Partition parse_partition_text(const FiniteGroup& group, std::string_view text) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '[') return parse_partition(group, json::parse(t));
  if (std::ifstream in{t}; in) return parse_partition(group, json::parse(in));
  return parse_partition(group, json(t));
}

PartitionOracle parse_oracle(const GroupView& view, std::string_view text) {
  const std::string t = trim(text);
  if (t == "trivial" || t == "one-block") return trivial_oracle();
  if (t == "first-letter") {
    const auto* free = dynamic_cast<const FreeGroup*>(&view);
    if (!free) throw Error(ErrorKind::InvalidInput, "first-letter partition needs a free group");
    return first_letter_partition(free->rank());
  }
  if (t == "a-sign") {
    if (!dynamic_cast<const PaperGroupView*>(&view))
      throw Error(ErrorKind::InvalidInput, "a-sign partition needs a matrix group (paper-K/G/H)");
    return a_sign_partition();
  }
  if (const auto* finite = dynamic_cast<const FiniteGroup*>(&view)) {
    auto p = oracle_of(parse_partition_text(*finite, t));
    p.name = t;
    return p;
  }
  throw Error(ErrorKind::InvalidInput, "unknown partition '" + t + "' for " + view.describe());
}

json partition_to_json(const FiniteGroup& group, const Partition& p) {
  json blocks = json::array();
  for (const auto& block : p.blocks()) {
    json names = json::array();
    for (auto pos : block) names.push_back(group.name(static_cast<FiniteIndex>(pos)));
    blocks.push_back(std::move(names));
  }
  return blocks;
}

// ---------------------------------------------------------------------------
// Configuration sets

std::string_view to_string(ConfigKind kind) noexcept {
  return kind == ConfigKind::one_sided ? "one-sided" : "two-sided";
}

json to_json(const Exactness& e) {
  if (e.exact) return "exact";
  return {{"observed_radius", e.radius}, {"stable_span", e.stable_span}, {"stable", e.stable}};
}

json to_json(const ConfigurationSet& cs) {
  return {{"kind", to_string(cs.kind())},
          {"n", cs.n()},
          {"m", cs.m()},
          {"exactness", to_json(cs.exactness())},
          {"tuples", cs.tuples()}};
}

ConfigurationSet configuration_set_from_json(const json& j) {
  const auto kind_name = j.at("kind").get<std::string>();
  if (kind_name != "one-sided" && kind_name != "two-sided")
    throw Error(ErrorKind::InvalidInput, "configuration kind must be one-sided or two-sided");
  const ConfigKind kind = kind_name == "one-sided" ? ConfigKind::one_sided : ConfigKind::two_sided;
  Exactness ex = Exactness::exact_set();
  if (j.contains("exactness") && j.at("exactness").is_object()) {
    const auto& e = j.at("exactness");
    ex = Exactness::observed(e.at("observed_radius").get<std::size_t>(), e.value("stable_span", 0U),
                             e.value("stable", false));
  }
  return ConfigurationSet(kind, j.at("n").get<std::size_t>(), j.at("m").get<std::size_t>(),
                          j.at("tuples").get<std::vector<ColorTuple>>(), ex);
}

// ---------------------------------------------------------------------------
// Amenability

json rational_to_json(const Rational& q) {
  Rational r = q;
  r.canonicalize();
  return r.get_str();
}

json to_json(const AmenabilitySystem& system) {
  json rows = json::array();
  for (const auto& r : system.balance_rows())
    rows.push_back({{"generator", r.generator}, {"color", r.color}, {"lhs", r.lhs}, {"rhs", r.rhs}});
  return {{"variables", system.variables()},
          {"rows", system.rows()},
          {"configurations", system.configurations()},
          {"normalization", std::vector<int>(system.variables(), 1)},
          {"balance", std::move(rows)},
          {"exactness", to_json(system.exactness())}};
}

json to_json(const FeasibilityVerdict& verdict) {
  json out;
  json values = json::array();
  if (verdict.feasible()) {
    out["status"] = "feasible";
    for (const auto& q : verdict.witness) values.push_back(rational_to_json(q));
    out["witness"] = std::move(values);
  } else {
    out["status"] = "infeasible";
    for (const auto& q : verdict.certificate) values.push_back(rational_to_json(q));
    out["certificate"] = std::move(values);
  }
  out["exactness"] = to_json(verdict.exactness);
  if (!verdict.exactness.exact) out["scope"] = "at observed radius";
  return out;
}

// ---------------------------------------------------------------------------
// Decompositions

RepresentativePair parse_word_tokens(const std::vector<std::string>& alphabet, const std::vector<std::string>& tokens) {
  RepresentativePair out;
  for (std::string tok : tokens) {
    int sign = 1;
    if (tok.size() > 3 && tok.ends_with("^-1")) {
      sign = -1;
      tok.resize(tok.size() - 3);
    }
    const auto it = std::find(alphabet.begin(), alphabet.end(), tok);
    if (it == alphabet.end()) throw Error(ErrorKind::BadRepresentativePair, "'" + tok + "' is not in the alphabet");
    out.J.push_back(static_cast<std::size_t>(it - alphabet.begin()) + 1);
    out.rho.push_back(sign);
  }
  return out;
}

RepresentativePair parse_word(const GroupView& view, const std::vector<std::string>& alphabet,
                              std::string_view text) {
  const std::string t = trim(text);
  RepresentativePair out;
  if (t.empty() || t == "e") return out;

  auto lookup = [&](const std::string& name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
      if (alphabet[i] == name) return i + 1;
    return std::nullopt;
  };

  const bool tokenized = t.find(' ') != std::string::npos || t.find('^') != std::string::npos;
  if (tokenized) {
    std::stringstream ss(t);
    std::vector<std::string> tokens;
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    return parse_word_tokens(alphabet, tokens);
  }
  if (auto idx = lookup(t)) {
    out.J.push_back(*idx);
    out.rho.push_back(1);
    return out;
  }
  for (char ch : t) {
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    auto idx = lookup(std::string(1, lower));
    if (!idx)
      throw Error(ErrorKind::BadRepresentativePair,
                  "'" + std::string(1, ch) + "' is not in the alphabet of " + view.describe());
    out.J.push_back(*idx);
    out.rho.push_back(ch == lower ? 1 : -1);
  }
  return out;
}

DecompositionClaim claim_from_json(const GroupView& view, const json& j) {
  DecompositionClaim claim;
  std::vector<std::string> alphabet_names;
  if (j.contains("alphabet")) {
    alphabet_names = j.at("alphabet").get<std::vector<std::string>>();
    for (const auto& name : alphabet_names) claim.alphabet.push_back(view.parse(name));
  } else {
    alphabet_names = view.generator_names();
  }
  const auto* free = dynamic_cast<const FreeGroup*>(&view);
  for (const auto& group : j.at("groups")) {
    auto& pieces = claim.groups.emplace_back();
    for (const auto& item : group) {
      Piece piece;
      const auto translator = item.value("translator", json("e"));
      piece.translator = translator.is_array()
                             ? parse_word_tokens(alphabet_names, translator.get<std::vector<std::string>>())
                             : parse_word(view, alphabet_names, translator.get<std::string>());
      const auto& set = item.at("set");
      if (set.contains("prefixes")) {
        if (!free) throw Error(ErrorKind::UnsupportedDescription, "prefix sets are only defined on free groups");
        PrefixSet ps;
        for (const auto& p : set.at("prefixes")) {
          const auto text = p.get<std::string>();
          ps.prefixes.push_back(text.empty() ? FreeWord{} : free->word(text));
        }
        piece.set = std::move(ps);
      } else {
        ExplicitSet es;
        for (const auto& x : set.at("elements")) es.elements.push_back(parse_element(view, x));
        piece.set = std::move(es);
      }
      pieces.push_back(std::move(piece));
    }
  }
  return claim;
}

json to_json(const GroupView& view, const DecompositionVerdict& verdict) {
  json out;
  out["verdict"] = verdict.valid ? "valid" : "invalid";
  if (!verdict.valid) {
    out["violation"] = verdict.violation == DecompositionVerdict::Violation::overlap ? "overlap" : "not-covered";
    out["witness"] = element_to_json(view, *verdict.witness);
    out["condition"] = verdict.condition;
  }
  if (verdict.disjointness_radius) {
    out["scope"] = {{"disjointness_radius", *verdict.disjointness_radius}, {"cover_radius", *verdict.cover_radius}};
  } else {
    out["scope"] = "full-group";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Catalogs

json to_json(const ConfigurationCatalog& catalog) {
  json sets = json::array();
  for (const auto& cs : catalog.sets()) sets.push_back({{"n", cs.n()}, {"m", cs.m()}, {"tuples", cs.tuples()}});
  std::ostringstream fp;
  fp << std::hex << catalog.fingerprint();
  return {{"format_version", kCatalogFormatVersion},
          {"group", catalog.group_id()},
          {"fingerprint", fp.str()},
          {"kind", to_string(catalog.kind())},
          {"bounds", {{"max_n", catalog.bounds().max_n}, {"max_m", catalog.bounds().max_m}}},
          {"size", catalog.sets().size()},
          {"sets", std::move(sets)}};
}

ConfigurationCatalog catalog_from_json(const json& j) {
  if (j.value("format_version", 0) != kCatalogFormatVersion)
    throw Error(ErrorKind::InvalidInput, "unsupported catalog format version");
  const ConfigKind kind = j.at("kind").get<std::string>() == "two-sided" ? ConfigKind::two_sided
                                                                         : ConfigKind::one_sided;
  std::vector<ConfigurationSet> sets;
  for (const auto& s : j.at("sets"))
    sets.emplace_back(kind, s.at("n").get<std::size_t>(), s.at("m").get<std::size_t>(),
                      s.at("tuples").get<std::vector<ColorTuple>>());
  const CatalogBounds bounds{j.at("bounds").at("max_n").get<std::size_t>(),
                             j.at("bounds").at("max_m").get<std::size_t>()};
  return ConfigurationCatalog(j.at("group").get<std::string>(),
                              std::stoull(j.at("fingerprint").get<std::string>(), nullptr, 16), bounds, kind,
                              std::move(sets));
}

json to_json(const CatalogComparison& cmp) {
  // Differences are reported by count plus the first set on each side in
  // catalog order; the full lists can run to thousands of sets.
  auto first_of = [](const std::vector<ConfigurationSet>& v) -> json {
    if (v.empty()) return nullptr;
    return to_json(v.front());
  };
  return {{"relation", to_string(cmp.relation)},
          {"verdict", cmp.relation == CatalogRelation::equal ? "equal within bounds" : "differs within bounds"},
          {"bounds", {{"max_n", cmp.bounds.max_n}, {"max_m", cmp.bounds.max_m}}},
          {"only_in_a", cmp.only_in_first.size()},
          {"only_in_b", cmp.only_in_second.size()},
          {"witness_a", first_of(cmp.only_in_first)},
          {"witness_b", first_of(cmp.only_in_second)}};
}

json to_json(const FiniteGroup& group, const ClassData& data) {
  json classes = json::array();
  for (const auto& cls : data.classes) {
    json names = json::array();
    for (auto x : cls) names.push_back(group.name(x));
    classes.push_back(std::move(names));
  }
  json center = json::array();
  for (auto x : data.center) center.push_back(group.name(x));
  return {{"class_number", data.class_number}, {"classes", std::move(classes)}, {"center", std::move(center)}};
}

json to_json(const SimilarityResult& result) {
  auto to_one_based = [](const std::vector<std::vector<std::uint32_t>>& inc) {
    json out = json::array();
    for (const auto& row : inc) {
      json r = json::array();
      for (auto i : row) r.push_back(i + 1);
      out.push_back(std::move(r));
    }
    return out;
  };
  json out = {{"similar", result.similar},
              {"incidence_a", to_one_based(result.witness.incidence_a)},
              {"incidence_b", to_one_based(result.witness.incidence_b)}};
  if (result.witness.first_mismatch) out["first_mismatch"] = *result.witness.first_mismatch + 1;
  return out;
}

}  // namespace confequiv::io
