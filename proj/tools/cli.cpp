#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "confequiv/amenability.hpp"
#include "confequiv/catalog_cache.hpp"
#include "confequiv/decomposition.hpp"
#include "confequiv/equivalence.hpp"
#include "confequiv/errors.hpp"
#include "confequiv/free_group.hpp"
#include "confequiv/io.hpp"
#include "confequiv/paper_groups.hpp"

namespace confequiv::cli {

namespace {

using io::json;

struct Options {
  // shared
  int json_indent = 2;
  unsigned threads = 1;
  std::uint64_t seed = 20240601;
  std::string cache_dir;

  std::string group;
  std::string gens;
  std::string partition;
  std::size_t radius = 0;
  std::size_t stable_span = 0;
  std::size_t max_n = 2;
  std::size_t max_m = 4;
  bool two_sided = false;
  bool all = false;

  std::string target;
  std::string map;
  std::string sets;
  std::string a;
  std::string b;
  std::string p;
  std::string q;
  std::string claim;

  bool identities = false;
  bool torsion = false;
  std::string m_range = "-6..6";
  std::size_t phi_samples = 0;
  std::size_t torsion_radius = 6;
  std::uint64_t order_bound = 100;
};

struct Outcome {
  json results;
  int code = kOk;
};

std::string read_text_or_file(const std::string& text) {
  if (std::ifstream in{text}; in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return text;
}

std::shared_ptr<const GroupView> require_group(const std::string& text, const char* flag = "--group") {
  if (text.empty()) throw Error(ErrorKind::InvalidInput, std::string(flag) + " is required");
  return io::build_group_from_text(text);
}

const FiniteGroup& require_finite(const GroupView& view) {
  const auto* finite = dynamic_cast<const FiniteGroup*>(&view);
  if (!finite) throw Error(ErrorKind::UnsupportedOnInfinite, view.describe() + " is not a finite group");
  return *finite;
}

std::shared_ptr<const FiniteGroup> require_finite_ptr(const std::shared_ptr<const GroupView>& view) {
  auto finite = std::dynamic_pointer_cast<const FiniteGroup>(view);
  if (!finite) throw Error(ErrorKind::UnsupportedOnInfinite, view->describe() + " is not a finite group");
  return finite;
}

GeneratingTuple resolve_gens(const GroupView& view, const std::string& text) {
  auto entries = text.empty() ? view.default_generators() : io::parse_element_list(view, text);
  return GeneratingTuple::make(view, std::move(entries));
}

json names_of(const GroupView& view, std::span<const Element> xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(io::element_to_json(view, x));
  return out;
}

json names_of(const FiniteGroup& group, std::span<const FiniteIndex> xs) {
  json out = json::array();
  for (auto x : xs) out.push_back(group.name(x));
  return out;
}

json blocks_of(const Universe& universe, const GroupView& view, const Partition& p) {
  json out = json::array();
  for (const auto& block : p.blocks()) {
    json names = json::array();
    for (auto pos : block) names.push_back(io::element_to_json(view, universe.element(pos)));
    out.push_back(std::move(names));
  }
  return out;
}

std::optional<CatalogCache> resolve_cache(const Options& o) {
  if (!o.cache_dir.empty()) return CatalogCache(o.cache_dir);
  return CatalogCache::from_environment();
}

ConfigKind kind_of(const Options& o) { return o.two_sided ? ConfigKind::two_sided : ConfigKind::one_sided; }

// ---------------------------------------------------------------------------
// Subcommands

Outcome cmd_con(const Options& o, json& inputs, ConfigKind kind) {
  const auto view = require_group(o.group);
  const auto gens = resolve_gens(*view, o.gens);
  inputs["group"] = view->describe();
  inputs["gens"] = names_of(*view, gens.entries());
  inputs["kind"] = io::to_string(kind);
  if (o.partition.empty()) throw Error(ErrorKind::InvalidInput, "--partition is required");

  if (const auto* finite = dynamic_cast<const FiniteGroup*>(view.get())) {
    const auto p = io::parse_partition_text(*finite, o.partition);
    inputs["partition"] = io::partition_to_json(*finite, p);
    const auto idx = as_indices(gens.entries());
    return {io::to_json(configurations(*finite, idx, p, kind))};
  }
  const auto oracle = io::parse_oracle(*view, o.partition);
  inputs["partition"] = oracle.name;
  const std::size_t radius = o.radius == 0 ? 4 : o.radius;
  inputs["radius"] = radius;
  if (o.stable_span > 0) {
    inputs["stable_span"] = o.stable_span;
    return {io::to_json(stabilized_configurations(*view, gens.entries(), oracle, radius, o.stable_span, kind))};
  }
  return {io::to_json(observed_configurations(*view, gens.entries(), oracle, radius, kind))};
}

Universe universe_for(const GroupView& view, const Options& o, json& inputs) {
  if (view.is_finite() && o.radius == 0) return Universe::whole(view);
  if (o.radius == 0) throw Error(ErrorKind::UnsupportedOnInfinite, "infinite groups need --radius");
  inputs["radius"] = o.radius;
  const auto gens = resolve_gens(view, o.gens);
  return Universe::ball(view, gens.entries(), o.radius);
}

Outcome cmd_atoms(const Options& o, json& inputs) {
  const auto view = require_group(o.group);
  inputs["group"] = view->describe();
  if (o.sets.empty()) throw Error(ErrorKind::InvalidInput, "--sets is required");
  const json sets_json = json::parse(read_text_or_file(o.sets));
  std::vector<std::vector<Element>> sets;
  for (const auto& s : sets_json) {
    auto& out = sets.emplace_back();
    for (const auto& x : s) out.push_back(io::parse_element(*view, x));
  }
  inputs["sets"] = sets_json;
  const auto universe = universe_for(*view, o, inputs);
  const auto p = atoms(universe, sets);
  return {{{"blocks", blocks_of(universe, *view, p)}, {"count", p.block_count()}}};
}

Outcome cmd_meet(const Options& o, json& inputs) {
  const auto view = require_group(o.group);
  const auto& group = require_finite(*view);
  inputs["group"] = group.describe();
  const auto p = io::parse_partition_text(group, o.p);
  const auto q = io::parse_partition_text(group, o.q);
  inputs["p"] = io::partition_to_json(group, p);
  inputs["q"] = io::partition_to_json(group, q);
  const auto r = meet(p, q);
  return {{{"blocks", io::partition_to_json(group, r)},
           {"count", r.block_count()},
           {"refines_p", is_refinement(r, p)},
           {"refines_q", is_refinement(r, q)}}};
}

PartitionPair pair_from(const FiniteGroup& group, const std::string& text) {
  const json j = json::parse(read_text_or_file(text));
  return {io::parse_partition(group, j.at("refined")), io::parse_partition(group, j.at("coarse"))};
}

Outcome cmd_similar(const Options& o, json& inputs) {
  const auto view = require_group(o.group);
  const auto& group = require_finite(*view);
  inputs["group"] = group.describe();
  const auto a = pair_from(group, o.a);
  const auto b = pair_from(group, o.b);
  auto pair_json = [&](const PartitionPair& pp) {
    return json{{"refined", io::partition_to_json(group, pp.refined)},
                {"coarse", io::partition_to_json(group, pp.coarse)}};
  };
  inputs["a"] = pair_json(a);
  inputs["b"] = pair_json(b);
  const auto result = similar(a, b);
  return {io::to_json(result), result.similar ? kOk : kNegative};
}

Outcome cmd_pullback(const Options& o, json& inputs) {
  const auto source = require_finite_ptr(require_group(o.group));
  const auto target = require_finite_ptr(require_group(o.target, "--target"));
  inputs["group"] = source->describe();
  inputs["target"] = target->describe();
  if (o.map.empty()) throw Error(ErrorKind::InvalidInput, "--map is required");
  const json map_json = json::parse(read_text_or_file(o.map));
  std::vector<FiniteIndex> domain, images;
  for (const auto& [from, to] : map_json.items()) {
    domain.push_back(source->index_of(from));
    images.push_back(as_index(io::parse_element(*target, to)));
  }
  inputs["map"] = map_json;
  const auto hom = FiniteHomomorphism::from_images(source, target, domain, images);

  std::vector<std::vector<FiniteIndex>> tuples;
  if (o.gens == "all") {
    tuples = enumerate_generating_tuples(*source, o.max_n);
    inputs["gens"] = "all";
    inputs["max_n"] = o.max_n;
  } else {
    tuples.push_back(as_indices(resolve_gens(*source, o.gens).entries()));
    inputs["gens"] = names_of(*source, tuples.front());
  }
  std::vector<Partition> partitions;
  if (o.partition == "all") {
    partitions = enumerate_partitions(target->size(), target->size());
    inputs["partition"] = "all";
  } else {
    if (o.partition.empty()) throw Error(ErrorKind::InvalidInput, "--partition is required");
    partitions.push_back(io::parse_partition_text(*target, o.partition));
    inputs["partition"] = io::partition_to_json(*target, partitions.front());
  }

  std::size_t cases = 0, one_equal = 0, two_equal = 0;
  json first_failure;
  json detail;
  for (const auto& g : tuples) {
    std::vector<FiniteIndex> image(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) image[i] = hom(g[i]);
    for (const auto& f : partitions) {
      const auto pulled = pullback_partition(hom, f);
      const auto src1 = configurations(*source, g, pulled, ConfigKind::one_sided);
      const auto tgt1 = configurations(*target, image, f, ConfigKind::one_sided);
      const auto src2 = configurations(*source, g, pulled, ConfigKind::two_sided);
      const auto tgt2 = configurations(*target, image, f, ConfigKind::two_sided);
      ++cases;
      const bool ok1 = src1 == tgt1, ok2 = src2 == tgt2;
      one_equal += ok1 ? 1 : 0;
      two_equal += ok2 ? 1 : 0;
      if ((!ok1 || !ok2) && first_failure.is_null())
        first_failure = {{"gens", names_of(*source, g)},
                         {"partition", io::partition_to_json(*target, f)},
                         {"one_sided_equal", ok1},
                         {"two_sided_equal", ok2}};
      if (tuples.size() == 1 && partitions.size() == 1)
        detail = {{"pullback", io::partition_to_json(*source, pulled)},
                  {"image_gens", names_of(*target, image)},
                  {"source_one_sided", io::to_json(src1)},
                  {"target_one_sided", io::to_json(tgt1)},
                  {"source_two_sided", io::to_json(src2)},
                  {"target_two_sided", io::to_json(tgt2)}};
    }
  }
  json results = {{"cases", cases},
                  {"one_sided_equal", one_equal},
                  {"two_sided_equal", two_equal},
                  {"first_failure", first_failure}};
  if (!detail.is_null()) results["detail"] = std::move(detail);
  const bool all_ok = one_equal == cases && two_equal == cases;
  return {std::move(results), all_ok ? kOk : kNegative};
}

Outcome cmd_amen_all(const FiniteGroup& group, const Options& o, json& inputs) {
  inputs["all"] = true;
  inputs["max_n"] = o.max_n;
  inputs["max_m"] = o.max_m;
  const auto tuples = enumerate_generating_tuples(group, o.max_n);
  const auto partitions = enumerate_partitions(group.size(), o.max_m);
  std::set<ConfigurationSet, decltype(&catalog_order)> distinct(&catalog_order);
  std::size_t pairs = 0;
  for (const auto& g : tuples)
    for (const auto& p : partitions) {
      distinct.insert(configurations(group, g, p));
      ++pairs;
    }
  std::size_t feasible = 0, verified = 0;
  json first_infeasible;
  for (const auto& cs : distinct) {
    const AmenabilitySystem system(cs);
    const auto verdict = solve(system);
    if (verify(system, verdict)) ++verified;
    if (verdict.feasible())
      ++feasible;
    else if (first_infeasible.is_null())
      first_infeasible = io::to_json(cs);
  }
  json results = {{"pairs", pairs},
                  {"distinct_systems", distinct.size()},
                  {"feasible", feasible},
                  {"infeasible", distinct.size() - feasible},
                  {"verified", verified},
                  {"first_infeasible", first_infeasible}};
  return {std::move(results), feasible == distinct.size() ? kOk : kNegative};
}

Outcome cmd_amen(const Options& o, json& inputs) {
  const auto view = require_group(o.group);
  inputs["group"] = view->describe();
  if (o.all) return cmd_amen_all(require_finite(*view), o, inputs);

  const auto gens = resolve_gens(*view, o.gens);
  inputs["gens"] = names_of(*view, gens.entries());
  if (o.partition.empty()) throw Error(ErrorKind::InvalidInput, "--partition is required");
  std::optional<ConfigurationSet> cs;
  if (const auto* finite = dynamic_cast<const FiniteGroup*>(view.get())) {
    const auto p = io::parse_partition_text(*finite, o.partition);
    inputs["partition"] = io::partition_to_json(*finite, p);
    cs = configurations(*finite, as_indices(gens.entries()), p);
  } else {
    const auto oracle = io::parse_oracle(*view, o.partition);
    const std::size_t radius = o.radius == 0 ? 4 : o.radius;
    const std::size_t span = o.stable_span == 0 ? 2 : o.stable_span;
    inputs["partition"] = oracle.name;
    inputs["radius"] = radius;
    inputs["stable_span"] = span;
    cs = stabilized_configurations(*view, gens.entries(), oracle, radius, span);
  }
  const AmenabilitySystem system(*cs);
  const auto verdict = solve(system);
  json results = {{"configurations", io::to_json(*cs)},
                  {"system", io::to_json(system)},
                  {"verdict", io::to_json(verdict)},
                  {"verified", verify(system, verdict)}};
  return {std::move(results), verdict.feasible() ? kOk : kNegative};
}

Outcome cmd_verify_decomp(const Options& o, json& inputs) {
  const auto view = require_group(o.group);
  inputs["group"] = view->describe();
  if (o.claim.empty()) throw Error(ErrorKind::InvalidInput, "--claim is required");
  const json claim_json = json::parse(read_text_or_file(o.claim));
  inputs["claim"] = claim_json;
  const auto claim = io::claim_from_json(*view, claim_json);
  std::optional<std::size_t> radius;
  if (o.radius > 0) {
    radius = o.radius;
    inputs["radius"] = o.radius;
  }
  const auto verdict = verify_decomposition(*view, claim, radius);
  json results = io::to_json(*view, verdict);
  results["pieces_bound"] = pieces_bound(claim);
  return {std::move(results), verdict.valid ? kOk : kNegative};
}

Outcome cmd_classdata(const Options& o, json& inputs) {
  const auto view = require_group(o.group);
  const auto& group = require_finite(*view);
  inputs["group"] = group.describe();
  json results = io::to_json(group, class_data(group));
  results["order"] = group.size();
  results["abelian"] = group.is_abelian();
  return {std::move(results)};
}

CatalogOptions catalog_options(const Options& o) {
  CatalogOptions options;
  options.threads = std::max(1U, o.threads);
  return options;
}

Outcome cmd_catalog(const Options& o, json& inputs, std::ostream& err) {
  const auto view = require_group(o.group);
  const auto& group = require_finite(*view);
  const CatalogBounds bounds{o.max_n, o.max_m};
  inputs["group"] = group.describe();
  inputs["max_n"] = o.max_n;
  inputs["max_m"] = o.max_m;
  inputs["kind"] = io::to_string(kind_of(o));
  const auto cache = resolve_cache(o);
  auto result = cached_catalog(group, bounds, kind_of(o), catalog_options(o), cache ? &*cache : nullptr);
  err << "catalog " << group.describe() << ": " << (result.cache_hit ? "cache hit" : "computed") << '\n';
  return {io::to_json(result.catalog)};
}

Outcome cmd_compare(const Options& o, json& inputs, std::ostream& err) {
  const auto va = require_group(o.a, "--a");
  const auto vb = require_group(o.b, "--b");
  const auto& ga = require_finite(*va);
  const auto& gb = require_finite(*vb);
  const CatalogBounds bounds{o.max_n, o.max_m};
  inputs["a"] = ga.describe();
  inputs["b"] = gb.describe();
  inputs["max_n"] = o.max_n;
  inputs["max_m"] = o.max_m;
  inputs["kind"] = io::to_string(kind_of(o));
  const auto cache = resolve_cache(o);
  const auto* cache_ptr = cache ? &*cache : nullptr;
  const auto ca = cached_catalog(ga, bounds, kind_of(o), catalog_options(o), cache_ptr);
  const auto cb = cached_catalog(gb, bounds, kind_of(o), catalog_options(o), cache_ptr);
  err << "catalog " << ga.describe() << ": " << (ca.cache_hit ? "cache hit" : "computed") << '\n';
  err << "catalog " << gb.describe() << ": " << (cb.cache_hit ? "cache hit" : "computed") << '\n';
  const auto cmp = compare_catalogs(ca.catalog, cb.catalog);
  json results = io::to_json(cmp);
  results["size_a"] = ca.catalog.sets().size();
  results["size_b"] = cb.catalog.sets().size();
  return {std::move(results), cmp.relation == CatalogRelation::equal ? kOk : kNegative};
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Error(ErrorKind::InvalidInput, "range must look like lo..hi");
  try {
    const auto lo = std::stoll(text.substr(0, dots));
    const auto hi = std::stoll(text.substr(dots + 2));
    if (lo > hi) throw Error(ErrorKind::InvalidInput, "empty range " + text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidInput, "bad range " + text);
  }
}

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 3), degree(-3, 3), coeff(-3, 3);
  LaurentPoly p;
  for (int i = count(rng); i > 0; --i) p += LaurentPoly::monomial(degree(rng), coeff(rng));
  return p;
}

KElement random_k(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exponent(-3, 3);
  KElement x;
  x.a = exponent(rng);
  x.B = random_poly(rng);
  x.C = random_poly(rng);
  x.D = random_poly(rng);
  return x;
}

Outcome cmd_paper_demo(const Options& o, json& inputs) {
  const bool identities = o.identities || (!o.torsion && o.phi_samples == 0);
  json checks = json::array();
  bool all_ok = true;
  auto record = [&](json check, bool ok) {
    check["ok"] = ok;
    all_ok = all_ok && ok;
    checks.push_back(std::move(check));
  };

  const auto k1 = k_generator(1), k2 = k_generator(2), k3 = k_generator(3);
  if (identities) {
    const auto [lo, hi] = parse_range(o.m_range);
    inputs["identities"] = true;
    inputs["m_range"] = {lo, hi};
    for (auto m = lo; m <= hi; ++m) {
      const auto tm = LaurentPoly::monomial(m);
      const auto power = k_pow(k1, m);
      record({{"identity", "k1^m"}, {"m", m}, {"value", io::to_json(power)}},
             power == KElement{m, {}, {}, {}});
      const auto u = k_mul(k_mul(k_pow(k1, -m), k2), k_pow(k1, m));
      record({{"identity", "k1^-m k2 k1^m"}, {"m", m}, {"value", io::to_json(u)}}, u == KElement{0, tm, {}, {}});
      const auto v = k_mul(k_mul(k_pow(k1, m), k3), k_pow(k1, -m));
      record({{"identity", "k1^m k3 k1^-m"}, {"m", m}, {"value", io::to_json(v)}}, v == KElement{0, {}, tm, {}});
      const auto c = k_commutator(k3, u);
      const bool central = center_membership(c);
      const int sign = c.D == tm ? 1 : (c.D == -tm ? -1 : 0);
      record({{"identity", "[k3, k1^-m k2 k1^m]"}, {"m", m}, {"value", io::to_json(c)}, {"d_sign", sign}},
             central && sign != 0);
    }
  }

  if (o.phi_samples > 0) {
    inputs["phi_samples"] = o.phi_samples;
    inputs["seed"] = o.seed;
    std::mt19937_64 rng(o.seed);
    std::size_t product_ok = 0, inverse_ok = 0;
    for (std::size_t i = 0; i < o.phi_samples; ++i) {
      const auto x = random_k(rng), y = random_k(rng);
      if (phi(k_mul(x, y)) == k_mul(phi(x), phi(y))) ++product_ok;
      if (phi_inverse(phi(x)) == x && phi(phi_inverse(x)) == x) ++inverse_ok;
    }
    record({{"check", "phi preserves products"}, {"samples", o.phi_samples}, {"passed", product_ok}},
           product_ok == o.phi_samples);
    record({{"check", "phi is invertible"}, {"samples", o.phi_samples}, {"passed", inverse_ok}},
           inverse_ok == o.phi_samples);
  }

  if (o.torsion) {
    inputs["torsion"] = true;
    inputs["torsion_radius"] = o.torsion_radius;
    inputs["order_bound"] = o.order_bound;
    const KElement d1{0, {}, {}, LaurentPoly::constant(1)};
    const KElement dinv{0, {}, {}, LaurentPoly::monomial(-1)};
    auto order_json = [](std::optional<std::uint64_t> k) -> json {
      return k ? json(*k) : json("exceeds-bound");
    };
    const auto h_order = order_bounded(d1, QuotientMode::mod_2z_n1, o.order_bound);
    record({{"check", "order of (1,0,0,1) in H"}, {"order", order_json(h_order)}}, h_order == 2U);
    const auto k_order = order_bounded(d1, QuotientMode::none, o.order_bound);
    record({{"check", "order of (1,0,0,1) in K"}, {"order", order_json(k_order)}}, !k_order);
    const auto g_order = order_bounded(dinv, QuotientMode::mod_n0, o.order_bound);
    record({{"check", "order of (1,0,0,t^-1) in G"}, {"order", order_json(g_order)}}, !g_order);
    const auto found = bounded_torsion_search(QuotientMode::mod_n0, o.torsion_radius, o.order_bound);
    json elements = json::array();
    for (const auto& x : found) elements.push_back(io::to_json(x));
    record({{"check", "torsion in G ball"}, {"found", std::move(elements)}}, found.empty());
  }
  return {{{"checks", std::move(checks)}, {"all_passed", all_ok}}, all_ok ? kOk : kNegative};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Configuration equivalence toolkit for finitely generated groups", "confequiv"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--json-indent", o.json_indent, "Indent for JSON output (-1 = compact)");
  app.add_option("--threads", o.threads, "Worker threads for catalog enumeration");
  app.add_option("--seed", o.seed, "Seed for randomized checks");
  app.add_option("--cache-dir", o.cache_dir, "Catalog cache directory (overrides CONFEQUIV_CACHE_DIR)");

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "Group record: inline JSON, file path, or name such as Z4, D4, Q8");
  };
  auto add_config = [&](CLI::App* sub) {
    add_group(sub);
    sub->add_option("--gens", o.gens, "Generating tuple: comma-separated names or JSON list");
    sub->add_option("--partition", o.partition, "Partition: JSON block list, builtin name, or file");
    sub->add_option("--radius", o.radius, "Ball radius for infinite groups");
    sub->add_option("--stable-span", o.stable_span, "Consecutive equal radii required for stability");
  };

  auto* con = app.add_subcommand("con", "One-sided configuration set");
  add_config(con);
  con->add_flag("--two-sided", o.two_sided, "Two-sided configurations");
  auto* con2 = app.add_subcommand("con2", "Two-sided configuration set");
  add_config(con2);

  auto* atoms_cmd = app.add_subcommand("atoms", "Atoms of the algebra generated by sets");
  add_group(atoms_cmd);
  atoms_cmd->add_option("--sets", o.sets, "JSON list of element lists")->required();
  atoms_cmd->add_option("--radius", o.radius, "Ball radius (required on infinite groups)");
  atoms_cmd->add_option("--gens", o.gens, "Generators for the ball");

  auto* meet_cmd = app.add_subcommand("meet", "Common refinement of two partitions");
  add_group(meet_cmd);
  meet_cmd->add_option("--p", o.p, "First partition")->required();
  meet_cmd->add_option("--q", o.q, "Second partition")->required();

  auto* similar_cmd = app.add_subcommand("similar", "Similarity of two partition pairs");
  add_group(similar_cmd);
  similar_cmd->add_option("--a", o.a, R"(First pair {"refined": blocks, "coarse": blocks})")->required();
  similar_cmd->add_option("--b", o.b, "Second pair")->required();

  auto* pullback = app.add_subcommand("pullback", "Configuration transfer along an epimorphism");
  add_group(pullback);
  pullback->add_option("--target", o.target, "Target group")->required();
  pullback->add_option("--map", o.map, R"(Generator images, JSON {"src": "tgt", ...})")->required();
  pullback->add_option("--gens", o.gens, "Source generating tuple, or 'all'");
  pullback->add_option("--partition", o.partition, "Target partition, or 'all'");
  pullback->add_option("--max-n", o.max_n, "Largest tuple size with --gens all");

  auto* amen = app.add_subcommand("amen", "Amenability feasibility system");
  add_config(amen);
  amen->add_flag("--all", o.all, "Every configuration pair within --max-n / --max-m (finite groups)");
  amen->add_option("--max-n", o.max_n, "Largest tuple size with --all");
  amen->add_option("--max-m", o.max_m, "Largest block count with --all");

  auto* decomp = app.add_subcommand("verify-decomp", "Check a paradoxical decomposition claim");
  add_group(decomp);
  decomp->add_option("--claim", o.claim, "Claim record: inline JSON or file")->required();
  decomp->add_option("--radius", o.radius, "Ball radius (required on infinite groups)");

  auto* classdata = app.add_subcommand("classdata", "Conjugacy classes, class number and center");
  add_group(classdata);

  auto* catalog_cmd = app.add_subcommand("catalog", "Canonical configuration catalog within bounds");
  add_group(catalog_cmd);
  catalog_cmd->add_option("--max-n", o.max_n, "Largest generating tuple size");
  catalog_cmd->add_option("--max-m", o.max_m, "Largest partition block count");
  catalog_cmd->add_flag("--two-sided", o.two_sided, "Two-sided configurations");

  auto* compare = app.add_subcommand("compare", "Compare the catalogs of two finite groups");
  compare->add_option("--a", o.a, "First group")->required();
  compare->add_option("--b", o.b, "Second group")->required();
  compare->add_option("--max-n", o.max_n, "Largest generating tuple size");
  compare->add_option("--max-m", o.max_m, "Largest partition block count");
  compare->add_flag("--two-sided", o.two_sided, "Two-sided configurations");

  auto* demo = app.add_subcommand("paper-demo", "Generator identities and torsion checks in K, G and H");
  demo->add_flag("--identities", o.identities, "Check the generator identities over --m-range");
  demo->add_option("--m-range", o.m_range, "Range lo..hi of exponents m");
  demo->add_option("--phi-samples", o.phi_samples, "Random pairs for the automorphism checks");
  demo->add_flag("--torsion", o.torsion, "Order checks and bounded torsion search in G");
  demo->add_option("--torsion-radius", o.torsion_radius, "Word length bound for the torsion search");
  demo->add_option("--order-bound", o.order_bound, "Order bound for the torsion search");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  const auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  json inputs = json::object();
  Outcome outcome;
  try {
    if (name == "con") outcome = cmd_con(o, inputs, kind_of(o));
    else if (name == "con2") outcome = cmd_con(o, inputs, ConfigKind::two_sided);
    else if (name == "atoms") outcome = cmd_atoms(o, inputs);
    else if (name == "meet") outcome = cmd_meet(o, inputs);
    else if (name == "similar") outcome = cmd_similar(o, inputs);
    else if (name == "pullback") outcome = cmd_pullback(o, inputs);
    else if (name == "amen") outcome = cmd_amen(o, inputs);
    else if (name == "verify-decomp") outcome = cmd_verify_decomp(o, inputs);
    else if (name == "classdata") outcome = cmd_classdata(o, inputs);
    else if (name == "catalog") outcome = cmd_catalog(o, inputs, err);
    else if (name == "compare") outcome = cmd_compare(o, inputs, err);
    else outcome = cmd_paper_demo(o, inputs);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << '\n';
    return kUsage;
  }
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << name << " finished in " << elapsed << " s\n";

  const json report = {{"command", name}, {"inputs", std::move(inputs)}, {"results", std::move(outcome.results)}};
  out << report.dump(o.json_indent) << '\n';
  return outcome.code;
}

}  // namespace confequiv::cli
