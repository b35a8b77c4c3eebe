#include <doctest.h>

#include <random>

#include "confequiv/equivalence.hpp"
#include "confequiv/errors.hpp"
#include "oracles.hpp"

using namespace confequiv;

namespace {

using Tuples = std::vector<ColorTuple>;

std::vector<FiniteIndex> indices(const FiniteGroup& g, std::initializer_list<const char*> names) {
  std::vector<FiniteIndex> out;
  for (const char* n : names) out.push_back(g.index_of(n));
  return out;
}

}  // namespace

TEST_CASE("generating tuple enumeration") {
  CHECK(enumerate_generating_tuples(cyclic_group(2), 1) == std::vector<std::vector<FiniteIndex>>{{1}});
  CHECK(enumerate_generating_tuples(named_group("V4"), 1).empty());
  CHECK(enumerate_generating_tuples(cyclic_group(4), 1) == std::vector<std::vector<FiniteIndex>>{{1}, {3}});
  CHECK(enumerate_generating_tuples(cyclic_group(1), 2) == std::vector<std::vector<FiniteIndex>>{{0}});
  CHECK(enumerate_generating_tuples(cyclic_group(1), 2, false).empty());

  // Count against the naive closure oracle.
  const auto d4 = named_group("D4");
  std::size_t expected = 0;
  for (FiniteIndex x = 0; x < 8; ++x) {
    if (oracle::generated(d4, {x}).size() == 8) ++expected;
    for (FiniteIndex y = 0; y < 8; ++y)
      if (x != y && oracle::generated(d4, {x, y}).size() == 8) ++expected;
  }
  CHECK(enumerate_generating_tuples(d4, 2).size() == expected);
}

TEST_CASE("partition enumeration counts") {
  CHECK(enumerate_partitions(1, 3).size() == 1);
  CHECK(enumerate_partitions(4, 4).size() == 15);
  CHECK(enumerate_partitions(4, 2).size() == 8);
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned m = 1; m <= 5; ++m) CHECK(enumerate_partitions(n, m).size() == oracle::partitions_up_to(n, m));
  CHECK_THROWS_AS(enumerate_partitions(13, 2), Error);
  CHECK_THROWS_AS(enumerate_partitions(4, 6), Error);
  CHECK(enumerate_partitions(13, 2, {.override_guards = true}).size() == oracle::partitions_up_to(13, 2));
}

TEST_CASE("canonical forms are orbit-invariant") {
  std::mt19937_64 rng(41);
  const auto g = named_group("D4");
  const auto gens = indices(g, {"r", "s"});
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = Partition::from_colors(oracle::random_coloring(rng, 8, 3));
    const auto base = canonical_form(configurations(g, gens, p));
    std::vector<std::uint32_t> sigma{0, 1, 2};
    do {
      CHECK(canonical_form(configurations(g, gens, p.recolored(sigma))) == base);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    CHECK(canonical_form(base) == base);
  }
}

TEST_CASE("catalog examples") {
  const auto trivial = catalog(cyclic_group(1), {2, 3}, ConfigKind::one_sided);
  REQUIRE(trivial.sets().size() == 1);
  CHECK(trivial.sets()[0].tuples() == Tuples{{1, 1}});
  CHECK(catalog(cyclic_group(1), {2, 3}, ConfigKind::one_sided, {.allow_identity = false}).sets().empty());

  const auto z4 = cyclic_group(4);
  const auto c = catalog(z4, {1, 4}, ConfigKind::one_sided);
  const std::vector<FiniteIndex> one{1};
  CHECK(c.contains(canonical_form(configurations(z4, one, Partition::singletons(4)))));
  CHECK(catalog(named_group("V4"), {1, 4}, ConfigKind::one_sided).sets().empty());
}

TEST_CASE("catalog matches a direct enumeration") {
  for (const char* name : {"Z4", "S3"}) {
    const auto g = named_group(name);
    for (auto kind : {ConfigKind::one_sided, ConfigKind::two_sided}) {
      std::vector<ConfigurationSet> direct;
      for (const auto& gens : enumerate_generating_tuples(g, 2))
        for (const auto& p : enumerate_partitions(g.size(), 3)) direct.push_back(canonical_form(configurations(g, gens, p, kind)));
      const ConfigurationCatalog expected(g.describe(), g.fingerprint(), {2, 3}, kind, direct);
      const auto got = catalog(g, {2, 3}, kind);
      CHECK(got.sets() == expected.sets());
    }
  }
}

TEST_CASE("catalog results do not depend on the thread count") {
  const auto g = named_group("Q8");
  const auto one = catalog(g, {2, 3}, ConfigKind::two_sided, {.threads = 1});
  const auto many = catalog(g, {2, 3}, ConfigKind::two_sided, {.threads = 8});
  CHECK(one.sets() == many.sets());
}

TEST_CASE("catalog comparison") {
  const auto z4 = catalog(cyclic_group(4), {1, 4}, ConfigKind::one_sided);
  const auto v4 = catalog(named_group("V4"), {1, 4}, ConfigKind::one_sided);
  CHECK(compare_catalogs(z4, z4).relation == CatalogRelation::equal);
  const auto cmp = compare_catalogs(z4, v4);
  CHECK(cmp.relation == CatalogRelation::contains);
  CHECK(cmp.only_in_first.size() == z4.sets().size());
  CHECK(compare_catalogs(v4, z4).relation == CatalogRelation::strictly_contained);

  const auto z6 = catalog(cyclic_group(6), {2, 4}, ConfigKind::one_sided);
  const auto z2z3 = catalog(named_group("Z2xZ3"), {2, 4}, ConfigKind::one_sided);
  CHECK(compare_catalogs(z6, z2z3).relation == CatalogRelation::equal);

  const auto other = catalog(cyclic_group(4), {2, 4}, ConfigKind::one_sided);
  CHECK_THROWS_AS(compare_catalogs(z4, other), Error);
}

TEST_CASE("catalogs are invariant under relabeling the group") {
  // S3 as a permutation group in BFS order versus lexicographic order.
  const auto a = catalog(named_group("S3"), {2, 3}, ConfigKind::two_sided);
  const auto b = catalog(permutation_group(3, {{1, 2, 0}, {1, 0, 2}}), {2, 3}, ConfigKind::two_sided);
  CHECK(a.sets() == b.sets());
  const auto d = catalog(dihedral_group(3), {2, 3}, ConfigKind::two_sided);
  CHECK(a.sets() == d.sets());
}

TEST_CASE("class data") {
  for (std::size_t k = 1; k <= 8; ++k) {
    const auto data = class_data(cyclic_group(k));
    CHECK(data.class_number == k);
    CHECK(data.center.size() == k);
  }
  struct Row {
    const char* name;
    std::size_t classes;
  };
  for (const auto& row : {Row{"S3", 3}, Row{"D4", 5}, Row{"Q8", 5}, Row{"S4", 5}, Row{"D5", 4}}) {
    CAPTURE(row.name);
    const auto g = named_group(row.name);
    const auto data = class_data(g);
    CHECK(data.class_number == row.classes);
    CHECK(data.class_number == oracle::class_number(g));
    std::vector<std::size_t> sizes;
    for (const auto& c : data.classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == oracle::class_sizes(g));
  }
  const auto s3 = class_data(named_group("S3"));
  std::vector<std::size_t> sizes;
  for (const auto& c : s3.classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("normal sets") {
  const auto s3 = named_group("S3");
  CHECK(is_normal_set(s3, class_data(s3).center));
  CHECK_FALSE(is_normal_set(s3, indices(s3, {"(0 1)"})));
  CHECK(is_normal_set(s3, indices(s3, {"()", "(0 1 2)", "(0 2 1)"})));
  const auto q8 = named_group("Q8");
  CHECK(is_normal_set(q8, class_data(q8).center));
}
