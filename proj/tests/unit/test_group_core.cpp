#include <doctest.h>

#include <random>

#include "confequiv/errors.hpp"
#include "confequiv/finite_group.hpp"
#include "confequiv/free_group.hpp"
#include "confequiv/group.hpp"
#include "confequiv/partition.hpp"
#include "confequiv/paper_groups.hpp"
#include "oracles.hpp"

using namespace confequiv;

namespace {

bool throws_kind(ErrorKind kind, auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

void check_axioms_exhaustive(const FiniteGroup& g) {
  const auto n = static_cast<FiniteIndex>(g.size());
  const FiniteIndex e = g.identity_index();
  for (FiniteIndex x = 0; x < n; ++x) {
    CHECK(g.mul(e, x) == x);
    CHECK(g.mul(x, e) == x);
    CHECK(g.mul(x, g.inv(x)) == e);
    CHECK(g.mul(g.inv(x), x) == e);
    for (FiniteIndex y = 0; y < n; ++y)
      for (FiniteIndex z = 0; z < n; ++z) REQUIRE(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
  }
}

}  // namespace

TEST_CASE("cyclic groups: order and element orders") {
  const auto z1 = cyclic_group(1);
  CHECK(z1.size() == 1);
  CHECK(z1.order() == 1U);

  const auto z4 = cyclic_group(4);
  CHECK(z4.size() == 4);
  CHECK(oracle::element_order(z4, 1) == 4);
  for (FiniteIndex x = 0; x < 4; ++x) CHECK(z4.element_order(x) == oracle::element_order(z4, x));
  CHECK(z4.name(2) == "a^2");
  CHECK(z4.is_abelian());
}

TEST_CASE("symmetric group S3 is non-abelian of order 6") {
  const auto s3 = symmetric_group(3);
  CHECK(s3.size() == 6);
  bool found = false;
  for (FiniteIndex x = 0; x < 6; ++x)
    for (FiniteIndex y = 0; y < 6; ++y) found |= s3.mul(x, y) != s3.mul(y, x);
  CHECK(found);
  CHECK_FALSE(s3.is_abelian());
}

TEST_CASE("group axioms hold exhaustively for the named families") {
  for (const char* name : {"Z1", "Z2", "Z5", "V4", "Z6", "S3", "D4", "Q8", "Z2xZ4", "Z2^3", "D5", "S4"}) {
    CAPTURE(name);
    check_axioms_exhaustive(named_group(name));
  }
}

TEST_CASE("named families have the expected orders and class numbers") {
  struct Row {
    const char* name;
    std::size_t order;
    std::size_t classes;
  };
  for (const auto& row : {Row{"Z8", 8, 8}, Row{"D4", 8, 5}, Row{"Q8", 8, 5}, Row{"S3", 6, 3}, Row{"D5", 10, 4},
                          Row{"S4", 24, 5}, Row{"Z2^3", 8, 8}}) {
    CAPTURE(row.name);
    const auto g = named_group(row.name);
    CHECK(g.size() == row.order);
    CHECK(oracle::class_number(g) == row.classes);
  }
}

TEST_CASE("malformed definitions raise InvalidGroupSpec") {
  CHECK(throws_kind(ErrorKind::InvalidGroupSpec, [] { table_group({"e", "a"}, {{0, 1}, {1, 1}}); }));
  CHECK(throws_kind(ErrorKind::InvalidGroupSpec, [] { table_group({"e", "a"}, {{0, 1}}); }));
  CHECK(throws_kind(ErrorKind::InvalidGroupSpec, [] { permutation_group(3, {{1, 0, 2}, {1, 0}}); }));
  CHECK(throws_kind(ErrorKind::InvalidGroupSpec, [] { permutation_group(3, {{1, 1, 2}}); }));
  CHECK(throws_kind(ErrorKind::InvalidGroupSpec, [] { named_group("X9"); }));
  // Latin square without associativity: the "rock-paper-scissors" loop on 5 points.
  CHECK(throws_kind(ErrorKind::InvalidGroupSpec, [] {
    table_group({"0", "1", "2", "3", "4"},
                {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
  }));
}

TEST_CASE("permutation groups match the symmetric group") {
  const auto p = permutation_group(3, {{1, 0, 2}, {1, 2, 0}});
  CHECK(p.size() == 6);
  CHECK(oracle::class_number(p) == 3);
  const auto s4 = permutation_group(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  CHECK(s4.size() == 24);
}

TEST_CASE("direct products") {
  const auto g = direct_product(cyclic_group(2), cyclic_group(3));
  CHECK(g.size() == 6);
  CHECK(g.is_abelian());
  CHECK(g.element_order(g.index_of("(a,a)")) == 6);
}

TEST_CASE("closure") {
  const auto z4 = cyclic_group(4);
  const std::vector<Element> two{FiniteIndex{2}}, one{FiniteIndex{1}}, none;
  CHECK(closure(z4, two) == std::vector<Element>{FiniteIndex{0}, FiniteIndex{2}});
  CHECK(closure(z4, one).size() == 4);
  CHECK(closure(z4, none) == std::vector<Element>{FiniteIndex{0}});
  const FreeGroup f2(2);
  CHECK(closure(f2, none) == std::vector<Element>{f2.identity()});
  CHECK(throws_kind(ErrorKind::UnsupportedOnInfinite, [&] { closure(f2, f2.default_generators()); }));
}

TEST_CASE("closure agrees with naive fixpoint on random subsets") {
  std::mt19937_64 rng(7);
  const auto s4 = named_group("S4");
  std::uniform_int_distribution<FiniteIndex> pick(0, 23);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<FiniteIndex> gens{pick(rng), pick(rng)};
    std::vector<Element> elems(gens.begin(), gens.end());
    const auto expected = oracle::generated(s4, gens);
    CHECK(closure(s4, elems).size() == expected.size());
    CHECK(s4.generates(gens) == (expected.size() == 24));
  }
}

TEST_CASE("free group balls") {
  const FreeGroup f2(2);
  const auto gens = f2.default_generators();
  CHECK(ball(f2, gens, 0).size() == 1);
  CHECK(ball(f2, gens, 1).size() == 5);
  CHECK(ball(f2, gens, 2).size() == 17);
  for (unsigned r = 0; r <= 6; ++r) CHECK(ball(f2, gens, r).size() == oracle::free_ball_size(2, r));
  const FreeGroup f3(3);
  CHECK(ball(f3, f3.default_generators(), 4).size() == oracle::free_ball_size(3, 4));
}

TEST_CASE("ball witnesses evaluate to their elements and have minimal length") {
  const auto d4 = named_group("D4");
  const auto gens = d4.default_generators();
  for (const auto& entry : ball(d4, gens, 8)) {
    CHECK(eval_word(d4, gens, entry.witness) == entry.element);
    CHECK(entry.witness.length() == entry.radius);
  }
  CHECK(ball(d4, gens, 8).size() == 8);
}

TEST_CASE("free words reduce and print") {
  const FreeGroup f2(2);
  CHECK(f2.format(f2.parse("aAb")) == "b");
  CHECK(f2.format(f2.multiply(f2.parse("ab"), f2.parse("Ba"))) == "aa");
  CHECK(f2.format(f2.parse("e")) == "e");
  CHECK(f2.word("abBA").letters.empty());
  CHECK(f2.to_text(f2.word("abBA")) == "e");
  CHECK(f2.inverse(f2.parse("ab")) == f2.parse("BA"));
}

TEST_CASE("eval_word") {
  const auto z4 = cyclic_group(4);
  const std::vector<Element> g{FiniteIndex{1}};
  CHECK(eval_word(z4, g, {{1, 1}, {1, -1}}) == Element{FiniteIndex{0}});
  CHECK(eval_word(z4, g, {{1, 1}, {1, 1}}) == Element{FiniteIndex{2}});
  CHECK(eval_word(z4, g, {}) == Element{FiniteIndex{0}});
  CHECK(throws_kind(ErrorKind::BadRepresentativePair, [&] { eval_word(z4, g, {{2}, {1}}); }));
  CHECK(throws_kind(ErrorKind::BadRepresentativePair, [&] { eval_word(z4, g, {{1}, {2}}); }));
  CHECK(throws_kind(ErrorKind::BadRepresentativePair, [&] { eval_word(z4, g, {{1, 1}, {1}}); }));

  const PaperGroupView k(QuotientMode::none);
  const auto kg = k.default_generators();
  const auto x = std::get<KElement>(eval_word(k, kg, {{1, 2, 1}, {-1, 1, 1}}));
  CHECK(x == KElement{0, LaurentPoly{{1, 1}}, {}, {}});
}

TEST_CASE("generating tuples") {
  const auto z4 = cyclic_group(4);
  CHECK(GeneratingTuple::make(z4, {FiniteIndex{1}}).verified());
  CHECK(GeneratingTuple::make(z4, {FiniteIndex{0}, FiniteIndex{1}}).size() == 2);
  CHECK(throws_kind(ErrorKind::NotGenerating, [&] { GeneratingTuple::make(z4, {FiniteIndex{2}}); }));
  CHECK(throws_kind(ErrorKind::InvalidInput, [&] { GeneratingTuple::make(z4, {FiniteIndex{1}, FiniteIndex{1}}); }));
  CHECK(throws_kind(ErrorKind::InvalidInput, [&] {
    GeneratingTuple::make(z4, {FiniteIndex{0}, FiniteIndex{1}}, {.allow_identity = false});
  }));
  const FreeGroup f2(2);
  CHECK_FALSE(GeneratingTuple::make(f2, f2.default_generators()).verified());
}

TEST_CASE("homomorphisms") {
  auto z4 = std::make_shared<const FiniteGroup>(cyclic_group(4));
  auto z2 = std::make_shared<const FiniteGroup>(cyclic_group(2));
  const std::vector<FiniteIndex> dom{1}, img{1};
  const auto q = FiniteHomomorphism::from_images(z4, z2, dom, img);
  CHECK(q.table() == std::vector<FiniteIndex>{0, 1, 0, 1});
  CHECK(q.is_surjective());

  auto z3 = std::make_shared<const FiniteGroup>(cyclic_group(3));
  CHECK(throws_kind(ErrorKind::NotEpimorphism, [&] { FiniteHomomorphism::from_images(z4, z3, dom, img); }));
  const std::vector<FiniteIndex> trivial_img{0};
  const auto trivial = FiniteHomomorphism::from_images(z4, z2, dom, trivial_img);
  CHECK_FALSE(trivial.is_surjective());
  CHECK(throws_kind(ErrorKind::NotEpimorphism, [&] { pullback_partition(trivial, Partition::singletons(2)); }));
}
