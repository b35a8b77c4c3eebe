#include <doctest.h>

#include <random>

#include "confequiv/decomposition.hpp"
#include "confequiv/errors.hpp"
#include "confequiv/finite_group.hpp"
#include "confequiv/free_group.hpp"
#include "confequiv/paper_groups.hpp"

using namespace confequiv;

namespace {

RepresentativePair word(std::initializer_list<std::pair<std::size_t, int>> letters) {
  RepresentativePair out;
  for (auto [j, r] : letters) {
    out.J.push_back(j);
    out.rho.push_back(r);
  }
  return out;
}

Piece prefix_piece(const FreeGroup& f, RepresentativePair translator, std::initializer_list<const char*> prefixes) {
  PrefixSet set;
  for (const char* p : prefixes) set.prefixes.push_back(f.word(p));
  return {std::move(translator), std::move(set)};
}

DecompositionClaim classical_claim(const FreeGroup& f2) {
  DecompositionClaim claim;
  claim.groups.push_back({prefix_piece(f2, {}, {"a"}), prefix_piece(f2, word({{1, 1}}), {"A"})});
  claim.groups.push_back({prefix_piece(f2, {}, {"b"}), prefix_piece(f2, word({{2, 1}}), {"B"})});
  return claim;
}

}  // namespace

TEST_CASE("classical four-piece decomposition of F2") {
  const FreeGroup f2(2);
  const auto claim = classical_claim(f2);
  const auto verdict = verify_decomposition(f2, claim, 6);
  CHECK(verdict.valid);
  CHECK(verdict.disjointness_radius == 6U);
  CHECK(verdict.cover_radius == 5U);
  CHECK(pieces_bound(claim) == 4);
}

TEST_CASE("broken translator leaves the identity uncovered") {
  const FreeGroup f2(2);
  auto claim = classical_claim(f2);
  claim.groups[0][1].translator = {};
  const auto verdict = verify_decomposition(f2, claim, 6);
  CHECK_FALSE(verdict.valid);
  CHECK(verdict.violation == DecompositionVerdict::Violation::not_covered);
  CHECK(verdict.witness == f2.identity());
}

TEST_CASE("overlapping pieces are reported") {
  const FreeGroup f2(2);
  auto claim = classical_claim(f2);
  claim.groups[1][0] = prefix_piece(f2, {}, {"b", "ab"});
  const auto verdict = verify_decomposition(f2, claim, 4);
  CHECK_FALSE(verdict.valid);
  CHECK(verdict.violation == DecompositionVerdict::Violation::overlap);
  CHECK(verdict.witness == f2.parse("ab"));
}

TEST_CASE("pieces_bound counts pieces") {
  const FreeGroup f2(2);
  auto claim = classical_claim(f2);
  claim.groups[0].push_back(claim.groups[0][0]);
  claim.groups[1].push_back(claim.groups[1][0]);
  CHECK(pieces_bound(claim) == 6);

  const auto z4 = cyclic_group(4);
  DecompositionClaim whole;
  whole.groups.push_back({Piece{{}, ExplicitSet{z4.elements()}}});
  CHECK(pieces_bound(whole) == 1);
  CHECK(verify_decomposition(z4, whole).valid);
}

TEST_CASE("finite groups admit no two-group paradoxical claim") {
  std::mt19937_64 rng(37);
  int rejected = 0;
  for (const char* name : {"Z4", "S3", "D4", "Q8"}) {
    const auto g = named_group(name);
    const auto elements = g.elements();
    const auto gens = g.default_generators();
    std::uniform_int_distribution<int> owner(0, 4), piece_len(0, 2), sign(0, 1);
    std::uniform_int_distribution<std::size_t> letter(1, gens.size());
    for (int trial = 0; trial < 25; ++trial) {
      // Randomly assign elements to four disjoint pieces (or to none).
      std::vector<ExplicitSet> sets(4);
      for (const auto& x : elements)
        if (int o = owner(rng); o < 4) sets[o].elements.push_back(x);
      DecompositionClaim claim;
      claim.groups.resize(2);
      for (int k = 0; k < 4; ++k) {
        RepresentativePair t;
        for (int l = piece_len(rng); l > 0; --l) {
          t.J.push_back(letter(rng));
          t.rho.push_back(sign(rng) ? 1 : -1);
        }
        claim.groups[k / 2].push_back({t, sets[k]});
      }
      const auto verdict = verify_decomposition(g, claim);
      CHECK_FALSE(verdict.valid);
      rejected += verdict.valid ? 0 : 1;
    }
  }
  CHECK(rejected == 100);
}

TEST_CASE("prefix sets need a free group") {
  const PaperGroupView k(QuotientMode::none);
  const FreeGroup f2(2);
  DecompositionClaim claim;
  claim.groups.push_back({prefix_piece(f2, {}, {"a"})});
  CHECK_THROWS_AS(verify_decomposition(k, claim, 2), Error);
  try {
    verify_decomposition(k, claim, 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedDescription);
  }
  DecompositionClaim finite_claim;
  finite_claim.groups.push_back({Piece{{}, ExplicitSet{{f2.identity()}}}});
  CHECK_THROWS_AS(verify_decomposition(f2, finite_claim), Error);
}
