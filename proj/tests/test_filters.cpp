#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"

using namespace dmm;
using fixture::at;
using fixture::set;

namespace {

std::vector<std::uint64_t> filter_bits(FiniteIRL const& A) {
  std::vector<std::uint64_t> v;
  for (auto const& G : deductive_filters(A)) v.push_back(G.members.bits());
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::vector<int>> congruence_blocks(FiniteIRL const& A) {
  std::vector<std::vector<int>> v;
  for (auto const& G : deductive_filters(A)) v.push_back(omega(A, G).block);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Filters, NamedExamples) {
  FiniteIRL const S3 = make_named("S3");
  auto const f3 = deductive_filters(S3);
  ASSERT_EQ(f3.size(), 2U);
  EXPECT_EQ(f3[0].members, set(S3, {"0", "1"}));
  EXPECT_EQ(f3[1].members, ElementSet::all(3));

  FiniteIRL const two = make_named("2");
  auto const f2 = deductive_filters(two);
  ASSERT_EQ(f2.size(), 2U);
  EXPECT_EQ(f2[0].members, set(two, {"e"}));

  // C4 is simple: [e) and the whole algebra are its only deductive filters.
  FiniteIRL const C4 = make_named("C4");
  auto const f4 = deductive_filters(C4);
  ASSERT_EQ(f4.size(), 2U);
  EXPECT_EQ(f4[0].members, set(C4, {"e", "f", "f^2"}));
  EXPECT_FALSE(is_deductive_filter(C4, set(C4, {"f", "f^2"})));
  EXPECT_FALSE(is_deductive_filter(C4, set(C4, {"f^2"})));
}

TEST(Filters, MatchPowerSetSearch) {
  for (auto const& A : fixture::irls_up_to(5)) {
    auto expected = oracle::deductive_filters(A);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(filter_bits(A), expected) << A.name();
  }
  for (auto const& A : fixture::dmms_up_to(7)) {
    auto expected = oracle::deductive_filters(A);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(filter_bits(A), expected) << A.name();
  }
}

TEST(Dfg, Examples) {
  FiniteIRL const C4 = make_named("C4");
  EXPECT_EQ(dfg(C4, set(C4, {"~f^2"})).members, ElementSet::all(4));
  for (auto const* name : {"2", "S3", "C4", "D4", "S5"}) {
    FiniteIRL const A = make_named(name);
    EXPECT_EQ(dfg(A, {}).members, A.up_set(A.e())) << name;
  }
  FiniteIRL const S5 = make_named("S5");
  EXPECT_EQ(dfg(S5, set(S5, {"-1"})).members, set(S5, {"-1", "0", "1", "2"}));
}

// DFg X is the least power-set filter containing X.
TEST(Dfg, LeastFilterContainingGenerators) {
  for (auto const& A : fixture::dmms_up_to(6)) {
    auto const all = oracle::deductive_filters(A);
    for (std::uint64_t X = 0; X < (std::uint64_t{1} << A.size()); ++X) {
      std::uint64_t least = ~std::uint64_t{0};
      for (std::uint64_t F : all)
        if ((F & X) == X && std::popcount(F) < std::popcount(least)) least = F;
      EXPECT_EQ(dfg(A, ElementSet(X)).members.bits(), least) << A.name();
    }
  }
}

TEST(Omega, SugiharaKernel) {
  FiniteIRL const S5 = make_named("S5");
  Congruence const th = omega(S5, dfg(S5, set(S5, {"-1"})));
  EXPECT_EQ(th.block_count(), 3U);
  EXPECT_TRUE(th.related(at(S5, "-1"), at(S5, "0")));
  EXPECT_TRUE(th.related(at(S5, "0"), at(S5, "1")));
  EXPECT_FALSE(th.related(at(S5, "-2"), at(S5, "-1")));
  EXPECT_FALSE(th.related(at(S5, "1"), at(S5, "2")));
}

TEST(Omega, IdentityFromSmallestFilterAndInverse) {
  for (auto const& A : fixture::dmms_up_to(6)) {
    Congruence const id = omega(A, dfg(A, {}));
    EXPECT_EQ(id.block_count(), A.size());
    for (auto const& G : deductive_filters(A)) EXPECT_EQ(filter_of(A, omega(A, G)), G);
  }
}

TEST(Omega, RejectsNonFilters) {
  FiniteIRL const C4 = make_named("C4");
  EXPECT_THROW(omega(C4, DeductiveFilter{set(C4, {"f", "f^2"})}), NotAFilter);
  Congruence bad{{0, 0, 1, 1}};
  EXPECT_FALSE(is_congruence(C4, bad));
  EXPECT_THROW(filter_of(C4, bad), NotACongruence);
}

// Filters and congruences correspond bijectively: the images of omega are
// exactly the brute-force congruences.
TEST(Omega, BijectionWithBruteForceCongruences) {
  for (auto const& A : fixture::dmms_up_to(7)) {
    auto expected = oracle::congruences(A);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(congruence_blocks(A), expected) << A.name();
  }
  for (auto const& A : fixture::irls_up_to(5)) {
    auto expected = oracle::congruences(A);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(congruence_blocks(A), expected) << A.name();
  }
}

TEST(Quotient, Examples) {
  for (auto const* name : {"2", "C4", "S5"}) {
    FiniteIRL const A = make_named(name);
    EXPECT_EQ(quotient(A, DeductiveFilter{ElementSet::all(A.size())}).algebra.size(), 1U);
  }
  FiniteIRL const C4 = make_named("C4");
  EXPECT_EQ(quotient(C4, dfg(C4, set(C4, {"~f^2"}))).algebra.size(), 1U);
  FiniteIRL const S5 = make_named("S5");
  EXPECT_TRUE(is_isomorphic(quotient(S5, dfg(S5, set(S5, {"-1"}))).algebra, make_named("S3")));
}

TEST(Quotient, ProjectionIsHomomorphismOntoValidAlgebra) {
  for (auto const& A : fixture::dmms_up_to(6)) {
    for (auto const& G : deductive_filters(A)) {
      Quotient const q = quotient(A, G);
      EXPECT_TRUE(is_dmm(q.algebra));
      EXPECT_TRUE(oracle::is_hom(A, q.algebra, q.projection));
    }
  }
}

TEST(Classify, NamedExamples) {
  Classification const d4 = classify(make_named("D4"));
  EXPECT_TRUE(d4.simple);
  EXPECT_TRUE(d4.si);
  EXPECT_TRUE(d4.fsi);

  FiniteIRL const S5 = make_named("S5");
  Classification const s5 = classify(S5);
  EXPECT_FALSE(s5.simple);
  EXPECT_TRUE(s5.si);
  ASSERT_TRUE(s5.subcover.has_value());
  EXPECT_EQ(*s5.subcover, at(S5, "-1"));

  Classification const sq = classify(direct_product(make_named("2"), make_named("2")));
  EXPECT_FALSE(sq.fsi);

  Classification const t = classify(make_named("trivial"));
  EXPECT_TRUE(t.trivial);
  EXPECT_TRUE(t.fsi);
  EXPECT_FALSE(t.si);
  EXPECT_FALSE(t.simple);
}

TEST(Classify, MatchesBruteForceCongruenceLattice) {
  auto check = [](FiniteIRL const& A) {
    Classification const c = classify(A);
    oracle::Classes const o = oracle::classify(A);
    EXPECT_EQ(c.simple, o.simple) << A.name();
    EXPECT_EQ(c.si, o.si) << A.name();
    EXPECT_EQ(c.fsi, o.fsi) << A.name();
    EXPECT_TRUE(c.lemma_agrees) << A.name();
  };
  for (auto const& A : fixture::dmms_up_to(8)) check(A);
  for (auto const& A : fixture::irls_up_to(5)) check(A);
  check(direct_product(make_named("S3"), make_named("2")));
  check(direct_product(make_named("C4"), make_named("2")));
}

TEST(CongruenceLattice, Shapes) {
  EXPECT_EQ(congruence_lattice(make_named("trivial")).size(), 1U);
  CongruenceLattice const two = congruence_lattice(make_named("2"));
  EXPECT_EQ(two.size(), 2U);
  EXPECT_TRUE(two.is_chain());
  CongruenceLattice const c4 = congruence_lattice(make_named("C4"));
  EXPECT_EQ(c4.size(), 2U);
  EXPECT_TRUE(c4.is_chain());
  CongruenceLattice const s7 = congruence_lattice(make_named("S7"));
  EXPECT_EQ(s7.size(), 4U);
  EXPECT_TRUE(s7.is_chain());
  EXPECT_FALSE(congruence_lattice(direct_product(make_named("2"), make_named("2"))).is_chain());
}
