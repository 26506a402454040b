#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace dmm;
using fixture::at;
using fixture::set;

namespace {

FiniteIRL square_of_two() { return direct_product(make_named("2"), make_named("2")); }

std::vector<FiniteIRL> fsi_dmms(std::size_t n) {
  std::vector<FiniteIRL> out;
  for (auto& A : fixture::dmms_up_to(n))
    if (oracle::classify(A).fsi) out.push_back(std::move(A));
  return out;
}

}  // namespace

TEST(Splitting, Examples) {
  EXPECT_TRUE(splitting_check(make_named("C4")).pass);
  EXPECT_TRUE(splitting_check(make_named("D4")).pass);
  EXPECT_THROW(splitting_check(square_of_two()), NotFSI);
  EXPECT_THROW(splitting_check(fixture::e_bottom_chain()), NotDMM);
}

TEST(Splitting, HoldsOnEveryFsiAlgebra) {
  for (auto const& A : fsi_dmms(7)) {
    for (Element a : oracle::elements(A)) EXPECT_TRUE(oracle::leq(A, A.e(), a) || oracle::leq(A, a, A.f()));
    EXPECT_TRUE(splitting_check(A).pass) << A.name();
  }
}

TEST(Bounds, Examples) {
  FiniteIRL const C4 = make_named("C4");
  BoundsCertificate const c = bounds_of_generated(C4, {});
  EXPECT_EQ(c.c, C4.f());
  EXPECT_EQ(c.b, at(C4, "f^2"));
  EXPECT_TRUE(c.holds);

  FiniteIRL const two = make_named("2");
  EXPECT_EQ(bounds_of_generated(two, {}).b, two.top());

  FiniteIRL const S5 = make_named("S5");
  BoundsCertificate const s = bounds_of_generated(S5, set(S5, {"2"}));
  EXPECT_EQ(s.b, at(S5, "2"));
  EXPECT_EQ(s.lower, at(S5, "-2"));
  EXPECT_EQ(s.generated, set(S5, {"-2", "0", "2"}));
  EXPECT_TRUE(s.holds);
}

// Every generated subalgebra sits inside [~b, b], checked for every subset.
TEST(Bounds, HoldForEveryGeneratingSet) {
  for (auto const& A : fixture::dmms_up_to(6)) {
    for (std::uint64_t X = 0; X < (std::uint64_t{1} << A.size()); ++X) {
      BoundsCertificate const c = bounds_of_generated(A, ElementSet(X));
      EXPECT_TRUE(c.holds) << A.name();
      EXPECT_TRUE(ElementSet(X).subset_of(c.generated));
    }
  }
}

TEST(Lollipop, Examples) {
  FiniteIRL const C4 = make_named("C4");
  LollipopReport const r = lollipop(C4);
  EXPECT_TRUE(r.pass());
  EXPECT_FALSE(r.idempotent_case);
  EXPECT_EQ(r.interval, ElementSet::all(4));
  EXPECT_EQ(r.upper_chain, set(C4, {"f^2"}));
  EXPECT_TRUE(lollipop(make_named("D4")).pass());
  LollipopReport const s = lollipop(make_named("S5"));
  EXPECT_TRUE(s.idempotent_case);
  EXPECT_TRUE(s.totally_ordered);
  EXPECT_THROW(lollipop(square_of_two()), NotFSI);
}

TEST(Lollipop, HoldsOnEveryFsiAlgebra) {
  for (auto const& A : fsi_dmms(8)) EXPECT_TRUE(lollipop(A).pass()) << A.name();
}

TEST(FusionPattern, Examples) {
  EXPECT_TRUE(fusion_pattern_check(make_named("C4")).pass);
  EXPECT_TRUE(fusion_pattern_check(make_named("C4ext_2")).pass);
  EXPECT_THROW(fusion_pattern_check(make_named("S5")), NotApplicable);
}

TEST(FusionPattern, HoldsOnNonIdempotentFsiAlgebras) {
  for (auto const& A : fsi_dmms(8)) {
    if (is_idempotent(A)) continue;
    EXPECT_TRUE(fusion_pattern_check(A).pass) << A.name();
  }
}

TEST(OddQuotient, Examples) {
  for (auto const* name : {"C4", "D4"}) {
    OddQuotientReport const r = odd_sugihara_quotient(make_named(name));
    EXPECT_TRUE(r.pass()) << name;
    EXPECT_EQ(r.quotient.algebra.size(), 1U) << name;
  }
  OddQuotientReport const r = odd_sugihara_quotient(make_named("C4ext_1"));
  EXPECT_TRUE(r.pass());
  EXPECT_TRUE(oracle::isomorphic(r.quotient.algebra, make_named("S3")));
}

TEST(OddQuotient, HoldsOnNonIdempotentFsiAlgebras) {
  for (auto const& A : fsi_dmms(8)) {
    if (is_idempotent(A)) continue;
    OddQuotientReport const r = odd_sugihara_quotient(A);
    EXPECT_TRUE(r.pass()) << A.name();
    EXPECT_TRUE(oracle::is_hom(A, r.quotient.algebra, r.quotient.projection));
  }
}

TEST(EmbedC4, Examples) {
  FiniteIRL const C4 = make_named("C4");
  auto const id = embed_c4_if_e_below_f(C4);
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(id->map, oracle::elements(C4));

  FiniteIRL const A = make_named("C4ext_1");
  auto const h = embed_c4_if_e_below_f(A);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(ElementSet::from(h->map), set(A, {"~f^2", "e", "f", "f^2"}));
  EXPECT_TRUE(oracle::is_hom(C4, A, h->map));

  EXPECT_FALSE(embed_c4_if_e_below_f(make_named("2")).has_value());
  EXPECT_FALSE(embed_c4_if_e_below_f(make_named("D4")).has_value());
}

TEST(EmbedC4, WheneverEBelowF) {
  FiniteIRL const C4 = make_named("C4");
  for (auto const& A : fixture::dmms_up_to(8)) {
    auto const h = embed_c4_if_e_below_f(A);
    EXPECT_EQ(h.has_value(), A.lt(A.e(), A.f())) << A.name();
    if (h) {
      EXPECT_TRUE(h->injective && oracle::is_hom(C4, A, h->map));
    }
  }
}
