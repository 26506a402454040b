#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace dmm;
using fixture::set;

namespace {

FiniteRA reduct(std::string const& name) { return e_free_reduct(make_named(name)); }

Element lab(FiniteRA const& A, std::string const& l) {
  for (std::size_t i = 0; i < A.size(); ++i)
    if (A.label(static_cast<Element>(i)) == l) return static_cast<Element>(i);
  throw std::out_of_range(l);
}

ElementSet labs(FiniteRA const& A, std::vector<std::string> const& ls) {
  ElementSet S;
  for (auto const& l : ls) S.insert(lab(A, l));
  return S;
}

// Nonempty subsets closed under the four operations.
std::vector<ElementSet> closed_subsets(FiniteRA const& A) {
  std::vector<ElementSet> out;
  for (std::uint64_t S = 1; S < (std::uint64_t{1} << A.size()); ++S) {
    ElementSet const X(S);
    bool ok = true;
    for (Element a : X) {
      ok = ok && X.contains(A.neg(a));
      for (Element b : X) ok = ok && X.contains(A.meet(a, b)) && X.contains(A.join(a, b)) && X.contains(A.fuse(a, b));
    }
    if (ok) out.push_back(X);
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

}  // namespace

TEST(Reduct, Validates) {
  EXPECT_TRUE(validate_ra(reduct("C4")).pass());
  EXPECT_TRUE(validate_ra(reduct("S3")).pass());
  for (auto const& A : fixture::dmms_up_to(7)) EXPECT_TRUE(is_ra(e_free_reduct(A))) << A.name();
}

TEST(Reduct, MutatedTableReportsViolation) {
  FiniteRA const two = reduct("2");
  Element const top = two.top();
  Element const bot = two.bottom();
  BinOpTable const fusion =
      BinOpTable::generate(2, [&](Element a, Element b) { return a == top && b == top ? bot : two.fuse(a, b); });
  FiniteRA const bad("2-bad", two.meet_table(), two.join_table(), fusion, two.neg_table());
  EXPECT_FALSE(validate_ra(bad).pass());
  EXPECT_FALSE(is_ra(bad));
}

TEST(Reduct, RoundTripWithNeutral) {
  for (auto const& A : fixture::dmms_up_to(6)) {
    FiniteIRL const B = with_neutral(e_free_reduct(A), A.e());
    EXPECT_TRUE(B.same_tables(A));
  }
}

TEST(DfgRa, Examples) {
  FiniteRA const S3 = reduct("S3");
  EXPECT_EQ(dfg_ra(S3, lab(S3, "1")).members, labs(S3, {"0", "1"}));
  EXPECT_EQ(dfg_ra(S3, lab(S3, "-1")).members, ElementSet::all(3));
  FiniteRA const two = reduct("2");
  EXPECT_EQ(dfg_ra(two, two.top()).members, ElementSet{two.top()});
  EXPECT_EQ(dfg_oracle(S3, labs(S3, {"1"})).members, labs(S3, {"0", "1"}));
  EXPECT_EQ(dfg_ra_set(S3, {}).members, labs(S3, {"0", "1"}));
}

// The closed form agrees with closing X under |a|, meets and upward closure.
TEST(DfgRa, ClosedFormMatchesClosure) {
  for (auto const& A : fixture::dmms_up_to(6)) {
    FiniteRA const R = e_free_reduct(A);
    for (std::uint64_t X = 1; X < (std::uint64_t{1} << R.size()); ++X)
      EXPECT_EQ(dfg_ra_set(R, ElementSet(X)), dfg_oracle(R, ElementSet(X))) << A.name();
  }
}

// With e available, the reduct's filters are the deductive filters of the monoid.
TEST(DfgRa, FiltersCoincideWithMonoidFilters) {
  for (auto const& A : fixture::dmms_up_to(7)) {
    std::vector<std::uint64_t> got;
    for (auto const& F : ra_deductive_filters(e_free_reduct(A))) got.push_back(F.members.bits());
    std::sort(got.begin(), got.end());
    auto expected = oracle::deductive_filters(A);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(got, expected) << A.name();
  }
}

TEST(MeetProperty, Examples) {
  for (auto const* name : {"S3", "C4", "D4"}) EXPECT_TRUE(meet_property_check(reduct(name)).pass) << name;
}

TEST(MeetProperty, HoldsOnCatalog) {
  for (auto const& A : fixture::dmms_up_to(7)) EXPECT_TRUE(meet_property_check(e_free_reduct(A)).pass) << A.name();
}

TEST(Neutral, Reconstructed) {
  FiniteRA const S3 = reduct("S3");
  EXPECT_EQ(reconstruct_neutral(S3), lab(S3, "0"));
  FiniteRA const C4 = reduct("C4");
  EXPECT_EQ(reconstruct_neutral(C4), lab(C4, "e"));
  FiniteRA const two = reduct("2");
  EXPECT_EQ(reconstruct_neutral(two), two.top());
  for (auto const& A : fixture::dmms_up_to(7)) EXPECT_EQ(reconstruct_neutral(e_free_reduct(A)), A.e()) << A.name();
}

TEST(TwoReduct, Examples) {
  for (auto const* name : {"C4", "D4"}) {
    FiniteRA const A = reduct(name);
    auto const [p, q] = contains_two_reduct(A);
    EXPECT_EQ(ElementSet({p, q}), labs(A, {"~f^2", "f^2"})) << name;
  }
  FiniteRA const S3 = reduct("S3");
  auto const [p, q] = contains_two_reduct(S3);
  EXPECT_EQ(ElementSet({p, q}), labs(S3, {"-1", "1"}));
  EXPECT_THROW(contains_two_reduct(reduct("trivial")), TrivialAlgebra);
}

TEST(TwoReduct, FoundInEveryNontrivialAlgebra) {
  for (auto const& A : fixture::dmms_up_to(7)) {
    if (A.size() == 1) continue;
    FiniteRA const R = e_free_reduct(A);
    auto const [p, q] = contains_two_reduct(R);
    FiniteRA const S = ra_restrict(R, ElementSet{p, q});
    EXPECT_TRUE(is_ra(S));
    EXPECT_EQ(S.fuse(0, 1), 0);
  }
}

TEST(RaSubuniverses, MatchPowerSetSearch) {
  for (auto const& A : fixture::dmms_up_to(6)) {
    FiniteRA const R = e_free_reduct(A);
    EXPECT_EQ(ra_subuniverses(R), closed_subsets(R)) << A.name();
  }
}

TEST(RaClassify, Examples) {
  EXPECT_TRUE(ra_classify(reduct("C4")).simple);
  EXPECT_TRUE(ra_classify(reduct("S3")).simple);
  RAClassification const t = ra_classify(reduct("trivial"));
  EXPECT_TRUE(t.trivial);
  EXPECT_FALSE(t.simple);
  RAClassification const s5 = ra_classify(reduct("S5"));
  EXPECT_FALSE(s5.simple);
  EXPECT_TRUE(s5.si);
}

TEST(RaClassify, CongruencesAndClassesMatchBruteForce) {
  for (auto const& A : fixture::dmms_up_to(7)) {
    RAClassification const c = ra_classify(e_free_reduct(A));
    std::vector<std::vector<int>> got;
    for (auto const& th : c.congruences) got.push_back(th.block);
    std::sort(got.begin(), got.end());
    auto expected = oracle::congruences(A);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(got, expected) << A.name();
    oracle::Classes const o = oracle::classify(A);
    EXPECT_EQ(c.simple, o.simple) << A.name();
    EXPECT_EQ(c.si, o.si) << A.name();
    EXPECT_EQ(c.fsi, o.fsi) << A.name();
    EXPECT_TRUE(c.agrees_with_dmm);
  }
}

TEST(RaCompact, AgreesWithMonoid) {
  for (auto const& A : fixture::dmms_up_to(7))
    EXPECT_EQ(is_rigorously_compact(e_free_reduct(A)), is_rigorously_compact(A)) << A.name();
}
