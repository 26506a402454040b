#include <gtest/gtest.h>

#include <atomic>

#include "oracles.hpp"

using namespace dmm;

namespace {

std::vector<std::string> names_of(Catalog const& c) {
  std::vector<std::string> v;
  for (auto const& A : c.algebras) v.push_back(A.name());
  return v;
}

std::size_t count_isomorphism_classes(std::vector<FiniteIRL> const& v) {
  std::vector<FiniteIRL const*> reps;
  for (auto const& A : v) {
    bool fresh = true;
    for (auto const* R : reps) fresh = fresh && !oracle::isomorphic(A, *R);
    if (fresh) reps.push_back(&A);
  }
  return reps.size();
}

}  // namespace

TEST(Enumerate, SmallestSizes) {
  Catalog const one = enumerate(SearchSpec::dmm(1));
  ASSERT_EQ(one.algebras.size(), 1U);
  EXPECT_EQ(one.algebras[0].name(), "trivial");
  Catalog const two = enumerate(SearchSpec::dmm(2));
  ASSERT_EQ(two.algebras.size(), 1U);
  EXPECT_TRUE(is_isomorphic(two.algebras[0], make_named("2")));
  Catalog const three = enumerate(SearchSpec::dmm(3));
  ASSERT_EQ(three.algebras.size(), 1U);
  EXPECT_TRUE(is_isomorphic(three.algebras[0], make_named("S3")));
}

TEST(Enumerate, SizeFourAndFive) {
  Catalog const four = enumerate(SearchSpec::dmm(4));
  ASSERT_EQ(four.algebras.size(), 4U);
  for (auto const* name : {"C4", "D4", "S4"}) {
    FiniteIRL const X = make_named(name);
    EXPECT_EQ(std::count_if(four.algebras.begin(), four.algebras.end(),
                            [&](auto const& A) { return oracle::isomorphic(A, X); }),
              1)
        << name;
  }
  Catalog const five = enumerate(SearchSpec::dmm(5));
  EXPECT_EQ(five.algebras.size(), 3U);
  EXPECT_TRUE(std::any_of(five.algebras.begin(), five.algebras.end(),
                          [](auto const& A) { return oracle::isomorphic(A, make_named("S5")); }));
}

TEST(Enumerate, CountsThroughSizeEight) {
  std::vector<std::size_t> const expected{1, 1, 1, 4, 3, 18, 15, 92};
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(enumerate(SearchSpec::dmm(n)).algebras.size(), expected[n - 1]) << n;
}

// The unpruned recount finds every IRL of size n; each class is then cut out
// of it by checking the class conditions directly.
TEST(Enumerate, AgreesWithUnprunedRecount) {
  for (std::size_t n = 1; n <= 4; ++n) {
    RecountResult const slow = slow_recount(n, SearchSpec::irl(n));
    for (auto const* cls : {"irl", "square-increasing", "distributive", "dmm"}) {
      SearchSpec const spec = spec_for_class(cls, n);
      std::vector<FiniteIRL> expected;
      for (auto const& A : slow.algebras) {
        if (spec.square_increasing && !is_square_increasing(A)) continue;
        if (spec.distributive && !is_distributive(A)) continue;
        expected.push_back(A);
      }
      Catalog const fast = enumerate(spec);
      ASSERT_EQ(fast.algebras.size(), count_isomorphism_classes(expected)) << cls << " " << n;
      for (auto const& A : expected) {
        EXPECT_EQ(std::count_if(fast.algebras.begin(), fast.algebras.end(),
                                [&](auto const& B) { return oracle::isomorphic(A, B); }),
                  1);
      }
    }
  }
}

TEST(Enumerate, EntriesValidateAndArePairwiseNonIsomorphic) {
  Catalog const c = dmm_catalog_up_to(6);
  for (std::size_t i = 0; i < c.algebras.size(); ++i) {
    EXPECT_TRUE(validate_dmm(c.algebras[i]).pass()) << c.algebras[i].name();
    for (std::size_t j = i + 1; j < c.algebras.size(); ++j)
      EXPECT_FALSE(oracle::isomorphic(c.algebras[i], c.algebras[j]));
  }
  for (auto const& A : enumerate(SearchSpec::irl(4)).algebras) EXPECT_TRUE(validate_irl(A).pass()) << A.name();
}

TEST(Enumerate, NamesAndOrdering) {
  Catalog const c = dmm_catalog_up_to(5);
  EXPECT_EQ(names_of(c), (std::vector<std::string>{"trivial", "2", "S3", "D4", "C4", "S4", "dmm4-4", "dmm5-1",
                                                   "dmm5-2", "S5"}));
  for (std::size_t i = 1; i < c.algebras.size(); ++i) EXPECT_LE(c.algebras[i - 1].size(), c.algebras[i].size());
}

TEST(Enumerate, DeterministicAndThreadIndependent) {
  SearchSpec s = SearchSpec::dmm(7);
  s.cumulative = true;
  std::string const a = dump(to_json(enumerate(s)));
  EXPECT_EQ(dump(to_json(enumerate(s))), a);
  s.jobs = 3;
  EXPECT_EQ(dump(to_json(enumerate(s))), a);
}

TEST(Enumerate, LimitMarksCatalogIncomplete) {
  SearchSpec s = SearchSpec::dmm(6);
  s.limit = 5;
  Catalog const c = enumerate(s);
  EXPECT_EQ(c.algebras.size(), 5U);
  EXPECT_FALSE(c.complete);
  s.limit = 100;
  EXPECT_TRUE(enumerate(s).complete);
}

TEST(Enumerate, PredicateFilters) {
  SearchSpec s = SearchSpec::dmm(8);
  s.cumulative = true;
  Catalog const all = enumerate(s);
  for (auto const& p : predicate_names()) {
    s.predicate_filters = {p};
    Catalog const some = enumerate(s);
    std::size_t expected = 0;
    for (auto const& A : all.algebras) expected += has_predicate(A, p) ? 1 : 0;
    EXPECT_EQ(some.algebras.size(), expected) << p;
    for (auto const& A : some.algebras) EXPECT_TRUE(has_predicate(A, p)) << p;
  }
  s.predicate_filters = {"simple", "chain"};
  for (auto const& A : enumerate(s).algebras) EXPECT_TRUE(is_chain(A) && classify(A).simple);
  s.predicate_filters = {"no-such-predicate"};
  EXPECT_THROW(enumerate(s), UnknownName);
}

TEST(Enumerate, SizeGuards) {
  EXPECT_THROW(enumerate(SearchSpec::dmm(0)), SizeTooLarge);
  EXPECT_THROW(enumerate(SearchSpec::dmm(9)), SizeTooLarge);
  SearchSpec s = SearchSpec::dmm(17);
  s.unsafe_size = true;
  EXPECT_THROW(enumerate(s), SizeTooLarge);
  EXPECT_THROW(slow_recount(5, SearchSpec::dmm(5)), SizeTooLarge);
  EXPECT_THROW(spec_for_class("lattice", 3), UnknownName);
}

TEST(Enumerate, CheckpointResume) {
  SearchSpec const s = SearchSpec::dmm(7);
  std::map<std::size_t, std::set<std::size_t>> done;
  std::vector<FiniteIRL> found;
  std::size_t units = 0;
  EnumerationHooks first;
  first.unit_done = [&](std::size_t size, std::size_t unit, std::vector<FiniteIRL> const& v) {
    ++units;
    if (unit % 2 == 0) {
      done[size].insert(unit);
      found.insert(found.end(), v.begin(), v.end());
    }
  };
  std::string const full = dump(to_json(enumerate(s, first)));
  EXPECT_GT(units, 1U);
  EnumerationHooks resume;
  resume.skip_units = done;
  resume.resumed = found;
  std::atomic<std::size_t> searched{0};
  resume.unit_done = [&](std::size_t, std::size_t, std::vector<FiniteIRL> const&) { ++searched; };
  EXPECT_EQ(dump(to_json(enumerate(s, resume))), full);
  EXPECT_LT(searched.load(), units);
}

TEST(Enumerate, ProgressReachesTotal) {
  Progress last;
  EnumerationHooks h;
  h.progress = [&](Progress const& p) { last = p; };
  enumerate(SearchSpec::dmm(6), h);
  EXPECT_EQ(last.units_done, last.units_total);
  EXPECT_EQ(last.size, 6U);
}

TEST(CatalogJson, RoundTrip) {
  Catalog const c = dmm_catalog_up_to(6);
  Json const j = to_json(c);
  EXPECT_EQ(j[0]["catalog"]["count"], c.algebras.size());
  EXPECT_EQ(j[0]["catalog"]["class"], "dmm");
  Catalog const back = catalog_from_json(j);
  ASSERT_EQ(back.algebras.size(), c.algebras.size());
  for (std::size_t i = 0; i < c.algebras.size(); ++i) {
    EXPECT_TRUE(back.algebras[i].same_tables(c.algebras[i]));
    EXPECT_EQ(back.algebras[i].name(), c.algebras[i].name());
  }
  EXPECT_EQ(dump(to_json(back)), dump(j));
}

TEST(AlgebraJson, RejectsMalformedDocuments) {
  Json j = to_json(make_named("C4"));
  EXPECT_TRUE(algebra_from_json(j).same_tables(make_named("C4")));
  Json bad = j;
  bad["fusion"][0][0] = 9;
  EXPECT_THROW(algebra_from_json(bad), MalformedTable);
  bad = j;
  bad.erase("neg");
  EXPECT_THROW(algebra_from_json(bad), MalformedTable);
  Json ra = to_json(e_free_reduct(make_named("C4")));
  EXPECT_TRUE(is_ra_document(ra));
  EXPECT_FALSE(ra.contains("e"));
  EXPECT_EQ(ra_from_json(ra).size(), 4U);
}

TEST(Harness, RejectsIncompleteCatalogs) {
  EXPECT_THROW(theorem_harness(Catalog{}), IncompleteCatalog);
  SearchSpec s = SearchSpec::dmm(5);
  s.limit = 1;
  EXPECT_THROW(theorem_harness(enumerate(s)), IncompleteCatalog);
}

TEST(Harness, PassesOnSmallCatalog) {
  Catalog const c = dmm_catalog_up_to(5);
  HarnessReport const r = theorem_harness(c);
  for (auto const& check : r.checks) {
    EXPECT_TRUE(check.pass()) << check.name << ": "
                              << (check.failures.empty() ? "" : check.failures[0].detail);
    EXPECT_GT(check.instances, 0U) << check.name;
  }
  for (auto const& e : axiomatization_check(c).entries) {
    EXPECT_TRUE(e.pass) << e.target;
    EXPECT_TRUE(e.found_in_catalog) << e.target;
  }
}
