#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dmm/algebra.hpp"
#include "dmm/constructions.hpp"
#include "dmm/enumerate.hpp"
#include "dmm/errors.hpp"
#include "dmm/filters.hpp"
#include "dmm/law_library.hpp"
#include "dmm/laws.hpp"
#include "dmm/predicates.hpp"
#include "dmm/relevant.hpp"
#include "dmm/structure.hpp"
#include "dmm/term.hpp"

namespace dmm {

struct HarnessFailure {
  FiniteIRL algebra;
  std::string detail;
};

struct TheoremCheck {
  std::string name;
  std::size_t instances = 0;
  std::vector<HarnessFailure> failures;

  bool pass() const { return failures.empty(); }
};

struct HarnessReport {
  std::vector<TheoremCheck> checks;

  bool pass() const {
    for (auto const& c : checks)
      if (!c.pass()) return false;
    return true;
  }
  TheoremCheck const* find(std::string const& name) const {
    for (auto const& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

// Facts about one catalog entry that several checks need.
struct EntryFacts {
  bool dmm = false;
  bool trivial = false;
  Classification cls;
  bool idempotent = false;
  bool zero_generated = false;
};

inline EntryFacts facts_of(FiniteIRL const& A) {
  EntryFacts f;
  f.dmm = is_dmm(A);
  f.trivial = A.size() == 1;
  f.cls = classify(A);
  f.idempotent = is_idempotent(A);
  f.zero_generated = subuniverse(A, {}).size() == A.size();
  return f;
}

inline std::vector<FiniteIRL> const& minimal_generators() {
  static std::vector<FiniteIRL> const kGens = {make_named("2"), make_named("S3"), make_named("C4"),
                                               make_named("D4")};
  return kGens;
}

class Runner {
 public:
  explicit Runner(HarnessReport& r) : report_(r) {}

  // Run body on A if applicable; body returns an empty string on success.
  void check(std::string const& name, bool applicable, FiniteIRL const& A,
             std::function<std::string()> const& body) {
    TheoremCheck& c = slot(name);
    if (!applicable) return;
    ++c.instances;
    std::string detail;
    try {
      detail = body();
    } catch (Error const& e) {
      detail = std::string("raised: ") + e.what();
    }
    if (!detail.empty()) c.failures.push_back({A, detail});
  }

 private:
  TheoremCheck& slot(std::string const& name) {
    for (auto& c : report_.checks)
      if (c.name == name) return c;
    report_.checks.push_back({name, 0, {}});
    return report_.checks.back();
  }

  HarnessReport& report_;
};

inline std::string elems(std::vector<Element> const& v) {
  std::string s;
  for (Element x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "(" + s + ")";
}

}  // namespace detail

inline HarnessReport theorem_harness(Catalog const& catalog) {
  if (!catalog.complete || catalog.algebras.empty()) {
    throw IncompleteCatalog("theorem harness needs a complete, nonempty catalog");
  }
  HarnessReport report;
  detail::Runner run(report);
  auto const& gens = detail::minimal_generators();
  FiniteIRL const C4 = make_named("C4");
  FiniteIRL const D4 = make_named("D4");

  std::vector<detail::EntryFacts> facts;
  for (auto const& A : catalog.algebras) facts.push_back(detail::facts_of(A));

  for (std::size_t i = 0; i < catalog.algebras.size(); ++i) {
    FiniteIRL const& A = catalog.algebras[i];
    detail::EntryFacts const& F = facts[i];
    bool const fsi_dmm = F.dmm && F.cls.fsi && !F.trivial;
    bool const non_idem_fsi = fsi_dmm && !F.idempotent;

    run.check("validates for its class", true, A, [&]() -> std::string {
      if (!is_irl(A)) return "not an IRL";
      if (catalog.spec.square_increasing && !is_square_increasing(A)) return "not square-increasing";
      if (catalog.spec.distributive && !is_distributive(A)) return "not distributive";
      return {};
    });

    run.check("0-generated simples are 2, C4 or D4", F.dmm && F.cls.simple && F.zero_generated, A,
              [&]() -> std::string {
                for (std::size_t g : {0UL, 2UL, 3UL})
                  if (is_isomorphic(A, gens[g])) return {};
                return "simple 0-generated algebra outside {2, C4, D4}";
              });

    run.check("minimality shadow", F.dmm && !F.trivial, A, [&]() -> std::string {
      for (auto const& X : gens)
        if (hs_contains(A, X)) return {};
      return "HS(A) contains none of 2, S3, C4, D4";
    });

    run.check("law suite", true, A, [&]() -> std::string {
      LawReport const laws = check_derived_laws(A);
      for (auto const& r : laws.results) {
        if (r.applicable && !r.holds) return r.law + " fails at " + detail::elems(r.counterexample);
      }
      return {};
    });

    run.check("bounds of generated subalgebras", F.dmm && A.size() <= 8, A, [&]() -> std::string {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << A.size()); ++bits) {
        BoundsCertificate const c = bounds_of_generated(A, ElementSet(bits));
        if (!c.holds) return "generated element outside [~b, b] for X = " + detail::elems(ElementSet(bits).to_vector());
      }
      return {};
    });

    run.check("splitting", fsi_dmm, A, [&]() -> std::string {
      CheckResult const r = splitting_check(A);
      return r.pass ? std::string{} : r.detail + " at " + detail::elems(r.witness);
    });

    run.check("FSI implies rigorously compact", fsi_dmm, A, [&]() -> std::string {
      return is_rigorously_compact(A) ? std::string{} : "top . a != top for some a != bottom";
    });

    run.check("idempotents above f", non_idem_fsi, A, [&]() -> std::string {
      Element const f = A.f();
      Element const f2 = A.square(f);
      if (!A.lt(A.e(), f2)) return "f^2 is not above e";
      for (Element a : A.up_set(f)) {
        if (!A.leq(a, f2) && A.square(a) != a) return "a >= f, a not below f^2, a not idempotent";
        for (Element b : A.up_set(f)) {
          if (A.square(a) == a && A.square(b) == b && !A.comparable(a, b)) return "incomparable idempotents above f";
        }
      }
      return {};
    });

    run.check("lollipop", fsi_dmm, A, [&]() -> std::string {
      LollipopReport const r = lollipop(A);
      return r.pass() ? std::string{} : r.violations.front();
    });

    run.check("fusion above f", non_idem_fsi, A, [&]() -> std::string {
      CheckResult const r = fusion_pattern_check(A);
      return r.pass ? std::string{} : r.detail + " at " + detail::elems(r.witness);
    });

    run.check("odd Sugihara quotient", non_idem_fsi, A, [&]() -> std::string {
      return odd_sugihara_quotient(A).pass() ? std::string{} : "A/[~f^2) is not as described";
    });

    run.check("surjections onto 0-generated algebras", fsi_dmm, A, [&]() -> std::string {
      for (std::size_t j = 0; j < catalog.algebras.size(); ++j) {
        FiniteIRL const& B = catalog.algebras[j];
        if (!facts[j].zero_generated || facts[j].trivial || !facts[j].dmm || B.size() > A.size()) continue;
        for (auto const& h : homs(A, B)) {
          if (h.surjective && !h.injective && !is_isomorphic(B, C4)) {
            return "non-injective surjection onto '" + B.name() + "'";
          }
        }
      }
      return {};
    });

    run.check("SI non-Sugihara algebras have C4 or D4 in HS", F.dmm && F.cls.si && !F.idempotent, A,
              [&]() -> std::string {
                return hs_contains(A, C4) || hs_contains(A, D4) ? std::string{} : "neither C4 nor D4 in HS(A)";
              });

    run.check("C4 embeds when e < f", F.dmm && !F.trivial, A, [&]() -> std::string {
      auto const h = embed_c4_if_e_below_f(A);
      if (A.lt(A.e(), A.f()) != h.has_value()) return "embedding result disagrees with e < f";
      return {};
    });

    run.check("classification lemmas agree", F.dmm, A, [&]() -> std::string {
      return F.cls.lemma_agrees ? std::string{} : "filter-lattice and element criteria disagree";
    });

    // e-free reduct
    FiniteRA const R = e_free_reduct(A);
    run.check("reduct is a relevant algebra", F.dmm, A,
              [&]() -> std::string { return is_ra(R) ? std::string{} : "reduct fails the RA axioms"; });
    run.check("closed-form DFg matches closure", F.dmm, A, [&]() -> std::string {
      for (std::size_t a = 0; a < R.size(); ++a) {
        auto x = static_cast<Element>(a);
        if (dfg_ra(R, x) != dfg_oracle(R, ElementSet{x})) return "DFg{" + std::to_string(a) + "} differs";
      }
      return {};
    });
    run.check("meet property", F.dmm, A, [&]() -> std::string {
      MeetPropertyReport const m = meet_property_check(R);
      return m.pass ? std::string{} : m.failed + " at " + detail::elems(m.witness);
    });
    run.check("neutral element recovered from reduct", F.dmm, A, [&]() -> std::string {
      auto const e = reconstruct_neutral(R);
      return e && *e == A.e() ? std::string{} : "reconstruct_neutral does not return e";
    });
    run.check("reduct contains 2-", F.dmm && !F.trivial, A, [&]() -> std::string {
      contains_two_reduct(R);
      return {};
    });
    run.check("congruences shared with reduct", F.dmm, A, [&]() -> std::string {
      RAClassification const rc = ra_classify(R);
      CongruenceLattice const cl = congruence_lattice(A);
      std::vector<Congruence> x = cl.congruences;
      std::vector<Congruence> y = rc.congruences;
      auto by_blocks = [](Congruence const& p, Congruence const& q) { return p.block < q.block; };
      std::sort(x.begin(), x.end(), by_blocks);
      std::sort(y.begin(), y.end(), by_blocks);
      if (x != y) return "congruence sets differ";
      if (!rc.agrees_with_dmm) return "RA classification disagrees";
      if (rc.fsi && !rc.trivial && !is_rigorously_compact(R)) return "FSI reduct not rigorously compact";
      return {};
    });
  }
  return report;
}

struct AxiomatizationEntry {
  std::string target;
  bool self_satisfies = false;
  std::vector<std::string> satisfying;  // SI catalog entries satisfying the set
  bool found_in_catalog = false;
  bool pass = false;
};

struct AxiomatizationReport {
  std::vector<AxiomatizationEntry> entries;

  bool pass() const {
    for (auto const& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

inline bool satisfies_all(FiniteIRL const& A, std::vector<Statement> const& set) {
  for (auto const& s : set)
    if (!satisfies(A, s).holds) return false;
  return true;
}

// For each of 2, S3, C4, D4: the SI catalog entries satisfying its axiom set
// are exactly the copies of it.
inline AxiomatizationReport axiomatization_check(Catalog const& catalog) {
  AxiomatizationReport report;
  std::vector<FiniteIRL> si;
  for (auto const& A : catalog.algebras) {
    if (A.size() > 1 && is_dmm(A) && classify(A).si) si.push_back(A);
  }
  std::size_t max_size = 0;
  for (auto const& A : catalog.algebras) max_size = std::max(max_size, A.size());
  for (std::string const name : {"2", "S3", "C4", "D4"}) {
    AxiomatizationEntry entry;
    entry.target = name;
    FiniteIRL const X = make_named(name);
    std::vector<Statement> set;
    for (auto const& key : axiom_set(name)) set.push_back(axiom(key));
    entry.self_satisfies = satisfies_all(X, set);
    bool others = false;
    for (auto const& A : si) {
      if (!satisfies_all(A, set)) continue;
      entry.satisfying.push_back(A.name());
      if (is_isomorphic(A, X)) {
        entry.found_in_catalog = true;
      } else {
        others = true;
      }
    }
    bool const covered = catalog.complete && X.size() <= max_size &&
                         (catalog.spec.cumulative || X.size() == catalog.spec.size);
    entry.pass = entry.self_satisfies && !others && (!covered || entry.found_in_catalog);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

// Catalog of all DMMs of sizes 1..n.
inline Catalog dmm_catalog_up_to(std::size_t n, unsigned jobs = 1) {
  SearchSpec s = SearchSpec::dmm(n);
  s.cumulative = true;
  s.jobs = jobs;
  return enumerate(s);
}

}  // namespace dmm
