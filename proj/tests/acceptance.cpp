// One pass/fail line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "oracles.hpp"

using namespace dmm;

namespace {

using Clock = std::chrono::steady_clock;

Catalog const& catalog(std::size_t n) {
  static std::map<std::size_t, Catalog> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, dmm_catalog_up_to(n)).first;
  return it->second;
}

bool iso_to_any(FiniteIRL const& A, std::vector<std::string> const& names) {
  for (auto const& n : names)
    if (is_isomorphic(A, make_named(n))) return true;
  return false;
}

Element labelled(FiniteIRL const& A, std::string const& l) { return fixture::at(A, l); }

// 2, S3, C4, D4: valid, simple, no proper nontrivial subalgebra, pairwise distinct.
std::string named_suite() {
  std::vector<std::string> const names{"2", "S3", "C4", "D4"};
  std::vector<FiniteIRL> algs;
  for (auto const& n : names) {
    FiniteIRL const A = make_named(n);
    if (!validate_dmm(A).pass()) return n + " fails validation";
    if (!classify(A).simple) return n + " is not simple";
    for (ElementSet S : all_subuniverses(A)) {
      bool const whole = S.size() == A.size();
      bool const trivial_e = n == "S3" && S == ElementSet{A.e()};
      if (!whole && !trivial_e) return n + " has a proper subalgebra of size " + std::to_string(S.size());
    }
    algs.push_back(A);
  }
  for (std::size_t i = 0; i < algs.size(); ++i)
    for (std::size_t j = i + 1; j < algs.size(); ++j)
      if (is_isomorphic(algs[i], algs[j])) return names[i] + " is isomorphic to " + names[j];
  return {};
}

std::string axiomatization() {
  Catalog const& c = catalog(5);
  if (!c.complete) return "catalog incomplete";
  for (auto const& e : axiomatization_check(c).entries) {
    if (!e.self_satisfies) return e.target + " fails its own axioms";
    if (!e.found_in_catalog) return e.target + " missing from the catalog";
    if (!e.pass) return "another SI algebra satisfies the axioms of " + e.target;
  }
  return {};
}

std::string zero_generated_simples() {
  std::size_t seen = 0;
  for (auto const& A : catalog(6).algebras) {
    if (A.size() == 1 || !classify(A).simple) continue;
    if (zero_generated(A).universe.size() != A.size()) continue;
    ++seen;
    if (!iso_to_any(A, {"2", "C4", "D4"})) return A.name() + " is a 0-generated simple outside {2, C4, D4}";
  }
  return seen == 3 ? "" : "expected three 0-generated simples, found " + std::to_string(seen);
}

std::string minimality_shadow() {
  std::vector<FiniteIRL> const targets{make_named("2"), make_named("S3"), make_named("C4"), make_named("D4")};
  for (auto const& A : catalog(5).algebras) {
    if (A.size() == 1) continue;
    bool found = false;
    for (auto const& X : targets) found = found || hs_contains(A, X);
    if (!found) return A.name() + " has none of 2, S3, C4, D4 in HS";
  }
  return {};
}

std::string structure_checks(FiniteIRL const& A) {
  if (!classify(A).fsi) return {};
  if (!splitting_check(A).pass) return A.name() + ": splitting";
  if (!lollipop(A).pass()) return A.name() + ": lollipop";
  if (A.size() > 1 && !is_rigorously_compact(A)) return A.name() + ": not rigorously compact";
  if (is_idempotent(A)) return {};
  if (!fusion_pattern_check(A).pass) return A.name() + ": fusion pattern";
  if (!odd_sugihara_quotient(A).pass()) return A.name() + ": odd Sugihara quotient";
  return {};
}

std::string structure_theorems() {
  for (auto const& A : catalog(6).algebras)
    if (auto const m = structure_checks(A); !m.empty()) return m;
  for (std::size_t k = 0; k <= 3; ++k)
    if (auto const m = structure_checks(make_named("C4ext_" + std::to_string(k))); !m.empty()) return m;
  return {};
}

std::string law_suite() {
  for (auto const& A : catalog(6).algebras) {
    LawReport const r = check_derived_laws(A);
    for (auto const& l : r.results)
      if (l.applicable && !l.holds) return A.name() + " fails " + l.law;
    for (auto const* key : {"cube", "three-conditions", "idempotence-f-e"})
      if (r.find(key) == nullptr) return std::string("law ") + key + " not checked";
  }
  return {};
}

std::string sugihara_structure() {
  for (std::size_t k = 2; k <= 18; ++k) {
    FiniteIRL const S = make_named("S" + std::to_string(k));
    if (!validate_dmm(S).pass() || !classify(S).si || !is_chain(S)) return S.name() + " is not a valid SI chain";
  }
  for (std::size_t n = 1; n <= 8; ++n) {
    FiniteIRL const A = make_named("S" + std::to_string(2 * n + 2));
    FiniteIRL const B = make_named("S" + std::to_string(2 * n + 1));
    std::vector<Homomorphism> onto;
    for (auto const& h : homs(A, B))
      if (h.surjective) onto.push_back(h);
    if (onto.size() != 1) return A.name() + " -> " + B.name() + ": " + std::to_string(onto.size()) + " surjections";
    auto const& m = onto[0].map;
    for (std::size_t a = 0; a < A.size(); ++a)
      for (std::size_t b = a + 1; b < A.size(); ++b) {
        if (m[a] != m[b]) continue;
        ElementSet const pair{static_cast<Element>(a), static_cast<Element>(b)};
        if (pair != ElementSet{labelled(A, "-1"), labelled(A, "1")})
          return A.name() + ": kernel identifies " + A.label(static_cast<Element>(a)) + " and " +
                 A.label(static_cast<Element>(b));
      }
    if (m[labelled(A, "-1")] != m[labelled(A, "1")]) return A.name() + ": -1 and 1 not identified";
  }
  return {};
}

std::string relevant_algebras() {
  for (auto const& A : catalog(6).algebras) {
    FiniteRA const R = e_free_reduct(A);
    if (!is_ra(R)) return R.name() + " fails the relevant-algebra axioms";
    for (std::size_t a = 0; a < R.size(); ++a) {
      auto const x = static_cast<Element>(a);
      if (dfg_ra(R, x) != dfg_oracle(R, ElementSet{x})) return R.name() + ": dfg mismatch";
    }
    if (!meet_property_check(R).pass) return R.name() + ": meet property";
    if (reconstruct_neutral(R) != A.e()) return R.name() + ": neutral element not recovered";
    if (R.size() > 1) {
      try {
        contains_two_reduct(R);
      } catch (Error const&) {
        return R.name() + ": no copy of 2-";
      }
    }
  }
  return {};
}

std::string determinism() {
  SearchSpec s = SearchSpec::dmm(6);
  s.cumulative = true;
  if (dump(to_json(enumerate(s))) != dump(to_json(enumerate(s)))) return "catalog bytes differ between runs";
  for (auto const& law : law_library())
    for (auto const& text : law.statements) {
      Statement const st = parse_statement(text);
      if (parse_statement(print(st)) != st) return "round-trip fails on " + text;
    }
  for (auto const& ax : axiom_library()) {
    Statement const st = parse_statement(ax.statement);
    if (parse_statement(print(st)) != st) return "round-trip fails on " + ax.statement;
  }
  std::mt19937 rng(20240601);
  for (int i = 0; i < 1000; ++i) {
    Term const t = fixture::random_term(rng, 5);
    if (parse_term(print(t)) != t) return "round-trip fails on " + print(t);
  }
  return {};
}

std::string golden_counts() {
  std::vector<std::size_t> const golden{1, 1, 1, 4};
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t const fast = enumerate(SearchSpec::dmm(n)).algebras.size();
    std::size_t const slow = slow_recount(n, SearchSpec::dmm(n)).count;
    if (fast != slow || fast != golden[n - 1])
      return "size " + std::to_string(n) + ": pruned " + std::to_string(fast) + ", slow " + std::to_string(slow);
  }
  return {};
}

struct Criterion {
  int id;
  char const* title;
  std::function<std::string()> run;
  double limit_seconds = 0;  // 0: no time limit
};

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "named algebras 2, S3, C4, D4", named_suite, 1.0},
      {2, "axiomatization on the size <= 5 catalog", axiomatization, 600.0},
      {3, "0-generated simples are 2, C4 or D4 (size <= 6)", zero_generated_simples},
      {4, "every nontrivial entry has 2, S3, C4 or D4 in HS (size <= 5)", minimality_shadow},
      {5, "structure theorems on FSI entries (size <= 6) and C4ext_k", structure_theorems},
      {6, "law suite on every catalog entry (size <= 6)", law_suite},
      {7, "Sugihara chains; exactly one surjection S(2n+2) -> S(2n+1)", sugihara_structure, 10.0},
      {8, "relevant-algebra reducts (size <= 6)", relevant_algebras},
      {9, "deterministic catalogs and term round-trip", determinism},
      {10, "counts for sizes 1-4 agree with the slow recount", golden_counts},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    auto const start = Clock::now();
    std::string message;
    try {
      message = c.run();
    } catch (std::exception const& e) {
      message = std::string("exception: ") + e.what();
    }
    double const secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (message.empty() && c.limit_seconds > 0 && secs >= c.limit_seconds) {
      message = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s";
    }
    bool const pass = message.empty();
    failed += pass ? 0 : 1;
    std::printf("criterion %2d: %s  %s (%.2f s)%s%s\n", c.id, pass ? "PASS" : "FAIL", c.title, secs,
                pass ? "" : ": ", message.c_str());
  }
  return failed == 0 ? 0 : 1;
}
