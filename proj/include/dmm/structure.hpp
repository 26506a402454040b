#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dmm/algebra.hpp"
#include "dmm/constructions.hpp"
#include "dmm/errors.hpp"
#include "dmm/filters.hpp"
#include "dmm/predicates.hpp"

namespace dmm {

struct CheckResult {
  bool pass = true;
  std::vector<Element> witness;
  std::string detail;
};

namespace detail {

inline void require_dmm(FiniteIRL const& A) {
  if (!is_dmm(A)) {
    throw NotDMM("'" + A.name() + "' is not a De Morgan monoid");
  }
}

inline void require_fsi_dmm(FiniteIRL const& A) {
  require_dmm(A);
  if (!classify(A).fsi) {
    throw NotFSI("'" + A.name() + "' is not finitely subdirectly irreducible");
  }
}

inline void require_non_idempotent_fsi_dmm(FiniteIRL const& A) {
  require_fsi_dmm(A);
  if (is_idempotent(A)) {
    throw NotApplicable("'" + A.name() + "' is idempotent");
  }
}

inline bool is_chain_of_idempotents(FiniteIRL const& A, ElementSet S) {
  for (Element a : S) {
    if (A.square(a) != a) {
      return false;
    }
    for (Element b : S) {
      if (!A.comparable(a, b)) {
        return false;
      }
    }
  }
  return true;
}

inline bool is_closed(FiniteIRL const& A, ElementSet S) {
  if (!S.contains(A.e())) {
    return false;
  }
  for (Element a : S) {
    if (!S.contains(A.neg(a))) {
      return false;
    }
    for (Element b : S) {
      if (!S.contains(A.meet(a, b)) || !S.contains(A.join(a, b)) || !S.contains(A.fuse(a, b))) {
        return false;
      }
    }
  }
  return true;
}

inline ElementSet interval(FiniteIRL const& A, Element lo, Element hi) {
  return A.up_set(lo) & A.down_set(hi);
}

}  // namespace detail

// Every element of an FSI De Morgan monoid lies above e or below f.
inline CheckResult splitting_check(FiniteIRL const& A) {
  detail::require_fsi_dmm(A);
  for (std::size_t a = 0; a < A.size(); ++a) {
    auto x = static_cast<Element>(a);
    if (!A.leq(A.e(), x) && !A.leq(x, A.f())) {
      return {false, {x}, "neither e <= a nor a <= f"};
    }
  }
  return {};
}

struct BoundsCertificate {
  ElementSet generators;
  Element c = 0;
  Element b = 0;
  Element lower = 0;
  Element upper = 0;
  ElementSet generated;
  bool holds = true;
  std::optional<Element> violation;
};

// c = e \/ f \/ join of (a \/ ~a) over X, b = c^2; then ~b <= x <= b on Sg X.
inline BoundsCertificate bounds_of_generated(FiniteIRL const& A, ElementSet X) {
  BoundsCertificate cert;
  cert.generators = X;
  Element c = A.join(A.e(), A.f());
  for (Element a : X) {
    c = A.join(c, A.join(a, A.neg(a)));
  }
  cert.c = c;
  cert.b = A.square(c);
  cert.upper = cert.b;
  cert.lower = A.neg(cert.b);
  cert.generated = subuniverse(A, X);
  for (Element x : cert.generated) {
    if (!A.leq(cert.lower, x) || !A.leq(x, cert.upper)) {
      cert.holds = false;
      cert.violation = x;
      break;
    }
  }
  return cert;
}

struct LollipopReport {
  bool idempotent_case = false;
  bool totally_ordered = false;  // reported in the idempotent case
  ElementSet interval;           // [~f^2, f^2]
  ElementSet lower_chain;        // (~f^2]
  ElementSet upper_chain;        // [f^2)
  std::vector<std::string> violations;

  bool pass() const { return violations.empty(); }
};

inline LollipopReport lollipop(FiniteIRL const& A) {
  detail::require_fsi_dmm(A);
  LollipopReport r;
  if (is_idempotent(A)) {
    r.idempotent_case = true;
    r.totally_ordered = is_chain(A);
    if (!r.totally_ordered) {
      r.violations.push_back("idempotent FSI algebra is not totally ordered");
    }
    return r;
  }
  Element const f2 = A.square(A.f());
  Element const nf2 = A.neg(f2);
  r.interval = detail::interval(A, nf2, f2);
  r.lower_chain = A.down_set(nf2);
  r.upper_chain = A.up_set(f2);
  if ((r.interval | r.lower_chain | r.upper_chain) != ElementSet::all(A.size())) {
    r.violations.push_back("interval and chains do not cover the algebra");
  }
  if (!detail::is_chain_of_idempotents(A, r.lower_chain)) {
    r.violations.push_back("(~f^2] is not a chain of idempotents");
  }
  if (!detail::is_chain_of_idempotents(A, r.upper_chain)) {
    r.violations.push_back("[f^2) is not a chain of idempotents");
  }
  if (!detail::is_closed(A, r.interval)) {
    r.violations.push_back("[~f^2, f^2] is not a subuniverse");
  }
  // [f) = [f, f^2] together with the chain of idempotent upper bounds of f
  ElementSet const above_f = A.up_set(A.f());
  ElementSet idem_above_f;
  for (Element a : above_f) {
    if (A.square(a) == a) {
      idem_above_f.insert(a);
    }
  }
  if (idem_above_f != r.upper_chain ||
      (detail::interval(A, A.f(), f2) | r.upper_chain) != above_f) {
    r.violations.push_back("[f) is not [f, f^2] plus the idempotents above f");
  }
  return r;
}

// Fusion above f: f^2 when both factors lie below f^2, otherwise the larger.
inline CheckResult fusion_pattern_check(FiniteIRL const& A) {
  detail::require_non_idempotent_fsi_dmm(A);
  Element const f = A.f();
  Element const f2 = A.square(f);
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = 0; j < A.size(); ++j) {
      auto a = static_cast<Element>(i);
      auto b = static_cast<Element>(j);
      if (A.leq(f, a) && A.leq(f, b)) {
        if (A.leq(a, f2) && A.leq(b, f2)) {
          if (A.fuse(a, b) != f2) {
            return {false, {a, b}, "a.b != f^2 for f <= a, b <= f^2"};
          }
        } else if (!A.comparable(a, b) || A.fuse(a, b) != A.join(a, b)) {
          return {false, {a, b}, "a.b is not max{a, b}"};
        }
        if (A.lt(a, b) && A.leq(f2, b)) {
          Element const nb = A.neg(b);
          if (A.fuse(a, nb) != nb || A.fuse(b, nb) != nb || A.fuse(b, A.neg(a)) != b) {
            return {false, {a, b}, "absorption around ~b, b fails"};
          }
        }
      }
    }
  }
  return {};
}

struct OddQuotientReport {
  Quotient quotient;
  bool odd_sugihara = false;
  bool class_of_e_is_interval = false;
  bool other_classes_singletons = false;

  bool pass() const { return odd_sugihara && class_of_e_is_interval && other_classes_singletons; }
};

inline bool is_sugihara_monoid(FiniteIRL const& A) { return is_dmm(A) && is_idempotent(A); }

// A / [~f^2): an odd Sugihara monoid whose class of e is [~f^2, f^2].
inline OddQuotientReport odd_sugihara_quotient(FiniteIRL const& A) {
  detail::require_non_idempotent_fsi_dmm(A);
  Element const f2 = A.square(A.f());
  Element const nf2 = A.neg(f2);
  DeductiveFilter const G = dfg(A, A.up_set(nf2));
  OddQuotientReport r{quotient(A, G)};
  FiniteIRL const& Q = r.quotient.algebra;
  r.odd_sugihara = is_sugihara_monoid(Q) && Q.e() == Q.f();
  ElementSet const iv = detail::interval(A, nf2, f2);
  ElementSet cls_e;
  std::vector<std::size_t> counts(Q.size(), 0);
  for (std::size_t a = 0; a < A.size(); ++a) {
    Element const p = r.quotient.projection[a];
    ++counts[p];
    if (p == r.quotient.projection[A.e()]) {
      cls_e.insert(static_cast<Element>(a));
    }
  }
  r.class_of_e_is_interval = cls_e == iv;
  r.other_classes_singletons = true;
  for (std::size_t p = 0; p < Q.size(); ++p) {
    if (p != r.quotient.projection[A.e()] && counts[p] != 1) {
      r.other_classes_singletons = false;
    }
  }
  return r;
}

// When e < f, the map C4 -> {~f^2, e, f, f^2} as an injective homomorphism.
inline std::optional<Homomorphism> embed_c4_if_e_below_f(FiniteIRL const& A) {
  if (!A.lt(A.e(), A.f())) {
    return std::nullopt;
  }
  FiniteIRL const C = c4();
  Element const f2 = A.square(A.f());
  std::vector<Element> map{A.neg(f2), A.e(), A.f(), f2};
  if (!is_homomorphism(C, A, map)) {
    throw Error("C4 does not embed into '" + A.name() + "' although e < f");
  }
  Homomorphism h{map, ElementSet::from(map).size() == 4, A.size() == 4};
  if (!h.injective) {
    throw Error("image of C4 in '" + A.name() + "' collapses");
  }
  return h;
}

}  // namespace dmm
