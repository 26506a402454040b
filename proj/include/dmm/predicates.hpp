#pragma once

#include <utility>

#include "dmm/algebra.hpp"
#include "dmm/filters.hpp"
#include "dmm/law_library.hpp"
#include "dmm/term.hpp"

namespace dmm {

struct PredicateRecord {
  bool idempotent = false;
  bool odd = false;
  bool anti_idempotent = false;
  bool integral = false;
  bool bounded = false;
  std::pair<Element, Element> extrema{0, 0};  // (bottom, top)
  bool rigorously_compact = false;
  bool distributive = false;
  bool square_increasing = false;
  bool semilinear = false;
  // Same property decided by "every subdirectly irreducible quotient is a chain".
  bool semilinear_by_quotients = false;
};

inline bool is_idempotent(FiniteIRL const& A) {
  for (std::size_t a = 0; a < A.size(); ++a) {
    auto x = static_cast<Element>(a);
    if (A.square(x) != x) {
      return false;
    }
  }
  return true;
}

inline bool is_rigorously_compact(FiniteIRL const& A) {
  Element const bot = A.bottom();
  Element const top = A.top();
  for (std::size_t a = 0; a < A.size(); ++a) {
    auto x = static_cast<Element>(a);
    if (x != bot && A.fuse(top, x) != top) {
      return false;
    }
  }
  return true;
}

inline bool has_extrema(FiniteIRL const& A) {
  Element const bot = A.bottom();
  Element const top = A.top();
  for (std::size_t a = 0; a < A.size(); ++a) {
    auto x = static_cast<Element>(a);
    if (!A.leq(bot, x) || !A.leq(x, top)) {
      return false;
    }
  }
  return true;
}

inline bool is_semilinear(FiniteIRL const& A) {
  return is_distributive(A) && satisfies(A, axiom("ax-semilinear")).holds;
}

// Every flag by direct table inspection; A must be a valid IRL.
inline PredicateRecord predicates(FiniteIRL const& A) {
  PredicateRecord p;
  Element const f2 = A.square(A.f());
  p.idempotent = is_idempotent(A);
  p.odd = A.e() == A.f();
  p.bounded = has_extrema(A);
  p.extrema = {A.bottom(), A.top()};
  p.anti_idempotent = f2 == A.top();
  p.integral = A.e() == A.top();
  p.rigorously_compact = p.bounded && is_rigorously_compact(A);
  p.distributive = is_distributive(A);
  p.square_increasing = is_square_increasing(A);
  p.semilinear = p.distributive && satisfies(A, axiom("ax-semilinear")).holds;
  p.semilinear_by_quotients = semilinear_by_quotients(A);
  return p;
}

}  // namespace dmm
