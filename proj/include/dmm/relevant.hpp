#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmm/algebra.hpp"
#include "dmm/element_set.hpp"
#include "dmm/filters.hpp"

namespace dmm {

// Finite algebra in the e-free signature (fusion, meet, join, negation).
class FiniteRA {
 public:
  FiniteRA(std::string name, BinOpTable meet, BinOpTable join, BinOpTable fusion,
           std::vector<Element> neg, std::vector<std::string> labels = {})
      : name_(std::move(name)),
        meet_(std::move(meet)),
        join_(std::move(join)),
        fusion_(std::move(fusion)),
        neg_(std::move(neg)),
        labels_(std::move(labels)) {
    std::size_t const n = meet_.size();
    if (n == 0 || n > kMaxCarrier) {
      throw MalformedTable("carrier size out of range");
    }
    if (join_.size() != n || fusion_.size() != n || neg_.size() != n) {
      throw MalformedTable("tables disagree on the carrier size");
    }
    for (Element v : neg_) {
      if (v >= n) {
        throw MalformedTable("negation entry " + std::to_string(v) + " out of range");
      }
    }
    if (!labels_.empty() && labels_.size() != n) {
      throw MalformedTable("label count does not match carrier size");
    }
  }

  std::string const& name() const { return name_; }
  std::size_t size() const { return meet_.size(); }
  Element meet(Element a, Element b) const { return meet_(a, b); }
  Element join(Element a, Element b) const { return join_(a, b); }
  Element fuse(Element a, Element b) const { return fusion_(a, b); }
  Element neg(Element a) const { return neg_[a]; }
  Element residual(Element a, Element b) const { return neg(fuse(a, neg(b))); }
  // |a| := a -> a
  Element abs(Element a) const { return residual(a, a); }
  bool leq(Element a, Element b) const { return meet(a, b) == a; }
  bool lt(Element a, Element b) const { return a != b && leq(a, b); }

  Element bottom() const {
    Element b = 0;
    for (std::size_t a = 1; a < size(); ++a) b = meet(b, static_cast<Element>(a));
    return b;
  }
  Element top() const {
    Element t = 0;
    for (std::size_t a = 1; a < size(); ++a) t = join(t, static_cast<Element>(a));
    return t;
  }
  ElementSet up_set(Element a) const {
    ElementSet s;
    for (std::size_t b = 0; b < size(); ++b) {
      if (leq(a, static_cast<Element>(b))) s.insert(static_cast<Element>(b));
    }
    return s;
  }

  BinOpTable const& meet_table() const { return meet_; }
  BinOpTable const& join_table() const { return join_; }
  BinOpTable const& fusion_table() const { return fusion_; }
  std::vector<Element> const& neg_table() const { return neg_; }
  std::vector<std::string> const& labels() const { return labels_; }
  std::string label(Element a) const { return labels_.empty() ? std::to_string(a) : labels_[a]; }

 private:
  std::string name_;
  BinOpTable meet_;
  BinOpTable join_;
  BinOpTable fusion_;
  std::vector<Element> neg_;
  std::vector<std::string> labels_;
};

inline FiniteRA e_free_reduct(FiniteIRL const& A) {
  std::string const name = A.name() + "-";
  return FiniteRA(name, A.meet_table(), A.join_table(), A.fusion_table(), A.neg_table(),
                  A.labels());
}

// Restores the signature with a chosen neutral element.
inline FiniteIRL with_neutral(FiniteRA const& A, Element e, std::string name = {}) {
  return FiniteIRL(name.empty() ? A.name() + "+" : std::move(name), A.meet_table(), A.join_table(),
                   A.fusion_table(), A.neg_table(), e, A.labels());
}

inline ValidationReport validate_ra(FiniteRA const& A, ValidateOptions const& opts = {}) {
  ValidationReport report;
  detail::ViolationSink sink(report, opts);
  std::size_t const n = A.size();
  using detail::check_binary;
  using detail::check_ternary;
  using detail::check_unary;

  check_unary(n, sink, "meet-idempotent", [&](Element a) { return A.meet(a, a) == a; });
  check_unary(n, sink, "join-idempotent", [&](Element a) { return A.join(a, a) == a; });
  check_binary(n, sink, "meet-commutative",
               [&](Element a, Element b) { return A.meet(a, b) == A.meet(b, a); });
  check_binary(n, sink, "join-commutative",
               [&](Element a, Element b) { return A.join(a, b) == A.join(b, a); });
  check_ternary(n, sink, "meet-associative", [&](Element a, Element b, Element c) {
    return A.meet(A.meet(a, b), c) == A.meet(a, A.meet(b, c));
  });
  check_ternary(n, sink, "join-associative", [&](Element a, Element b, Element c) {
    return A.join(A.join(a, b), c) == A.join(a, A.join(b, c));
  });
  check_binary(n, sink, "absorption", [&](Element a, Element b) {
    return A.meet(a, A.join(a, b)) == a && A.join(a, A.meet(a, b)) == a;
  });
  check_binary(n, sink, "order-agreement", [&](Element a, Element b) {
    return (A.join(a, b) == b) == (A.meet(a, b) == a);
  });
  check_ternary(n, sink, "distributive", [&](Element a, Element b, Element c) {
    return A.meet(a, A.join(b, c)) == A.join(A.meet(a, b), A.meet(a, c));
  });
  check_binary(n, sink, "fusion-commutative",
               [&](Element a, Element b) { return A.fuse(a, b) == A.fuse(b, a); });
  check_ternary(n, sink, "fusion-associative", [&](Element a, Element b, Element c) {
    return A.fuse(A.fuse(a, b), c) == A.fuse(a, A.fuse(b, c));
  });
  check_unary(n, sink, "double-negation", [&](Element a) { return A.neg(A.neg(a)) == a; });
  check_unary(n, sink, "square-increasing", [&](Element a) { return A.leq(a, A.fuse(a, a)); });
  check_binary(n, sink, "contraposition", [&](Element a, Element b) {
    return A.leq(a, b) == A.leq(A.neg(b), A.neg(a));
  });
  check_ternary(n, sink, "involution-fusion", [&](Element a, Element b, Element c) {
    return A.leq(A.fuse(a, b), c) == A.leq(A.fuse(a, A.neg(c)), A.neg(b));
  });
  check_ternary(n, sink, "absolute-values", [&](Element a, Element b, Element c) {
    Element const nb = A.neg(A.fuse(b, A.neg(b)));
    Element const nc = A.neg(A.fuse(c, A.neg(c)));
    return A.leq(a, A.fuse(a, A.meet(nb, nc)));
  });
  return report;
}

inline bool is_ra(FiniteRA const& A) {
  return validate_ra(A, {.max_witnesses_per_axiom = 1, .fail_fast = true}).pass();
}

struct RADeductiveFilter {
  ElementSet members;
  bool operator==(RADeductiveFilter const&) const = default;
};

// DFg{a} = { c : a /\ |d| <= c for some d }
inline RADeductiveFilter dfg_ra(FiniteRA const& A, Element a) {
  ElementSet F;
  for (std::size_t d = 0; d < A.size(); ++d) {
    F |= A.up_set(A.meet(a, A.abs(static_cast<Element>(d))));
  }
  return {F};
}

// DFg X = DFg{meet of X}; the empty meet is the top element.
inline RADeductiveFilter dfg_ra_set(FiniteRA const& A, ElementSet X) {
  Element a = A.top();
  for (Element x : X) {
    a = A.meet(a, x);
  }
  return dfg_ra(A, a);
}

// Least set containing X and every |a| that is meet-closed and upward closed.
inline RADeductiveFilter dfg_oracle(FiniteRA const& A, ElementSet X) {
  ElementSet F = X;
  for (std::size_t a = 0; a < A.size(); ++a) {
    F.insert(A.abs(static_cast<Element>(a)));
  }
  while (true) {
    ElementSet next = F;
    for (Element a : F) {
      next |= A.up_set(a);
      for (Element b : F) {
        next.insert(A.meet(a, b));
      }
    }
    if (next == F) {
      return {F};
    }
    F = next;
  }
}

struct MeetPropertyReport {
  bool pass = true;
  std::vector<Element> witness;  // (a, b) of the first failure
  std::string failed;            // which identity failed
};

inline MeetPropertyReport meet_property_check(FiniteRA const& A) {
  MeetPropertyReport r;
  for (std::size_t i = 0; i < A.size() && r.pass; ++i) {
    for (std::size_t j = 0; j < A.size() && r.pass; ++j) {
      auto a = static_cast<Element>(i);
      auto b = static_cast<Element>(j);
      Element const m = A.meet(A.abs(a), A.abs(b));
      if (!A.leq(A.abs(m), m)) {
        r = {false, {a, b}, "abs-of-meet"};
      } else if ((dfg_ra(A, a).members & dfg_ra(A, b).members) != dfg_ra(A, A.join(a, b)).members) {
        r = {false, {a, b}, "filter-intersection"};
      }
    }
  }
  return r;
}

// Meet of all |a|, provided it is neutral for fusion.
inline std::optional<Element> reconstruct_neutral(FiniteRA const& A) {
  Element m = A.abs(0);
  for (std::size_t a = 1; a < A.size(); ++a) {
    m = A.meet(m, A.abs(static_cast<Element>(a)));
  }
  for (std::size_t a = 0; a < A.size(); ++a) {
    auto x = static_cast<Element>(a);
    if (A.fuse(m, x) != x) {
      return std::nullopt;
    }
  }
  return m;
}

// First pair p < q (by index) forming a copy of the two-element Boolean
// algebra's e-free reduct.
inline std::pair<Element, Element> contains_two_reduct(FiniteRA const& A) {
  if (A.size() == 1) {
    throw TrivialAlgebra("trivial algebra has no two-element subalgebra");
  }
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = 0; j < A.size(); ++j) {
      auto p = static_cast<Element>(i);
      auto q = static_cast<Element>(j);
      if (A.lt(p, q) && A.neg(p) == q && A.fuse(p, p) == p && A.fuse(p, q) == p &&
          A.fuse(q, q) == q) {
        return {p, q};
      }
    }
  }
  throw Error("no two-element Boolean subalgebra in '" + A.name() + "'");
}

// Nonempty subuniverses, sorted by size then member list.
inline std::vector<ElementSet> ra_subuniverses(FiniteRA const& A) {
  auto close = [&](ElementSet S) {
    while (true) {
      ElementSet next = S;
      for (Element a : S) {
        next.insert(A.neg(a));
        for (Element b : S) {
          next.insert(A.meet(a, b));
          next.insert(A.join(a, b));
          next.insert(A.fuse(a, b));
        }
      }
      if (next == S) return S;
      S = next;
    }
  };
  std::vector<ElementSet> found;
  for (std::size_t a = 0; a < A.size(); ++a) {
    ElementSet const S = close(ElementSet{static_cast<Element>(a)});
    if (std::find(found.begin(), found.end(), S) == found.end()) found.push_back(S);
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t a = 0; a < A.size(); ++a) {
      auto x = static_cast<Element>(a);
      if (found[i].contains(x)) continue;
      ElementSet X = found[i];
      X.insert(x);
      ElementSet const S = close(X);
      if (std::find(found.begin(), found.end(), S) == found.end()) found.push_back(S);
    }
  }
  std::sort(found.begin(), found.end(), size_lex_less);
  return found;
}

inline FiniteRA ra_restrict(FiniteRA const& A, ElementSet S) {
  std::vector<Element> const incl = S.to_vector();
  std::size_t const m = incl.size();
  std::vector<Element> index(A.size(), 0);
  for (std::size_t i = 0; i < m; ++i) index[incl[i]] = static_cast<Element>(i);
  auto lift = [&](auto op) {
    return BinOpTable::generate(m, [&](Element p, Element q) { return index[op(incl[p], incl[q])]; });
  };
  std::vector<Element> neg(m);
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    neg[i] = index[A.neg(incl[i])];
    labels[i] = A.label(incl[i]);
  }
  return FiniteRA("Sg(" + A.name() + ")", lift([&](Element a, Element b) { return A.meet(a, b); }),
                  lift([&](Element a, Element b) { return A.join(a, b); }),
                  lift([&](Element a, Element b) { return A.fuse(a, b); }), std::move(neg),
                  std::move(labels));
}

inline bool is_ra_deductive_filter(FiniteRA const& A, ElementSet F) {
  for (std::size_t a = 0; a < A.size(); ++a) {
    if (!F.contains(A.abs(static_cast<Element>(a)))) return false;
  }
  for (Element a : F) {
    if (!A.up_set(a).subset_of(F)) return false;
    for (Element b : F) {
      if (!F.contains(A.meet(a, b))) return false;
    }
  }
  return true;
}

// Enumerated directly from the definition (principal lattice filters that
// contain every |a|), not through the generation formula.
inline std::vector<RADeductiveFilter> ra_deductive_filters(FiniteRA const& A) {
  std::vector<ElementSet> found;
  for (std::size_t a = 0; a < A.size(); ++a) {
    ElementSet const F = A.up_set(static_cast<Element>(a));
    if (is_ra_deductive_filter(A, F)) found.push_back(F);
  }
  std::sort(found.begin(), found.end(), size_lex_less);
  std::vector<RADeductiveFilter> out;
  for (auto F : found) out.push_back({F});
  return out;
}

inline bool is_ra_congruence(FiniteRA const& A, Congruence const& theta) {
  std::size_t const n = A.size();
  if (theta.block.size() != n) return false;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto x = static_cast<Element>(a);
      auto y = static_cast<Element>(b);
      if (!theta.related(x, y)) continue;
      if (!theta.related(A.neg(x), A.neg(y))) return false;
      for (std::size_t c = 0; c < n; ++c) {
        auto z = static_cast<Element>(c);
        if (!theta.related(A.meet(x, z), A.meet(y, z)) ||
            !theta.related(A.join(x, z), A.join(y, z)) ||
            !theta.related(A.fuse(x, z), A.fuse(y, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

inline Congruence ra_omega(FiniteRA const& A, RADeductiveFilter const& F) {
  std::size_t const n = A.size();
  std::vector<int> raw(n, -1);
  int next = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (raw[a] >= 0) continue;
    raw[a] = next;
    for (std::size_t b = a + 1; b < n; ++b) {
      auto x = static_cast<Element>(a);
      auto y = static_cast<Element>(b);
      if (F.members.contains(A.residual(x, y)) && F.members.contains(A.residual(y, x))) raw[b] = next;
    }
    ++next;
  }
  Congruence theta = normalize_blocks(raw);
  if (!is_ra_congruence(A, theta)) {
    throw NotACongruence("deductive filter does not induce a congruence of '" + A.name() + "'");
  }
  return theta;
}

struct RAClassification {
  bool trivial = false;
  bool simple = false;
  bool si = false;
  bool fsi = false;
  std::vector<Congruence> congruences;
  std::optional<Element> neutral;
  bool agrees_with_dmm = true;  // checked only when a neutral element exists
};

inline RAClassification ra_classify(FiniteRA const& A) {
  RAClassification c;
  c.trivial = A.size() == 1;
  auto const filters = ra_deductive_filters(A);
  for (auto const& F : filters) {
    c.congruences.push_back(ra_omega(A, F));
  }
  std::size_t const k = filters.size();
  if (c.trivial) {
    c.fsi = true;
  } else {
    c.simple = k == 2;
    ElementSet common = ElementSet::all(A.size());
    for (std::size_t i = 1; i < k; ++i) common &= filters[i].members;
    c.si = common != filters[0].members;
    c.fsi = true;
    for (std::size_t i = 1; i < k && c.fsi; ++i) {
      for (std::size_t j = 1; j < k && c.fsi; ++j) {
        if ((filters[i].members & filters[j].members) == filters[0].members) c.fsi = false;
      }
    }
  }
  c.neutral = reconstruct_neutral(A);
  if (c.neutral) {
    FiniteIRL const plus = with_neutral(A, *c.neutral);
    Classification const d = classify(plus);
    c.agrees_with_dmm = d.simple == c.simple && d.si == c.si && d.fsi == c.fsi &&
                        d.trivial == c.trivial;
  }
  return c;
}

inline bool is_rigorously_compact(FiniteRA const& A) {
  Element const bot = A.bottom();
  Element const top = A.top();
  for (std::size_t a = 0; a < A.size(); ++a) {
    auto x = static_cast<Element>(a);
    if (x != bot && A.fuse(top, x) != top) return false;
  }
  return true;
}

}  // namespace dmm
