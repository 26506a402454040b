#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dmm/algebra.hpp"
#include "dmm/element_set.hpp"
#include "dmm/errors.hpp"

namespace dmm {

struct DeductiveFilter {
  ElementSet members;
  bool operator==(DeductiveFilter const&) const = default;
};

// Block ids per element; blocks are numbered in order of their least member.
struct Congruence {
  std::vector<int> block;

  std::size_t block_count() const {
    return block.empty() ? 0 : static_cast<std::size_t>(*std::max_element(block.begin(), block.end())) + 1;
  }
  bool related(Element a, Element b) const { return block[a] == block[b]; }
  // Every pair related in *this is related in o.
  bool refines(Congruence const& o) const {
    for (std::size_t a = 0; a < block.size(); ++a) {
      for (std::size_t b = a + 1; b < block.size(); ++b) {
        if (block[a] == block[b] && o.block[a] != o.block[b]) {
          return false;
        }
      }
    }
    return true;
  }
  bool operator==(Congruence const&) const = default;
};

// Renumbers an arbitrary labelling so that blocks appear in order of their
// least member.
inline Congruence normalize_blocks(std::vector<int> const& raw) {
  std::vector<int> seen;
  Congruence c;
  c.block.resize(raw.size());
  for (std::size_t a = 0; a < raw.size(); ++a) {
    auto it = std::find(seen.begin(), seen.end(), raw[a]);
    if (it == seen.end()) {
      seen.push_back(raw[a]);
      c.block[a] = static_cast<int>(seen.size() - 1);
    } else {
      c.block[a] = static_cast<int>(it - seen.begin());
    }
  }
  return c;
}

inline bool is_deductive_filter(FiniteIRL const& A, ElementSet G) {
  if (!G.contains(A.e())) {
    return false;
  }
  for (Element a : G) {
    if (!A.up_set(a).subset_of(G)) {
      return false;
    }
    for (Element b : G) {
      if (!G.contains(A.meet(a, b)) || !G.contains(A.fuse(a, b))) {
        return false;
      }
    }
  }
  return true;
}

// All deductive filters, sorted by size and then by member list. In a finite
// lattice the nonempty upward-closed meet-closed sets are exactly the
// principal filters [a), so those are the candidates tested.
inline std::vector<DeductiveFilter> deductive_filters(FiniteIRL const& A) {
  std::vector<ElementSet> found;
  for (std::size_t a = 0; a < A.size(); ++a) {
    ElementSet const up = A.up_set(static_cast<Element>(a));
    if (is_deductive_filter(A, up)) {
      found.push_back(up);
    }
  }
  std::sort(found.begin(), found.end(), size_lex_less);
  std::vector<DeductiveFilter> out;
  for (auto s : found) {
    out.push_back({s});
  }
  return out;
}

// Least deductive filter containing X, by closure iteration.
inline DeductiveFilter dfg(FiniteIRL const& A, ElementSet X) {
  ElementSet G = X;
  G.insert(A.e());
  while (true) {
    ElementSet next = G;
    for (Element a : G) {
      next |= A.up_set(a);
      for (Element b : G) {
        next.insert(A.meet(a, b));
        next.insert(A.fuse(a, b));
      }
    }
    if (next == G) {
      return {G};
    }
    G = next;
  }
}

inline bool is_congruence(FiniteIRL const& A, Congruence const& theta) {
  std::size_t const n = A.size();
  if (theta.block.size() != n) {
    return false;
  }
  // Compatibility is checked one argument at a time, which suffices for an
  // equivalence relation.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto x = static_cast<Element>(a);
      auto y = static_cast<Element>(b);
      if (!theta.related(x, y)) {
        continue;
      }
      if (!theta.related(A.neg(x), A.neg(y))) {
        return false;
      }
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

inline Congruence omega(FiniteIRL const& A, DeductiveFilter const& G) {
  if (!is_deductive_filter(A, G.members)) {
    throw NotAFilter("set is not a deductive filter of '" + A.name() + "'");
  }
  std::size_t const n = A.size();
  std::vector<int> raw(n, -1);
  int next = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (raw[a] >= 0) {
      continue;
    }
    raw[a] = next;
    for (std::size_t b = a + 1; b < n; ++b) {
      auto x = static_cast<Element>(a);
      auto y = static_cast<Element>(b);
      if (G.members.contains(A.residual(x, y)) && G.members.contains(A.residual(y, x))) {
        raw[b] = next;
      }
    }
    ++next;
  }
  Congruence theta = normalize_blocks(raw);
  if (!is_congruence(A, theta)) {
    throw NotACongruence("filter does not induce a congruence (the algebra is not an IRL?)");
  }
  return theta;
}

inline DeductiveFilter filter_of(FiniteIRL const& A, Congruence const& theta) {
  if (!is_congruence(A, theta)) {
    throw NotACongruence("partition is not a congruence of '" + A.name() + "'");
  }
  ElementSet G;
  for (std::size_t a = 0; a < A.size(); ++a) {
    auto x = static_cast<Element>(a);
    if (theta.related(A.meet(x, A.e()), A.e())) {
      G.insert(x);
    }
  }
  return {G};
}

struct Quotient {
  FiniteIRL algebra;
  std::vector<Element> projection;
};

inline Quotient quotient_by(FiniteIRL const& A, Congruence const& theta, std::string name = {}) {
  std::size_t const n = A.size();
  std::size_t const m = theta.block_count();
  std::vector<Element> rep(m);
  for (std::size_t a = n; a-- > 0;) {
    rep[static_cast<std::size_t>(theta.block[a])] = static_cast<Element>(a);
  }
  std::vector<Element> proj(n);
  for (std::size_t a = 0; a < n; ++a) {
    proj[a] = static_cast<Element>(theta.block[a]);
  }
  auto lift = [&](auto op) {
    return BinOpTable::generate(m, [&](Element p, Element q) { return proj[op(rep[p], rep[q])]; });
  };
  std::vector<Element> neg(m);
  for (std::size_t p = 0; p < m; ++p) {
    neg[p] = proj[A.neg(rep[p])];
  }
  FiniteIRL Q(name.empty() ? A.name() + "/theta" : std::move(name),
              lift([&](Element a, Element b) { return A.meet(a, b); }),
              lift([&](Element a, Element b) { return A.join(a, b); }),
              lift([&](Element a, Element b) { return A.fuse(a, b); }), std::move(neg),
              proj[A.e()]);
  return {std::move(Q), std::move(proj)};
}

// A/G with blocks numbered by least member. The factor-order law
// (a -> b in G iff a/G <= b/G) is asserted on the result.
inline Quotient quotient(FiniteIRL const& A, DeductiveFilter const& G) {
  Congruence const theta = omega(A, G);
  Quotient q = quotient_by(A, theta, A.name() + "/G");
  for (std::size_t a = 0; a < A.size(); ++a) {
    for (std::size_t b = 0; b < A.size(); ++b) {
      auto x = static_cast<Element>(a);
      auto y = static_cast<Element>(b);
      if (G.members.contains(A.residual(x, y)) !=
          q.algebra.leq(q.projection[x], q.projection[y])) {
        throw Error("factor order fails in quotient of '" + A.name() + "'");
      }
    }
  }
  return q;
}

struct CongruenceLattice {
  std::vector<DeductiveFilter> filters;  // same order as deductive_filters
  std::vector<Congruence> congruences;   // congruences[i] = omega(filters[i])

  std::size_t size() const { return filters.size(); }
  bool leq(std::size_t i, std::size_t j) const { return congruences[i].refines(congruences[j]); }
  bool is_chain() const {
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        if (!leq(i, j) && !leq(j, i)) {
          return false;
        }
      }
    }
    return true;
  }
};

inline CongruenceLattice congruence_lattice(FiniteIRL const& A) {
  CongruenceLattice L;
  L.filters = deductive_filters(A);
  for (auto const& G : L.filters) {
    L.congruences.push_back(omega(A, G));
  }
  return L;
}

struct Classification {
  bool trivial = false;
  bool simple = false;
  bool si = false;
  bool fsi = false;
  std::optional<Element> subcover;  // largest element strictly below e
  bool lemma_applicable = false;    // square-increasing, so order shortcuts apply
  bool lemma_agrees = true;
};

namespace detail {

inline std::optional<Element> largest_strictly_below(FiniteIRL const& A, Element e) {
  ElementSet below = A.down_set(e);
  below.erase(e);
  for (Element c : below) {
    if (below.subset_of(A.down_set(c))) {
      return c;
    }
  }
  return std::nullopt;
}

inline bool join_irreducible(FiniteIRL const& A, Element e) {
  for (std::size_t a = 0; a < A.size(); ++a) {
    for (std::size_t b = 0; b < A.size(); ++b) {
      auto x = static_cast<Element>(a);
      auto y = static_cast<Element>(b);
      if (A.lt(x, e) && A.lt(y, e) && A.join(x, y) == e) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

// SI/FSI/simple from the congruence lattice; for square-increasing input the
// order-theoretic characterisations around e are computed too and compared.
inline Classification classify(FiniteIRL const& A) {
  Classification c;
  c.trivial = A.size() == 1;
  c.subcover = detail::largest_strictly_below(A, A.e());
  CongruenceLattice const L = congruence_lattice(A);
  // filters[0] is [e), the identity congruence
  std::size_t const k = L.size();
  if (c.trivial) {
    c.fsi = true;
  } else {
    c.simple = k == 2;
    // completely meet-irreducible: the nonidentity filters share a least one
    ElementSet common = ElementSet::all(A.size());
    for (std::size_t i = 1; i < k; ++i) {
      common &= L.filters[i].members;
    }
    c.si = common != L.filters[0].members;
    c.fsi = true;
    for (std::size_t i = 1; i < k && c.fsi; ++i) {
      for (std::size_t j = 1; j < k && c.fsi; ++j) {
        if ((L.filters[i].members & L.filters[j].members) == L.filters[0].members) {
          c.fsi = false;
        }
      }
    }
  }
  c.lemma_applicable = is_square_increasing(A);
  if (c.lemma_applicable && !c.trivial) {
    Element const e = A.e();
    bool const fsi = detail::join_irreducible(A, e);
    bool const si = c.subcover.has_value();
    bool const simple = (A.down_set(e).size() == 2);
    c.lemma_agrees = fsi == c.fsi && si == c.si && simple == c.simple;
  }
  return c;
}

// Oracle for semilinearity: every subdirectly irreducible quotient is a chain.
inline bool semilinear_by_quotients(FiniteIRL const& A) {
  for (auto const& G : deductive_filters(A)) {
    Quotient const q = quotient(A, G);
    if (q.algebra.size() > 1 && classify(q.algebra).si && !is_chain(q.algebra)) {
      return false;
    }
  }
  return true;
}

}  // namespace dmm
