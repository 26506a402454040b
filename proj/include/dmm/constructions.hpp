#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <regex>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "dmm/algebra.hpp"
#include "dmm/errors.hpp"
#include "dmm/filters.hpp"

namespace dmm {

// ---------------------------------------------------------------------------
// Named algebras

inline FiniteIRL trivial_algebra(std::string name = "trivial") {
  return FiniteIRL(std::move(name), BinOpTable(1, {0}), BinOpTable(1, {0}), BinOpTable(1, {0}),
                   {0}, 0, {"e"});
}

// Sugihara chain: carrier {-m..-1,1..m} (even n, e = 1) or {-m..m} (odd n,
// e = 0). Fusion takes the argument of larger absolute value, and the meet
// when the absolute values agree.
inline FiniteIRL sugihara(std::size_t n) {
  if (n == 0) {
    throw UnknownName("S_0 is not an algebra");
  }
  std::vector<int> values;
  int const m = static_cast<int>(n / 2);
  for (int v = -m; v <= m; ++v) {
    if (v != 0 || n % 2 == 1) {
      values.push_back(v);
    }
  }
  auto index_of = [&](int v) {
    return static_cast<Element>(std::find(values.begin(), values.end(), v) - values.begin());
  };
  auto meet = BinOpTable::generate(n, [&](Element a, Element b) { return std::min(a, b); });
  auto join = BinOpTable::generate(n, [&](Element a, Element b) { return std::max(a, b); });
  auto fusion = BinOpTable::generate(n, [&](Element a, Element b) {
    int const x = values[a];
    int const y = values[b];
    if (std::abs(x) > std::abs(y)) {
      return a;
    }
    if (std::abs(y) > std::abs(x)) {
      return b;
    }
    return std::min(a, b);
  });
  std::vector<Element> neg(n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    neg[i] = index_of(-values[i]);
    labels.push_back(std::to_string(values[i]));
  }
  Element const e = index_of(n % 2 == 1 ? 0 : 1);
  return FiniteIRL("S" + std::to_string(n), meet, join, fusion, std::move(neg), e,
                   std::move(labels));
}

namespace detail {

// Four-element algebras on {~f^2, e, f, f^2}. Fusion is not tabulated by
// hand: bottom absorbs, top absorbs every non-bottom, e is neutral and
// f.f = f^2; these rules fill the whole table.
inline FiniteIRL four_element(std::string name, bool chain) {
  constexpr Element bot = 0;
  constexpr Element e = 1;
  constexpr Element f = 2;
  constexpr Element top = 3;
  auto leq = [&](Element a, Element b) {
    if (a == b || a == bot || b == top) {
      return true;
    }
    return chain && a == e && b == f;
  };
  auto meet = BinOpTable::generate(4, [&](Element a, Element b) -> Element {
    if (leq(a, b)) return a;
    if (leq(b, a)) return b;
    return bot;
  });
  auto join = BinOpTable::generate(4, [&](Element a, Element b) -> Element {
    if (leq(a, b)) return b;
    if (leq(b, a)) return a;
    return top;
  });
  auto fusion = BinOpTable::generate(4, [&](Element a, Element b) -> Element {
    if (a == bot || b == bot) return bot;
    if (a == top || b == top) return top;
    if (a == e) return b;
    if (b == e) return a;
    return top;  // f.f = f^2
  });
  FiniteIRL A(std::move(name), meet, join, fusion, {top, f, e, bot}, e, {"~f^2", "e", "f", "f^2"});
  return A;
}

}  // namespace detail

inline FiniteIRL c4() { return detail::four_element("C4", true); }
inline FiniteIRL d4() { return detail::four_element("D4", false); }

inline FiniteIRL two() {
  auto meet = BinOpTable::generate(2, [](Element a, Element b) { return std::min(a, b); });
  auto join = BinOpTable::generate(2, [](Element a, Element b) { return std::max(a, b); });
  return FiniteIRL("2", meet, join, meet, {1, 0}, 1, {"f", "e"});
}

// C4 inside k nested two-point extensions. Each new bottom absorbs
// everything and each new top absorbs everything except the bottom of its
// own level or an outer one.
inline FiniteIRL c4_extension(std::size_t k) {
  FiniteIRL const inner = c4();
  std::size_t const n = 4 + 2 * k;
  auto fusion = BinOpTable::generate(n, [&](Element a, Element b) -> Element {
    std::size_t lo = 0;
    std::size_t hi = n - 1;
    for (std::size_t level = 0; level < k; ++level, ++lo, --hi) {
      if (a == lo || b == lo) return static_cast<Element>(lo);
      if (a == hi || b == hi) return static_cast<Element>(hi);
    }
    return static_cast<Element>(k + inner.fuse(static_cast<Element>(a - k), static_cast<Element>(b - k)));
  });
  auto meet = BinOpTable::generate(n, [](Element a, Element b) { return std::min(a, b); });
  auto join = BinOpTable::generate(n, [](Element a, Element b) { return std::max(a, b); });
  std::vector<Element> neg(n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    neg[i] = static_cast<Element>(n - 1 - i);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    labels[k + i] = inner.label(static_cast<Element>(i));
  }
  for (std::size_t level = 0; level < k; ++level) {
    std::string const depth = std::to_string(k - level);
    labels[level] = "bot" + depth;
    labels[n - 1 - level] = "top" + depth;
  }
  return FiniteIRL("C4ext_" + std::to_string(k), meet, join, fusion, std::move(neg),
                   static_cast<Element>(k + 1), std::move(labels));
}

// Accepts "trivial", "2", "S3", "C4", "D4", "S<n>" or "S_<n>", "C4ext_<k>".
// The result is checked to be a De Morgan monoid.
inline FiniteIRL make_named(std::string const& name) {
  static std::regex const sug(R"(S_?([0-9]+))");
  static std::regex const ext(R"(C4ext_?([0-9]+))");
  std::smatch m;
  std::optional<FiniteIRL> A;
  if (name == "trivial" || name == "1") {
    A = trivial_algebra();
  } else if (name == "2") {
    A = two();
  } else if (name == "C4") {
    A = c4();
  } else if (name == "D4") {
    A = d4();
  } else if (std::regex_match(name, m, sug)) {
    std::size_t const n = std::stoul(m[1].str());
    if (n == 0 || n > kMaxCarrier) {
      throw UnknownName("no Sugihara chain of size " + m[1].str());
    }
    A = sugihara(n);
  } else if (std::regex_match(name, m, ext)) {
    std::size_t const k = std::stoul(m[1].str());
    if (4 + 2 * k > kMaxCarrier) {
      throw UnknownName("extension depth " + m[1].str() + " too large");
    }
    A = c4_extension(k);
  } else {
    throw UnknownName("unknown algebra name '" + name + "'");
  }
  if (!validate_dmm(*A).pass()) {
    throw Error("named algebra '" + name + "' failed validation");
  }
  return *A;
}

inline bool is_named(std::string const& name) {
  try {
    make_named(name);
    return true;
  } catch (UnknownName const&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Products and subalgebras

inline FiniteIRL direct_product(FiniteIRL const& A, FiniteIRL const& B) {
  std::size_t const nb = B.size();
  std::size_t const n = A.size() * nb;
  if (n > kMaxCarrier) {
    throw SizeTooLarge("product would have " + std::to_string(n) + " elements");
  }
  auto pair = [&](Element a, Element b) { return static_cast<Element>(a * nb + b); };
  auto lift = [&](auto opA, auto opB) {
    return BinOpTable::generate(n, [&](Element x, Element y) {
      return pair(opA(static_cast<Element>(x / nb), static_cast<Element>(y / nb)),
                  opB(static_cast<Element>(x % nb), static_cast<Element>(y % nb)));
    });
  };
  std::vector<Element> neg(n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto a = static_cast<Element>(x / nb);
    auto b = static_cast<Element>(x % nb);
    neg[x] = pair(A.neg(a), B.neg(b));
    labels[x] = "(" + A.label(a) + "," + B.label(b) + ")";
  }
  return FiniteIRL(A.name() + "x" + B.name(),
                   lift([&](Element a, Element b) { return A.meet(a, b); },
                        [&](Element a, Element b) { return B.meet(a, b); }),
                   lift([&](Element a, Element b) { return A.join(a, b); },
                        [&](Element a, Element b) { return B.join(a, b); }),
                   lift([&](Element a, Element b) { return A.fuse(a, b); },
                        [&](Element a, Element b) { return B.fuse(a, b); }),
                   std::move(neg), pair(A.e(), B.e()), std::move(labels));
}

// Isomorphic copy in which element a of A becomes p[a].
inline FiniteIRL permuted(FiniteIRL const& A, std::vector<Element> const& p) {
  std::size_t const n = A.size();
  std::vector<Element> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    inv[p[a]] = static_cast<Element>(a);
  }
  auto lift = [&](auto op) {
    return BinOpTable::generate(n, [&](Element x, Element y) { return p[op(inv[x], inv[y])]; });
  };
  std::vector<Element> neg(n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    neg[x] = p[A.neg(inv[x])];
    labels[x] = A.label(inv[x]);
  }
  return FiniteIRL(A.name(), lift([&](Element a, Element b) { return A.meet(a, b); }),
                   lift([&](Element a, Element b) { return A.join(a, b); }),
                   lift([&](Element a, Element b) { return A.fuse(a, b); }), std::move(neg), p[A.e()],
                   std::move(labels));
}

struct Subalgebra {
  FiniteIRL algebra;
  ElementSet universe;
  std::vector<Element> inclusion;  // new index -> index in the parent
};

// Closure of X under all operations (e included).
inline ElementSet subuniverse(FiniteIRL const& A, ElementSet X) {
  ElementSet S = X;
  S.insert(A.e());
  S.insert(A.f());
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
    if (next == S) {
      return S;
    }
    S = next;
  }
}

// Subalgebra on a set already known to be closed; elements keep their order.
inline Subalgebra restrict_to(FiniteIRL const& A, ElementSet S, std::string name = {}) {
  std::vector<Element> const incl = S.to_vector();
  std::size_t const m = incl.size();
  std::vector<Element> index(A.size(), 0);
  for (std::size_t i = 0; i < m; ++i) {
    index[incl[i]] = static_cast<Element>(i);
  }
  auto lift = [&](auto op) {
    return BinOpTable::generate(m, [&](Element p, Element q) { return index[op(incl[p], incl[q])]; });
  };
  std::vector<Element> neg(m);
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    neg[i] = index[A.neg(incl[i])];
    labels[i] = A.label(incl[i]);
  }
  FiniteIRL B(name.empty() ? "Sg(" + A.name() + ")" : std::move(name),
              lift([&](Element a, Element b) { return A.meet(a, b); }),
              lift([&](Element a, Element b) { return A.join(a, b); }),
              lift([&](Element a, Element b) { return A.fuse(a, b); }), std::move(neg),
              index[A.e()], std::move(labels));
  return {std::move(B), S, incl};
}

inline Subalgebra sg(FiniteIRL const& A, ElementSet X) { return restrict_to(A, subuniverse(A, X)); }

inline Subalgebra zero_generated(FiniteIRL const& A) { return sg(A, {}); }

// Every subuniverse of A, sorted by size and then member list.
inline std::vector<ElementSet> all_subuniverses(FiniteIRL const& A) {
  std::vector<ElementSet> found{subuniverse(A, {})};
  // Grow by one generator at a time; every subuniverse is reached.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t a = 0; a < A.size(); ++a) {
      auto x = static_cast<Element>(a);
      if (found[i].contains(x)) {
        continue;
      }
      ElementSet X = found[i];
      X.insert(x);
      ElementSet const S = subuniverse(A, X);
      if (std::find(found.begin(), found.end(), S) == found.end()) {
        found.push_back(S);
      }
    }
  }
  std::sort(found.begin(), found.end(), size_lex_less);
  return found;
}

// ---------------------------------------------------------------------------
// Homomorphisms

struct Homomorphism {
  std::vector<Element> map;
  bool injective = false;
  bool surjective = false;
  bool operator==(Homomorphism const&) const = default;
};

inline bool is_homomorphism(FiniteIRL const& A, FiniteIRL const& B, std::vector<Element> const& h) {
  if (h.size() != A.size() || h[A.e()] != B.e()) {
    return false;
  }
  for (std::size_t a = 0; a < A.size(); ++a) {
    auto x = static_cast<Element>(a);
    if (h[x] >= B.size() || h[A.neg(x)] != B.neg(h[x])) {
      return false;
    }
    for (std::size_t b = 0; b < A.size(); ++b) {
      auto y = static_cast<Element>(b);
      if (h[A.meet(x, y)] != B.meet(h[x], h[y]) || h[A.join(x, y)] != B.join(h[x], h[y]) ||
          h[A.fuse(x, y)] != B.fuse(h[x], h[y])) {
        return false;
      }
    }
  }
  return true;
}

namespace detail {

class HomSearch {
 public:
  HomSearch(FiniteIRL const& A, FiniteIRL const& B) : A_(A), B_(B), h_(A.size(), kUnset) {}

  std::vector<Homomorphism> run() {
    std::vector<Element> trail;
    if (assign(A_.e(), B_.e(), trail)) {
      branch();
    }
    std::sort(out_.begin(), out_.end(),
              [](Homomorphism const& x, Homomorphism const& y) { return x.map < y.map; });
    return out_;
  }

 private:
  static constexpr int kUnset = -1;

  // Sets h(a) = b and propagates everything it forces. On conflict returns
  // false; the trail records what to undo either way.
  bool assign(Element a, Element b, std::vector<Element>& trail) {
    std::vector<std::pair<Element, Element>> queue{{a, b}};
    while (!queue.empty()) {
      auto [x, y] = queue.back();
      queue.pop_back();
      if (h_[x] != kUnset) {
        if (h_[x] != y) {
          return false;
        }
        continue;
      }
      h_[x] = y;
      trail.push_back(x);
      queue.emplace_back(A_.neg(x), B_.neg(y));
      for (std::size_t zi = 0; zi < h_.size(); ++zi) {
        if (h_[zi] == kUnset) {
          continue;
        }
        auto z = static_cast<Element>(zi);
        auto hz = static_cast<Element>(h_[zi]);
        queue.emplace_back(A_.meet(x, z), B_.meet(y, hz));
        queue.emplace_back(A_.join(x, z), B_.join(y, hz));
        queue.emplace_back(A_.fuse(x, z), B_.fuse(y, hz));
      }
    }
    return true;
  }

  void undo(std::vector<Element> const& trail) {
    for (Element x : trail) {
      h_[x] = kUnset;
    }
  }

  void branch() {
    auto it = std::find(h_.begin(), h_.end(), kUnset);
    if (it == h_.end()) {
      record();
      return;
    }
    auto a = static_cast<Element>(it - h_.begin());
    for (std::size_t b = 0; b < B_.size(); ++b) {
      std::vector<Element> trail;
      if (assign(a, static_cast<Element>(b), trail)) {
        branch();
      }
      undo(trail);
    }
  }

  void record() {
    Homomorphism hom;
    ElementSet image;
    for (int v : h_) {
      hom.map.push_back(static_cast<Element>(v));
      image.insert(static_cast<Element>(v));
    }
    hom.injective = image.size() == A_.size();
    hom.surjective = image.size() == B_.size();
    out_.push_back(std::move(hom));
  }

  FiniteIRL const& A_;
  FiniteIRL const& B_;
  std::vector<int> h_;
  std::vector<Homomorphism> out_;
};

}  // namespace detail

// All homomorphisms A -> B, sorted lexicographically by their maps.
inline std::vector<Homomorphism> homs(FiniteIRL const& A, FiniteIRL const& B) {
  return detail::HomSearch(A, B).run();
}

inline Congruence kernel(Homomorphism const& h) {
  std::vector<int> raw(h.map.begin(), h.map.end());
  return normalize_blocks(raw);
}

// ---------------------------------------------------------------------------
// Canonical form

struct CanonicalForm {
  std::vector<std::uint8_t> bytes;
  auto operator<=>(CanonicalForm const&) const = default;
};

namespace detail {

// Tables of a finite structure, viewed independently of its signature so
// that lattices, lattices with involution, and full algebras share one
// canonizer. binops[0] must be the meet table.
struct TableView {
  std::size_t n = 0;
  std::vector<std::span<Element const>> binops;
  std::vector<std::span<Element const>> unops;
  std::vector<Element> constants;
};

inline TableView view_of(FiniteIRL const& A) {
  return {A.size(),
          {A.meet_table().cells(), A.join_table().cells(), A.fusion_table().cells()},
          {A.neg_table()},
          {A.e()}};
}

// Colour refinement over all operations, with colours renamed by rank of
// their signature so that the result is labelling independent.
inline std::vector<int> refine(TableView const& T, std::vector<int> colors) {
  std::size_t const n = T.n;
  using Sig = std::vector<int>;
  std::size_t count = 0;
  std::vector<int> row;
  while (true) {
    std::vector<Sig> sigs(n);
    for (std::size_t a = 0; a < n; ++a) {
      Sig& s = sigs[a];
      s.push_back(colors[a]);
      for (auto const& u : T.unops) {
        s.push_back(colors[u[a]]);
      }
      std::vector<std::vector<int>> cells(n);
      for (std::size_t b = 0; b < n; ++b) {
        cells[b].push_back(colors[b]);
        for (auto const& op : T.binops) {
          cells[b].push_back(colors[op[a * n + b]]);
        }
      }
      std::sort(cells.begin(), cells.end());
      for (auto const& c : cells) {
        s.insert(s.end(), c.begin(), c.end());
      }
    }
    std::vector<Sig> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t a = 0; a < n; ++a) {
      colors[a] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[a]) - sorted.begin());
    }
    if (sorted.size() == count) {
      return colors;
    }
    count = sorted.size();
  }
}

// pos[a] is the new index of old element a.
inline std::vector<std::uint8_t> encode(TableView const& T, std::vector<int> const& pos) {
  std::size_t const n = T.n;
  std::vector<Element> at(n);  // new index -> old element
  for (std::size_t a = 0; a < n; ++a) {
    at[static_cast<std::size_t>(pos[a])] = static_cast<Element>(a);
  }
  std::vector<std::uint8_t> out;
  out.reserve(1 + T.constants.size() + n * T.unops.size() + n * n * T.binops.size());
  out.push_back(static_cast<std::uint8_t>(n));
  for (Element c : T.constants) {
    out.push_back(static_cast<std::uint8_t>(pos[c]));
  }
  for (auto const& u : T.unops) {
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(static_cast<std::uint8_t>(pos[u[at[i]]]));
    }
  }
  for (auto const& op : T.binops) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out.push_back(static_cast<std::uint8_t>(pos[op[at[i] * n + at[j]]]));
      }
    }
  }
  return out;
}

// Individualisation-refinement search for the least encoding. Also collects
// the automorphism group as the set of leaves that reach the best encoding.
class Canonizer {
 public:
  explicit Canonizer(TableView T) : T_(std::move(T)) {}

  void run() {
    std::size_t const n = T_.n;
    std::vector<int> colors(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      int below = 0;
      for (std::size_t b = 0; b < n; ++b) {
        below += T_.binops[0][a * n + b] == b ? 1 : 0;
      }
      int flags = 0;
      for (std::size_t i = 0; i < T_.constants.size(); ++i) {
        // constants sort first within their order level
        flags = flags * 2 + (T_.constants[i] == a ? 0 : 1);
      }
      colors[a] = below * (1 << T_.constants.size()) + flags;
    }
    search(refine(T_, colors));
  }

  std::vector<std::uint8_t> best;
  std::vector<int> best_pos;
  std::vector<std::vector<int>> best_leaves;  // all labellings reaching best

 private:
  void search(std::vector<int> const& colors) {
    std::size_t const n = T_.n;
    std::vector<int> sizes(n, 0);
    for (int c : colors) {
      ++sizes[static_cast<std::size_t>(c)];
    }
    int target = -1;
    for (std::size_t c = 0; c < n; ++c) {
      if (sizes[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    }
    if (target < 0) {
      auto bytes = encode(T_, colors);
      if (best.empty() || bytes < best) {
        best = std::move(bytes);
        best_pos = colors;
        best_leaves = {colors};
      } else if (bytes == best) {
        best_leaves.push_back(colors);
      }
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (colors[v] != target) {
        continue;
      }
      std::vector<int> split(n);
      for (std::size_t a = 0; a < n; ++a) {
        split[a] = colors[a] * 2 + (colors[a] == target && a != v ? 1 : 0);
      }
      search(refine(T_, split));
    }
  }

  TableView T_;
};

inline std::vector<std::uint8_t> canonical_bytes(TableView const& T) {
  Canonizer c(T);
  c.run();
  return c.best;
}

// Automorphisms of the structure, as maps old element -> image.
inline std::vector<std::vector<Element>> automorphisms(TableView const& T) {
  Canonizer c(T);
  c.run();
  std::size_t const n = T.n;
  std::vector<Element> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    inv[static_cast<std::size_t>(c.best_pos[a])] = static_cast<Element>(a);
  }
  std::vector<std::vector<Element>> out;
  for (auto const& leaf : c.best_leaves) {
    std::vector<Element> g(n);
    for (std::size_t a = 0; a < n; ++a) {
      g[a] = inv[static_cast<std::size_t>(leaf[a])];
    }
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

inline CanonicalForm canonical_form(FiniteIRL const& A) {
  return {detail::canonical_bytes(detail::view_of(A))};
}

// The algebra relabelled into its canonical order; labels travel along.
inline FiniteIRL canonical_algebra(FiniteIRL const& A) {
  detail::Canonizer c(detail::view_of(A));
  c.run();
  std::size_t const n = A.size();
  std::vector<Element> at(n);
  for (std::size_t a = 0; a < n; ++a) {
    at[static_cast<std::size_t>(c.best_pos[a])] = static_cast<Element>(a);
  }
  // layout: n, e, neg, meet, join, fusion
  std::vector<std::uint8_t> const& b = c.best;
  std::size_t off = 2 + n;
  auto table = [&]() {
    std::vector<Element> cells(b.begin() + static_cast<std::ptrdiff_t>(off),
                               b.begin() + static_cast<std::ptrdiff_t>(off + n * n));
    off += n * n;
    return BinOpTable(n, std::move(cells));
  };
  BinOpTable meet = table();
  BinOpTable join = table();
  BinOpTable fusion = table();
  std::vector<Element> neg(b.begin() + 2, b.begin() + 2 + static_cast<std::ptrdiff_t>(n));
  std::vector<std::string> labels;
  if (!A.labels().empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(A.label(at[i]));
    }
  }
  return FiniteIRL(A.name(), std::move(meet), std::move(join), std::move(fusion), std::move(neg),
                   b[1], std::move(labels));
}

inline bool is_isomorphic(FiniteIRL const& A, FiniteIRL const& B) {
  return A.size() == B.size() && canonical_form(A) == canonical_form(B);
}

// Is X isomorphic to a subalgebra of a homomorphic image of A?
inline bool hs_contains(FiniteIRL const& A, FiniteIRL const& X) {
  if (X.size() == 1) {
    return true;
  }
  CanonicalForm const target = canonical_form(X);
  for (auto const& G : deductive_filters(A)) {
    FiniteIRL const Q = quotient(A, G).algebra;
    if (Q.size() < X.size()) {
      continue;
    }
    for (ElementSet S : all_subuniverses(Q)) {
      if (S.size() == X.size() && canonical_form(restrict_to(Q, S).algebra) == target) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace dmm
