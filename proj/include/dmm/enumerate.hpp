#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "dmm/algebra.hpp"
#include "dmm/constructions.hpp"
#include "dmm/errors.hpp"
#include "dmm/filters.hpp"
#include "dmm/predicates.hpp"

namespace dmm {

inline constexpr char const* kToolVersion = "0.1.0";

struct SearchSpec {
  std::size_t size = 1;
  bool square_increasing = false;
  bool distributive = false;
  std::vector<std::string> predicate_filters;
  std::optional<std::size_t> limit;
  bool cumulative = false;  // sizes 1..size instead of exactly size
  std::size_t max_size = 8;
  bool unsafe_size = false;
  unsigned jobs = 1;

  static SearchSpec dmm(std::size_t n) {
    SearchSpec s;
    s.size = n;
    s.square_increasing = true;
    s.distributive = true;
    return s;
  }
  static SearchSpec irl(std::size_t n) {
    SearchSpec s;
    s.size = n;
    return s;
  }

  bool is_dmm() const { return square_increasing && distributive; }

  std::string class_name() const {
    if (is_dmm()) return "dmm";
    if (square_increasing) return "square-increasing";
    if (distributive) return "distributive";
    return "irl";
  }
};

inline SearchSpec spec_for_class(std::string const& cls, std::size_t n) {
  SearchSpec s;
  s.size = n;
  if (cls == "dmm") {
    s.square_increasing = s.distributive = true;
  } else if (cls == "square-increasing") {
    s.square_increasing = true;
  } else if (cls == "distributive") {
    s.distributive = true;
  } else if (cls != "irl") {
    throw UnknownName("unknown algebra class '" + cls + "'");
  }
  return s;
}

struct EnumerationStats {
  std::uint64_t lattices = 0;
  std::uint64_t involutions = 0;
  std::uint64_t neutral_choices = 0;
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
  std::uint64_t leaves = 0;
};

struct Catalog {
  SearchSpec spec;
  std::vector<FiniteIRL> algebras;
  bool complete = false;
  EnumerationStats stats;
};

struct Progress {
  std::size_t size = 0;
  std::size_t units_done = 0;
  std::size_t units_total = 0;
  std::size_t found = 0;
  std::uint64_t pruned = 0;
};

// Optional callbacks: progress reporting and per-unit checkpointing. Units
// already listed in skip_units are not searched again; their algebras come
// from resumed.
struct EnumerationHooks {
  std::function<void(Progress const&)> progress;
  std::function<void(std::size_t size, std::size_t unit, std::vector<FiniteIRL> const&)> unit_done;
  std::map<std::size_t, std::set<std::size_t>> skip_units;
  std::vector<FiniteIRL> resumed;
};

// ---------------------------------------------------------------------------
// Predicates usable as catalog filters

inline std::vector<std::string> const& predicate_names() {
  static std::vector<std::string> const kNames = {
      "nontrivial", "fsi",     "si",         "simple",     "zero-generated", "idempotent",
      "non-idempotent", "odd", "anti-idempotent", "integral", "rigorously-compact", "semilinear",
      "chain"};
  return kNames;
}

inline bool has_predicate(FiniteIRL const& A, std::string const& name) {
  if (name == "nontrivial") return A.size() > 1;
  if (name == "fsi") return classify(A).fsi;
  if (name == "si") return classify(A).si;
  if (name == "simple") return classify(A).simple;
  if (name == "zero-generated") return subuniverse(A, {}).size() == A.size();
  if (name == "idempotent") return is_idempotent(A);
  if (name == "non-idempotent") return !is_idempotent(A);
  if (name == "odd") return A.e() == A.f();
  if (name == "anti-idempotent") return A.square(A.f()) == A.top();
  if (name == "integral") return A.e() == A.top();
  if (name == "rigorously-compact") return is_rigorously_compact(A);
  if (name == "semilinear") return is_semilinear(A);
  if (name == "chain") return is_chain(A);
  throw UnknownName("unknown predicate '" + name + "'");
}

namespace detail {

struct Lattice {
  std::size_t n = 0;
  std::vector<Element> meet;  // n*n, natural labelling: a <= b implies a <= b as indices
  std::vector<Element> join;
  bool leq(Element a, Element b) const { return meet[a * n + b] == a; }
};

// Lattices of size n up to isomorphism, naturally labelled with 0 the
// bottom and n-1 the top. Posets are grown one element at a time by choosing
// its strict down-set among the earlier elements.
inline std::vector<Lattice> lattices_of_size(std::size_t n, bool distributive_only) {
  std::vector<Lattice> out;
  if (n == 1) {
    out.push_back({1, {0}, {0}});
    return out;
  }
  std::vector<std::uint64_t> below(n, 0);  // strict down-sets
  std::set<std::vector<std::uint8_t>> seen;

  auto finish = [&] {
    below[n - 1] = (std::uint64_t{1} << (n - 1)) - 1;
    auto le = [&](std::size_t a, std::size_t b) { return a == b || ((below[b] >> a) & 1U); };
    Lattice L{n, std::vector<Element>(n * n), std::vector<Element>(n * n)};
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        // greatest common lower bound / least common upper bound
        std::optional<std::size_t> m;
        std::optional<std::size_t> j;
        for (std::size_t c = 0; c < n; ++c) {
          if (le(c, a) && le(c, b) && (!m || le(*m, c))) m = c;
          if (le(a, c) && le(b, c) && (!j || le(c, *j))) j = c;
        }
        for (std::size_t c = 0; c < n; ++c) {
          if (le(c, a) && le(c, b) && !le(c, *m)) return;
          if (le(a, c) && le(b, c) && !le(*j, c)) return;
        }
        L.meet[a * n + b] = static_cast<Element>(*m);
        L.join[a * n + b] = static_cast<Element>(*j);
      }
    }
    if (distributive_only) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            if (L.meet[a * n + L.join[b * n + c]] != L.join[L.meet[a * n + b] * n + L.meet[a * n + c]]) return;
    }
    TableView const T{n, {L.meet, L.join}, {}, {}};
    if (seen.insert(canonical_bytes(T)).second) {
      out.push_back(std::move(L));
    }
  };

  std::function<void(std::size_t)> grow = [&](std::size_t k) {
    if (k == n - 1) {
      finish();
      return;
    }
    // strict down-set of k: contains 0, down-closed, drawn from 1..k-1
    std::uint64_t const choices = k <= 1 ? 0 : (std::uint64_t{1} << (k - 1)) - 1;
    for (std::uint64_t s = 0;; s = (s - choices) & choices) {
      std::uint64_t const D = (s << 1) | 1U;
      bool closed = true;
      for (std::size_t j = 1; j < k && closed; ++j) {
        if (((D >> j) & 1U) && (below[j] & ~D) != 0) closed = false;
      }
      if (closed) {
        below[k] = D;
        grow(k + 1);
      }
      if (s == choices) break;
    }
  };
  below[0] = 0;
  grow(1);
  return out;
}

// Order-reversing involutions of L, up to automorphisms of L.
inline std::vector<std::vector<Element>> involutions(Lattice const& L) {
  std::size_t const n = L.n;
  std::vector<int> neg(n, -1);
  std::vector<std::vector<Element>> out;
  std::set<std::vector<std::uint8_t>> seen;

  auto consistent = [&](std::size_t a) {
    for (std::size_t x = 0; x < n; ++x) {
      if (neg[x] < 0) continue;
      auto na = static_cast<Element>(neg[a]);
      auto nx = static_cast<Element>(neg[x]);
      if (L.leq(static_cast<Element>(x), static_cast<Element>(a)) != L.leq(na, nx)) return false;
      if (L.leq(static_cast<Element>(a), static_cast<Element>(x)) != L.leq(nx, na)) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> go = [&](std::size_t a) {
    while (a < n && neg[a] >= 0) ++a;
    if (a == n) {
      std::vector<Element> v(neg.begin(), neg.end());
      TableView const T{n, {L.meet, L.join}, {v}, {}};
      if (seen.insert(canonical_bytes(T)).second) out.push_back(std::move(v));
      return;
    }
    for (std::size_t y = a; y < n; ++y) {
      if (neg[y] >= 0) continue;
      neg[a] = static_cast<int>(y);
      neg[y] = static_cast<int>(a);
      if (consistent(a) && consistent(y)) go(a + 1);
      neg[a] = -1;
      neg[y] = -1;
    }
  };
  go(0);
  return out;
}

// Fusion tables on a fixed lattice, involution and neutral element.
class FusionSearch {
 public:
  FusionSearch(Lattice const& L, std::vector<Element> const& neg, Element e, SearchSpec const& spec)
      : L_(L), neg_(neg), e_(e), spec_(spec), n_(L.n), F_(n_ * n_, kUnset) {
    // fixed decomposition of each join-reducible element as a join of two
    // strictly smaller ones
    split_.assign(n_, {0, 0});
    reducible_.assign(n_, false);
    for (std::size_t x = 1; x < n_; ++x) {
      for (std::size_t p = 0; p < x && !reducible_[x]; ++p) {
        for (std::size_t q = p + 1; q < x && !reducible_[x]; ++q) {
          if (L_.join[p * n_ + q] == x) {
            reducible_[x] = true;
            split_[x] = {static_cast<Element>(p), static_cast<Element>(q)};
          }
        }
      }
    }
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t i = 0; i <= j; ++i) {
        cells_.push_back({static_cast<Element>(i), static_cast<Element>(j)});
      }
    }
  }

  std::vector<FiniteIRL> run(EnumerationStats& stats) {
    stats_ = &stats;
    std::vector<std::size_t> trail;
    bool ok = true;
    for (std::size_t x = 0; x < n_ && ok; ++x) {
      ok = set(e_, static_cast<Element>(x), static_cast<Element>(x), trail);
    }
    Element const top = static_cast<Element>(n_ - 1);
    for (std::size_t x = 0; x < n_ && ok; ++x) {
      ok = set(0, static_cast<Element>(x), 0, trail);
    }
    if (ok) ok = set(top, top, top, trail);
    if (ok) search(0);
    return std::move(found_);
  }

 private:
  static constexpr int kUnset = -1;

  int at(std::size_t a, std::size_t b) const { return F_[a * n_ + b]; }
  bool leq(std::size_t a, std::size_t b) const { return L_.meet[a * n_ + b] == a; }

  bool set(Element i, Element j, Element v, std::vector<std::size_t>& trail) {
    int const cur = at(i, j);
    if (cur != kUnset) return cur == v;
    F_[i * n_ + j] = v;
    F_[j * n_ + i] = v;
    trail.push_back(i * n_ + j);
    return check(i, j);
  }

  void undo(std::vector<std::size_t> const& trail) {
    for (std::size_t c : trail) {
      F_[c] = kUnset;
      F_[(c % n_) * n_ + c / n_] = kUnset;
    }
  }

  bool row_complete(std::size_t a) const {
    for (std::size_t b = 0; b < n_; ++b)
      if (at(a, b) == kUnset) return false;
    return true;
  }

  // max{c : a.c <= b} must exist once row a is known
  bool residuals_exist(std::size_t a) const {
    for (std::size_t b = 0; b < n_; ++b) {
      std::uint64_t below = 0;
      for (std::size_t c = 0; c < n_; ++c)
        if (leq(static_cast<std::size_t>(at(a, c)), b)) below |= std::uint64_t{1} << c;
      bool has_max = false;
      for (std::size_t c = 0; c < n_ && !has_max; ++c) {
        if (!((below >> c) & 1U)) continue;
        bool is_max = true;
        for (std::size_t d = 0; d < n_ && is_max; ++d)
          if (((below >> d) & 1U) && !leq(d, c)) is_max = false;
        has_max = is_max;
      }
      if (!has_max) return false;
    }
    return true;
  }

  bool check(Element i, Element j) const {
    auto const v = static_cast<std::size_t>(at(i, j));
    if (spec_.square_increasing) {
      if (i == j && !leq(i, v)) return false;
      if (!leq(L_.meet[i * n_ + j], v)) return false;
    }
    // isotone in both arguments
    for (std::size_t k = 0; k < n_; ++k) {
      for (std::size_t l = 0; l < n_; ++l) {
        int const w = at(k, l);
        if (w == kUnset) continue;
        auto const wu = static_cast<std::size_t>(w);
        if (leq(k, i) && leq(l, j) && !leq(wu, v)) return false;
        if (leq(i, k) && leq(j, l) && !leq(v, wu)) return false;
      }
    }
    // x.y <= ~w  iff  w.y <= ~x
    for (auto [x, y] : {std::pair<std::size_t, std::size_t>{i, j}, {j, i}}) {
      for (std::size_t w = 0; w < n_; ++w) {
        int const u = at(w, y);
        if (u == kUnset) continue;
        if (leq(v, neg_[w]) != leq(static_cast<std::size_t>(u), neg_[x])) return false;
      }
    }
    // associativity wherever all four cells are known
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        int const ab = at(a, b);
        if (ab == kUnset) continue;
        for (std::size_t c = 0; c < n_; ++c) {
          int const bc = at(b, c);
          if (bc == kUnset) continue;
          int const l = at(static_cast<std::size_t>(ab), c);
          int const r = at(a, static_cast<std::size_t>(bc));
          if (l != kUnset && r != kUnset && l != r) return false;
        }
      }
    }
    if (row_complete(i) && !residuals_exist(i)) return false;
    if (j != i && row_complete(j) && !residuals_exist(j)) return false;
    return true;
  }

  void search(std::size_t idx) {
    ++stats_->nodes;
    while (idx < cells_.size() && at(cells_[idx].first, cells_[idx].second) != kUnset) ++idx;
    if (idx == cells_.size()) {
      leaf();
      return;
    }
    auto [i, j] = cells_[idx];
    std::optional<Element> forced;
    // fusion preserves joins: split a join-reducible argument
    if (reducible_[j]) {
      auto [p, q] = split_[j];
      forced = L_.join[static_cast<std::size_t>(at(i, p)) * n_ + static_cast<std::size_t>(at(i, q))];
    } else if (reducible_[i]) {
      auto [p, q] = split_[i];
      forced = L_.join[static_cast<std::size_t>(at(p, j)) * n_ + static_cast<std::size_t>(at(q, j))];
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (forced && v != *forced) continue;
      std::vector<std::size_t> trail;
      if (set(i, j, static_cast<Element>(v), trail)) {
        search(idx + 1);
      } else {
        ++stats_->pruned;
      }
      undo(trail);
    }
  }

  void leaf() {
    ++stats_->leaves;
    std::vector<Element> cells(F_.begin(), F_.end());
    FiniteIRL A("candidate", BinOpTable(n_, L_.meet), BinOpTable(n_, L_.join), BinOpTable(n_, std::move(cells)),
                neg_, e_);
    ValidateOptions const fast{.max_witnesses_per_axiom = 1, .fail_fast = true};
    if (!validate_irl(A, fast).pass()) return;
    if (spec_.square_increasing && !is_square_increasing(A)) return;
    found_.push_back(std::move(A));
  }

  Lattice const& L_;
  std::vector<Element> const& neg_;
  Element e_;
  SearchSpec const& spec_;
  std::size_t n_;
  std::vector<int> F_;
  std::vector<std::pair<Element, Element>> cells_;
  std::vector<std::pair<Element, Element>> split_;
  std::vector<bool> reducible_;
  std::vector<FiniteIRL> found_;
  EnumerationStats* stats_ = nullptr;
};

struct Unit {
  Lattice const* lattice;
  std::vector<Element> neg;
};

inline std::vector<FiniteIRL> search_unit(Unit const& u, SearchSpec const& spec, EnumerationStats& stats) {
  Lattice const& L = *u.lattice;
  std::size_t const n = L.n;
  std::vector<FiniteIRL> out;
  std::set<std::vector<std::uint8_t>> seen;
  for (std::size_t e = 0; e < n; ++e) {
    if (n > 1 && e == 0) continue;  // e . bottom = bottom forces a trivial algebra
    if (spec.square_increasing) {
      // e <= x \/ ~x holds in every square-increasing IRL
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        ok = L.leq(static_cast<Element>(e), L.join[x * n + u.neg[x]]);
      }
      if (!ok) continue;
    }
    TableView const T{n, {L.meet, L.join}, {u.neg}, {static_cast<Element>(e)}};
    if (!seen.insert(canonical_bytes(T)).second) continue;
    ++stats.neutral_choices;
    FusionSearch fs(L, u.neg, static_cast<Element>(e), spec);
    for (auto& A : fs.run(stats)) out.push_back(std::move(A));
  }
  return out;
}

inline std::string catalog_name(FiniteIRL const& A, CanonicalForm const& form, std::string const& cls,
                                std::size_t index) {
  std::size_t const n = A.size();
  std::vector<std::string> candidates;
  if (n == 1) candidates.push_back("trivial");
  if (n == 2) candidates.push_back("2");
  if (n == 4) candidates.insert(candidates.end(), {"C4", "D4"});
  if (n >= 3) candidates.push_back("S" + std::to_string(n));
  if (n >= 6 && n % 2 == 0) candidates.push_back("C4ext_" + std::to_string((n - 4) / 2));
  for (auto const& c : candidates) {
    if (canonical_form(make_named(c)) == form) return c;
  }
  return cls + std::to_string(n) + "-" + std::to_string(index);
}

}  // namespace detail

// All algebras of the requested class and size (or sizes 1..size when
// cumulative) up to isomorphism, in canonical labelling, sorted by size and
// canonical encoding.
inline Catalog enumerate(SearchSpec const& spec, EnumerationHooks const& hooks = {}) {
  if (spec.size == 0) {
    throw SizeTooLarge("size must be at least 1");
  }
  if (spec.size > spec.max_size && !spec.unsafe_size) {
    throw SizeTooLarge("size " + std::to_string(spec.size) + " exceeds the limit of " +
                       std::to_string(spec.max_size) + " (use --unsafe-size)");
  }
  if (spec.size > 16) {
    throw SizeTooLarge("size above 16 is not supported");
  }
  for (auto const& p : spec.predicate_filters) {
    if (std::find(predicate_names().begin(), predicate_names().end(), p) == predicate_names().end()) {
      throw UnknownName("unknown predicate '" + p + "'");
    }
  }
  Catalog cat;
  cat.spec = spec;
  std::vector<std::pair<CanonicalForm, FiniteIRL>> all;
  std::set<CanonicalForm> seen;
  auto add = [&](FiniteIRL const& A) {
    FiniteIRL C = canonical_algebra(A);
    CanonicalForm form = canonical_form(C);
    if (seen.insert(form).second) all.emplace_back(std::move(form), std::move(C));
  };
  for (auto const& A : hooks.resumed) add(A);

  std::size_t const first = spec.cumulative ? 1 : spec.size;
  for (std::size_t n = first; n <= spec.size; ++n) {
    std::vector<detail::Lattice> const lats = detail::lattices_of_size(n, spec.distributive);
    cat.stats.lattices += lats.size();
    std::vector<detail::Unit> units;
    for (auto const& L : lats) {
      for (auto& neg : detail::involutions(L)) units.push_back({&L, std::move(neg)});
    }
    cat.stats.involutions += units.size();
    auto const skip_it = hooks.skip_units.find(n);
    std::vector<std::vector<FiniteIRL>> results(units.size());
    std::vector<EnumerationStats> unit_stats(units.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::atomic<std::size_t> found{0};
    std::mutex report;
    auto worker = [&] {
      while (true) {
        std::size_t const u = next.fetch_add(1);
        if (u >= units.size()) return;
        if (skip_it != hooks.skip_units.end() && skip_it->second.count(u)) {
          ++done;
          continue;
        }
        results[u] = detail::search_unit(units[u], spec, unit_stats[u]);
        found += results[u].size();
        std::lock_guard<std::mutex> lock(report);
        ++done;
        if (hooks.unit_done) hooks.unit_done(n, u, results[u]);
        if (hooks.progress) {
          std::uint64_t pruned = 0;
          for (auto const& s : unit_stats) pruned += s.pruned;
          hooks.progress({n, done.load(), units.size(), found.load(), pruned});
        }
      }
    };
    unsigned const jobs = std::max(1U, spec.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    for (std::size_t u = 0; u < units.size(); ++u) {
      for (auto const& A : results[u]) add(A);
      cat.stats.neutral_choices += unit_stats[u].neutral_choices;
      cat.stats.nodes += unit_stats[u].nodes;
      cat.stats.pruned += unit_stats[u].pruned;
      cat.stats.leaves += unit_stats[u].leaves;
    }
  }

  std::sort(all.begin(), all.end(), [](auto const& x, auto const& y) {
    if (x.second.size() != y.second.size()) return x.second.size() < y.second.size();
    return x.first < y.first;
  });
  cat.complete = true;
  std::map<std::size_t, std::size_t> per_size;
  for (auto& [form, A] : all) {
    bool keep = true;
    for (auto const& p : spec.predicate_filters) keep = keep && has_predicate(A, p);
    if (!keep) continue;
    if (spec.limit && cat.algebras.size() >= *spec.limit) {
      cat.complete = false;
      break;
    }
    std::size_t const index = ++per_size[A.size()];
    cat.algebras.push_back(A.renamed(detail::catalog_name(A, form, spec.class_name(), index)));
  }
  return cat;
}

// ---------------------------------------------------------------------------
// Slow recount: no pruning, no symmetry breaking. Every partial order, every
// involution, every neutral element and every commutative fusion table with
// the neutral row fixed is tried and validated; isomorphs are removed by
// trying all permutations.

namespace detail {

inline bool isomorphic_by_permutations(FiniteIRL const& A, FiniteIRL const& B) {
  std::size_t const n = A.size();
  if (n != B.size()) return false;
  std::vector<Element> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Element>(i);
  do {
    if (is_homomorphism(A, B, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace detail

struct RecountResult {
  std::size_t count = 0;
  std::vector<FiniteIRL> algebras;
};

inline RecountResult slow_recount(std::size_t n, SearchSpec const& flags) {
  if (n == 0 || n > 4) {
    throw SizeTooLarge("slow recount is limited to sizes 1..4");
  }
  RecountResult result;
  std::size_t const pairs = n * n;
  // every reflexive relation, kept when it is a lattice order
  for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << pairs); ++rel) {
    auto le = [&](std::size_t a, std::size_t b) { return ((rel >> (a * n + b)) & 1U) != 0; };
    bool order = true;
    for (std::size_t a = 0; a < n && order; ++a) {
      order = le(a, a);
      for (std::size_t b = 0; b < n && order; ++b) {
        if (a != b && le(a, b) && le(b, a)) order = false;
        for (std::size_t c = 0; c < n && order; ++c)
          if (le(a, b) && le(b, c) && !le(a, c)) order = false;
      }
    }
    if (!order) continue;
    std::vector<Element> meet(pairs);
    std::vector<Element> join(pairs);
    bool lattice = true;
    for (std::size_t a = 0; a < n && lattice; ++a) {
      for (std::size_t b = 0; b < n && lattice; ++b) {
        std::optional<std::size_t> m;
        std::optional<std::size_t> j;
        for (std::size_t c = 0; c < n; ++c) {
          bool lower_all = true;
          bool upper_all = true;
          if (!(le(c, a) && le(c, b))) lower_all = false;
          if (!(le(a, c) && le(b, c))) upper_all = false;
          if (lower_all) {
            bool greatest = true;
            for (std::size_t d = 0; d < n; ++d)
              if (le(d, a) && le(d, b) && !le(d, c)) greatest = false;
            if (greatest) m = c;
          }
          if (upper_all) {
            bool least = true;
            for (std::size_t d = 0; d < n; ++d)
              if (le(a, d) && le(b, d) && !le(c, d)) least = false;
            if (least) j = c;
          }
        }
        if (!m || !j) {
          lattice = false;
        } else {
          meet[a * n + b] = static_cast<Element>(*m);
          join[a * n + b] = static_cast<Element>(*j);
        }
      }
    }
    if (!lattice) continue;
    // every permutation, kept when it is an involution
    std::vector<Element> neg(n);
    for (std::size_t i = 0; i < n; ++i) neg[i] = static_cast<Element>(i);
    do {
      bool invol = true;
      for (std::size_t a = 0; a < n; ++a) invol = invol && neg[neg[a]] == a;
      if (!invol) continue;
      for (std::size_t e = 0; e < n; ++e) {
        // free cells: unordered pairs {a, b} with a, b != e
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = a; b < n; ++b)
            if (a != e && b != e) free.emplace_back(a, b);
        std::vector<Element> fusion(pairs);
        for (std::size_t x = 0; x < n; ++x) fusion[e * n + x] = fusion[x * n + e] = static_cast<Element>(x);
        std::uint64_t total = 1;
        for (std::size_t k = 0; k < free.size(); ++k) total *= n;
        for (std::uint64_t code = 0; code < total; ++code) {
          std::uint64_t c = code;
          for (auto [a, b] : free) {
            auto v = static_cast<Element>(c % n);
            c /= n;
            fusion[a * n + b] = fusion[b * n + a] = v;
          }
          FiniteIRL A("recount", BinOpTable(n, meet), BinOpTable(n, join), BinOpTable(n, fusion), neg,
                      static_cast<Element>(e));
          ValidateOptions const fast{.max_witnesses_per_axiom = 1, .fail_fast = true};
          if (!validate_irl(A, fast).pass()) continue;
          if (flags.square_increasing && !is_square_increasing(A)) continue;
          if (flags.distributive && !is_distributive(A)) continue;
          bool fresh = true;
          for (auto const& B : result.algebras) {
            if (detail::isomorphic_by_permutations(A, B)) {
              fresh = false;
              break;
            }
          }
          if (fresh) result.algebras.push_back(A);
        }
      }
    } while (std::next_permutation(neg.begin(), neg.end()));
  }
  result.count = result.algebras.size();
  return result;
}

}  // namespace dmm
