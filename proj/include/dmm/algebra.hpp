#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dmm/element_set.hpp"
#include "dmm/errors.hpp"

namespace dmm {

// Square n x n table of a binary operation, row-major, row = left argument.
class BinOpTable {
 public:
  BinOpTable() = default;

  BinOpTable(std::size_t n, std::vector<Element> cells) : n_(n), cells_(std::move(cells)) {
    if (cells_.size() != n_ * n_) {
      throw MalformedTable("table has " + std::to_string(cells_.size()) + " cells, expected " +
                           std::to_string(n_ * n_));
    }
    for (Element c : cells_) {
      if (c >= n_) {
        throw MalformedTable("table entry " + std::to_string(c) + " out of range for size " +
                             std::to_string(n_));
      }
    }
  }

  template <typename F>
  static BinOpTable generate(std::size_t n, F&& op) {
    std::vector<Element> cells(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        cells[a * n + b] = static_cast<Element>(op(static_cast<Element>(a), static_cast<Element>(b)));
      }
    }
    return BinOpTable(n, std::move(cells));
  }

  static BinOpTable from_rows(std::vector<std::vector<int>> const& rows) {
    std::size_t const n = rows.size();
    std::vector<Element> cells;
    cells.reserve(n * n);
    for (auto const& row : rows) {
      if (row.size() != n) {
        throw MalformedTable("table is not square");
      }
      for (int v : row) {
        if (v < 0 || static_cast<std::size_t>(v) >= n) {
          throw MalformedTable("table entry " + std::to_string(v) + " out of range for size " +
                               std::to_string(n));
        }
        cells.push_back(static_cast<Element>(v));
      }
    }
    return BinOpTable(n, std::move(cells));
  }

  std::size_t size() const { return n_; }
  Element operator()(Element a, Element b) const { return cells_[a * n_ + b]; }
  std::span<Element const> cells() const { return cells_; }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        out[a][b] = cells_[a * n_ + b];
      }
    }
    return out;
  }

  bool operator==(BinOpTable const&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Element> cells_;
};

namespace detail {
struct ResidualCache {
  std::once_flag once;
  std::vector<Element> table;
};
}  // namespace detail

// A finite algebra in the signature of involutive residuated lattices:
// meet, join, fusion, negation and the neutral element e. Construction only
// checks that the tables are well-formed; the IRL axioms are decided by
// validate_irl. Values are immutable and safe to share between threads.
class FiniteIRL {
 public:
  FiniteIRL(std::string name, BinOpTable meet, BinOpTable join, BinOpTable fusion,
            std::vector<Element> neg, Element e, std::vector<std::string> labels = {})
      : name_(std::move(name)),
        meet_(std::move(meet)),
        join_(std::move(join)),
        fusion_(std::move(fusion)),
        neg_(std::move(neg)),
        e_(e),
        labels_(std::move(labels)),
        residual_(std::make_shared<detail::ResidualCache>()) {
    std::size_t const n = meet_.size();
    if (n == 0) {
      throw MalformedTable("carrier must be nonempty");
    }
    if (n > kMaxCarrier) {
      throw MalformedTable("carrier larger than " + std::to_string(kMaxCarrier));
    }
    if (join_.size() != n || fusion_.size() != n || neg_.size() != n) {
      throw MalformedTable("tables disagree on the carrier size");
    }
    for (Element v : neg_) {
      if (v >= n) {
        throw MalformedTable("negation entry " + std::to_string(v) + " out of range");
      }
    }
    if (e_ >= n) {
      throw MalformedTable("neutral element " + std::to_string(e_) + " out of range");
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
  Element e() const { return e_; }
  Element f() const { return neg_[e_]; }

  // a -> b := ~(a . ~b); memoized on first use.
  Element residual(Element a, Element b) const {
    std::call_once(residual_->once, [this] {
      std::size_t const n = size();
      residual_->table.resize(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          residual_->table[a * n + b] =
              neg(fuse(static_cast<Element>(a), neg(static_cast<Element>(b))));
        }
      }
    });
    return residual_->table[a * size() + b];
  }

  bool leq(Element a, Element b) const { return meet_(a, b) == a; }
  bool lt(Element a, Element b) const { return a != b && leq(a, b); }
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }

  Element square(Element a) const { return fuse(a, a); }

  // Least / greatest element; meaningful once the meet table is a lattice.
  Element bottom() const {
    Element b = 0;
    for (std::size_t a = 1; a < size(); ++a) {
      b = meet(b, static_cast<Element>(a));
    }
    return b;
  }
  Element top() const {
    Element t = 0;
    for (std::size_t a = 1; a < size(); ++a) {
      t = join(t, static_cast<Element>(a));
    }
    return t;
  }

  ElementSet up_set(Element a) const {
    ElementSet s;
    for (std::size_t b = 0; b < size(); ++b) {
      if (leq(a, static_cast<Element>(b))) {
        s.insert(static_cast<Element>(b));
      }
    }
    return s;
  }
  ElementSet down_set(Element a) const {
    ElementSet s;
    for (std::size_t b = 0; b < size(); ++b) {
      if (leq(static_cast<Element>(b), a)) {
        s.insert(static_cast<Element>(b));
      }
    }
    return s;
  }

  BinOpTable const& meet_table() const { return meet_; }
  BinOpTable const& join_table() const { return join_; }
  BinOpTable const& fusion_table() const { return fusion_; }
  std::vector<Element> const& neg_table() const { return neg_; }

  std::vector<std::string> const& labels() const { return labels_; }
  std::string label(Element a) const {
    return labels_.empty() ? std::to_string(a) : labels_[a];
  }

  FiniteIRL renamed(std::string name) const {
    FiniteIRL copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }
  FiniteIRL relabeled(std::vector<std::string> labels) const {
    return FiniteIRL(name_, meet_, join_, fusion_, neg_, e_, std::move(labels));
  }

  // Structural equality of the tables; names and labels are ignored.
  bool same_tables(FiniteIRL const& o) const {
    return meet_ == o.meet_ && join_ == o.join_ && fusion_ == o.fusion_ && neg_ == o.neg_ &&
           e_ == o.e_;
  }

 private:
  std::string name_;
  BinOpTable meet_;
  BinOpTable join_;
  BinOpTable fusion_;
  std::vector<Element> neg_;
  Element e_ = 0;
  std::vector<std::string> labels_;
  std::shared_ptr<detail::ResidualCache> residual_;
};

// Builds an algebra from a meet table alone, deriving join from the order.
inline BinOpTable join_from_meet(BinOpTable const& meet) {
  std::size_t const n = meet.size();
  return BinOpTable::generate(n, [&](Element a, Element b) {
    // least common upper bound
    std::optional<Element> best;
    for (std::size_t c = 0; c < n; ++c) {
      auto cc = static_cast<Element>(c);
      if (meet(a, cc) == a && meet(b, cc) == b) {
        if (!best || meet(cc, *best) == cc) {
          best = cc;
        }
      }
    }
    if (!best) {
      throw MalformedTable("meet table has no upper bound for a pair");
    }
    return *best;
  });
}

struct Violation {
  std::string axiom;
  std::vector<Element> witness;
  bool operator==(Violation const&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
  bool violates(std::string const& axiom) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](Violation const& v) { return v.axiom == axiom; });
  }
  bool has_witness(std::string const& axiom, std::vector<Element> const& w) const {
    return std::any_of(violations.begin(), violations.end(), [&](Violation const& v) {
      return v.axiom == axiom && v.witness == w;
    });
  }
};

struct ValidateOptions {
  std::size_t max_witnesses_per_axiom = 32;
  bool fail_fast = false;
};

namespace detail {

class ViolationSink {
 public:
  ViolationSink(ValidationReport& report, ValidateOptions const& opts)
      : report_(report), opts_(opts) {}

  // Returns false when the caller should stop checking this axiom.
  bool add(std::string const& axiom, std::vector<Element> witness) {
    if (count_for(axiom) >= opts_.max_witnesses_per_axiom) {
      return false;
    }
    report_.violations.push_back({axiom, std::move(witness)});
    return !opts_.fail_fast;
  }

  bool stopped() const { return opts_.fail_fast && !report_.violations.empty(); }

 private:
  std::size_t count_for(std::string const& axiom) const {
    return static_cast<std::size_t>(
        std::count_if(report_.violations.begin(), report_.violations.end(),
                      [&](Violation const& v) { return v.axiom == axiom; }));
  }

  ValidationReport& report_;
  ValidateOptions const& opts_;
};

template <typename Pred>
void check_unary(std::size_t n, ViolationSink& sink, std::string const& axiom, Pred&& ok) {
  for (std::size_t a = 0; a < n && !sink.stopped(); ++a) {
    if (!ok(static_cast<Element>(a)) && !sink.add(axiom, {static_cast<Element>(a)})) {
      return;
    }
  }
}

template <typename Pred>
void check_binary(std::size_t n, ViolationSink& sink, std::string const& axiom, Pred&& ok) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (sink.stopped()) {
        return;
      }
      auto x = static_cast<Element>(a);
      auto y = static_cast<Element>(b);
      if (!ok(x, y) && !sink.add(axiom, {x, y})) {
        return;
      }
    }
  }
}

template <typename Pred>
void check_ternary(std::size_t n, ViolationSink& sink, std::string const& axiom, Pred&& ok) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (sink.stopped()) {
          return;
        }
        auto x = static_cast<Element>(a);
        auto y = static_cast<Element>(b);
        auto z = static_cast<Element>(c);
        if (!ok(x, y, z) && !sink.add(axiom, {x, y, z})) {
          return;
        }
      }
    }
  }
}

}  // namespace detail

// Checks every defining condition of an involutive residuated lattice and
// collects up to 32 witnesses per violated axiom.
inline ValidationReport validate_irl(FiniteIRL const& A, ValidateOptions const& opts = {}) {
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
  check_binary(n, sink, "fusion-commutative",
               [&](Element a, Element b) { return A.fuse(a, b) == A.fuse(b, a); });
  check_ternary(n, sink, "fusion-associative", [&](Element a, Element b, Element c) {
    return A.fuse(A.fuse(a, b), c) == A.fuse(a, A.fuse(b, c));
  });
  check_unary(n, sink, "fusion-neutral",
              [&](Element a) { return A.fuse(A.e(), a) == a && A.fuse(a, A.e()) == a; });
  check_unary(n, sink, "double-negation", [&](Element a) { return A.neg(A.neg(a)) == a; });
  check_ternary(n, sink, "involution-fusion", [&](Element x, Element y, Element z) {
    return A.leq(A.fuse(x, y), z) == A.leq(A.fuse(A.neg(z), y), A.neg(x));
  });
  return report;
}

inline bool is_irl(FiniteIRL const& A) {
  return validate_irl(A, {.max_witnesses_per_axiom = 1, .fail_fast = true}).pass();
}

inline bool is_distributive(FiniteIRL const& A) {
  std::size_t const n = A.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        auto x = static_cast<Element>(a);
        auto y = static_cast<Element>(b);
        auto z = static_cast<Element>(c);
        if (A.meet(x, A.join(y, z)) != A.join(A.meet(x, y), A.meet(x, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool is_square_increasing(FiniteIRL const& A) {
  for (std::size_t a = 0; a < A.size(); ++a) {
    auto x = static_cast<Element>(a);
    if (!A.leq(x, A.square(x))) {
      return false;
    }
  }
  return true;
}

// De Morgan monoid = distributive square-increasing IRL. Throws NotAnIRL when
// the IRL axioms fail.
inline ValidationReport validate_dmm(FiniteIRL const& A, ValidateOptions const& opts = {}) {
  if (!validate_irl(A, {.max_witnesses_per_axiom = 1, .fail_fast = true}).pass()) {
    throw NotAnIRL("algebra '" + A.name() + "' is not an involutive residuated lattice");
  }
  ValidationReport report;
  detail::ViolationSink sink(report, opts);
  std::size_t const n = A.size();
  detail::check_unary(n, sink, "square-increasing",
                      [&](Element a) { return A.leq(a, A.square(a)); });
  detail::check_ternary(n, sink, "distributive", [&](Element a, Element b, Element c) {
    return A.meet(a, A.join(b, c)) == A.join(A.meet(a, b), A.meet(a, c));
  });
  return report;
}

inline bool is_dmm(FiniteIRL const& A) {
  return is_irl(A) && validate_dmm(A, {.max_witnesses_per_axiom = 1, .fail_fast = true}).pass();
}

inline Element residual(FiniteIRL const& A, Element a, Element b) { return A.residual(a, b); }

// max{c : a.c <= b}, or nothing when the set has no maximum.
inline std::optional<Element> residual_by_search(FiniteIRL const& A, Element a, Element b) {
  ElementSet below;
  for (std::size_t c = 0; c < A.size(); ++c) {
    if (A.leq(A.fuse(a, static_cast<Element>(c)), b)) {
      below.insert(static_cast<Element>(c));
    }
  }
  for (Element c : below) {
    bool is_max = true;
    for (Element d : below) {
      is_max = is_max && A.leq(d, c);
    }
    if (is_max) {
      return c;
    }
  }
  return std::nullopt;
}

// x <-> y := (x -> y) /\ (y -> x)
inline Element biresidual(FiniteIRL const& A, Element a, Element b) {
  return A.meet(A.residual(a, b), A.residual(b, a));
}

inline bool is_chain(FiniteIRL const& A) {
  for (std::size_t a = 0; a < A.size(); ++a) {
    for (std::size_t b = 0; b < A.size(); ++b) {
      if (!A.comparable(static_cast<Element>(a), static_cast<Element>(b))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace dmm
