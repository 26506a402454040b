#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "dmm/algebra.hpp"

namespace dmm {

struct LawResult {
  std::string law;
  bool applicable = true;
  bool holds = true;
  std::vector<Element> counterexample;
};

struct LawReport {
  std::vector<LawResult> results;

  bool all_hold() const {
    return std::all_of(results.begin(), results.end(),
                       [](LawResult const& r) { return !r.applicable || r.holds; });
  }
  LawResult const* find(std::string const& law) const {
    auto it = std::find_if(results.begin(), results.end(),
                           [&](LawResult const& r) { return r.law == law; });
    return it == results.end() ? nullptr : &*it;
  }
};

namespace detail {

class LawChecker {
 public:
  explicit LawChecker(FiniteIRL const& A) : A_(A), n_(A.size()) {}

  void unary(std::string const& law, bool applicable, std::function<bool(Element)> const& ok) {
    LawResult r{law, applicable, true, {}};
    for (std::size_t a = 0; applicable && a < n_ && r.holds; ++a) {
      if (!ok(static_cast<Element>(a))) {
        r.holds = false;
        r.counterexample = {static_cast<Element>(a)};
      }
    }
    report.results.push_back(std::move(r));
  }

  void binary(std::string const& law, bool applicable,
              std::function<bool(Element, Element)> const& ok) {
    LawResult r{law, applicable, true, {}};
    for (std::size_t a = 0; applicable && a < n_ && r.holds; ++a) {
      for (std::size_t b = 0; b < n_ && r.holds; ++b) {
        if (!ok(static_cast<Element>(a), static_cast<Element>(b))) {
          r.holds = false;
          r.counterexample = {static_cast<Element>(a), static_cast<Element>(b)};
        }
      }
    }
    report.results.push_back(std::move(r));
  }

  void ternary(std::string const& law, bool applicable,
               std::function<bool(Element, Element, Element)> const& ok) {
    LawResult r{law, applicable, true, {}};
    for (std::size_t a = 0; applicable && a < n_ && r.holds; ++a) {
      for (std::size_t b = 0; b < n_ && r.holds; ++b) {
        for (std::size_t c = 0; c < n_ && r.holds; ++c) {
          if (!ok(static_cast<Element>(a), static_cast<Element>(b), static_cast<Element>(c))) {
            r.holds = false;
            r.counterexample = {static_cast<Element>(a), static_cast<Element>(b),
                                static_cast<Element>(c)};
          }
        }
      }
    }
    report.results.push_back(std::move(r));
  }

  void nullary(std::string const& law, bool applicable, bool holds) {
    report.results.push_back({law, applicable, !applicable || holds, {}});
  }

  LawReport report;

 private:
  FiniteIRL const& A_;
  std::size_t n_;
};

}  // namespace detail

// Evaluates the laws valid in every IRL (and, for square-increasing input,
// the laws valid in every square-increasing IRL) by direct table loops. Any
// failure on a validated algebra points at a bug elsewhere. Kept independent
// of the term evaluator so the two can check each other.
inline LawReport check_derived_laws(FiniteIRL const& A) {
  detail::LawChecker chk(A);
  bool const si = is_square_increasing(A);
  Element const e = A.e();
  Element const f = A.f();
  auto imp = [&](Element a, Element b) { return A.residual(a, b); };
  auto dot = [&](Element a, Element b) { return A.fuse(a, b); };
  auto le = [&](Element a, Element b) { return A.leq(a, b); };

  chk.ternary("law-2", true, [&](Element x, Element y, Element z) {
    return le(dot(x, y), z) == le(y, imp(x, z));
  });
  chk.binary("law-3", true, [&](Element x, Element y) {
    return A.neg(x) == imp(x, f) && imp(x, y) == imp(A.neg(y), A.neg(x)) &&
           dot(x, y) == A.neg(imp(x, A.neg(y)));
  });
  chk.binary("law-4", true, [&](Element x, Element y) {
    return le(dot(x, imp(x, y)), y) && le(x, imp(imp(x, y), y));
  });
  chk.ternary("law-5", true, [&](Element x, Element y, Element z) {
    Element const v = imp(dot(x, y), z);
    return v == imp(y, imp(x, z)) && v == imp(x, imp(y, z));
  });
  chk.ternary("law-6", true, [&](Element x, Element y, Element z) {
    return le(dot(imp(x, y), imp(y, z)), imp(x, z));
  });
  chk.ternary("law-7", true, [&](Element x, Element y, Element z) {
    return dot(x, A.join(y, z)) == A.join(dot(x, y), dot(x, z));
  });
  chk.ternary("law-8", true, [&](Element x, Element y, Element z) {
    return !le(x, y) ||
           (le(dot(x, z), dot(y, z)) && le(imp(z, x), imp(z, y)) && le(imp(y, z), imp(x, z)));
  });
  chk.binary("law-9", true, [&](Element x, Element y) { return le(x, y) == le(e, imp(x, y)); });
  chk.binary("law-10", true,
             [&](Element x, Element y) { return (x == y) == le(e, biresidual(A, x, y)); });
  chk.unary("law-11", true, [&](Element x) { return le(e, imp(x, x)) && imp(e, x) == x; });
  chk.unary("law-12", true, [&](Element x) { return le(e, x) == le(imp(x, x), x); });
  chk.binary("law-13", si, [&](Element x, Element y) { return le(A.meet(x, y), dot(x, y)); });
  chk.binary("law-14", si, [&](Element x, Element y) {
    return !(le(x, e) && le(y, e)) || dot(x, y) == A.meet(x, y);
  });
  chk.unary("law-15", si, [&](Element x) { return le(e, A.join(x, A.neg(x))); });
  chk.unary("law-16", true, [&](Element x) {
    return !le(f, x) || le(imp(x, A.neg(x)), imp(dot(x, x), x));
  });
  chk.unary("cube", si, [&](Element a) {
    return !le(f, a) || dot(dot(a, a), a) == dot(a, a);
  });
  chk.binary("de-morgan", true, [&](Element a, Element b) {
    return A.neg(A.meet(a, b)) == A.join(A.neg(a), A.neg(b)) &&
           A.neg(A.join(a, b)) == A.meet(A.neg(a), A.neg(b));
  });
  chk.binary("residual-max", true, [&](Element a, Element b) {
    auto m = residual_by_search(A, a, b);
    return m && *m == imp(a, b);
  });

  Element const bot = A.bottom();
  Element const top = A.top();
  {
    bool ok = imp(bot, bot) == top;
    for (std::size_t i = 0; i < A.size() && ok; ++i) {
      auto a = static_cast<Element>(i);
      ok = le(a, top) && le(bot, a) && dot(a, bot) == bot && imp(top, bot) == bot &&
           imp(bot, a) == top && imp(a, top) == top && dot(top, top) == top;
    }
    chk.nullary("bounds", true, ok);
  }
  chk.unary("three-conditions", true, [&](Element a) {
    bool const c1 = le(e, a) && dot(a, a) == a;
    bool const c2 = dot(a, A.neg(a)) == A.neg(a);
    bool const c3 = a == imp(a, a);
    return c1 == c2 && c2 == c3;
  });
  {
    bool const f_idem = dot(f, f) == f;
    bool const f_le_e = le(f, e);
    bool all_idem = true;
    for (std::size_t i = 0; i < A.size(); ++i) {
      auto a = static_cast<Element>(i);
      all_idem = all_idem && dot(a, a) == a;
    }
    chk.nullary("idempotence-f-e", si, f_idem == f_le_e && f_le_e == all_idem);
  }
  return chk.report;
}

}  // namespace dmm
