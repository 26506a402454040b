#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "dmm/algebra.hpp"
#include "dmm/filters.hpp"
#include "dmm/predicates.hpp"
#include "dmm/structure.hpp"

namespace dmm {

namespace detail {

inline std::string set_text(FiniteIRL const& A, ElementSet S) {
  std::string s = "{";
  bool first = true;
  for (Element x : S) {
    s += (first ? "" : ", ") + A.label(x);
    first = false;
  }
  return s + "}";
}

}  // namespace detail

// Rows of the Hasse diagram, top first. Elements sit on the level given by
// the longest chain below them; each cover is drawn as one character midway
// between the two labels: | straight down, / and \ slanted.
inline std::string hasse(FiniteIRL const& A) {
  std::size_t const n = A.size();
  std::vector<std::size_t> level(n, 0);
  for (std::size_t round = 0; round < n; ++round) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (A.lt(static_cast<Element>(b), static_cast<Element>(a))) level[a] = std::max(level[a], level[b] + 1);
      }
    }
  }
  std::size_t const height = *std::max_element(level.begin(), level.end());
  std::vector<std::vector<Element>> rows(height + 1);
  for (std::size_t a = 0; a < n; ++a) rows[level[a]].push_back(static_cast<Element>(a));

  std::size_t cell = 1;
  for (std::size_t a = 0; a < n; ++a) cell = std::max(cell, A.label(static_cast<Element>(a)).size());
  cell += 3;
  std::size_t widest = 0;
  for (auto const& r : rows) widest = std::max(widest, r.size());
  std::size_t const width = widest * cell;

  std::vector<std::size_t> column(n, 0);
  for (auto const& r : rows) {
    std::size_t const offset = (width - r.size() * cell) / 2;
    for (std::size_t i = 0; i < r.size(); ++i) column[r[i]] = offset + i * cell + cell / 2;
  }
  auto covers = [&](Element lo, Element hi) {
    if (!A.lt(lo, hi)) return false;
    for (std::size_t c = 0; c < n; ++c) {
      auto z = static_cast<Element>(c);
      if (A.lt(lo, z) && A.lt(z, hi)) return false;
    }
    return true;
  };

  std::ostringstream out;
  for (std::size_t k = rows.size(); k-- > 0;) {
    std::string line(width + cell, ' ');
    for (Element x : rows[k]) {
      std::string const& l = A.label(x);
      std::size_t const start = column[x] >= l.size() / 2 ? column[x] - l.size() / 2 : 0;
      line.replace(start, l.size(), l);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
    if (k == 0) break;
    std::string edges(width + cell, ' ');
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto lo = static_cast<Element>(a);
        auto hi = static_cast<Element>(b);
        if (level[hi] != k || !covers(lo, hi)) continue;
        std::size_t const mid = (column[lo] + column[hi]) / 2;
        char const c = column[lo] == column[hi] ? '|' : (column[lo] < column[hi] ? '/' : '\\');
        edges[mid] = c;
      }
    }
    while (!edges.empty() && edges.back() == ' ') edges.pop_back();
    out << edges << "\n";
  }
  return out.str();
}

inline std::string table_text(FiniteIRL const& A) {
  std::size_t w = 1;
  for (std::size_t a = 0; a < A.size(); ++a) w = std::max(w, A.label(static_cast<Element>(a)).size());
  auto pad = [&](std::string s) {
    s.resize(w + 1, ' ');
    return s;
  };
  std::ostringstream out;
  out << pad(".") << "|";
  for (std::size_t b = 0; b < A.size(); ++b) out << " " << pad(A.label(static_cast<Element>(b)));
  out << "\n" << std::string(w + 1, '-') << "+" << std::string(A.size() * (w + 2), '-') << "\n";
  for (std::size_t a = 0; a < A.size(); ++a) {
    out << pad(A.label(static_cast<Element>(a))) << "|";
    for (std::size_t b = 0; b < A.size(); ++b)
      out << " " << pad(A.label(A.fuse(static_cast<Element>(a), static_cast<Element>(b))));
    out << "\n";
  }
  return out.str();
}

// Structural summary: predicates, classification and, for FSI De Morgan
// monoids, the lollipop decomposition.
inline std::string analysis_text(FiniteIRL const& A, bool with_hasse) {
  std::ostringstream out;
  out << "algebra " << A.name() << " (size " << A.size() << ")\n";
  out << "e = " << A.label(A.e()) << ", f = " << A.label(A.f()) << ", f^2 = " << A.label(A.square(A.f()))
      << "\n";
  if (with_hasse) out << "\n" << hasse(A) << "\n";
  if (!is_irl(A)) {
    out << "not an involutive residuated lattice\n";
    return out.str();
  }
  PredicateRecord const p = predicates(A);
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "distributive: " << yn(p.distributive) << "\n"
      << "square-increasing: " << yn(p.square_increasing) << "\n"
      << "idempotent: " << yn(p.idempotent) << "\n"
      << "odd: " << yn(p.odd) << "\n"
      << "anti-idempotent: " << yn(p.anti_idempotent) << "\n"
      << "integral: " << yn(p.integral) << "\n"
      << "rigorously compact: " << yn(p.rigorously_compact) << "\n"
      << "semilinear: " << yn(p.semilinear) << "\n";
  Classification const c = classify(A);
  out << "classification: "
      << (c.trivial ? "trivial" : c.simple ? "simple" : c.si ? "SI" : c.fsi ? "FSI" : "not FSI") << "\n";
  out << "deductive filters:";
  for (auto const& G : deductive_filters(A)) out << " " << detail::set_text(A, G.members);
  out << "\n";
  if (!is_dmm(A) || !c.fsi || c.trivial) return out.str();

  LollipopReport const l = lollipop(A);
  out << "\nlollipop decomposition\n";
  if (l.idempotent_case) {
    out << "idempotent; totally ordered: " << yn(l.totally_ordered) << "\n";
  } else {
    out << "interval [~f^2, f^2]: " << detail::set_text(A, l.interval) << "\n"
        << "lower chain (~f^2]:   " << detail::set_text(A, l.lower_chain) << "\n"
        << "upper chain [f^2):    " << detail::set_text(A, l.upper_chain) << "\n";
  }
  for (auto const& v : l.violations) out << "violation: " << v << "\n";
  out << "decomposition holds: " << yn(l.pass()) << "\n";
  return out.str();
}

}  // namespace dmm
