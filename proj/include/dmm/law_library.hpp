#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "dmm/errors.hpp"
#include "dmm/term.hpp"

namespace dmm {

// A named law. Biconditionals and conjunctions are stored as several
// statements, all of which must hold.
struct LawEntry {
  std::string key;
  std::string description;
  std::vector<std::string> statements;
  bool square_increasing_only = false;
};

inline std::vector<LawEntry> const& law_library() {
  static std::vector<LawEntry> const kLaws = {
      {"law-1", "involution-fusion law",
       {"x * y <= z => ~z * y <= ~x", "~z * y <= ~x => x * y <= z"}},
      {"law-2", "residuation",
       {"x * y <= z => y <= x -> z", "y <= x -> z => x * y <= z"}},
      {"law-3", "negation via residuals",
       {"~x = x -> f", "x -> y = ~y -> ~x", "x * y = ~(x -> ~y)"}},
      {"law-4", "modus ponens", {"x * (x -> y) <= y", "x <= (x -> y) -> y"}},
      {"law-5", "permutation", {"x * y -> z = y -> x -> z", "y -> x -> z = x -> y -> z"}},
      {"law-6", "transitivity", {"(x -> y) * (y -> z) <= x -> z"}},
      {"law-7", "fusion distributes over join", {"x * (y \\/ z) = x * y \\/ x * z"}},
      {"law-8", "isotonicity",
       {"x <= y => x * z <= y * z", "x <= y => z -> x <= z -> y", "x <= y => y -> z <= x -> z"}},
      {"law-9", "order via e", {"x <= y => e <= x -> y", "e <= x -> y => x <= y"}},
      {"law-10", "equality via e",
       {"x = y => e <= (x -> y) /\\ (y -> x)", "e <= (x -> y) /\\ (y -> x) => x = y"}},
      {"law-11", "e laws", {"e <= x -> x", "e -> x = x"}},
      {"law-12", "e below x", {"e <= x => x -> x <= x", "x -> x <= x => e <= x"}},
      {"law-13", "meet below fusion", {"x /\\ y <= x * y"}, true},
      {"law-14", "fusion is meet below e", {"x <= e & y <= e => x * y = x /\\ y"}, true},
      {"law-15", "excluded middle", {"e <= x \\/ ~x"}, true},
      {"law-16", "residual bound above f", {"f <= x => x -> ~x <= x * x -> x"}},
  };
  return kLaws;
}

struct AxiomEntry {
  std::string key;
  std::string statement;
};

inline std::vector<AxiomEntry> const& axiom_library() {
  static std::vector<AxiomEntry> const kAxioms = {
      {"ax-x-le-e", "x <= e"},
      {"ax-e-eq-f", "e = f"},
      {"ax-semilinear", "e <= (x -> y) \\/ (y -> x)"},
      {"ax-S3", "e <= (x -> y \\/ ~y) \\/ y /\\ ~y"},
      {"ax-D41", "x /\\ ~x <= y"},
      {"ax-D42", "e <= (f * f -> x) \\/ (x -> e) \\/ ~x"},
      {"ax-C41", "x /\\ (x -> f) <= (f -> x) \\/ (x -> e)"},
      {"ax-C42", "x -> e <= x \\/ (f * f -> ~x)"},
      {"ax-anti-idem", "x <= f * f"},
      {"ax-e-le-f", "e <= f"},
  };
  return kAxioms;
}

inline Statement axiom(std::string_view key) {
  auto const& lib = axiom_library();
  auto it = std::find_if(lib.begin(), lib.end(), [&](AxiomEntry const& a) { return a.key == key; });
  if (it == lib.end()) {
    throw UnknownName("no axiom named '" + std::string(key) + "'");
  }
  return parse_statement(it->statement);
}

inline LawEntry const& law(std::string_view key) {
  auto const& lib = law_library();
  auto it = std::find_if(lib.begin(), lib.end(), [&](LawEntry const& l) { return l.key == key; });
  if (it == lib.end()) {
    throw UnknownName("no law named '" + std::string(key) + "'");
  }
  return *it;
}

// Axiom keys that, added to the De Morgan monoid axioms, pin down the
// variety generated by each of the four minimal algebras.
inline std::vector<std::string> axiom_set(std::string_view algebra) {
  if (algebra == "2") {
    return {"ax-x-le-e"};
  }
  if (algebra == "S3") {
    return {"ax-e-eq-f", "ax-semilinear", "ax-S3"};
  }
  if (algebra == "D4") {
    return {"ax-anti-idem", "ax-D41", "ax-D42"};
  }
  if (algebra == "C4") {
    return {"ax-anti-idem", "ax-e-le-f", "ax-semilinear", "ax-C41", "ax-C42"};
  }
  throw UnknownName("no axiom set for '" + std::string(algebra) + "'");
}

}  // namespace dmm
