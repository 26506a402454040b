#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "dmm/dmm.hpp"

namespace dmm::cli {

enum Exit : int { kPass = 0, kFail = 1, kUsage = 2 };

using AnyAlgebra = std::variant<FiniteIRL, FiniteRA>;

struct Options {
  std::string algebra;
  std::string target;
  std::string statement;
  std::string elements;
  std::string times;
  std::string cls = "dmm";
  std::string format = "text";
  std::string out;
  std::string checkpoint;
  std::vector<std::string> filters;
  std::size_t size = 0;
  std::size_t index = 0;
  std::optional<std::size_t> limit;
  unsigned jobs = 1;
  unsigned seed = 1;
  bool unsafe_size = false;
  bool cumulative = false;
  bool hasse = false;
  bool progress = false;
};

// Named algebras win over files of the same name.
inline AnyAlgebra load_algebra(Options const& o, std::string const& spec, std::ostream& err) {
  if (spec.empty()) {
    throw Error("--algebra is required");
  }
  if (is_named(spec)) {
    if (std::filesystem::exists(spec)) {
      err << "warning: '" << spec << "' names a built-in algebra; the file of that name is ignored\n";
    }
    return make_named(spec);
  }
  if (!std::filesystem::exists(spec)) {
    throw UnknownName("'" + spec + "' is neither a named algebra nor a readable file");
  }
  Json const j = read_json_file(spec);
  Json doc = j;
  if (j.is_array()) {
    std::vector<Json> docs;
    for (auto const& d : j)
      if (!(d.is_object() && d.contains("catalog"))) docs.push_back(d);
    if (o.index >= docs.size()) {
      throw MalformedTable("'" + spec + "' has no algebra at index " + std::to_string(o.index));
    }
    doc = docs[o.index];
  }
  if (is_ra_document(doc)) return ra_from_json(doc);
  return algebra_from_json(doc);
}

inline FiniteIRL load_irl(Options const& o, std::string const& spec, std::ostream& err) {
  AnyAlgebra a = load_algebra(o, spec, err);
  if (auto const* p = std::get_if<FiniteIRL>(&a)) return *p;
  throw NotApplicable("'" + spec + "' is a relevant algebra; this command needs e");
}

inline FiniteRA load_ra(Options const& o, std::string const& spec, std::ostream& err) {
  AnyAlgebra a = load_algebra(o, spec, err);
  if (auto const* p = std::get_if<FiniteRA>(&a)) return *p;
  return e_free_reduct(std::get<FiniteIRL>(a));
}

template <typename Alg>
Element parse_element(Alg const& A, std::string tok) {
  while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
  while (!tok.empty() && tok.back() == ' ') tok.pop_back();
  for (std::size_t a = 0; a < A.size(); ++a) {
    if (A.label(static_cast<Element>(a)) == tok) return static_cast<Element>(a);
  }
  try {
    std::size_t used = 0;
    int const v = std::stoi(tok, &used);
    if (used == tok.size() && v >= 0 && static_cast<std::size_t>(v) < A.size()) return static_cast<Element>(v);
  } catch (std::exception const&) {
  }
  throw UnknownName("no element '" + tok + "' in '" + A.name() + "'");
}

template <typename Alg>
ElementSet parse_elements(Alg const& A, std::string const& text) {
  ElementSet S;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.find_first_not_of(' ') != std::string::npos) S.insert(parse_element(A, tok));
  }
  return S;
}

template <typename Alg>
Json labels_of(Alg const& A, ElementSet S) {
  Json arr = Json::array();
  for (Element x : S) arr.push_back(A.label(x));
  return arr;
}

inline std::string statement_text(std::string const& s) {
  if (!s.empty() && s.front() == '@') {
    std::ifstream in(s.substr(1));
    if (!in) throw Error("cannot open '" + s.substr(1) + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return s;
}

class Runner {
 public:
  Runner(Options const& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  bool json() const { return o_.format == "json"; }

  void emit(Json const& j, std::string const& text) {
    std::string const body = json() ? dump(j) : text;
    if (o_.out.empty()) {
      out_ << body;
    } else {
      write_text_file(o_.out, body);
    }
  }

  int validate() {
    if (o_.cls == "ra") {
      FiniteRA const R = load_ra(o_, o_.algebra, err_);
      return report_validation(R.name(), validate_ra(R), [&](Element x) { return R.label(x); });
    }
    FiniteIRL const A = load_irl(o_, o_.algebra, err_);
    ValidationReport const r = o_.cls == "irl" ? validate_irl(A) : validate_dmm(A);
    return report_validation(A.name(), r, [&](Element x) { return A.label(x); });
  }

  int classify_cmd() {
    if (o_.cls == "ra") {
      FiniteRA const R = load_ra(o_, o_.algebra, err_);
      RAClassification const c = ra_classify(R);
      Json j{{"algebra", R.name()}, {"trivial", c.trivial}, {"simple", c.simple}, {"si", c.si}, {"fsi", c.fsi},
             {"congruences", c.congruences.size()}};
      emit(j, R.name() + ": " + verdict(c.trivial, c.simple, c.si, c.fsi) + "\n");
      return kPass;
    }
    FiniteIRL const A = load_irl(o_, o_.algebra, err_);
    if (!is_irl(A)) throw NotAnIRL("'" + A.name() + "' is not an IRL");
    Classification const c = classify(A);
    Json filters = Json::array();
    std::string ftext;
    for (auto const& G : deductive_filters(A)) {
      filters.push_back(labels_of(A, G.members));
      ftext += " " + labels_of(A, G.members).dump();
    }
    Json j{{"algebra", A.name()}, {"trivial", c.trivial}, {"simple", c.simple}, {"si", c.si},
           {"fsi", c.fsi},        {"filters", filters}};
    if (c.subcover) j["subcover"] = A.label(*c.subcover);
    std::string text = A.name() + ": " + verdict(c.trivial, c.simple, c.si, c.fsi) + "\n";
    if (c.subcover) text += "largest element below e: " + A.label(*c.subcover) + "\n";
    text += "deductive filters:" + ftext + "\n";
    emit(j, text);
    return kPass;
  }

  int analyze() {
    FiniteIRL const A = load_irl(o_, o_.algebra, err_);
    Json j{{"algebra", A.name()}, {"size", A.size()}};
    if (is_irl(A)) {
      PredicateRecord const p = predicates(A);
      j["predicates"] = {{"idempotent", p.idempotent},
                         {"odd", p.odd},
                         {"anti_idempotent", p.anti_idempotent},
                         {"integral", p.integral},
                         {"rigorously_compact", p.rigorously_compact},
                         {"distributive", p.distributive},
                         {"square_increasing", p.square_increasing},
                         {"semilinear", p.semilinear}};
      Classification const c = classify(A);
      j["classification"] = verdict(c.trivial, c.simple, c.si, c.fsi);
      if (is_dmm(A) && c.fsi && !c.trivial) {
        LollipopReport const l = lollipop(A);
        j["lollipop"] = {{"idempotent_case", l.idempotent_case},
                         {"interval", labels_of(A, l.interval)},
                         {"lower_chain", labels_of(A, l.lower_chain)},
                         {"upper_chain", labels_of(A, l.upper_chain)},
                         {"violations", l.violations}};
      }
    }
    emit(j, analysis_text(A, o_.hasse));
    return kPass;
  }

  int satisfies_cmd() {
    FiniteIRL const A = load_irl(o_, o_.algebra, err_);
    std::vector<Statement> const stmts = parse_statement_lines(statement_text(o_.statement));
    if (stmts.empty()) throw Error("no statement given");
    SatisfiesOptions opts;
    opts.jobs = o_.jobs;
    Json results = Json::array();
    std::string text;
    bool all = true;
    for (auto const& s : stmts) {
      SatisfiesResult const r = satisfies(A, s, opts);
      all = all && r.holds;
      Json one{{"statement", print(s)}, {"holds", r.holds}};
      text += print(s) + ": " + (r.holds ? "holds" : "fails");
      if (r.counterexample) {
        Json ce = Json::object();
        std::string ct;
        for (auto const& [k, v] : *r.counterexample) {
          ce[k] = A.label(v);
          ct += (ct.empty() ? "" : ", ") + k + " = " + A.label(v);
        }
        one["counterexample"] = ce;
        if (!ct.empty()) text += " at " + ct;
      }
      text += "\n";
      results.push_back(one);
    }
    emit(Json{{"algebra", A.name()}, {"holds", all}, {"results", results}}, text);
    return all ? kPass : kFail;
  }

  int construct() {
    FiniteIRL A = load_irl(o_, o_.algebra, err_);
    if (!o_.times.empty()) A = direct_product(A, load_irl(o_, o_.times, err_));
    if (!o_.elements.empty()) A = sg(A, parse_elements(A, o_.elements)).algebra;
    emit(to_json(A), json() ? std::string{} : analysis_text(A, o_.hasse) + "\n" + table_text(A));
    return kPass;
  }

  int enumerate_cmd() {
    if (o_.size == 0) throw Error("--size is required");
    bool const ra = o_.cls == "ra";
    SearchSpec spec = spec_for_class(ra ? "dmm" : o_.cls, o_.size);
    spec.cumulative = o_.cumulative;
    spec.predicate_filters = o_.filters;
    spec.limit = o_.limit;
    spec.jobs = o_.jobs;
    spec.unsafe_size = o_.unsafe_size;
    EnumerationHooks hooks;
    if (o_.progress || o_.unsafe_size) {
      hooks.progress = [&](Progress const& p) {
        err_ << "size " << p.size << ": " << p.units_done << "/" << p.units_total << " units, " << p.found
             << " found, " << p.pruned << " pruned\n";
      };
    }
    Json checkpoint = Json::object();
    std::string const cp = !o_.checkpoint.empty() ? o_.checkpoint : (o_.unsafe_size ? "dmm-checkpoint.json" : "");
    if (!cp.empty()) {
      if (std::filesystem::exists(cp)) {
        checkpoint = read_json_file(cp);
        Json const done = checkpoint.value("done", Json::object());
        for (auto const& [n, units] : done.items()) {
          for (auto const& u : units) hooks.skip_units[std::stoul(n)].insert(u.get<std::size_t>());
        }
        Json const saved = checkpoint.value("algebras", Json::array());
        for (auto const& d : saved) hooks.resumed.push_back(algebra_from_json(d));
        err_ << "resuming from " << cp << " with " << hooks.resumed.size() << " algebras\n";
      }
      checkpoint["class"] = spec.class_name();
      hooks.unit_done = [&, cp](std::size_t n, std::size_t unit, std::vector<FiniteIRL> const& found) {
        checkpoint["done"][std::to_string(n)].push_back(unit);
        for (auto const& A : found) checkpoint["algebras"].push_back(to_json(A));
        write_text_file(cp + ".tmp", checkpoint.dump());
        std::filesystem::rename(cp + ".tmp", cp);
      };
    }
    Catalog const cat = enumerate(spec, hooks);
    if (ra) {
      Json arr = Json::array();
      Json header = catalog_header(cat);
      header["catalog"]["class"] = "ra";
      arr.push_back(header);
      std::string text;
      for (auto const& A : cat.algebras) {
        FiniteRA const R = e_free_reduct(A);
        arr.push_back(to_json(R));
        text += R.name() + "\n";
      }
      emit_catalog(arr, text, cat.algebras.size());
      return kPass;
    }
    std::string text;
    for (auto const& A : cat.algebras) text += A.name() + " (size " + std::to_string(A.size()) + ")\n";
    emit_catalog(to_json(cat), text, cat.algebras.size());
    return kPass;
  }

  int homs_cmd() {
    FiniteIRL const A = load_irl(o_, o_.algebra, err_);
    FiniteIRL const B = load_irl(o_, o_.target, err_);
    std::vector<Homomorphism> const hs = homs(A, B);
    Json arr = Json::array();
    std::string text;
    for (auto const& h : hs) {
      arr.push_back({{"map", std::vector<int>(h.map.begin(), h.map.end())},
                     {"injective", h.injective},
                     {"surjective", h.surjective}});
      std::string line;
      for (std::size_t a = 0; a < A.size(); ++a) {
        line += (a ? ", " : "") + A.label(static_cast<Element>(a)) + " -> " + B.label(h.map[a]);
      }
      text += line + (h.surjective ? "  (onto)" : "") + (h.injective ? "  (one-one)" : "") + "\n";
    }
    text += std::to_string(hs.size()) + " homomorphism(s)\n";
    emit(Json{{"source", A.name()}, {"target", B.name()}, {"homomorphisms", arr}}, text);
    return kPass;
  }

  int iso_cmd() {
    FiniteIRL const A = load_irl(o_, o_.algebra, err_);
    FiniteIRL const B = load_irl(o_, o_.target, err_);
    bool const iso = is_isomorphic(A, B);
    emit(Json{{"source", A.name()}, {"target", B.name()}, {"isomorphic", iso}},
         A.name() + (iso ? " is isomorphic to " : " is not isomorphic to ") + B.name() + "\n");
    return iso ? kPass : kFail;
  }

  int quotient_cmd() {
    FiniteIRL const A = load_irl(o_, o_.algebra, err_);
    if (!is_irl(A)) throw NotAnIRL("'" + A.name() + "' is not an IRL");
    DeductiveFilter const G = dfg(A, parse_elements(A, o_.elements));
    Quotient const q = quotient(A, G);
    Json j = to_json(q.algebra);
    j["projection"] = std::vector<int>(q.projection.begin(), q.projection.end());
    emit(j, "filter " + labels_of(A, G.members).dump() + "\n" + analysis_text(q.algebra, o_.hasse));
    return kPass;
  }

  int reduct_cmd() {
    FiniteIRL const A = load_irl(o_, o_.algebra, err_);
    FiniteRA const R = e_free_reduct(A);
    bool const ok = is_ra(R);
    std::string text = R.name() + (ok ? " is a relevant algebra\n" : " fails the relevant-algebra axioms\n");
    if (auto e = reconstruct_neutral(R)) text += "neutral element recovered: " + R.label(*e) + "\n";
    emit(to_json(R), text);
    return ok ? kPass : kFail;
  }

  int dfg_cmd() {
    AnyAlgebra const any = load_algebra(o_, o_.algebra, err_);
    if (o_.cls == "ra" || std::holds_alternative<FiniteRA>(any)) {
      FiniteRA const R = std::holds_alternative<FiniteRA>(any) ? std::get<FiniteRA>(any)
                                                               : e_free_reduct(std::get<FiniteIRL>(any));
      ElementSet const X = parse_elements(R, o_.elements);
      RADeductiveFilter const F = dfg_ra_set(R, X);
      Json const members = labels_of(R, F.members);
      emit(Json{{"algebra", R.name()}, {"filter", members}}, "DFg = " + members.dump() + "\n");
      return kPass;
    }
    FiniteIRL const& A = std::get<FiniteIRL>(any);
    DeductiveFilter const G = dfg(A, parse_elements(A, o_.elements));
    Json const members = labels_of(A, G.members);
    emit(Json{{"algebra", A.name()}, {"filter", members}}, "DFg = " + members.dump() + "\n");
    return kPass;
  }

  int suite() {
    std::size_t const n = o_.size == 0 ? 5 : o_.size;
    SearchSpec spec = SearchSpec::dmm(n);
    spec.cumulative = true;
    spec.jobs = o_.jobs;
    spec.unsafe_size = o_.unsafe_size;
    Catalog const cat = enumerate(spec);
    HarnessReport const h = theorem_harness(cat);
    AxiomatizationReport const ax = axiomatization_check(cat);

    // canonical forms under random relabelings of the catalog
    std::mt19937 rng(o_.seed);
    std::size_t relabel_failures = 0;
    for (auto const& A : cat.algebras) {
      std::vector<Element> p(A.size());
      for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<Element>(i);
      for (int t = 0; t < 20; ++t) {
        std::shuffle(p.begin(), p.end(), rng);
        if (canonical_form(permuted(A, p)) != canonical_form(A)) ++relabel_failures;
      }
    }

    Json checks = Json::array();
    std::ostringstream text;
    text << "catalog: " << cat.algebras.size() << " De Morgan monoids of size <= " << n << "\n\n";
    auto row = [&](std::string const& name, std::size_t instances, bool pass, std::string const& detail) {
      text << (pass ? "PASS " : "FAIL ") << name << " [" << instances << "]";
      if (!detail.empty()) text << "  " << detail;
      text << "\n";
      checks.push_back({{"check", name}, {"instances", instances}, {"pass", pass}, {"detail", detail}});
    };
    for (auto const& c : h.checks) {
      std::string detail;
      if (!c.pass()) detail = c.failures.front().algebra.name() + ": " + c.failures.front().detail;
      row(c.name, c.instances, c.pass(), detail);
    }
    for (auto const& e : ax.entries) {
      std::string detail;
      if (!e.pass) {
        for (auto const& s : e.satisfying) detail += (detail.empty() ? "" : ", ") + s;
        detail = "satisfied by: " + detail;
      }
      row("axiomatization of " + e.target, e.satisfying.size(), e.pass, detail);
    }
    row("canonical form under relabeling", cat.algebras.size() * 20, relabel_failures == 0, "");
    bool const pass = h.pass() && ax.pass() && relabel_failures == 0;
    text << "\n" << (pass ? "all checks passed" : "some checks failed") << "\n";
    emit(Json{{"size", n}, {"catalog_count", cat.algebras.size()}, {"pass", pass}, {"checks", checks}}, text.str());
    return pass ? kPass : kFail;
  }

 private:
  static std::string verdict(bool trivial, bool simple, bool si, bool fsi) {
    if (trivial) return "trivial";
    if (simple) return "simple";
    if (si) return "SI";
    if (fsi) return "FSI";
    return "not FSI";
  }

  template <typename LabelFn>
  int report_validation(std::string const& name, ValidationReport const& r, LabelFn label) {
    Json vs = Json::array();
    std::string text;
    for (auto const& v : r.violations) {
      Json w = Json::array();
      std::string wt;
      for (Element x : v.witness) {
        w.push_back(x);
        wt += (wt.empty() ? "" : ", ") + label(x);
      }
      vs.push_back({{"axiom", v.axiom}, {"witness", w}});
      text += "violation: " + v.axiom + (wt.empty() ? "" : " at (" + wt + ")") + "\n";
    }
    text += name + (r.pass() ? ": valid\n" : ": invalid\n");
    emit(Json{{"algebra", name}, {"valid", r.pass()}, {"violations", vs}}, text);
    return r.pass() ? kPass : kFail;
  }

  void emit_catalog(Json const& arr, std::string const& text, std::size_t count) {
    if (o_.out.empty()) {
      out_ << (json() ? dump(arr) : text + std::to_string(count) + " algebra(s)\n");
    } else {
      write_text_file(o_.out, dump(arr));
      out_ << count << " algebra(s) written to " << o_.out << "\n";
    }
  }

  Options const& o_;
  std::ostream& out_;
  std::ostream& err_;
};

inline int run(int argc, char const* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"dmm: finite De Morgan monoids and relevant algebras"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* s) {
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    s->add_option("--out", o.out, "Write output to a file");
    s->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    s->add_option("--seed", o.seed, "Seed for randomized checks");
    s->add_option("--index", o.index, "Algebra index inside a catalog file");
  };
  auto add_algebra = [&](CLI::App* s) { s->add_option("--algebra", o.algebra, "Named algebra or JSON file")->required(); };
  auto add_class = [&](CLI::App* s) {
    s->add_option("--class", o.cls, "Algebra class")
        ->check(CLI::IsMember({"irl", "dmm", "ra", "square-increasing", "distributive"}));
  };

  auto* validate = app.add_subcommand("validate", "Check the axioms of a class");
  add_algebra(validate);
  add_class(validate);
  auto* classify_sc = app.add_subcommand("classify", "Simple / SI / FSI classification");
  add_algebra(classify_sc);
  add_class(classify_sc);
  auto* analyze = app.add_subcommand("analyze", "Predicates, classification and structure report");
  add_algebra(analyze);
  analyze->add_flag("--hasse", o.hasse, "Print the Hasse diagram");
  auto* sat = app.add_subcommand("satisfies", "Check equations or quasi-equations");
  add_algebra(sat);
  sat->add_option("--statement", o.statement, "Statement text or @file")->required();
  auto* construct = app.add_subcommand("construct", "Build a named algebra, product or subalgebra");
  add_algebra(construct);
  construct->add_option("--times", o.times, "Second factor of a direct product");
  construct->add_option("--elements", o.elements, "Generators of a subalgebra (comma separated)");
  construct->add_flag("--hasse", o.hasse, "Print the Hasse diagram");
  auto* enumerate_sc = app.add_subcommand("enumerate", "All algebras of a class and size");
  enumerate_sc->add_option("--size", o.size, "Carrier size")->required();
  add_class(enumerate_sc);
  enumerate_sc->add_flag("--cumulative", o.cumulative, "Include all smaller sizes");
  enumerate_sc->add_option("--filter", o.filters, "Keep entries with this predicate")
      ->check(CLI::IsMember(predicate_names()));
  enumerate_sc->add_option("--limit", o.limit, "Stop after this many entries");
  enumerate_sc->add_flag("--unsafe-size", o.unsafe_size, "Allow sizes above the default ceiling");
  enumerate_sc->add_option("--checkpoint", o.checkpoint, "Checkpoint file for resumable runs");
  enumerate_sc->add_flag("--progress", o.progress, "Report progress on standard error");
  auto* homs_sc = app.add_subcommand("homs", "All homomorphisms between two algebras");
  add_algebra(homs_sc);
  homs_sc->add_option("--target", o.target, "Codomain")->required();
  auto* iso = app.add_subcommand("iso", "Isomorphism test");
  add_algebra(iso);
  iso->add_option("--target", o.target, "Second algebra")->required();
  auto* quotient_sc = app.add_subcommand("quotient", "Quotient by the deductive filter generated by elements");
  add_algebra(quotient_sc);
  quotient_sc->add_option("--elements", o.elements, "Generators of the filter")->required();
  quotient_sc->add_flag("--hasse", o.hasse, "Print the Hasse diagram");
  auto* reduct = app.add_subcommand("reduct", "e-free reduct");
  add_algebra(reduct);
  auto* dfg_sc = app.add_subcommand("dfg", "Deductive filter generated by elements");
  add_algebra(dfg_sc);
  add_class(dfg_sc);
  dfg_sc->add_option("--elements", o.elements, "Generators")->required();
  auto* suite_sc = app.add_subcommand("suite", "Enumerate and run every theorem check");
  suite_sc->add_option("--size", o.size, "Largest carrier size (default 5)");
  suite_sc->add_flag("--unsafe-size", o.unsafe_size, "Allow sizes above the default ceiling");
  for (auto* s : {validate, classify_sc, analyze, sat, construct, enumerate_sc, homs_sc, iso, quotient_sc, reduct,
                  dfg_sc, suite_sc}) {
    add_common(s);
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Runner r(o, out, err);
  try {
    if (*validate) return r.validate();
    if (*classify_sc) return r.classify_cmd();
    if (*analyze) return r.analyze();
    if (*sat) return r.satisfies_cmd();
    if (*construct) return r.construct();
    if (*enumerate_sc) return r.enumerate_cmd();
    if (*homs_sc) return r.homs_cmd();
    if (*iso) return r.iso_cmd();
    if (*quotient_sc) return r.quotient_cmd();
    if (*reduct) return r.reduct_cmd();
    if (*dfg_sc) return r.dfg_cmd();
    if (*suite_sc) return r.suite();
  } catch (SyntaxError const& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace dmm::cli
