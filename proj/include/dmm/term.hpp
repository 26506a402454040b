#pragma once

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include "dmm/algebra.hpp"
#include "dmm/errors.hpp"

namespace dmm {

struct Term {
  enum class Kind { Var, E, F, Neg, Fusion, Meet, Join, Arrow };

  Kind kind = Kind::E;
  std::string name;  // only for Var
  std::vector<Term> args;

  static Term var(std::string n) { return {Kind::Var, std::move(n), {}}; }
  static Term e() { return {Kind::E, {}, {}}; }
  static Term f() { return {Kind::F, {}, {}}; }
  static Term neg(Term t) { return {Kind::Neg, {}, {std::move(t)}}; }
  static Term fusion(Term a, Term b) { return {Kind::Fusion, {}, {std::move(a), std::move(b)}}; }
  static Term meet(Term a, Term b) { return {Kind::Meet, {}, {std::move(a), std::move(b)}}; }
  static Term join(Term a, Term b) { return {Kind::Join, {}, {std::move(a), std::move(b)}}; }
  static Term arrow(Term a, Term b) { return {Kind::Arrow, {}, {std::move(a), std::move(b)}}; }

  bool operator==(Term const&) const = default;
};

struct Equation {
  enum class Rel { Eq, Le };
  Rel rel = Rel::Eq;
  Term lhs;
  Term rhs;
  bool operator==(Equation const&) const = default;
};

// Equation, inequation (rel = Le) or quasi-equation (non-empty premises).
struct Statement {
  std::vector<Equation> premises;
  Equation conclusion;

  bool is_quasi() const { return !premises.empty(); }
  bool operator==(Statement const&) const = default;
};

inline void collect_variables(Term const& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Var) {
    out.insert(t.name);
  }
  for (auto const& a : t.args) {
    collect_variables(a, out);
  }
}

inline std::vector<std::string> variables(Statement const& s) {
  std::set<std::string> vs;
  for (auto const& p : s.premises) {
    collect_variables(p.lhs, vs);
    collect_variables(p.rhs, vs);
  }
  collect_variables(s.conclusion.lhs, vs);
  collect_variables(s.conclusion.rhs, vs);
  return {vs.begin(), vs.end()};
}

// ---------------------------------------------------------------------------
// Lexer and parser

namespace detail {

enum class Tok { Ident, E, F, Neg, Fusion, Meet, Join, Arrow, Eq, Le, Amp, Implies, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

inline std::string tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "variable";
    case Tok::E: return "'e'";
    case Tok::F: return "'f'";
    case Tok::Neg: return "'~'";
    case Tok::Fusion: return "'*'";
    case Tok::Meet: return "'/\\'";
    case Tok::Join: return "'\\/'";
    case Tok::Arrow: return "'->'";
    case Tok::Eq: return "'='";
    case Tok::Le: return "'<='";
    case Tok::Amp: return "'&'";
    case Tok::Implies: return "'=>'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

inline std::vector<Token> lex(std::string_view s) {
  // Unicode spellings accepted alongside the ASCII ones.
  static constexpr std::pair<std::string_view, Tok> kSymbols[] = {
      {"·", Tok::Fusion}, {"∧", Tok::Meet},    {"∨", Tok::Join},
      {"¬", Tok::Neg},    {"→", Tok::Arrow},   {"≤", Tok::Le},
      {"⇒", Tok::Implies}, {"->", Tok::Arrow},      {"<=", Tok::Le},
      {"=>", Tok::Implies},    {"/\\", Tok::Meet},       {"\\/", Tok::Join},
      {"*", Tok::Fusion},      {"~", Tok::Neg},          {"=", Tok::Eq},
      {"&", Tok::Amp},         {"(", Tok::LParen},       {")", Tok::RParen},
  };
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char const c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i + 1;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
        ++j;
      }
      std::string word(s.substr(i, j - i));
      Tok kind = word == "e" ? Tok::E : word == "f" ? Tok::F : Tok::Ident;
      out.push_back({kind, i, std::move(word)});
      i = j;
      continue;
    }
    bool matched = false;
    for (auto const& [sym, kind] : kSymbols) {
      if (s.substr(i, sym.size()) == sym) {
        out.push_back({kind, i, std::string(sym)});
        i += sym.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      std::size_t len = 1;
      auto lead = static_cast<unsigned char>(c);
      if (lead >= 0xC0) {
        len = lead >= 0xF0 ? 4 : lead >= 0xE0 ? 3 : 2;
      }
      throw SyntaxError(i, {"term"}, std::string(s.substr(i, len)));
    }
  }
  out.push_back({Tok::End, s.size(), {}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Term whole_term() {
    Term t = term();
    expect_end({});
    return t;
  }

  Statement whole_statement() {
    Statement s;
    Equation first = equation();
    if (peek() == Tok::Amp || peek() == Tok::Implies) {
      s.premises.push_back(std::move(first));
      while (accept(Tok::Amp)) {
        s.premises.push_back(equation());
      }
      if (!accept(Tok::Implies)) {
        fail({Tok::Amp, Tok::Implies});
      }
      s.conclusion = equation();
    } else {
      s.conclusion = std::move(first);
    }
    expect_end({Tok::Amp, Tok::Implies});
    return s;
  }

  // Term, or a statement when a relation symbol appears at top level.
  std::variant<Term, Statement> whole_input() {
    Term t = term();
    if (peek() == Tok::Eq || peek() == Tok::Le) {
      pos_ = 0;
      return whole_statement();
    }
    expect_end({Tok::Eq, Tok::Le});
    return t;
  }

 private:
  Tok peek() const { return toks_[pos_].kind; }

  bool accept(Tok k) {
    if (peek() == k) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::vector<Tok> const& expected) const {
    std::vector<std::string> names;
    for (Tok k : expected) {
      names.push_back(tok_name(k));
    }
    throw SyntaxError(toks_[pos_].pos, names, toks_[pos_].text);
  }

  void expect_end(std::vector<Tok> also) {
    if (peek() != Tok::End) {
      also.insert(also.begin(), Tok::Arrow);
      also.insert(also.begin(), {Tok::Fusion, Tok::Meet, Tok::Join});
      also.push_back(Tok::End);
      fail(also);
    }
  }

  Equation equation() {
    Equation eq;
    eq.lhs = term();
    if (accept(Tok::Eq)) {
      eq.rel = Equation::Rel::Eq;
    } else if (accept(Tok::Le)) {
      eq.rel = Equation::Rel::Le;
    } else {
      fail({Tok::Fusion, Tok::Meet, Tok::Join, Tok::Arrow, Tok::Eq, Tok::Le});
    }
    eq.rhs = term();
    return eq;
  }

  Term term() { return arrow(); }

  Term arrow() {
    Term lhs = join();
    if (accept(Tok::Arrow)) {
      return Term::arrow(std::move(lhs), arrow());
    }
    return lhs;
  }

  Term join() {
    Term t = meet();
    while (accept(Tok::Join)) {
      t = Term::join(std::move(t), meet());
    }
    return t;
  }

  Term meet() {
    Term t = fusion();
    while (accept(Tok::Meet)) {
      t = Term::meet(std::move(t), fusion());
    }
    return t;
  }

  Term fusion() {
    Term t = unary();
    while (accept(Tok::Fusion)) {
      t = Term::fusion(std::move(t), unary());
    }
    return t;
  }

  Term unary() {
    if (accept(Tok::Neg)) {
      return Term::neg(unary());
    }
    Token const& tok = toks_[pos_];
    switch (tok.kind) {
      case Tok::Ident:
        ++pos_;
        return Term::var(tok.text);
      case Tok::E:
        ++pos_;
        return Term::e();
      case Tok::F:
        ++pos_;
        return Term::f();
      case Tok::LParen: {
        ++pos_;
        Term t = term();
        if (!accept(Tok::RParen)) {
          fail({Tok::Fusion, Tok::Meet, Tok::Join, Tok::Arrow, Tok::RParen});
        }
        return t;
      }
      default:
        fail({Tok::Ident, Tok::E, Tok::F, Tok::Neg, Tok::LParen});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Term parse_term(std::string_view text) { return detail::Parser(text).whole_term(); }

inline Statement parse_statement(std::string_view text) {
  return detail::Parser(text).whole_statement();
}

inline std::variant<Term, Statement> parse(std::string_view text) {
  return detail::Parser(text).whole_input();
}

// One statement per line; blank lines and '#' comments are skipped.
inline std::vector<Statement> parse_statement_lines(std::string_view text) {
  std::vector<Statement> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      out.push_back(parse_statement(line));
    }
    start = end + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Printer

namespace detail {

inline int precedence(Term::Kind k) {
  switch (k) {
    case Term::Kind::Arrow: return 1;
    case Term::Kind::Join: return 2;
    case Term::Kind::Meet: return 3;
    case Term::Kind::Fusion: return 4;
    case Term::Kind::Neg: return 5;
    default: return 6;
  }
}

inline void print_into(Term const& t, std::string& out);

inline void print_child(Term const& child, bool parens, std::string& out) {
  if (parens) {
    out += '(';
  }
  print_into(child, out);
  if (parens) {
    out += ')';
  }
}

inline void print_into(Term const& t, std::string& out) {
  using K = Term::Kind;
  int const p = precedence(t.kind);
  switch (t.kind) {
    case K::Var: out += t.name; return;
    case K::E: out += 'e'; return;
    case K::F: out += 'f'; return;
    case K::Neg:
      out += '~';
      print_child(t.args[0], precedence(t.args[0].kind) < p, out);
      return;
    default: break;
  }
  char const* op = t.kind == K::Fusion ? " * " : t.kind == K::Meet ? " /\\ " : t.kind == K::Join ? " \\/ " : " -> ";
  int const lp = precedence(t.args[0].kind);
  int const rp = precedence(t.args[1].kind);
  // -> groups to the right, the lattice and monoid operations to the left.
  bool const right_assoc = t.kind == K::Arrow;
  print_child(t.args[0], right_assoc ? lp <= p : lp < p, out);
  out += op;
  print_child(t.args[1], right_assoc ? rp < p : rp <= p, out);
}

inline std::string print_equation(Equation const& eq) {
  std::string out;
  print_into(eq.lhs, out);
  out += eq.rel == Equation::Rel::Eq ? " = " : " <= ";
  print_into(eq.rhs, out);
  return out;
}

}  // namespace detail

inline std::string print(Term const& t) {
  std::string out;
  detail::print_into(t, out);
  return out;
}

inline std::string print(Equation const& eq) { return detail::print_equation(eq); }

inline std::string print(Statement const& s) {
  std::string out;
  for (std::size_t i = 0; i < s.premises.size(); ++i) {
    out += (i == 0 ? "" : " & ") + detail::print_equation(s.premises[i]);
  }
  if (!s.premises.empty()) {
    out += " => ";
  }
  return out + detail::print_equation(s.conclusion);
}

// ---------------------------------------------------------------------------
// Evaluation

using Assignment = std::map<std::string, Element>;

inline Element evaluate(Term const& t, FiniteIRL const& A, Assignment const& env) {
  using K = Term::Kind;
  switch (t.kind) {
    case K::Var: {
      auto it = env.find(t.name);
      if (it == env.end()) {
        throw UnboundVariable(t.name);
      }
      if (it->second >= A.size()) {
        throw Error("value of '" + t.name + "' is not an element of the algebra");
      }
      return it->second;
    }
    case K::E: return A.e();
    case K::F: return A.f();
    case K::Neg: return A.neg(evaluate(t.args[0], A, env));
    default: break;
  }
  Element const a = evaluate(t.args[0], A, env);
  Element const b = evaluate(t.args[1], A, env);
  switch (t.kind) {
    case K::Fusion: return A.fuse(a, b);
    case K::Meet: return A.meet(a, b);
    case K::Join: return A.join(a, b);
    default: return A.residual(a, b);
  }
}

inline bool holds_at(Equation const& eq, FiniteIRL const& A, Assignment const& env) {
  Element const l = evaluate(eq.lhs, A, env);
  Element const r = evaluate(eq.rhs, A, env);
  // s <= t is read as s /\ t = s
  return eq.rel == Equation::Rel::Eq ? l == r : A.meet(l, r) == l;
}

struct SatisfiesOptions {
  std::size_t max_vars = 4;
  unsigned jobs = 1;
};

struct SatisfiesResult {
  bool holds = true;
  std::optional<Assignment> counterexample;
  std::uint64_t conclusion_evaluations = 0;
};

namespace detail {

// Term with variables resolved to slots, for the brute-force loop.
struct Compiled {
  Term::Kind kind;
  std::size_t slot = 0;
  int lhs = -1;
  int rhs = -1;
};

class CompiledStatement {
 public:
  CompiledStatement(Statement const& s, std::vector<std::string> const& vars) : vars_(vars) {
    for (auto const& p : s.premises) {
      premises_.push_back(add_equation(p));
    }
    conclusion_ = add_equation(s.conclusion);
  }

  bool premises_hold(FiniteIRL const& A, std::vector<Element> const& env) const {
    return std::all_of(premises_.begin(), premises_.end(),
                       [&](EqRef const& eq) { return holds(eq, A, env); });
  }
  bool conclusion_holds(FiniteIRL const& A, std::vector<Element> const& env) const {
    return holds(conclusion_, A, env);
  }

 private:
  struct EqRef {
    Equation::Rel rel;
    int lhs;
    int rhs;
  };

  int add(Term const& t) {
    Compiled c{t.kind};
    if (t.kind == Term::Kind::Var) {
      c.slot = static_cast<std::size_t>(
          std::lower_bound(vars_.begin(), vars_.end(), t.name) - vars_.begin());
    }
    if (!t.args.empty()) {
      c.lhs = add(t.args[0]);
    }
    if (t.args.size() > 1) {
      c.rhs = add(t.args[1]);
    }
    nodes_.push_back(c);
    return static_cast<int>(nodes_.size() - 1);
  }

  EqRef add_equation(Equation const& eq) { return {eq.rel, add(eq.lhs), add(eq.rhs)}; }

  Element eval(int i, FiniteIRL const& A, std::vector<Element> const& env) const {
    Compiled const& c = nodes_[static_cast<std::size_t>(i)];
    switch (c.kind) {
      case Term::Kind::Var: return env[c.slot];
      case Term::Kind::E: return A.e();
      case Term::Kind::F: return A.f();
      case Term::Kind::Neg: return A.neg(eval(c.lhs, A, env));
      case Term::Kind::Fusion: return A.fuse(eval(c.lhs, A, env), eval(c.rhs, A, env));
      case Term::Kind::Meet: return A.meet(eval(c.lhs, A, env), eval(c.rhs, A, env));
      case Term::Kind::Join: return A.join(eval(c.lhs, A, env), eval(c.rhs, A, env));
      case Term::Kind::Arrow: return A.residual(eval(c.lhs, A, env), eval(c.rhs, A, env));
    }
    return 0;
  }

  bool holds(EqRef const& eq, FiniteIRL const& A, std::vector<Element> const& env) const {
    Element const l = eval(eq.lhs, A, env);
    Element const r = eval(eq.rhs, A, env);
    return eq.rel == Equation::Rel::Eq ? l == r : A.meet(l, r) == l;
  }

  std::vector<std::string> vars_;
  std::vector<Compiled> nodes_;
  std::vector<EqRef> premises_;
  EqRef conclusion_{};
};

// Scans assignments whose first variable lies in [first_lo, first_hi) in
// lexicographic order; returns the first counterexample.
inline std::optional<std::vector<Element>> scan(CompiledStatement const& cs, FiniteIRL const& A,
                                                std::size_t k, std::size_t first_lo,
                                                std::size_t first_hi,
                                                std::atomic<std::uint64_t>& evals) {
  std::size_t const n = A.size();
  std::vector<Element> env(k, 0);
  std::uint64_t local = 0;
  auto flush = [&] { evals.fetch_add(local, std::memory_order_relaxed); };
  if (k == 0) {
    if (first_lo > 0) {
      return std::nullopt;
    }
    if (cs.premises_hold(A, env)) {
      ++local;
      bool const ok = cs.conclusion_holds(A, env);
      flush();
      return ok ? std::nullopt : std::optional(env);
    }
    flush();
    return std::nullopt;
  }
  for (std::size_t first = first_lo; first < first_hi; ++first) {
    env.assign(k, 0);
    env[0] = static_cast<Element>(first);
    while (true) {
      if (cs.premises_hold(A, env)) {
        ++local;
        if (!cs.conclusion_holds(A, env)) {
          flush();
          return env;
        }
      }
      // odometer over positions 1..k-1, last position fastest
      std::size_t i = k - 1;
      while (i >= 1) {
        if (++env[i] < n) {
          break;
        }
        env[i] = 0;
        --i;
      }
      if (i == 0) {
        break;
      }
    }
  }
  flush();
  return std::nullopt;
}

}  // namespace detail

// Brute force over all |A|^k assignments, variables in sorted name order.
// The reported counterexample is the lexicographically least one.
inline SatisfiesResult satisfies(FiniteIRL const& A, Statement const& s,
                                 SatisfiesOptions const& opts = {}) {
  std::vector<std::string> const vars = variables(s);
  if (vars.size() > opts.max_vars) {
    throw TooManyVariables("statement has " + std::to_string(vars.size()) +
                           " variables, limit is " + std::to_string(opts.max_vars));
  }
  detail::CompiledStatement const cs(s, vars);
  std::size_t const k = vars.size();
  std::size_t const n = A.size();
  A.residual(0, 0);  // fill the cache before any worker starts
  std::atomic<std::uint64_t> evals{0};
  std::optional<std::vector<Element>> found;

  unsigned const jobs = k == 0 ? 1U : std::max(1U, std::min<unsigned>(opts.jobs, static_cast<unsigned>(n)));
  if (jobs == 1) {
    found = detail::scan(cs, A, k, 0, k == 0 ? 1 : n, evals);
  } else {
    std::vector<std::optional<std::vector<Element>>> part(jobs);
    std::vector<std::thread> workers;
    std::size_t const chunk = (n + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
      std::size_t const lo = std::min(n, j * chunk);
      std::size_t const hi = std::min(n, lo + chunk);
      workers.emplace_back([&, j, lo, hi] { part[j] = detail::scan(cs, A, k, lo, hi, evals); });
    }
    for (auto& w : workers) {
      w.join();
    }
    // chunks are ordered by first variable, so the first hit is the least
    for (auto& p : part) {
      if (p) {
        found = std::move(p);
        break;
      }
    }
  }

  SatisfiesResult result;
  result.conclusion_evaluations = evals.load();
  if (found) {
    result.holds = false;
    Assignment a;
    for (std::size_t i = 0; i < k; ++i) {
      a[vars[i]] = (*found)[i];
    }
    result.counterexample = std::move(a);
  }
  return result;
}

inline SatisfiesResult satisfies(FiniteIRL const& A, std::string_view statement,
                                 SatisfiesOptions const& opts = {}) {
  return satisfies(A, parse_statement(statement), opts);
}

}  // namespace dmm
