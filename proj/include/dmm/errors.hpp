#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dmm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedTable : Error {
  using Error::Error;
};

struct NotAnIRL : Error {
  using Error::Error;
};

struct NotDMM : Error {
  using Error::Error;
};

struct NotFSI : Error {
  using Error::Error;
};

struct NotApplicable : Error {
  using Error::Error;
};

struct NotAFilter : Error {
  using Error::Error;
};

struct NotACongruence : Error {
  using Error::Error;
};

struct UnboundVariable : Error {
  explicit UnboundVariable(std::string name)
      : Error("unbound variable '" + name + "'"), variable(std::move(name)) {}
  std::string variable;
};

struct TooManyVariables : Error {
  using Error::Error;
};

struct UnknownName : Error {
  using Error::Error;
};

struct SizeTooLarge : Error {
  using Error::Error;
};

struct IncompleteCatalog : Error {
  using Error::Error;
};

struct TrivialAlgebra : Error {
  using Error::Error;
};

struct SyntaxError : Error {
  SyntaxError(std::size_t pos, std::vector<std::string> expected_tokens,
              std::string const& found)
      : Error(format(pos, expected_tokens, found)),
        position(pos),
        expected(std::move(expected_tokens)) {}

  std::size_t position;
  std::vector<std::string> expected;

 private:
  static std::string format(std::size_t pos,
                            std::vector<std::string> const& expected,
                            std::string const& found) {
    std::string msg = "syntax error at position " + std::to_string(pos) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) {
        msg += i + 1 == expected.size() ? " or " : ", ";
      }
      msg += expected[i];
    }
    msg += ", found " + (found.empty() ? std::string("end of input") : "'" + found + "'");
    return msg;
  }
};

}  // namespace dmm
