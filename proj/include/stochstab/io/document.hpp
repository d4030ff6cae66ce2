#pragma once

// Input documents for the command-line front end.
//
// JSON:  {"states":["x","y"],
//         "arcs":[{"from":"x","to":"y","exp":"1","coeff":"1"}]}
// "exp" is the exponent alpha of eps -> coeff * eps^alpha as a decimal or
// "p/q" string (integers are also accepted as JSON numbers). Instead of
// "exp" an arc may carry "weight": "0" (Zero, same as leaving the arc
// out), "1" (Exp(0)), or "e^alpha".
//
// Line format, same semantics:
//   # comment
//   states x y          (optional; otherwise order of first appearance)
//   x y 3/2 [coeff]

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stochstab/graph.hpp"
#include "stochstab/monomial.hpp"
#include "stochstab/oracle/numeric.hpp"

namespace stochstab::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  std::vector<std::string> problems_;
};

struct InputArc {
  std::string from;
  std::string to;
  std::optional<Rational> exponent;  // nullopt: the Zero weight
  Rational coeff{1};
  std::size_t line = 0;
};

struct InputDocument {
  std::vector<std::string> states;
  std::vector<InputArc> arcs;
};

/// Detects the format from the first non-blank character ('{' means JSON).
InputDocument parse_document(std::string_view text);
InputDocument parse_json_document(std::string_view text);
InputDocument parse_line_document(std::string_view text);

/// Throws ValidationError listing every problem found.
void validate(const InputDocument& doc);

PerturbationGraph<MonomialClass> to_graph(const InputDocument& doc);
/// Non-Zero arcs with their coefficients, indexed like doc.states.
oracle::OffDiagonal to_numeric_spec(const InputDocument& doc);

}  // namespace stochstab::io
