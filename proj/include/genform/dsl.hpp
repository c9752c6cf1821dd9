#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "genform/value.hpp"

namespace genform::dsl {

// Diagnostic codes, one per failure class.
namespace code {
inline constexpr const char* lexical = "E100";
inline constexpr const char* syntax = "E101";
inline constexpr const char* unknown_name = "E102";
inline constexpr const char* use_before_def = "E103";
inline constexpr const char* duplicate = "E104";
inline constexpr const char* degree = "E105";
inline constexpr const char* chart = "E106";
inline constexpr const char* type = "E107";
inline constexpr const char* arity = "E108";
inline constexpr const char* usage = "E200";
}  // namespace code

struct Diagnostic {
  int line = 0;
  int column = 0;
  std::string code;
  std::string message;

  // "line:col: code: message"
  std::string render() const;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(Diagnostic diagnostic)
      : std::runtime_error(diagnostic.render()), diagnostic_(std::move(diagnostic)) {}

  const Diagnostic& diagnostic() const noexcept { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

struct Definition {
  std::string name;
  Value value;
  int line = 0;
  int column = 0;
};

// A chart declaration followed by named, evaluated definitions in source order.
struct Session {
  ChartRef chart;
  std::vector<Definition> definitions;

  const Value* find(std::string_view name) const;

  // Structural: same chart, same names in order, equal values.
  friend bool operator==(const Session& a, const Session& b);
};

// Parses and evaluates a session file. Throws ParseError.
//
//   session   := "chart" ident ("," ident)* ("k" "=" rational)? def*
//   def       := ident "=" expr
//   expr      := sums and products of scalars, d<coord> basis forms, @<coord> basis
//                vectors, "[form ; form]", "{vector ; scalar}" and calls to
//                wedge d I L Lc Lv comm scale add smul
//
// `^` is a power when both sides are scalars and the right side is a non-negative
// integer constant, a wedge product of ordinary forms otherwise. `#` starts a comment.
Session parse_session(std::string_view text);

// Canonical listing: the chart line, then one "name = value" line per definition.
std::string format_session(const Session& session);

// Parses "x=2,y=1/2" into a point on `chart`, one value per coordinate.
std::vector<Rational> parse_point(const Chart& chart, std::string_view bindings);

}  // namespace genform::dsl
