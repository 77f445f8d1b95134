#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibrekit/error.hpp"
#include "fibrekit/filtration.hpp"

namespace fibrekit {

/// Syntax or semantic error in an input document, with a 1-based position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

struct IdealText {
  enum class Kind { Generators, Maximal, Unit };
  Kind kind = Kind::Generators;
  std::vector<Monomial> generators;
  int line = 0;
  int column = 0;
};

enum class ReportFormat { Text, Tree };

struct InputDocument {
  RingKind ring = RingKind::PowerSeriesMonomial;
  std::vector<std::string> variables;
  std::vector<Int> semigroup_generators;
  /// Position of the generators/vars value, for ring-level diagnostics.
  int ring_line = 1;
  int ring_column = 1;
  /// I_1, I_2, ... ; more than one term selects the truncated mode.
  std::vector<IdealText> terms;
  std::optional<IdealText> J;
  IdealText K{IdealText::Kind::Maximal, {}, 0, 0};
  std::optional<int> n_max;
  std::optional<int> n_check;
  std::optional<ReportFormat> format;
};

/// Line-oriented `key: value` grammar, see docs/input-format.md.
InputDocument parse_input(std::string_view text);

/// Builds the ring and ideals. Semantic failures (gcd of the generators,
/// J not inside I, bad exponents) are ParseErrors at the offending line.
FiltrationSpec to_spec(const InputDocument& doc);

/// Canonical text of `doc`; parse_input(to_text(doc)) reproduces it.
std::string to_text(const InputDocument& doc);

}  // namespace fibrekit
