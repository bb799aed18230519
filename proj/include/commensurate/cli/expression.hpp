#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace commensurate::cli {

/// Literal forms an instance accepts inside expressions.
enum class LiteralStyle {
  integer,     ///< -12
  dyadic,      ///< (3/4; -2)
  matrix,      ///< [[1,1/2],[0,1]]
  permutation, ///< (1 2)(3 4), ()
  table_index, ///< #5
};

struct Syntax {
  std::vector<std::string> generators;
  std::vector<LiteralStyle> literals;
  /// Validates literal text; may throw MalformedLiteral (reported as a parse
  /// error) or ContractViolation (passed through).
  std::function<void(std::string_view)> check_literal;

  bool accepts(LiteralStyle style) const;
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, const std::string &message)
      : std::runtime_error("syntax error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Group-word syntax tree.
///
///   expr := term { "*" term }
///   term := atom [ "^" signed-int ]
///   atom := generator | literal | "(" expr ")" | "inv" "(" expr ")"
///         | "embed" "(" expr ")" | "psi" "(" target "," expr ")"
struct Expression {
  enum class Kind { generator, literal, product, power, inverse, embed, psi };

  Kind kind = Kind::generator;
  /// Generator name, literal text, or psi target.
  std::string text;
  std::int64_t exponent = 0;
  std::vector<Expression> operands;
  /// Offset of the node's first character in the source.
  std::size_t position = 0;
};

/// Structural equality, ignoring source positions.
bool same_shape(const Expression &a, const Expression &b);

/// Positions are 0-based byte offsets.
Expression parse_expression(std::string_view source, const Syntax &syntax);

/// Canonical text: no spaces around operators, minimal parentheses.
std::string render(const Expression &expr);

} // namespace commensurate::cli
