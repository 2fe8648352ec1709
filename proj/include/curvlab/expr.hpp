#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "curvlab/chart.hpp"

namespace curvlab {

/// Names an expression may refer to: the four chart coordinates and named
/// constants (parameters). `pi` is always available.
struct Vocabulary {
  std::array<std::string, kDim> coordinates;
  std::map<std::string, double> constants;
};

/// Functions accepted by the expression language, in the order they are documented.
const std::vector<std::string>& expression_functions();

namespace detail {
struct ExprNode;
}

/// A compiled scalar expression over the chart coordinates.
///
/// Grammar (recursive descent, usual precedence, `^` right-associative and
/// binding tighter than unary minus):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' unary)?
///   primary := number | identifier | function '(' expr (',' expr)? ')' | '(' expr ')'
/// Exponents (of `^` and `pow`) must not depend on the coordinates.
class GuardExpression;
GuardExpression parse_guard(std::string_view text, const Vocabulary& vocab);

class Expression {
 public:
  Expression() = default;

  Jet2 operator()(const Coords& x) const;
  double operator()(const Point4& x) const;

  bool depends_on_coordinates() const noexcept;
  const std::string& source() const noexcept { return source_; }

 private:
  friend Expression parse_expression(std::string_view, const Vocabulary&);
  friend class GuardExpression;
  friend GuardExpression parse_guard(std::string_view, const Vocabulary&);
  std::shared_ptr<const detail::ExprNode> root_;
  std::string source_;
};

/// Throws ParseError with line 1 and the 1-based column of the offending token.
Expression parse_expression(std::string_view text, const Vocabulary& vocab);

/// A chain of comparisons such as "0 < theta < pi" or "r^2 - 2*M*r > 0".
class GuardExpression {
 public:
  /// False where any comparison fails or a side is not finite.
  bool operator()(const Point4& x) const;
  const std::string& source() const noexcept { return source_; }

 private:
  friend GuardExpression parse_guard(std::string_view, const Vocabulary&);
  std::vector<Expression> operands_;
  std::vector<std::string> ops_;
  std::string source_;
};

/// Throws ParseError when the text has no comparison operator (the guard
/// would not be boolean-valued) or on any expression error.
GuardExpression parse_guard(std::string_view text, const Vocabulary& vocab);

}  // namespace curvlab
