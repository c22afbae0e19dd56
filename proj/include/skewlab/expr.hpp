// Element expressions for the command line.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'#') factor)*
//   factor := atom ('^' INT)?
//   atom   := 'x'INT | 'b'INT | 'c'INT | 'e'INT | 's' | 'w' | RATIONAL
//           | '(' expr ')' | '[' expr ',' expr ']'
//
// 'w' is the root of unity and '#' multiplies like '*', so every canonical
// printout of an element parses back to the same element.

#ifndef SKEWLAB_EXPR_HPP
#define SKEWLAB_EXPR_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "skewlab/smash_product.hpp"

namespace skewlab {

class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct ExprNode {
  enum class Kind { X, B, C, E, Sigma, Omega, Number, Sum, Difference, Product, Power, Negate, Bracket };

  Kind kind;
  std::size_t offset = 0;
  long index = 0;       // X, B, C, E
  Rational value;       // Number
  int exponent = 0;     // Power
  std::vector<std::unique_ptr<ExprNode>> kids;
};

using ExprPtr = std::unique_ptr<ExprNode>;

struct ParsedExpr {
  ExprPtr root;
  std::vector<std::string> warnings;
};

/// Throws ParseError with the byte offset of the offending input.
ParsedExpr parse_expr(const std::string& src, int n);

/// Fully parenthesized form of the tree, e.g. "((b0*b1) + (b1*b0))".
std::string ast_to_string(const ExprNode& node);

/// True if the tree mentions e or s, forcing smash-product evaluation.
bool uses_group(const ExprNode& node);

SmashElem evaluate(const ExprNode& node, const AlgebraContext& ctx);
/// Evaluates in A; throws InvalidInput if the tree mentions e or s.
AlgElem evaluate_plain(const ExprNode& node, const AlgebraContext& ctx);

/// parse + evaluate; a scalar expression yields a degree-0 element.
SmashElem parse_smash(const std::string& src, const AlgebraContext& ctx);
AlgElem parse_plain(const std::string& src, const AlgebraContext& ctx);
/// Parses a degree-0 expression such as "1/2*w^2 - w" to a field element.
CycNumber parse_scalar(const std::string& src, const AlgebraContext& ctx);

}  // namespace skewlab

#endif  // SKEWLAB_EXPR_HPP
