#include "skewlab/expr.hpp"

#include <cctype>
#include <climits>

namespace skewlab {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : InvalidInput(message + " at byte " + std::to_string(offset)), offset_(offset) {}

namespace {

class Parser {
 public:
  Parser(const std::string& src, int n) : src_(src), n_(n) {}

  ParsedExpr run() {
    ParsedExpr out;
    out.root = expr();
    skip_space();
    if (pos_ != src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    out.warnings = std::move(warnings_);
    return out;
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= src_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  ExprPtr node(ExprNode::Kind kind, std::size_t offset) {
    auto p = std::make_unique<ExprNode>();
    p->kind = kind;
    p->offset = offset;
    return p;
  }

  ExprPtr binary(ExprNode::Kind kind, std::size_t offset, ExprPtr a, ExprPtr b) {
    auto p = node(kind, offset);
    p->kids.push_back(std::move(a));
    p->kids.push_back(std::move(b));
    return p;
  }

  /// Decimal digits at pos_; throws if there are none.
  std::string digits(const char* what) {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(std::string("expected ") + what, start);
    return src_.substr(start, pos_ - start);
  }

  long small_int(const std::string& text, std::size_t offset) {
    if (text.size() > 9) throw ParseError("integer too large", offset);
    return std::stol(text);
  }

  ExprPtr expr() {
    skip_space();
    const std::size_t start = pos_;
    ExprPtr left;
    if (accept('-')) {
      left = node(ExprNode::Kind::Negate, start);
      left->kids.push_back(term());
    } else {
      accept('+');
      left = term();
    }
    while (true) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+'))
        left = binary(ExprNode::Kind::Sum, at, std::move(left), term());
      else if (accept('-'))
        left = binary(ExprNode::Kind::Difference, at, std::move(left), term());
      else
        return left;
    }
  }

  ExprPtr term() {
    ExprPtr left = factor();
    while (true) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*') || accept('#'))
        left = binary(ExprNode::Kind::Product, at, std::move(left), factor());
      else
        return left;
    }
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    skip_space();
    const std::size_t at = pos_;
    if (accept('^')) {
      skip_space();
      const std::size_t eat = pos_;
      auto p = node(ExprNode::Kind::Power, at);
      p->exponent = static_cast<int>(small_int(digits("a non-negative integer exponent"), eat));
      p->kids.push_back(std::move(base));
      return p;
    }
    return base;
  }

  ExprPtr indexed(ExprNode::Kind kind, char letter, std::size_t start) {
    ++pos_;
    const std::size_t at = pos_;
    auto p = node(kind, start);
    p->index = small_int(digits("an index"), at);
    if (p->index >= n_)
      warnings_.push_back(std::string(1, letter) + std::to_string(p->index) + " at byte " + std::to_string(start) +
                          ": index reduced mod " + std::to_string(n_));
    return p;
  }

  ExprPtr atom() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) throw ParseError("expected an atom but input ended", pos_);
    const char ch = src_[pos_];
    switch (ch) {
      case 'x':
        return indexed(ExprNode::Kind::X, ch, start);
      case 'b':
        return indexed(ExprNode::Kind::B, ch, start);
      case 'c':
        return indexed(ExprNode::Kind::C, ch, start);
      case 'e':
        return indexed(ExprNode::Kind::E, ch, start);
      case 's':
        ++pos_;
        return node(ExprNode::Kind::Sigma, start);
      case 'w':
        ++pos_;
        return node(ExprNode::Kind::Omega, start);
      case '(': {
        ++pos_;
        ExprPtr inner = expr();
        expect(')');
        return inner;
      }
      case '[': {
        ++pos_;
        ExprPtr a = expr();
        expect(',');
        ExprPtr b = expr();
        expect(']');
        return binary(ExprNode::Kind::Bracket, start, std::move(a), std::move(b));
      }
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string text = digits("a number");
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        const std::size_t dpos = pos_;
        const std::string den = digits("a denominator");
        if (den.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", dpos);
        text += "/" + den;
      }
      auto p = node(ExprNode::Kind::Number, start);
      p->value = Rational(text);
      p->value.canonicalize();
      return p;
    }
    throw ParseError(std::string("unexpected '") + ch + "'", start);
  }

  const std::string& src_;
  int n_;
  std::size_t pos_ = 0;
  std::vector<std::string> warnings_;
};

const char* op_text(ExprNode::Kind k) {
  switch (k) {
    case ExprNode::Kind::Sum:
      return " + ";
    case ExprNode::Kind::Difference:
      return " - ";
    default:
      return "*";
  }
}

}  // namespace

ParsedExpr parse_expr(const std::string& src, int n) {
  if (n < 1) throw InvalidInput("context order must be positive");
  return Parser(src, n).run();
}

std::string ast_to_string(const ExprNode& node) {
  using K = ExprNode::Kind;
  switch (node.kind) {
    case K::X:
      return "x" + std::to_string(node.index);
    case K::B:
      return "b" + std::to_string(node.index);
    case K::C:
      return "c" + std::to_string(node.index);
    case K::E:
      return "e" + std::to_string(node.index);
    case K::Sigma:
      return "s";
    case K::Omega:
      return "w";
    case K::Number:
      return node.value.get_str();
    case K::Negate:
      return "(-" + ast_to_string(*node.kids[0]) + ")";
    case K::Power:
      return ast_to_string(*node.kids[0]) + "^" + std::to_string(node.exponent);
    case K::Bracket:
      return "[" + ast_to_string(*node.kids[0]) + ", " + ast_to_string(*node.kids[1]) + "]";
    case K::Sum:
    case K::Difference:
    case K::Product:
      return "(" + ast_to_string(*node.kids[0]) + op_text(node.kind) + ast_to_string(*node.kids[1]) + ")";
  }
  return "";
}

bool uses_group(const ExprNode& node) {
  if (node.kind == ExprNode::Kind::E || node.kind == ExprNode::Kind::Sigma) return true;
  for (const auto& k : node.kids)
    if (uses_group(*k)) return true;
  return false;
}

SmashElem evaluate(const ExprNode& node, const AlgebraContext& ctx) {
  using K = ExprNode::Kind;
  switch (node.kind) {
    case K::X:
      return SmashElem::embed(AlgElem::generator(ctx, static_cast<int>(mod_index(node.index, ctx.n()))));
    case K::B:
      return SmashElem::embed(b_element(ctx, node.index));
    case K::C:
      return SmashElem::embed(c_element(ctx, node.index));
    case K::E:
      return e_element(ctx, node.index);
    case K::Sigma:
      return SmashElem::group(ctx, 1);
    case K::Omega:
      return SmashElem::embed(AlgElem::scalar(ctx, ctx.omega(1)));
    case K::Number:
      return SmashElem::embed(AlgElem::scalar(ctx, ctx.scalar(node.value)));
    case K::Negate:
      return -evaluate(*node.kids[0], ctx);
    case K::Power:
      return power(evaluate(*node.kids[0], ctx), node.exponent);
    case K::Sum:
      return evaluate(*node.kids[0], ctx) + evaluate(*node.kids[1], ctx);
    case K::Difference:
      return evaluate(*node.kids[0], ctx) - evaluate(*node.kids[1], ctx);
    case K::Product:
      return smash_mul(evaluate(*node.kids[0], ctx), evaluate(*node.kids[1], ctx));
    case K::Bracket: {
      const SmashElem a = evaluate(*node.kids[0], ctx);
      const SmashElem b = evaluate(*node.kids[1], ctx);
      if (!a.is_homogeneous() || !b.is_homogeneous())
        throw ParseError("bracket operands must be homogeneous", node.offset);
      return graded_commutator(a, b);
    }
  }
  throw InvalidInput("unknown expression node");
}

AlgElem evaluate_plain(const ExprNode& node, const AlgebraContext& ctx) {
  if (uses_group(node)) throw InvalidInput("expression uses e or s and does not lie in A");
  return evaluate(node, ctx).to_plain();
}

SmashElem parse_smash(const std::string& src, const AlgebraContext& ctx) {
  return evaluate(*parse_expr(src, ctx.n()).root, ctx);
}

AlgElem parse_plain(const std::string& src, const AlgebraContext& ctx) {
  return evaluate_plain(*parse_expr(src, ctx.n()).root, ctx);
}

CycNumber parse_scalar(const std::string& src, const AlgebraContext& ctx) {
  const AlgElem a = parse_plain(src, ctx);
  if (a.is_zero()) return ctx.scalar(0);
  if (a.size() != 1 || a.terms().front().first.degree() != 0)
    throw InvalidInput("'" + src + "' is not a scalar");
  return a.terms().front().second;
}

}  // namespace skewlab
