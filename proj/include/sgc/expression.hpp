#pragma once

#include <memory>
#include <string>

#include "sgc/manifold.hpp"

namespace sgc {

struct ExprNode;

/// Scalar expression in the ambient coordinates x1..xN.
///
/// Grammar: numbers, x1..xN, pi, e, + - * / ^ (right associative), unary
/// minus, parentheses and the unary functions sin cos tan asin acos atan sinh
/// cosh tanh atanh exp log sqrt abs.
class Expression {
 public:
  /// Throws ParseError with the offending position.
  static Expression parse(const std::string& text, int n_vars);

  double eval(const Vec& x) const;
  const std::string& text() const { return text_; }

 private:
  Expression(std::string text, std::shared_ptr<const ExprNode> root) : text_(std::move(text)), root_(std::move(root)) {}

  std::string text_;
  std::shared_ptr<const ExprNode> root_;
};

}  // namespace sgc
