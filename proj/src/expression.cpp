#include "sgc/expression.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <string_view>
#include <variant>
#include <vector>

#include "sgc/errors.hpp"

namespace sgc {

using UnaryFn = double (*)(double);

struct ExprNode {
  enum class Op { Const, Var, Neg, Add, Sub, Mul, Div, Pow, Call };
  Op op = Op::Const;
  double value = 0.0;
  int var = 0;
  UnaryFn fn = nullptr;
  std::shared_ptr<const ExprNode> lhs;
  std::shared_ptr<const ExprNode> rhs;

  double eval(const Vec& x) const {
    switch (op) {
      case Op::Const: return value;
      case Op::Var: return x[var];
      case Op::Neg: return -lhs->eval(x);
      case Op::Add: return lhs->eval(x) + rhs->eval(x);
      case Op::Sub: return lhs->eval(x) - rhs->eval(x);
      case Op::Mul: return lhs->eval(x) * rhs->eval(x);
      case Op::Div: return lhs->eval(x) / rhs->eval(x);
      case Op::Pow: return std::pow(lhs->eval(x), rhs->eval(x));
      case Op::Call: return fn(lhs->eval(x));
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

UnaryFn lookup_function(std::string_view name) {
  struct Entry {
    std::string_view name;
    UnaryFn fn;
  };
  static const Entry table[] = {
      {"sin", [](double v) { return std::sin(v); }},     {"cos", [](double v) { return std::cos(v); }},
      {"tan", [](double v) { return std::tan(v); }},     {"asin", [](double v) { return std::asin(v); }},
      {"acos", [](double v) { return std::acos(v); }},   {"atan", [](double v) { return std::atan(v); }},
      {"sinh", [](double v) { return std::sinh(v); }},   {"cosh", [](double v) { return std::cosh(v); }},
      {"tanh", [](double v) { return std::tanh(v); }},   {"atanh", [](double v) { return std::atanh(v); }},
      {"exp", [](double v) { return std::exp(v); }},     {"log", [](double v) { return std::log(v); }},
      {"sqrt", [](double v) { return std::sqrt(v); }},   {"abs", [](double v) { return std::abs(v); }},
  };
  for (const auto& e : table) {
    if (e.name == name) return e.fn;
  }
  return nullptr;
}

class Parser {
 public:
  Parser(std::string_view text, int n_vars) : text_(text), n_vars_(n_vars) {}

  NodePtr parse() {
    NodePtr root = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static NodePtr binary(ExprNode::Op op, NodePtr a, NodePtr b) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
  }

  NodePtr parse_sum() {
    NodePtr node = parse_product();
    for (;;) {
      if (accept('+')) node = binary(ExprNode::Op::Add, node, parse_product());
      else if (accept('-')) node = binary(ExprNode::Op::Sub, node, parse_product());
      else return node;
    }
  }

  NodePtr parse_product() {
    NodePtr node = parse_unary();
    for (;;) {
      if (accept('*')) node = binary(ExprNode::Op::Mul, node, parse_unary());
      else if (accept('/')) node = binary(ExprNode::Op::Div, node, parse_unary());
      else return node;
    }
  }

  NodePtr parse_unary() {
    if (accept('-')) {
      auto n = std::make_shared<ExprNode>();
      n->op = ExprNode::Op::Neg;
      n->lhs = parse_unary();
      return n;
    }
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  // Exponent binds tighter than unary minus on its left: -x^2 == -(x^2).
  NodePtr parse_power() {
    NodePtr base = parse_atom();
    if (accept('^')) return binary(ExprNode::Op::Pow, base, parse_unary());
    return base;
  }

  NodePtr parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
    fail("unexpected character");
  }

  NodePtr parse_number() {
    const std::string rest(text_.substr(pos_));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(rest, &used);
    } catch (const std::exception&) {
      fail("malformed number");
    }
    pos_ += used;
    auto n = std::make_shared<ExprNode>();
    n->value = v;
    return n;
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    auto n = std::make_shared<ExprNode>();
    if (name == "pi") {
      n->value = std::numbers::pi;
      return n;
    }
    if (name == "e") {
      n->value = std::numbers::e;
      return n;
    }
    if (name.size() > 1 && name[0] == 'x' &&
        name.find_first_not_of("0123456789", 1) == std::string_view::npos) {
      const int index = std::stoi(std::string(name.substr(1)));
      if (index < 1 || index > n_vars_) {
        pos_ = start;
        fail("variable " + std::string(name) + " out of range 1.." + std::to_string(n_vars_));
      }
      n->op = ExprNode::Op::Var;
      n->var = index - 1;
      return n;
    }
    if (UnaryFn fn = lookup_function(name)) {
      if (!accept('(')) fail("expected '(' after function name");
      n->op = ExprNode::Op::Call;
      n->fn = fn;
      n->lhs = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return n;
    }
    pos_ = start;
    fail("unknown identifier '" + std::string(name) + "'");
  }

  std::string_view text_;
  int n_vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(const std::string& text, int n_vars) {
  Parser parser(text, n_vars);
  NodePtr root = parser.parse();
  return Expression(text, std::move(root));
}

double Expression::eval(const Vec& x) const { return root_->eval(x); }

}  // namespace sgc
