#include "curvlab/expr.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <optional>

namespace curvlab {

namespace detail {

enum class Op { number, coord, neg, add, sub, mul, div, pow, call };
enum class Fn { sin, cos, tan, cot, sqrt, exp, log };

struct ExprNode {
  Op op = Op::number;
  double value = 0.0;  // number literal, or constant exponent for pow
  int coord = 0;
  Fn fn = Fn::sin;
  std::shared_ptr<const ExprNode> a, b;
};

}  // namespace detail

namespace {

using detail::ExprNode;
using detail::Fn;
using detail::Op;
using NodePtr = std::shared_ptr<const ExprNode>;

const std::vector<std::pair<std::string, Fn>> kUnary = {{"sin", Fn::sin},   {"cos", Fn::cos},   {"tan", Fn::tan},
                                                         {"cot", Fn::cot},   {"sqrt", Fn::sqrt}, {"exp", Fn::exp},
                                                         {"log", Fn::log}};

enum class Tok { number, ident, op, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  double number = 0.0;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.column = static_cast<int>(i) + 1;
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
      size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.')) ++j;
      if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
        size_t k = j + 1;
        if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
        if (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
          j = k;
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        }
      }
      t.kind = Tok::number;
      t.text = std::string(s.substr(i, j - i));
      size_t used = 0;
      try {
        t.number = std::stod(t.text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != t.text.size()) throw ParseError("malformed number '" + t.text + "'", 1, t.column);
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = Tok::ident;
      t.text = std::string(s.substr(i, j - i));
      i = j;
    } else if ((c == '<' || c == '>') && i + 1 < s.size() && s[i + 1] == '=') {
      t.kind = Tok::op;
      t.text = std::string(s.substr(i, 2));
      i += 2;
    } else if (std::string_view("+-*/^(),<>").find(c) != std::string_view::npos) {
      t.kind = Tok::op;
      t.text = std::string(1, c);
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", 1, t.column);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.column = static_cast<int>(s.size()) + 1;
  out.push_back(end);
  return out;
}

NodePtr make(Op op, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<ExprNode>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

NodePtr number(double v) {
  auto n = std::make_shared<ExprNode>();
  n->op = Op::number;
  n->value = v;
  return n;
}

bool depends(const NodePtr& n) {
  if (!n) return false;
  if (n->op == Op::coord) return true;
  return depends(n->a) || depends(n->b);
}

double cot_d(double x) { return std::cos(x) / std::sin(x); }

template <class T>
T apply_fn(Fn f, const T& x) {
  using std::cos, std::exp, std::log, std::sin, std::sqrt, std::tan;
  switch (f) {
    case Fn::sin: return sin(x);
    case Fn::cos: return cos(x);
    case Fn::tan: return tan(x);
    case Fn::cot:
      if constexpr (std::is_same_v<T, double>)
        return cot_d(x);
      else
        return cot(x);
    case Fn::sqrt: return sqrt(x);
    case Fn::exp: return exp(x);
    case Fn::log: return log(x);
  }
  return x;
}

template <class T, class Vars>
T eval(const ExprNode& n, const Vars& x) {
  using std::pow;
  switch (n.op) {
    case Op::number: return T(n.value);
    case Op::coord: return x[static_cast<size_t>(n.coord)];
    case Op::neg: return -eval<T>(*n.a, x);
    case Op::add: return eval<T>(*n.a, x) + eval<T>(*n.b, x);
    case Op::sub: return eval<T>(*n.a, x) - eval<T>(*n.b, x);
    case Op::mul: return eval<T>(*n.a, x) * eval<T>(*n.b, x);
    case Op::div: return eval<T>(*n.a, x) / eval<T>(*n.b, x);
    case Op::pow: return pow(eval<T>(*n.a, x), n.value);
    case Op::call: return apply_fn(n.fn, eval<T>(*n.a, x));
  }
  return T(0.0);
}

class Parser {
 public:
  Parser(std::string_view text, const Vocabulary& vocab) : toks_(tokenize(text)), vocab_(vocab) {}

  NodePtr sum() {
    NodePtr lhs = term();
    while (is_op("+") || is_op("-")) {
      const Op op = next().text == "+" ? Op::add : Op::sub;
      lhs = make(op, lhs, term());
    }
    return lhs;
  }

  bool at_comparison() const {
    return is_op("<") || is_op(">") || is_op("<=") || is_op(">=");
  }
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  bool at_end() const { return peek().kind == Tok::end; }

  [[noreturn]] void fail(const std::string& what, const Token& t) const {
    throw ParseError(what, 1, t.column);
  }

 private:
  bool is_op(const char* s) const { return peek().kind == Tok::op && peek().text == s; }

  void expect(const char* s) {
    if (!is_op(s)) fail(std::string("expected '") + s + "'" + found(), peek());
    ++pos_;
  }

  std::string found() const {
    return peek().kind == Tok::end ? " at end of expression" : ", found '" + peek().text + "'";
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (is_op("*") || is_op("/")) {
      const Op op = next().text == "*" ? Op::mul : Op::div;
      lhs = make(op, lhs, unary());
    }
    return lhs;
  }

  NodePtr unary() {
    if (is_op("-")) {
      ++pos_;
      return make(Op::neg, unary());
    }
    if (is_op("+")) {
      ++pos_;
      return unary();
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (is_op("^")) {
      const Token at = next();
      return make_pow(base, unary(), at);
    }
    return base;
  }

  NodePtr make_pow(NodePtr base, const NodePtr& exponent, const Token& at) {
    if (depends(exponent)) fail("exponent must not depend on the coordinates", at);
    auto n = std::make_shared<ExprNode>();
    n->op = Op::pow;
    n->a = std::move(base);
    n->value = eval<double>(*exponent, Point4{});
    return n;
  }

  NodePtr primary() {
    const Token t = peek();
    if (t.kind == Tok::number) {
      ++pos_;
      return number(t.number);
    }
    if (is_op("(")) {
      ++pos_;
      NodePtr inner = sum();
      expect(")");
      return inner;
    }
    if (t.kind == Tok::ident) {
      ++pos_;
      for (const auto& [name, fn] : kUnary)
        if (name == t.text) {
          if (!is_op("(")) fail("function '" + t.text + "' needs an argument list", t);
          ++pos_;
          auto n = std::make_shared<ExprNode>();
          n->op = Op::call;
          n->fn = fn;
          n->a = sum();
          expect(")");
          return n;
        }
      if (t.text == "pow") {
        if (!is_op("(")) fail("function 'pow' needs an argument list", t);
        ++pos_;
        NodePtr base = sum();
        expect(",");
        const Token at = peek();
        NodePtr exponent = sum();
        expect(")");
        return make_pow(base, exponent, at);
      }
      for (int i = 0; i < kDim; ++i)
        if (vocab_.coordinates[static_cast<size_t>(i)] == t.text) {
          auto n = std::make_shared<ExprNode>();
          n->op = Op::coord;
          n->coord = i;
          return n;
        }
      if (const auto it = vocab_.constants.find(t.text); it != vocab_.constants.end()) return number(it->second);
      if (t.text == "pi") return number(std::numbers::pi);
      fail("unknown identifier '" + t.text + "'", t);
    }
    if (t.kind == Tok::end) fail("unexpected end of expression", t);
    fail("unexpected '" + t.text + "'", t);
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  const Vocabulary& vocab_;
};

}  // namespace

const std::vector<std::string>& expression_functions() {
  static const std::vector<std::string> names = {"sin", "cos", "tan", "cot", "sqrt", "exp", "log", "pow"};
  return names;
}

Jet2 Expression::operator()(const Coords& x) const {
  if (!root_) throw ContractViolation("evaluating an empty expression");
  return eval<Jet2>(*root_, x);
}

double Expression::operator()(const Point4& x) const {
  if (!root_) throw ContractViolation("evaluating an empty expression");
  return eval<double>(*root_, x);
}

bool Expression::depends_on_coordinates() const noexcept { return depends(root_); }

Expression parse_expression(std::string_view text, const Vocabulary& vocab) {
  Parser p(text, vocab);
  Expression e;
  e.root_ = p.sum();
  if (!p.at_end()) {
    const Token t = p.peek();
    if (p.at_comparison()) p.fail("comparison '" + t.text + "' is only allowed in guards", t);
    p.fail("unexpected '" + t.text + "' after complete expression", t);
  }
  e.source_ = std::string(text);
  return e;
}

GuardExpression parse_guard(std::string_view text, const Vocabulary& vocab) {
  Parser p(text, vocab);
  GuardExpression g;
  g.source_ = std::string(text);
  Expression first;
  first.root_ = p.sum();
  g.operands_.push_back(first);
  while (p.at_comparison()) {
    g.ops_.push_back(p.next().text);
    Expression rhs;
    rhs.root_ = p.sum();
    g.operands_.push_back(rhs);
  }
  if (!p.at_end()) p.fail("unexpected '" + p.peek().text + "' in guard", p.peek());
  if (g.ops_.empty()) throw ParseError("guard is not a comparison (expected <, <=, > or >=)", 1, 1);
  return g;
}

bool GuardExpression::operator()(const Point4& x) const {
  std::vector<double> v;
  v.reserve(operands_.size());
  for (const auto& e : operands_) {
    const double d = e(x);
    if (!std::isfinite(d)) return false;
    v.push_back(d);
  }
  for (size_t i = 0; i < ops_.size(); ++i) {
    const double a = v[i], b = v[i + 1];
    const std::string& op = ops_[i];
    const bool ok = op == "<" ? a < b : op == "<=" ? a <= b : op == ">" ? a > b : a >= b;
    if (!ok) return false;
  }
  return true;
}

}  // namespace curvlab
