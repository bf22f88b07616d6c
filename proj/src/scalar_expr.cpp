// Distributed under the MIT License.
// See LICENSE.txt for details.

#include "cotlift/scalar_expr.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "cotlift/errors.hpp"

namespace cotlift {

struct ScalarExpr::Node {
  enum class Op { kConst, kVar, kAdd, kSub, kMul, kDiv, kNeg, kPow, kExp };
  Op op;
  double value = 0.0;  // kConst
  int exponent = 0;    // kPow
  std::shared_ptr<const Node> a, b;
};

namespace {

using Node = ScalarExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Op op, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

Jet eval_node(const Node& n, const Jet& t) {
  switch (n.op) {
    case Node::Op::kConst: return Jet(n.value);
    case Node::Op::kVar: return t;
    case Node::Op::kAdd: return eval_node(*n.a, t) + eval_node(*n.b, t);
    case Node::Op::kSub: return eval_node(*n.a, t) - eval_node(*n.b, t);
    case Node::Op::kMul: return eval_node(*n.a, t) * eval_node(*n.b, t);
    case Node::Op::kDiv: return eval_node(*n.a, t) / eval_node(*n.b, t);
    case Node::Op::kNeg: return -eval_node(*n.a, t);
    case Node::Op::kPow: return pow(eval_node(*n.a, t), n.exponent);
    case Node::Op::kExp: return exp(eval_node(*n.a, t));
  }
  throw Error("scalar expression: corrupt node");
}

void print_node(const Node& n, std::ostream& os) {
  switch (n.op) {
    case Node::Op::kConst: os << n.value; return;
    case Node::Op::kVar: os << 't'; return;
    case Node::Op::kAdd: os << '('; print_node(*n.a, os); os << " + "; print_node(*n.b, os); os << ')'; return;
    case Node::Op::kSub: os << '('; print_node(*n.a, os); os << " - "; print_node(*n.b, os); os << ')'; return;
    case Node::Op::kMul: os << '('; print_node(*n.a, os); os << '*'; print_node(*n.b, os); os << ')'; return;
    case Node::Op::kDiv: os << '('; print_node(*n.a, os); os << '/'; print_node(*n.b, os); os << ')'; return;
    case Node::Op::kNeg: os << "(-"; print_node(*n.a, os); os << ')'; return;
    case Node::Op::kPow: print_node(*n.a, os); os << '^' << n.exponent; return;
    case Node::Op::kExp: os << "exp("; print_node(*n.a, os); os << ')'; return;
  }
}

// Recursive-descent parser for the profile mini-grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('+'|'-')* power
//   power  := atom ('^' ('-')? integer)?
//   atom   := number | 't' | '(' expr ')' | 'exp' '(' expr ')'
class Parser {
public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr run() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

private:
  NodePtr expr() {
    NodePtr e = term();
    for (;;) {
      skip_ws();
      if (eat('+')) e = make(Node::Op::kAdd, e, term());
      else if (eat('-')) e = make(Node::Op::kSub, e, term());
      else return e;
    }
  }

  NodePtr term() {
    NodePtr e = factor();
    for (;;) {
      skip_ws();
      if (eat('*')) e = make(Node::Op::kMul, e, factor());
      else if (eat('/')) e = make(Node::Op::kDiv, e, factor());
      else return e;
    }
  }

  NodePtr factor() {
    skip_ws();
    if (eat('-')) return make(Node::Op::kNeg, factor());
    if (eat('+')) return factor();
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    skip_ws();
    if (!eat('^')) return base;
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected integer exponent after '^'");
    int e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      e = 10 * e + (s_[pos_++] - '0');
    auto n = std::make_shared<Node>();
    n->op = Node::Op::kPow;
    n->a = base;
    n->exponent = neg ? -e : e;
    return n;
  }

  NodePtr atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      skip_ws();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (s_.compare(pos_, 3, "exp") == 0) {
      pos_ += 3;
      skip_ws();
      if (!eat('(')) fail("expected '(' after exp");
      NodePtr e = expr();
      skip_ws();
      if (!eat(')')) fail("expected ')'");
      return make(Node::Op::kExp, e);
    }
    if (c == 't') {
      ++pos_;
      return make(Node::Op::kVar);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* start = s_.c_str() + pos_;
      char* end = nullptr;
      double v = std::strtod(start, &end);
      if (end == start) fail("malformed number");
      pos_ += static_cast<std::size_t>(end - start);
      auto n = std::make_shared<Node>();
      n->op = Node::Op::kConst;
      n->value = v;
      return n;
    }
    fail(std::string("unexpected character '") + c + "'");
    return nullptr;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ConfigError("profile parse error at position " + std::to_string(pos_) +
                      " in \"" + s_ + "\": " + what);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

} // namespace

ScalarExpr ScalarExpr::constant(double v) {
  auto n = std::make_shared<Node>();
  n->op = Node::Op::kConst;
  n->value = v;
  return ScalarExpr(n);
}

ScalarExpr ScalarExpr::variable() { return ScalarExpr(make(Node::Op::kVar)); }

ScalarExpr ScalarExpr::parse(const std::string& text) {
  return ScalarExpr(Parser(text).run());
}

ScalarExpr ScalarExpr::operator+(const ScalarExpr& rhs) const {
  return ScalarExpr(make(Node::Op::kAdd, node_, rhs.node_));
}
ScalarExpr ScalarExpr::operator-(const ScalarExpr& rhs) const {
  return ScalarExpr(make(Node::Op::kSub, node_, rhs.node_));
}
ScalarExpr ScalarExpr::operator*(const ScalarExpr& rhs) const {
  return ScalarExpr(make(Node::Op::kMul, node_, rhs.node_));
}
ScalarExpr ScalarExpr::operator/(const ScalarExpr& rhs) const {
  return ScalarExpr(make(Node::Op::kDiv, node_, rhs.node_));
}
ScalarExpr ScalarExpr::operator-() const { return ScalarExpr(make(Node::Op::kNeg, node_)); }

ScalarExpr ScalarExpr::pow(int e) const {
  auto n = std::make_shared<Node>();
  n->op = Node::Op::kPow;
  n->a = node_;
  n->exponent = e;
  return ScalarExpr(n);
}

ScalarExpr ScalarExpr::exp(ScalarExpr arg) {
  return ScalarExpr(make(Node::Op::kExp, arg.node_));
}

Jet ScalarExpr::eval(double t) const {
  if (!node_) throw Error("evaluating empty scalar expression");
  return eval_node(*node_, Jet::variable(t));
}

std::string ScalarExpr::str() const {
  if (!node_) return "<empty>";
  std::ostringstream os;
  print_node(*node_, os);
  return os.str();
}

Jet eval_jet(const ScalarExpr& expr, double t, int order) {
  if (order < 0 || order > Jet::order)
    throw ConfigError("eval_jet: order must lie in [0, 4]");
  Jet j = expr.eval(t);
  for (int k = order + 1; k <= Jet::order; ++k) j.d[static_cast<std::size_t>(k)] = 0.0;
  return j;
}

} // namespace cotlift
