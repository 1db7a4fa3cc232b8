#include "bess/expression.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <vector>

namespace bess {

namespace {

enum class Tok { number, variable, plus, minus, star, slash, caret, lparen, rparen, lbracket,
                 rbracket, comma, end };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;  // digits for number and variable
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto digits = [&]() {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      std::string d(s.substr(i, j - i));
      i = j;
      return d;
    };
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      out.push_back({Tok::number, start, digits()});
      continue;
    }
    if (ch == 'z') {
      ++i;
      std::string d = digits();
      if (d.empty()) throw ParseError("expected variable index after 'z'", i);
      out.push_back({Tok::variable, start, d});
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case '[': kind = Tok::lbracket; break;
      case ']': kind = Tok::rbracket; break;
      case ',': kind = Tok::comma; break;
      default: throw ParseError(std::string("unexpected character '") + ch + "'", start);
    }
    out.push_back({kind, start, {}});
    ++i;
  }
  out.push_back({Tok::end, s.size(), {}});
  return out;
}

struct Node {
  enum class Kind { number, variable, neg, add, sub, mul, div, pow } kind;
  std::size_t pos = 0;
  mpz_class number;
  std::size_t index = 0;   // variable, 0-based
  unsigned exponent = 0;
  std::unique_ptr<Node> lhs, rhs;
};
using NodePtr = std::unique_ptr<Node>;

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  // Rows of expression trees; a scalar input yields one 1 x 1 row.
  std::vector<std::vector<NodePtr>> parse_input() {
    std::vector<std::vector<NodePtr>> rows;
    if (peek().kind == Tok::lbracket) {
      next();
      do {
        expect(Tok::lbracket, "'['");
        std::vector<NodePtr> row;
        row.push_back(expr());
        while (accept(Tok::comma)) row.push_back(expr());
        expect(Tok::rbracket, "']'");
        if (!rows.empty() && row.size() != rows.front().size()) {
          throw ParseError("matrix rows have different lengths", peek().pos);
        }
        rows.push_back(std::move(row));
      } while (accept(Tok::comma));
      expect(Tok::rbracket, "']'");
    } else {
      std::vector<NodePtr> row;
      row.push_back(expr());
      rows.push_back(std::move(row));
    }
    if (peek().kind != Tok::end) throw ParseError("unexpected trailing input", peek().pos);
    return rows;
  }

  std::size_t max_index() const { return max_index_; }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }
  void expect(Tok kind, const char* what) {
    if (!accept(kind)) throw ParseError(std::string("expected ") + what, peek().pos);
  }

  static NodePtr binary(Node::Kind kind, std::size_t pos, NodePtr a, NodePtr b) {
    auto n = std::make_unique<Node>();
    n->kind = kind;
    n->pos = pos;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
  }

  NodePtr expr() {
    NodePtr left = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const Token& op = next();
      left = binary(op.kind == Tok::plus ? Node::Kind::add : Node::Kind::sub, op.pos,
                    std::move(left), term());
    }
    return left;
  }

  NodePtr term() {
    NodePtr left = unary();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      const Token& op = next();
      left = binary(op.kind == Tok::star ? Node::Kind::mul : Node::Kind::div, op.pos,
                    std::move(left), unary());
    }
    return left;
  }

  NodePtr unary() {
    if (peek().kind == Tok::minus) {
      const std::size_t pos = next().pos;
      return binary(Node::Kind::neg, pos, unary(), nullptr);
    }
    if (accept(Tok::plus)) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (peek().kind == Tok::caret) {
      const std::size_t pos = next().pos;
      const Token& e = peek();
      if (e.kind != Tok::number) throw ParseError("exponent must be a non-negative integer", e.pos);
      next();
      auto n = binary(Node::Kind::pow, pos, std::move(base), nullptr);
      if (e.text.size() > 5 || std::stoul(e.text) > 65535) throw ParseError("exponent too large", e.pos);
      n->exponent = static_cast<unsigned>(std::stoul(e.text));
      return n;
    }
    return base;
  }

  NodePtr primary() {
    const Token& t = peek();
    if (t.kind == Tok::number) {
      next();
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::number;
      n->pos = t.pos;
      n->number = mpz_class(t.text, 10);
      return n;
    }
    if (t.kind == Tok::variable) {
      next();
      if (t.text.size() > 3) throw ParseError("variable index too large", t.pos);
      const std::size_t idx = std::stoul(t.text);
      if (idx == 0) throw ParseError("variables are numbered from z1", t.pos);
      if (idx > kMaxVariables) throw ParseError("variable index too large", t.pos);
      max_index_ = std::max(max_index_, idx);
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::variable;
      n->pos = t.pos;
      n->index = idx - 1;
      return n;
    }
    if (accept(Tok::lparen)) {
      NodePtr inner = expr();
      expect(Tok::rparen, "')'");
      return inner;
    }
    throw ParseError("expected a number, variable or '('", t.pos);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t max_index_ = 0;
};

struct Value {
  RationalFunction f;
  std::optional<mpq_class> exact;  // set for variable-free subtrees
};

class Evaluator {
 public:
  Evaluator(const Field& field, std::size_t n) : field_(field), n_(n) {}

  Value eval(const Node& node) const {
    switch (node.kind) {
      case Node::Kind::number: {
        mpq_class q(node.number);
        return {RationalFunction::constant(field_, n_, FieldElement(field_, node.number)), q};
      }
      case Node::Kind::variable:
        return {RationalFunction(Polynomial::variable(field_, n_, node.index)), std::nullopt};
      case Node::Kind::neg: {
        Value v = eval(*node.lhs);
        if (v.exact) v.exact = -*v.exact;
        return {-v.f, v.exact};
      }
      case Node::Kind::pow: {
        Value v = eval(*node.lhs);
        RationalFunction out = RationalFunction::one(field_, n_);
        for (unsigned i = 0; i < node.exponent; ++i) out *= v.f;
        std::optional<mpq_class> ex;
        if (v.exact) {
          mpq_class e(1);
          for (unsigned i = 0; i < node.exponent; ++i) e *= *v.exact;
          ex = e;
        }
        return {out, ex};
      }
      default: break;
    }
    Value a = eval(*node.lhs);
    Value b = eval(*node.rhs);
    const bool both = a.exact && b.exact;
    switch (node.kind) {
      case Node::Kind::add:
        return {a.f + b.f, both ? std::optional<mpq_class>(*a.exact + *b.exact) : std::nullopt};
      case Node::Kind::sub:
        return {a.f - b.f, both ? std::optional<mpq_class>(*a.exact - *b.exact) : std::nullopt};
      case Node::Kind::mul:
        return {a.f * b.f, both ? std::optional<mpq_class>(*a.exact * *b.exact) : std::nullopt};
      case Node::Kind::div: {
        if (b.f.is_zero()) {
          if (b.exact && sgn(*b.exact) != 0) {
            throw FieldLiteralError("divisor " + b.exact->get_str() + " is zero in " +
                                    field_.to_string() + " (offset " + std::to_string(node.pos) +
                                    ")");
          }
          throw DivisionByZeroPolynomial("division by the zero polynomial at offset " +
                                         std::to_string(node.pos));
        }
        std::optional<mpq_class> ex;
        if (both) ex = *a.exact / *b.exact;
        return {a.f / b.f, ex};
      }
      default: break;
    }
    throw std::logic_error("unhandled expression node");
  }

 private:
  Field field_;
  std::size_t n_;
};

}  // namespace

RationalMatrix parse_rational_matrix(std::string_view text, const Field& field,
                                     std::size_t min_vars) {
  Parser parser(text);
  auto rows = parser.parse_input();
  const std::size_t n = std::max(parser.max_index(), min_vars);
  if (n > kMaxVariables) throw DimensionMismatch("too many variables");
  const Evaluator ev(field, n);
  RationalMatrix out(field, n, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) out.set(i, j, ev.eval(*rows[i][j]).f);
  }
  return out;
}

std::size_t max_variable_index(std::string_view text) {
  Parser parser(text);
  parser.parse_input();
  return parser.max_index();
}

}  // namespace bess
