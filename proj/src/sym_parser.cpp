#include "mnv/sym/parser.hpp"

#include <cctype>
#include <vector>

namespace mnv::sym {

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char get() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("unexpected end of expression");
    return s[pos++];
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           std::isalpha(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos) throw ParseError("expected identifier at '" +
                                       s.substr(start, 8) + "'");
    return s.substr(start, pos - start);
  }
  long long integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos) throw ParseError("expected integer");
    return std::stoll(s.substr(start, pos - start));
  }
};

struct Parser {
  Lexer lex;

  SymExpr expression() {
    SymExpr out;
    bool neg = lex.eat('-');
    out = out + term(neg);
    for (;;) {
      const char c = lex.peek();
      if (c == '+' || c == '-') {
        lex.get();
        out = out + term(c == '-');
      } else {
        break;
      }
    }
    return out;
  }

  SymExpr term(bool negate) {
    Rational coeff(negate ? -1 : 1);
    if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
      const long long n = lex.integer();
      long long d = 1;
      if (lex.eat('/')) d = lex.integer();
      coeff = coeff * Rational(n, d);
      lex.eat('*');
    }
    SymExpr prod = factor();
    while (lex.eat('*')) prod = mul(prod, factor());
    return scale(prod, coeff);
  }

  // Operators applied to sums distribute term-wise with scalars pulled out;
  // the term map cannot hold an operator over a sum.
  SymExpr factor() {
    const std::string id = lex.ident();
    if (id == "u") return expr_of(atom_u());
    if (id == "ub") return expr_of(atom_ubar());
    Op op;
    if (id == "d")
      op = Op::D;
    else if (id == "db")
      op = Op::Dbar;
    else if (id == "di")
      op = Op::Dinv;
    else if (id == "dbi")
      op = Op::Dbarinv;
    else
      throw ParseError("unknown symbol '" + id + "'");
    if (!lex.eat('(')) throw ParseError("expected '(' after " + id);
    SymExpr inner = expression();
    if (!lex.eat(')')) throw ParseError("expected ')' closing " + id);
    SymExpr out;
    for (const auto& [k, t] : inner.terms())
      out.add_term(mk_apply(op, t.first), t.second);
    return out;
  }
};

}  // namespace

SymExpr parse_expr(const std::string& text) {
  Parser p{Lexer{text}};
  SymExpr e = p.expression();
  p.lex.skip_ws();
  if (p.lex.pos != text.size())
    throw ParseError("trailing input at '" + text.substr(p.lex.pos, 12) + "'");
  return e;
}

namespace {

void print_node(const NodePtr& n, std::string& out) {
  switch (n->tag) {
    case Node::Tag::AtomU:
      out += "u";
      return;
    case Node::Tag::AtomUbar:
      out += "ub";
      return;
    case Node::Tag::Apply:
      out += op_name(n->op);
      out += "(";
      print_node(n->child, out);
      out += ")";
      return;
    case Node::Tag::Product:
      for (size_t i = 0; i < n->factors.size(); ++i) {
        if (i) out += "*";
        print_node(n->factors[i], out);
      }
      return;
  }
}

}  // namespace

std::string print_expr(const SymExpr& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, term] : e.terms()) {
    Rational c = term.second;
    const bool neg = c.num() < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (neg) c = -c;
    if (!c.is_one()) {
      out += c.str();
      out += " ";
    }
    print_node(term.first, out);
  }
  return out;
}

}  // namespace mnv::sym
