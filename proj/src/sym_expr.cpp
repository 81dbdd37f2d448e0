#include "mnv/sym/expr.hpp"

#include <algorithm>

namespace mnv::sym {

const char* op_name(Op op) {
  switch (op) {
    case Op::D: return "d";
    case Op::Dbar: return "db";
    case Op::Dinv: return "di";
    case Op::Dbarinv: return "dbi";
  }
  return "?";
}

NodePtr atom_u() {
  static const NodePtr n = [] {
    auto p = std::make_shared<Node>();
    p->tag = Node::Tag::AtomU;
    p->key = "u";
    return p;
  }();
  return n;
}

NodePtr atom_ubar() {
  static const NodePtr n = [] {
    auto p = std::make_shared<Node>();
    p->tag = Node::Tag::AtomUbar;
    p->key = "v";
    return p;
  }();
  return n;
}

NodePtr mk_apply(Op op, NodePtr child) {
  auto p = std::make_shared<Node>();
  p->tag = Node::Tag::Apply;
  p->op = op;
  p->key = std::string(1, "dbij"[static_cast<int>(op)]) + "(" + child->key + ")";
  p->child = std::move(child);
  return p;
}

NodePtr mk_product(std::vector<NodePtr> factors) {
  std::vector<NodePtr> flat;
  flat.reserve(factors.size());
  for (auto& f : factors) {
    if (f->tag == Node::Tag::Product)
      flat.insert(flat.end(), f->factors.begin(), f->factors.end());
    else
      flat.push_back(std::move(f));
  }
  if (flat.size() == 1) return flat[0];
  std::sort(flat.begin(), flat.end(),
            [](const NodePtr& a, const NodePtr& b) { return a->key < b->key; });
  auto p = std::make_shared<Node>();
  p->tag = Node::Tag::Product;
  std::string key = "*(";
  for (size_t i = 0; i < flat.size(); ++i) {
    if (i) key += ",";
    key += flat[i]->key;
  }
  key += ")";
  p->factors = std::move(flat);
  p->key = std::move(key);
  return p;
}

int term_order(const NodePtr& n) {
  switch (n->tag) {
    case Node::Tag::AtomU:
    case Node::Tag::AtomUbar:
      return 1;
    case Node::Tag::Apply:
      return term_order(n->child);
    case Node::Tag::Product: {
      int s = 0;
      for (const auto& f : n->factors) s += term_order(f);
      return s;
    }
  }
  return 0;
}

void SymExpr::add_term(const NodePtr& n, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(n->key);
  if (it == terms_.end()) {
    terms_.emplace(n->key, Term{n, c});
    return;
  }
  const Rational s = it->second.second + c;
  if (s.is_zero())
    terms_.erase(it);
  else
    it->second.second = s;
}

SymExpr operator+(const SymExpr& a, const SymExpr& b) {
  SymExpr out = a;
  for (const auto& [k, t] : b.terms_) out.add_term(t.first, t.second);
  return out;
}

SymExpr operator-(const SymExpr& a, const SymExpr& b) {
  SymExpr out = a;
  for (const auto& [k, t] : b.terms_) out.add_term(t.first, -t.second);
  return out;
}

bool operator==(const SymExpr& a, const SymExpr& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !(ia->second.second == ib->second.second))
      return false;
  }
  return true;
}

SymExpr expr_of(const NodePtr& n, const Rational& c) {
  SymExpr e;
  e.add_term(n, c);
  return e;
}

SymExpr scale(const SymExpr& e, const Rational& c) {
  SymExpr out;
  if (c.is_zero()) return out;
  for (const auto& [k, t] : e.terms()) out.add_term(t.first, t.second * c);
  return out;
}

SymExpr mul(const SymExpr& a, const SymExpr& b) {
  SymExpr out;
  for (const auto& [ka, ta] : a.terms())
    for (const auto& [kb, tb] : b.terms())
      out.add_term(mk_product({ta.first, tb.first}), ta.second * tb.second);
  return out;
}

SymExpr order_part(const SymExpr& e, int order) {
  SymExpr out;
  for (const auto& [k, t] : e.terms())
    if (term_order(t.first) == order) out.add_term(t.first, t.second);
  return out;
}

int max_order(const SymExpr& e) {
  int m = 0;
  for (const auto& [k, t] : e.terms()) m = std::max(m, term_order(t.first));
  return m;
}

}  // namespace mnv::sym
