#include "mnv/sym/canonical.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace mnv::sym {

namespace {

bool is_derivative(Op op) { return op == Op::D || op == Op::Dbar; }

// The inverse that annihilates a derivative and vice versa.
Op partner(Op op) {
  switch (op) {
    case Op::D: return Op::Dinv;
    case Op::Dbar: return Op::Dbarinv;
    case Op::Dinv: return Op::D;
    case Op::Dbarinv: return Op::Dbar;
  }
  return Op::D;
}

SymExpr canon_apply(Op op, const NodePtr& t);
SymExpr canon_product(std::vector<NodePtr> factors);

SymExpr apply_expr(Op op, const SymExpr& e) {
  SymExpr out;
  for (const auto& [k, term] : e.terms()) {
    SymExpr a = canon_apply(op, term.first);
    out = out + scale(a, term.second);
  }
  return out;
}

// op applied to a single canonical term node.
SymExpr canon_apply(Op op, const NodePtr& t) {
  if (t->tag == Node::Tag::Apply) {
    if (t->op == partner(op)) return expr_of(t->child);  // collapse
    if (is_derivative(op)) {
      if (!is_derivative(t->op)) {
        // derivative moves inside the inverse transform
        return apply_expr(t->op, canon_apply(op, t->child));
      }
      // commuting derivative chain: keep enum-sorted, outermost smallest
      if (static_cast<int>(op) > static_cast<int>(t->op))
        return apply_expr(t->op, canon_apply(op, t->child));
      return expr_of(mk_apply(op, t));
    }
    // op is an inverse transform
    if (!is_derivative(t->op) && static_cast<int>(op) > static_cast<int>(t->op))
      return apply_expr(t->op, canon_apply(op, t->child));
    return expr_of(mk_apply(op, t));
  }
  if (t->tag == Node::Tag::Product && is_derivative(op)) {
    // Leibniz
    SymExpr out;
    for (size_t i = 0; i < t->factors.size(); ++i) {
      const SymExpr df = canon_apply(op, t->factors[i]);
      for (const auto& [k, term] : df.terms()) {
        std::vector<NodePtr> fs;
        fs.reserve(t->factors.size());
        for (size_t j = 0; j < t->factors.size(); ++j)
          if (j != i) fs.push_back(t->factors[j]);
        fs.push_back(term.first);
        out = out + scale(canon_product(std::move(fs)), term.second);
      }
    }
    return out;
  }
  return expr_of(mk_apply(op, t));
}

// Product of canonical factor nodes; applies the inverse-pair product rule.
SymExpr canon_product(std::vector<NodePtr> factors) {
  static thread_local int depth = 0;
  if (depth > 64)
    throw std::runtime_error("canonicalize: rewrite recursion too deep");
  struct Guard {
    Guard() { ++depth; }
    ~Guard() { --depth; }
  } guard;

  // flatten
  std::vector<NodePtr> flat;
  for (auto& f : factors) {
    if (f->tag == Node::Tag::Product)
      flat.insert(flat.end(), f->factors.begin(), f->factors.end());
    else
      flat.push_back(std::move(f));
  }
  if (flat.empty()) throw std::logic_error("canon_product: empty product");
  if (flat.size() == 1) return expr_of(flat[0]);

  for (Op inv : {Op::Dbarinv, Op::Dinv}) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < flat.size(); ++i)
      if (flat[i]->tag == Node::Tag::Apply && flat[i]->op == inv)
        idx.push_back(i);
    if (idx.size() >= 2) {
      std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return flat[a]->key < flat[b]->key;
      });
      const size_t i1 = idx[0], i2 = idx[1];
      const NodePtr ft = flat[i1], gt = flat[i2];
      std::vector<NodePtr> rest;
      for (size_t i = 0; i < flat.size(); ++i)
        if (i != i1 && i != i2) rest.push_back(flat[i]);
      // ft*gt -> inv(f * gt) + inv(g * ft)
      const SymExpr pair = apply_expr(inv, canon_product({ft->child, gt})) +
                           apply_expr(inv, canon_product({gt->child, ft}));
      SymExpr out;
      for (const auto& [k, term] : pair.terms()) {
        std::vector<NodePtr> fs = rest;
        fs.push_back(term.first);
        out = out + scale(canon_product(std::move(fs)), term.second);
      }
      return out;
    }
  }
  return expr_of(mk_product(std::move(flat)));
}

SymExpr canon_node(const NodePtr& n);

SymExpr canon_node_uncached(const NodePtr& n) {
  switch (n->tag) {
    case Node::Tag::AtomU:
    case Node::Tag::AtomUbar:
      return expr_of(n);
    case Node::Tag::Apply:
      return apply_expr(n->op, canon_node(n->child));
    case Node::Tag::Product: {
      // canonical factors, then distribute
      SymExpr acc = canon_node(n->factors[0]);
      for (size_t i = 1; i < n->factors.size(); ++i) {
        const SymExpr fi = canon_node(n->factors[i]);
        SymExpr next;
        for (const auto& [ka, ta] : acc.terms())
          for (const auto& [kb, tb] : fi.terms())
            next = next + scale(canon_product({ta.first, tb.first}),
                                ta.second * tb.second);
        acc = next;
      }
      return acc;
    }
  }
  return {};
}

std::mutex g_memo_mu;
std::map<std::string, SymExpr>& memo() {
  static std::map<std::string, SymExpr> m;
  return m;
}

SymExpr canon_node(const NodePtr& n) {
  {
    std::scoped_lock lk(g_memo_mu);
    auto it = memo().find(n->key);
    if (it != memo().end()) return it->second;
  }
  SymExpr e = canon_node_uncached(n);
  {
    std::scoped_lock lk(g_memo_mu);
    memo().emplace(n->key, e);
  }
  return e;
}

}  // namespace

SymExpr canonicalize(const SymExpr& e) {
  SymExpr out;
  for (const auto& [k, term] : e.terms())
    out = out + scale(canon_node(term.first), term.second);
  return out;
}

bool canonically_equal(const SymExpr& a, const SymExpr& b) {
  return canonicalize(a - b).is_zero();
}

}  // namespace mnv::sym
