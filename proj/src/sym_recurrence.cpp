#include "mnv/sym/recurrence.hpp"

#include <stdexcept>

#include "mnv/sym/canonical.hpp"

namespace mnv::sym {

void recurrence_step(CoeffSeries& s, int ell) {
  if (ell != s.levels())
    throw std::invalid_argument("recurrence_step: levels must grow in order");
  if (ell == 0) {
    const SymExpr absq = expr_of(mk_product({atom_u(), atom_ubar()}));
    SymExpr nu10;
    for (const auto& [k, t] : absq.terms())
      nu10.add_term(mk_apply(Op::Dbarinv, t.first), t.second * Rational(1, 4));
    s.nu1.push_back(canonicalize(nu10));
    s.nu2.push_back(expr_of(atom_ubar(), Rational(1, 2)));
    return;
  }
  const SymExpr ubar = expr_of(atom_ubar());
  SymExpr nu2 = scale(mul(ubar, s.nu1[ell - 1]), Rational(1, 2));
  {
    SymExpr dprev;
    for (const auto& [k, t] : s.nu2[ell - 1].terms())
      dprev.add_term(mk_apply(Op::D, t.first), t.second);
    nu2 = nu2 - dprev;
  }
  nu2 = canonicalize(nu2);

  SymExpr inner = mul(expr_of(atom_u()), nu2);
  SymExpr nu1;
  for (const auto& [k, t] : inner.terms())
    nu1.add_term(mk_apply(Op::Dbarinv, t.first), t.second * Rational(1, 2));
  s.nu2.push_back(nu2);
  s.nu1.push_back(canonicalize(nu1));
}

CoeffSeries build_series(int max_ell) {
  CoeffSeries s;
  for (int l = 0; l <= max_ell; ++l) recurrence_step(s, l);
  return s;
}

namespace {

// Returns the atom/operator image and accumulates the sign flips.
NodePtr sharp_node(const NodePtr& n, int& sign) {
  switch (n->tag) {
    case Node::Tag::AtomU:
      return atom_ubar();
    case Node::Tag::AtomUbar:
      return atom_u();
    case Node::Tag::Apply:
      sign = -sign;
      return mk_apply(n->op, sharp_node(n->child, sign));
    case Node::Tag::Product: {
      std::vector<NodePtr> fs;
      fs.reserve(n->factors.size());
      for (const auto& f : n->factors) fs.push_back(sharp_node(f, sign));
      return mk_product(std::move(fs));
    }
  }
  return n;
}

Op conj_op(Op op) {
  switch (op) {
    case Op::D: return Op::Dbar;
    case Op::Dbar: return Op::D;
    case Op::Dinv: return Op::Dbarinv;
    case Op::Dbarinv: return Op::Dinv;
  }
  return op;
}

NodePtr conj_node(const NodePtr& n) {
  switch (n->tag) {
    case Node::Tag::AtomU:
      return atom_ubar();
    case Node::Tag::AtomUbar:
      return atom_u();
    case Node::Tag::Apply:
      return mk_apply(conj_op(n->op), conj_node(n->child));
    case Node::Tag::Product: {
      std::vector<NodePtr> fs;
      fs.reserve(n->factors.size());
      for (const auto& f : n->factors) fs.push_back(conj_node(f));
      return mk_product(std::move(fs));
    }
  }
  return n;
}

}  // namespace

SymExpr sharp_transform(const SymExpr& e) {
  SymExpr out;
  for (const auto& [k, t] : e.terms()) {
    int sign = 1;
    const NodePtr n = sharp_node(t.first, sign);
    out.add_term(n, sign < 0 ? -t.second : t.second);
  }
  return canonicalize(out);
}

SymExpr conj_transform(const SymExpr& e) {
  SymExpr out;
  for (const auto& [k, t] : e.terms()) out.add_term(conj_node(t.first), t.second);
  return canonicalize(out);
}

SymExpr bracket3_raw(const std::vector<SymExpr>& a,
                     const std::vector<SymExpr>& b) {
  if (a.size() < 3 || b.size() < 4)
    throw std::invalid_argument("bracket3: families incomplete");
  SymExpr out = b[3];
  out = out + mul(b[2], a[0]);
  out = out + mul(b[1], a[1]);
  out = out + mul(b[0], a[2]);
  return out;
}

SymExpr bracket3(const std::vector<SymExpr>& a, const std::vector<SymExpr>& b) {
  return canonicalize(bracket3_raw(a, b));
}

}  // namespace mnv::sym
