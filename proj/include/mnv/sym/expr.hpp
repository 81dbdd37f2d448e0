#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mnv/sym/rational.hpp"

namespace mnv::sym {

// Operator alphabet for the calculus over words in {u, ub, d, db, di, dbi}.
enum class Op : int { D = 0, Dbar = 1, Dinv = 2, Dbarinv = 3 };

const char* op_name(Op op);  // "d", "db", "di", "dbi"

struct Node;
using NodePtr = std::shared_ptr<const Node>;

// Immutable term tree. Products are kept flat and sorted by key, so key
// equality is structural equality of canonical spellings.
struct Node {
  enum class Tag { AtomU, AtomUbar, Apply, Product };
  Tag tag;
  Op op = Op::D;                 // Apply only
  NodePtr child;                 // Apply only
  std::vector<NodePtr> factors;  // Product only; sorted by key
  std::string key;
};

NodePtr atom_u();
NodePtr atom_ubar();
NodePtr mk_apply(Op op, NodePtr child);
// Flattens nested products and sorts the factor list.
NodePtr mk_product(std::vector<NodePtr> factors);

// Number of atom leaves (the term's order in the potential).
int term_order(const NodePtr& n);

// Exact-rational linear combination of terms, keyed by node spelling.
class SymExpr {
 public:
  using Term = std::pair<NodePtr, Rational>;
  using Map = std::map<std::string, Term>;

  SymExpr() = default;

  void add_term(const NodePtr& n, const Rational& c);
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long size() const { return static_cast<long>(terms_.size()); }

  friend SymExpr operator+(const SymExpr& a, const SymExpr& b);
  friend SymExpr operator-(const SymExpr& a, const SymExpr& b);
  friend bool operator==(const SymExpr& a, const SymExpr& b);

 private:
  Map terms_;
};

SymExpr expr_of(const NodePtr& n, const Rational& c = Rational(1));
SymExpr scale(const SymExpr& e, const Rational& c);
// Raw distributive product (no rewriting).
SymExpr mul(const SymExpr& a, const SymExpr& b);
// Terms of a given order.
SymExpr order_part(const SymExpr& e, int order);
int max_order(const SymExpr& e);

}  // namespace mnv::sym
