#include "mnv/sym/numeric_eval.hpp"

#include <map>

#include "mnv/cauchy.hpp"
#include "mnv/spectral.hpp"

namespace mnv::sym {

namespace {

struct Evaluator {
  const ComplexField& u;
  std::map<std::string, CArray> cache;

  const CArray& eval(const NodePtr& n) {
    auto it = cache.find(n->key);
    if (it != cache.end()) return it->second;
    CArray v;
    switch (n->tag) {
      case Node::Tag::AtomU:
        v = u.v;
        break;
      case Node::Tag::AtomUbar:
        v = u.v.conjugate();
        break;
      case Node::Tag::Apply: {
        ComplexField child(u.grid);
        child.v = eval(n->child);
        ComplexField r(u.grid);
        switch (n->op) {
          case Op::D: r = d_z(child); break;
          case Op::Dbar: r = dbar_z(child); break;
          case Op::Dinv: r = d_inv(child); break;
          case Op::Dbarinv: r = dbar_inv(child); break;
        }
        v = std::move(r.v);
        break;
      }
      case Node::Tag::Product: {
        v = eval(n->factors[0]);
        for (size_t i = 1; i < n->factors.size(); ++i) v *= eval(n->factors[i]);
        break;
      }
    }
    return cache.emplace(n->key, std::move(v)).first->second;
  }
};

}  // namespace

ComplexField numeric_eval(const SymExpr& e, const ComplexField& u) {
  Evaluator ev{u, {}};
  ComplexField out(u.grid);
  for (const auto& [k, term] : e.terms())
    out.v += term.second.to_double() * ev.eval(term.first);
  return out;
}

}  // namespace mnv::sym
