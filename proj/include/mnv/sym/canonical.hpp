#pragma once

#include "mnv/sym/expr.hpp"

namespace mnv::sym {

// Normal form of the operator calculus. Rewrites, to fixed point:
//   - linearity: operators distribute over sums, scalars move out;
//   - Leibniz: d and db expand fully over products;
//   - collapse: d(di(x)) = di(d(x)) = x and db(dbi(x)) = dbi(db(x)) = x;
//   - normal order: derivatives move inside inverse transforms
//     (d(dbi(x)) -> dbi(d(x))), commuting chains sort by operator;
//   - product rule: dbi(f)*dbi(g) -> dbi(f*dbi(g)) + dbi(g*dbi(f)), and the
//     di analogue, until no product holds two factors with the same outer
//     inverse operator;
//   - products flatten, sort, and merge with exact coefficients.
SymExpr canonicalize(const SymExpr& e);

// True when canonicalize(a - b) is empty.
bool canonically_equal(const SymExpr& a, const SymExpr& b);

}  // namespace mnv::sym
