#pragma once

#include <string>

#include "mnv/sym/expr.hpp"

namespace mnv::sym {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text syntax: atoms `u`, `ub`; operators d(...), db(...), di(...), dbi(...);
// products with `*`; rational coefficients like -3/8; sums with + and -.
// parse gives the raw expression (no rewriting); print emits a form that
// parses back to the identical term map.
SymExpr parse_expr(const std::string& text);
std::string print_expr(const SymExpr& e);

}  // namespace mnv::sym
