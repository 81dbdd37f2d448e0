#pragma once

#include <stdexcept>

#include "mnv/sym/recurrence.hpp"

namespace mnv::sym {

struct DerivationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Full derivation of the equation of motion for the third-order phase:
// series to level 3, sharp family, the two k^-4 brackets, the order-5/7
// cancellations, and the assembled right-hand side
//   u_t + d^3 u + db^3 u = rhs  (four 3/4-coefficient cubic terms).
struct Derivation {
  CoeffSeries plain;
  std::vector<SymExpr> sharp1, sharp2;  // levels 0..3
  SymExpr bracket_i1;                   // [nu1 nu2#]_3, canonical
  SymExpr bracket_i2;                   // [nu2 nu1#]_3, canonical
  SymExpr u_dot;                        // -2 bracket_i1 + 2 conj(bracket_i2)
  SymExpr rhs;                          // cubic part of u_dot
  bool order5_zero = false;             // both brackets
  bool order7_zero = false;
  bool linear_part_ok = false;          // order-1 part is -(d^3 + db^3) u
  bool grouping_ok = false;             // rhs splits as the four 3/4 groups
  bool normalization_ok = false;        // (4/3) rhs = unit-coefficient bracket
};

// Throws DerivationError (message names the first differing canonical term)
// if any internal assertion fails.
Derivation derive_mnv();

}  // namespace mnv::sym
