#pragma once

#include "mnv/field.hpp"
#include "mnv/sym/expr.hpp"

namespace mnv::sym {

// Interprets atoms as u / conj(u) and the operators as the discrete field
// operators (spectral derivatives, solid Cauchy transforms) on u's grid.
ComplexField numeric_eval(const SymExpr& e, const ComplexField& u);

}  // namespace mnv::sym
