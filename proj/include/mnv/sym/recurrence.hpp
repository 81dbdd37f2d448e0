#pragma once

#include <vector>

#include "mnv/sym/expr.hpp"

namespace mnv::sym {

// Large-spectral-parameter expansion coefficients of the scattering
// solutions, generated in the potential:
//   nu1_0 = 1/4 dbi(u ub),   nu2_0 = 1/2 ub,
//   nu2_l = 1/2 ub nu1_{l-1} - d(nu2_{l-1}),
//   nu1_l = 1/2 dbi(u nu2_l),
// all stored canonicalized.
struct CoeffSeries {
  std::vector<SymExpr> nu1;
  std::vector<SymExpr> nu2;
  int levels() const { return static_cast<int>(nu1.size()); }
};

// Extends the series to level ell (must be levels()); level 0 seeds it.
void recurrence_step(CoeffSeries& s, int ell);
CoeffSeries build_series(int max_ell);

// The conjugate-reflect substitution: u <-> ub and every operator picks up
// a factor of -1. Maps the plain coefficient family onto the sharp one.
SymExpr sharp_transform(const SymExpr& e);

// Formal complex conjugation: u <-> ub, d <-> db, di <-> dbi, coefficients
// unchanged.
SymExpr conj_transform(const SymExpr& e);

// Coefficient of k^-4 in (1 + sum_l a_l / k^{l+1}) (sum_m b_m / k^{m+1}):
//   b3 + b2 a0 + b1 a1 + b0 a2, canonicalized.
SymExpr bracket3(const std::vector<SymExpr>& a, const std::vector<SymExpr>& b);

// Same combination without any rewriting, for slice-wise cancellation checks.
SymExpr bracket3_raw(const std::vector<SymExpr>& a,
                     const std::vector<SymExpr>& b);

}  // namespace mnv::sym
