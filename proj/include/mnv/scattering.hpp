#pragma once

#include <map>

#include "mnv/solver.hpp"

namespace mnv {

struct TransformConfig {
  Grid z_grid;
  Grid k_grid;
  SolverConfig solver;
  int threads = 0;         // 0 = all cores
  bool warm_start = true;  // extrapolate along each row of output nodes
  // Samples below this fraction of the data's max are outside the coupling
  // support; the per-node solves restrict their convolutions to that box.
  double support_rel_eps = 1e-13;
};

// Desk-scale defaults: z in [-8,8) at 256 points per side, k in [-6,6) at
// 128 per side. Gaussian test potentials decay below 1e-12 at the z boundary
// and their data below 1e-9 at the k boundary.
TransformConfig default_config();

struct TransformStats {
  std::map<long, long> iteration_histogram;
  double max_residual = 0.0;
};

// r(k) = (h^2/pi) sum_z e_k(z) u(z) mu1(z,k), one mu-solve per k node.
ComplexField forward_scatter(const ComplexField& u, const TransformConfig& cfg,
                             TransformStats* stats = nullptr);

// u(z) = (h^2/pi) sum_k e_{-k}(z) r(k) nu1(z,k), one nu-solve per z node.
ComplexField inverse_scatter(const ComplexField& r, const TransformConfig& cfg,
                             TransformStats* stats = nullptr);

// Max-norm discrepancies of the three map symmetries:
//   (i)   u -> -u        :  r -> -r
//   (ii)  u -> -u(-z)    :  r -> -r(-k)
//   (iii) u -> conj(u)   :  r -> conj(r(-k))
// Reflections use the lattice involution (exact on the periodic lattice).
struct SymmetryReport {
  double negation = 0.0;
  double neg_reflection = 0.0;
  double conj_reflection = 0.0;
};
SymmetryReport check_symmetries(const ComplexField& u,
                                const TransformConfig& cfg);

}  // namespace mnv
