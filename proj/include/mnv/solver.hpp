#pragma once

#include <stdexcept>
#include <string>

#include "mnv/cauchy.hpp"
#include "mnv/field.hpp"

namespace mnv {

struct SolverConfig {
  enum class Method { Auto, Born, Krylov };
  double tolerance = 1e-10;      // relative L2
  int max_iterations = 200;      // Born sweeps / Krylov operator applications
  Method method = Method::Auto;  // Auto = Born with Krylov fallback
};

struct NonConvergence : std::runtime_error {
  Complex node;
  double last_residual;
  long iterations;
  NonConvergence(const std::string& what, Complex node_, double res, long it)
      : std::runtime_error(what), node(node_), last_residual(res), iterations(it) {}
};

// (first, second) is (mu1, mu2), (nu1, nu2) or (nu1#, nu2#) depending on the
// solve; first ~ 1 and second ~ 0 at large argument.
struct ScatteringSolution {
  ComplexField first;
  ComplexField second;
  long iterations = 0;
  double residual_norm = 0.0;
};

// All three systems share the fixed-point shape
//   first  = 1 + (1/4) dbar_inv( a . d_inv( conj(a) . first ) ),
//   second = (1/2) dbar_inv( a . conj(first) ),
// with the coupling weight a:
//   mu  (in z, fixed k):  a = e_k(z) u(z)
//   nu  (in k, fixed z):  a = e_k(z)|_k conj(r(k))
//   nu# (in k, fixed z):  a = e_{-k}(z)|_k r(k)
ScatteringSolution solve_mu(const ComplexField& u, Complex k,
                            const SolverConfig& cfg = {});
ScatteringSolution solve_nu(const ComplexField& r, Complex z,
                            const SolverConfig& cfg = {});
ScatteringSolution solve_nu_sharp(const ComplexField& r, Complex z,
                                  const SolverConfig& cfg = {});

// eta(z, .) over the k-grid:
//   nu2#(-z,k) (1/2) e_k conj(r) conj(nu2(z,k))
//     + (1/2) e_{-k}(z) r(k) conj(nu1#(-z,k)) nu1(z,k)
ComplexField eta(const ComplexField& r, Complex z, const SolverConfig& cfg = {});

// Checks dbar_k[nu2# nu1] = eta and dbar_k[nu1# nu2] = conj(eta) in windowed
// form: the products carry O(1/k) tails, so the spectral derivative is taken
// of chi*g with a smooth plateau cutoff chi and the exact dbar(chi) term moved
// to the right-hand side. Returned values are relative L2 discrepancies.
struct EtaIdentityReport {
  double disc_eta = 0.0;
  double disc_eta_bar = 0.0;
};
EtaIdentityReport eta_identity_check(const ComplexField& r, Complex z,
                                     const SolverConfig& cfg = {});

// (1/pi) sum_{|k| <= R} k^n dbar_g(k) h^2; the n-th large-k expansion
// coefficient of g when dbar_g decays rapidly.
Complex extract_coeff(const ComplexField& dbar_g, int n, double R);

// Residuals of the two coupled equations in their discrete integral form,
// relative L2.
struct PairResiduals {
  double first_eq = 0.0;
  double second_eq = 0.0;
};
enum class SystemKind { Mu, Nu, NuSharp };
PairResiduals system_residuals(const ScatteringSolution& sol,
                               const ComplexField& data, Complex node,
                               SystemKind kind);

// Mean |first - 1| and |second| over the outermost sample ring, plus the
// triangle-inequality bound on the Cauchy tail at the boundary (the 1/|k|
// asymptote of the continuum solution; the ring means cannot beat it).
struct BoundaryReport {
  double first_dev = 0.0;
  double second_dev = 0.0;
  double tail_bound = 0.0;
};
BoundaryReport boundary_ring_report(const ScatteringSolution& sol,
                                    const ComplexField& data, Complex node,
                                    SystemKind kind);

namespace detail {

struct Box {
  int r0 = 0, r1 = 0, c0 = 0, c1 = 0;  // half-open
  int rows() const { return r1 - r0; }
  int cols() const { return c1 - c0; }
};

// Minimal box containing |v| > rel_eps * max|v|, expanded by margin cells.
Box support_box(const CArray& v, double rel_eps = 1e-13, int margin = 2);

// The coupling weight for each system, over the full grid of `data`.
ComplexField system_weight(SystemKind kind, const ComplexField& data,
                           Complex node);

// Subgrid fixed-point core. `a` is the coupling weight restricted to the
// box; x holds the first component and is used as the initial guess.
class CoupledCore {
 public:
  CoupledCore(CArray a, double h);

  // out = (1/4) dbar_inv( a . d_inv( conj(a) . in ) )
  void apply_T(const CArray& in, CArray& out);

  // x <- fixed point of x = 1 + T x. Returns true on convergence.
  bool born(CArray& x, double tol, int max_iter, long& iters, double& resid);

  // GMRES on (I - T) x = 1 over the stacked real/imaginary representation.
  bool gmres(CArray& x, double tol, int max_apps, long& apps, double& resid);

  const CArray& weight() const { return a_; }

 private:
  CArray a_;
  double h_;
  CArray t1_, t2_;
};

// Drives Born (with Krylov fallback, per cfg.method) on a core. x is both
// the initial guess and the result. Throws NonConvergence.
struct CoreRun {
  long iterations = 0;
  double residual = 0.0;
};
CoreRun run_coupled(CoupledCore& core, CArray& x, const SolverConfig& cfg,
                    Complex node, const char* what);

}  // namespace detail
}  // namespace mnv
