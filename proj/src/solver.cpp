#include "mnv/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "mnv/bump.hpp"
#include "mnv/spectral.hpp"

namespace mnv {
namespace detail {

Box support_box(const CArray& v, double rel_eps, int margin) {
  const int nr = static_cast<int>(v.rows());
  const int nc = static_cast<int>(v.cols());
  const double thresh = v.abs().maxCoeff() * rel_eps;
  int r0 = nr, r1 = -1, c0 = nc, c1 = -1;
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c)
      if (std::abs(v(r, c)) > thresh) {
        r0 = std::min(r0, r);
        r1 = std::max(r1, r);
        c0 = std::min(c0, c);
        c1 = std::max(c1, c);
      }
  if (r1 < 0) return Box{0, 0, 0, 0};
  r0 = std::max(0, r0 - margin);
  c0 = std::max(0, c0 - margin);
  r1 = std::min(nr, r1 + 1 + margin);
  c1 = std::min(nc, c1 + 1 + margin);
  return Box{r0, r1, c0, c1};
}

ComplexField system_weight(SystemKind kind, const ComplexField& data,
                           Complex node) {
  // Im(kz) is symmetric in k and z, so e_k sampled over the k-grid at fixed z
  // is e_k(grid, z) verbatim.
  ComplexField e = e_k(data.grid, node);
  ComplexField out(data.grid);
  switch (kind) {
    case SystemKind::Mu:
      out.v = e.v * data.v;
      break;
    case SystemKind::Nu:
      out.v = e.v * data.v.conjugate();
      break;
    case SystemKind::NuSharp:
      out.v = e.v.conjugate() * data.v;
      break;
  }
  return out;
}

CoupledCore::CoupledCore(CArray a, double h) : a_(std::move(a)), h_(h) {}

void CoupledCore::apply_T(const CArray& in, CArray& out) {
  auto& op = thread_cauchy(static_cast<int>(a_.rows()),
                           static_cast<int>(a_.cols()), h_);
  t1_ = a_.conjugate() * in;
  op.apply_d_inv(t1_, t2_);
  t1_ = a_ * t2_;
  op.apply_dbar_inv(t1_, out);
  out *= 0.25;
}

bool CoupledCore::born(CArray& x, double tol, int max_iter, long& iters,
                       double& resid) {
  CArray tx;
  resid = 1.0;
  for (iters = 1; iters <= max_iter; ++iters) {
    apply_T(x, tx);
    tx += Complex(1.0);
    const double dn = std::sqrt((tx - x).abs2().sum());
    const double xn = std::sqrt(tx.abs2().sum());
    resid = dn / xn;
    x.swap(tx);
    if (resid < tol) return true;
  }
  iters = max_iter;
  return false;
}

namespace {
// Real inner product of the stacked representation: Re <u, v>.
double rdot(const CArray& u, const CArray& v) {
  return (u.real() * v.real() + u.imag() * v.imag()).sum();
}
}  // namespace

bool CoupledCore::gmres(CArray& x, double tol, int max_apps, long& apps,
                        double& resid) {
  // Unrestarted GMRES on A x = b with A = I - T, b = 1, zero initial guess.
  const int m = std::min(max_apps, 120);
  const long nr = a_.rows(), nc = a_.cols();
  CArray b = CArray::Constant(nr, nc, Complex(1.0));
  const double bnorm = std::sqrt(b.abs2().sum());

  std::vector<CArray> basis;
  basis.reserve(m + 1);
  basis.push_back(b / bnorm);
  std::vector<std::vector<double>> H;  // H[j] holds column j (size j+2)
  std::vector<double> cs, sn, g;
  g.push_back(bnorm);

  CArray w;
  apps = 0;
  for (int j = 0; j < m; ++j) {
    apply_T(basis[j], w);
    ++apps;
    w = basis[j] - w;  // A v_j
    std::vector<double> h(j + 2, 0.0);
    for (int i = 0; i <= j; ++i) {
      h[i] = rdot(basis[i], w);
      w -= h[i] * basis[i];
    }
    h[j + 1] = std::sqrt(w.abs2().sum());
    if (h[j + 1] > 0) basis.push_back(w / h[j + 1]);

    for (int i = 0; i < j; ++i) {
      const double t = cs[i] * h[i] + sn[i] * h[i + 1];
      h[i + 1] = -sn[i] * h[i] + cs[i] * h[i + 1];
      h[i] = t;
    }
    const double denom = std::hypot(h[j], h[j + 1]);
    cs.push_back(denom > 0 ? h[j] / denom : 1.0);
    sn.push_back(denom > 0 ? h[j + 1] / denom : 0.0);
    h[j] = denom;
    h[j + 1] = 0.0;
    H.push_back(h);
    g.push_back(-sn[j] * g[j]);
    g[j] *= cs[j];

    resid = std::abs(g[j + 1]) / bnorm;
    if (resid < tol || j == m - 1 || h[j + 1] == 0.0) {
      const int k = j + 1;
      std::vector<double> y(k, 0.0);
      for (int i = k - 1; i >= 0; --i) {
        double s = g[i];
        for (int l = i + 1; l < k; ++l) s -= H[l][i] * y[l];
        y[i] = s / H[i][i];
      }
      x = CArray::Zero(nr, nc);
      for (int i = 0; i < k; ++i) x += y[i] * basis[i];
      if (resid < tol) return true;
      if (h[j + 1] == 0.0) return resid < tol;
    }
  }
  return false;
}

CoreRun run_coupled(CoupledCore& core, CArray& x, const SolverConfig& cfg,
                    Complex node, const char* what) {
  CoreRun res;
  bool ok = false;
  if (cfg.method != SolverConfig::Method::Krylov) {
    ok = core.born(x, cfg.tolerance, cfg.max_iterations, res.iterations,
                   res.residual);
  }
  if (!ok && cfg.method != SolverConfig::Method::Born) {
    long apps = 0;
    ok = core.gmres(x, cfg.tolerance, cfg.max_iterations, apps, res.residual);
    res.iterations += apps;
  }
  if (!ok)
    throw NonConvergence(std::string(what) + ": no convergence at node (" +
                             std::to_string(node.real()) + ", " +
                             std::to_string(node.imag()) + "), residual " +
                             std::to_string(res.residual),
                         node, res.residual, res.iterations);
  return res;
}

namespace {

ScatteringSolution solve_system(SystemKind kind, const ComplexField& data,
                                Complex node, const SolverConfig& cfg,
                                const char* what) {
  const Grid& g = data.grid;
  ComplexField a = detail::system_weight(kind, data, node);
  const Box box = support_box(a.v);
  ScatteringSolution sol;
  sol.first = ComplexField(g, CArray::Constant(g.N, g.N, 1.0));
  sol.second = ComplexField(g);
  if (box.rows() == 0) {  // zero data
    sol.iterations = 1;
    sol.residual_norm = 0.0;
    return sol;
  }

  CArray a_sub = a.v.block(box.r0, box.c0, box.rows(), box.cols());
  CoupledCore core(std::move(a_sub), g.h);
  CArray x = CArray::Constant(box.rows(), box.cols(), Complex(1.0));
  CoreRun res = run_coupled(core, x, cfg, node, what);

  // Full-grid finalization: one application of the defining equations to the
  // converged restriction, with the asymptotic value outside the box.
  CArray x_ext = CArray::Constant(g.N, g.N, Complex(1.0));
  x_ext.block(box.r0, box.c0, box.rows(), box.cols()) = x;
  auto& full_op = thread_cauchy(g.N, g.N, g.h);
  CArray t1 = a.v.conjugate() * x_ext, t2;
  full_op.apply_d_inv(t1, t2);
  t1 = a.v * t2;
  full_op.apply_dbar_inv(t1, t2);
  sol.first.v += 0.25 * t2;
  t1 = a.v * x_ext.conjugate();
  full_op.apply_dbar_inv(t1, t2);
  sol.second.v = 0.5 * t2;
  sol.iterations = res.iterations;
  sol.residual_norm = res.residual;
  return sol;
}

}  // namespace
}  // namespace detail

ScatteringSolution solve_mu(const ComplexField& u, Complex k,
                            const SolverConfig& cfg) {
  return detail::solve_system(SystemKind::Mu, u, k, cfg, "solve_mu");
}

ScatteringSolution solve_nu(const ComplexField& r, Complex z,
                            const SolverConfig& cfg) {
  return detail::solve_system(SystemKind::Nu, r, z, cfg, "solve_nu");
}

ScatteringSolution solve_nu_sharp(const ComplexField& r, Complex z,
                                  const SolverConfig& cfg) {
  return detail::solve_system(SystemKind::NuSharp, r, z, cfg, "solve_nu_sharp");
}

ComplexField eta(const ComplexField& r, Complex z, const SolverConfig& cfg) {
  const ScatteringSolution nu = solve_nu(r, z, cfg);
  const ScatteringSolution nus = solve_nu_sharp(r, z, cfg);
  const ComplexField e = e_k(r.grid, z);
  ComplexField out(r.grid);
  out.v = nus.second.v * (0.5 * e.v * r.v.conjugate()) * nu.second.v.conjugate() +
          (0.5 * e.v.conjugate() * r.v) * nus.first.v.conjugate() * nu.first.v;
  return out;
}

EtaIdentityReport eta_identity_check(const ComplexField& r, Complex z,
                                     const SolverConfig& cfg) {
  const Grid& g = r.grid;
  const ScatteringSolution nu = solve_nu(r, z, cfg);
  const ScatteringSolution nus = solve_nu_sharp(r, z, cfg);
  const ComplexField e = e_k(g, z);

  ComplexField et(g);
  et.v = nus.second.v * (0.5 * e.v * r.v.conjugate()) * nu.second.v.conjugate() +
         (0.5 * e.v.conjugate() * r.v) * nus.first.v.conjugate() * nu.first.v;

  // Plateau cutoff in |k|^2 and its exact dbar.
  const RadialPlateau w{0.55 * 0.55 * g.L * g.L, 0.88 * 0.88 * g.L * g.L};
  ComplexField chi(g), dbar_chi(g);
  for (int rr = 0; rr < g.N; ++rr)
    for (int cc = 0; cc < g.N; ++cc) {
      const Complex k = g.point(rr, cc);
      const double s = std::norm(k);
      chi.v(rr, cc) = w.value(s);
      dbar_chi.v(rr, cc) = w.dvalue(s) * k;
    }

  const double eta_norm = l2_norm(et);
  EtaIdentityReport rep;
  {
    ComplexField g1(g);
    g1.v = nus.second.v * nu.first.v;
    ComplexField lhs = dbar_z(ComplexField(g, chi.v * g1.v));
    ComplexField rhs(g);
    rhs.v = chi.v * et.v + dbar_chi.v * g1.v;
    rep.disc_eta = l2_norm(lhs - rhs) / eta_norm;
  }
  {
    ComplexField g2(g);
    g2.v = nus.first.v * nu.second.v;
    ComplexField lhs = dbar_z(ComplexField(g, chi.v * g2.v));
    ComplexField rhs(g);
    rhs.v = chi.v * et.v.conjugate() + dbar_chi.v * g2.v;
    rep.disc_eta_bar = l2_norm(lhs - rhs) / eta_norm;
  }
  return rep;
}

Complex extract_coeff(const ComplexField& dbar_g, int n, double R) {
  if (n < 1) throw std::invalid_argument("extract_coeff: n must be >= 1");
  const Grid& g = dbar_g.grid;
  if (!(R > 0) || R > g.L)
    throw std::invalid_argument("extract_coeff: radius outside the grid");
  Complex sum = 0.0;
  for (int r = 0; r < g.N; ++r)
    for (int c = 0; c < g.N; ++c) {
      const Complex k = g.point(r, c);
      if (std::norm(k) > R * R) continue;
      Complex kn = 1.0;
      for (int i = 0; i < n; ++i) kn *= k;
      sum += kn * dbar_g.v(r, c);
    }
  return sum * (g.h * g.h / std::numbers::pi);
}

PairResiduals system_residuals(const ScatteringSolution& sol,
                               const ComplexField& data, Complex node,
                               SystemKind kind) {
  const Grid& g = data.grid;
  const ComplexField a = detail::system_weight(kind, data, node);
  auto& op = detail::thread_cauchy(g.N, g.N, g.h);
  PairResiduals out;
  CArray t1 = a.v * sol.second.v.conjugate(), t2;
  op.apply_dbar_inv(t1, t2);
  const CArray res1 = sol.first.v - 1.0 - 0.5 * t2;
  out.first_eq =
      std::sqrt(res1.abs2().sum()) / std::sqrt(sol.first.v.abs2().sum());
  t1 = a.v * sol.first.v.conjugate();
  op.apply_dbar_inv(t1, t2);
  const CArray res2 = sol.second.v - 0.5 * t2;
  const double denom = std::sqrt(sol.second.v.abs2().sum());
  out.second_eq = std::sqrt(res2.abs2().sum()) / (denom > 0 ? denom : 1.0);
  return out;
}

BoundaryReport boundary_ring_report(const ScatteringSolution& sol,
                                    const ComplexField& data, Complex node,
                                    SystemKind kind) {
  const Grid& g = data.grid;
  BoundaryReport rep;
  double n1 = 0, n2 = 0;
  long count = 0;
  for (int r = 0; r < g.N; ++r)
    for (int c = 0; c < g.N; ++c) {
      if (r != 0 && r != g.N - 1 && c != 0 && c != g.N - 1) continue;
      n1 += std::abs(sol.first.v(r, c) - 1.0);
      n2 += std::abs(sol.second.v(r, c));
      ++count;
    }
  rep.first_dev = n1 / count;
  rep.second_dev = n2 / count;

  // |Cauchy tail| <= (h^2/pi) sum |integrand| / dist(boundary, support).
  const ComplexField a = detail::system_weight(kind, data, node);
  const detail::Box box = detail::support_box(a.v);
  if (box.rows() == 0) return rep;
  double dist = g.h;
  dist = std::max(dist, g.h * std::min({box.r0, box.c0, g.N - box.r1,
                                        g.N - box.c1}));
  auto& op = detail::thread_cauchy(g.N, g.N, g.h);
  CArray t1 = a.v.conjugate() * sol.first.v, t2;
  op.apply_d_inv(t1, t2);
  const double mass =
      (a.v.abs() * t2.abs()).sum() * g.h * g.h / std::numbers::pi;
  rep.tail_bound = 0.25 * mass / dist + 0.5 * (a.v.abs().sum() * g.h * g.h /
                                               std::numbers::pi) /
                                            dist;
  return rep;
}

}  // namespace mnv
