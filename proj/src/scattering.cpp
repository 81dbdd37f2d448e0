#include "mnv/scattering.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "mnv/threading.hpp"

namespace mnv {

TransformConfig default_config() {
  TransformConfig cfg;
  cfg.z_grid = make_grid(8.0, 256);
  cfg.k_grid = make_grid(6.0, 128);
  return cfg;
}

namespace {

using detail::Box;
using detail::CoupledCore;

// Shared per-transform context: the data restricted to its support box and
// the 1-D coordinate slices needed to assemble e_k on the box.
struct NodeSolver {
  const ComplexField& data;
  Box box;
  CArray data_sub;
  std::vector<double> ys, xs;  // coordinates over the box
  double h;
  double quad;  // h^2 / pi

  NodeSolver(const ComplexField& d, double rel_eps) : data(d) {
    box = detail::support_box(d.v, rel_eps);
    if (box.rows() > 0)
      data_sub = d.v.block(box.r0, box.c0, box.rows(), box.cols());
    ys.resize(box.rows());
    xs.resize(box.cols());
    for (int r = 0; r < box.rows(); ++r) ys[r] = d.grid.y_at(box.r0 + r);
    for (int c = 0; c < box.cols(); ++c) xs[c] = d.grid.x_at(box.c0 + c);
    h = d.grid.h;
    quad = h * h / std::numbers::pi;
  }

  // e_node over the box; Im(node*w) pairing, w the box coordinate.
  void weight(Complex node, bool conj_e, bool conj_data, CArray& a) const {
    const double n1 = node.real(), n2 = node.imag();
    const double sgn = conj_e ? 2.0 : -2.0;
    a.resize(box.rows(), box.cols());
    std::vector<Complex> col_phase(box.cols());
    for (int c = 0; c < box.cols(); ++c) {
      const double t = sgn * n2 * xs[c];
      col_phase[c] = Complex(std::cos(t), std::sin(t));
    }
    for (int r = 0; r < box.rows(); ++r) {
      const double t = sgn * n1 * ys[r];
      const Complex rp(std::cos(t), std::sin(t));
      for (int c = 0; c < box.cols(); ++c) {
        const Complex d =
            conj_data ? std::conj(data_sub(r, c)) : data_sub(r, c);
        a(r, c) = rp * col_phase[c] * d;
      }
    }
  }
};

struct NodeOutcome {
  Complex value;
  long iterations;
  double residual;
};

// One row of output nodes, scanned sequentially; each solve starts from the
// secant extrapolation of the previous two solutions along the row.
template <typename WeightFn, typename ReduceFn>
void scan_row(const NodeSolver& ns, const Grid& out_grid, int row,
              const SolverConfig& scfg, bool warm, const char* what,
              WeightFn&& make_weight, ReduceFn&& reduce,
              std::vector<NodeOutcome>& out) {
  CArray x, prev, tmp, a;
  int history = 0;
  for (int col = 0; col < out_grid.N; ++col) {
    const Complex node = out_grid.point(row, col);
    make_weight(node, a);
    CoupledCore core(a, ns.h);
    if (!warm || history == 0) {
      x = CArray::Constant(ns.box.rows(), ns.box.cols(), Complex(1.0));
    } else if (history >= 2) {
      tmp = x;
      x = 2.0 * x - prev;
      prev.swap(tmp);
    } else {
      prev = x;
    }
    const detail::CoreRun run = detail::run_coupled(core, x, scfg, node, what);
    history = warm ? history + 1 : 0;
    out[static_cast<size_t>(row) * out_grid.N + col] = {
        reduce(core.weight(), x), run.iterations, run.residual};
  }
}

ComplexField run_transform(const ComplexField& data, const Grid& out_grid,
                           const TransformConfig& cfg, bool inverse,
                           const char* what, TransformStats* stats) {
  ComplexField out(out_grid);
  NodeSolver ns(data);
  if (ns.box.rows() == 0) {
    if (stats) stats->iteration_histogram[1] += out_grid.size();
    return out;  // zero data -> zero transform
  }

  std::vector<NodeOutcome> results(out_grid.size());
  auto reduce_forward = [&](const CArray& a, const CArray& x) {
    return ns.quad * (a * x).sum();
  };
  auto reduce_inverse = [&](const CArray& a, const CArray& x) {
    return ns.quad * (a.conjugate() * x).sum();
  };

  parallel_for(out_grid.N, cfg.threads, [&](long row) {
    auto make_weight = [&](Complex node, CArray& a) {
      // forward: a = e_k u over z; inverse: a = e_k(z)|_k conj(r) over k.
      ns.weight(node, false, inverse, a);
    };
    if (inverse)
      scan_row(ns, out_grid, static_cast<int>(row), cfg.solver, cfg.warm_start,
               what, make_weight, reduce_inverse, results);
    else
      scan_row(ns, out_grid, static_cast<int>(row), cfg.solver, cfg.warm_start,
               what, make_weight, reduce_forward, results);
  });

  for (int r = 0; r < out_grid.N; ++r)
    for (int c = 0; c < out_grid.N; ++c)
      out.v(r, c) = results[static_cast<size_t>(r) * out_grid.N + c].value;
  if (stats) {
    for (const auto& n : results) {
      stats->iteration_histogram[n.iterations]++;
      stats->max_residual = std::max(stats->max_residual, n.residual);
    }
  }
  return out;
}

}  // namespace

ComplexField forward_scatter(const ComplexField& u, const TransformConfig& cfg,
                             TransformStats* stats) {
  return run_transform(u, cfg.k_grid, cfg, false, "forward_scatter", stats);
}

ComplexField inverse_scatter(const ComplexField& r, const TransformConfig& cfg,
                             TransformStats* stats) {
  return run_transform(r, cfg.z_grid, cfg, true, "inverse_scatter", stats);
}

SymmetryReport check_symmetries(const ComplexField& u,
                                const TransformConfig& cfg) {
  const ComplexField r = forward_scatter(u, cfg);
  SymmetryReport rep;
  {
    const ComplexField rb = forward_scatter(Complex(-1.0) * u, cfg);
    rep.negation = linf_norm(rb + r);
  }
  {
    const ComplexField rb =
        forward_scatter(Complex(-1.0) * reflect(u), cfg);
    rep.neg_reflection = linf_norm(rb + reflect(r));
  }
  {
    const ComplexField rb = forward_scatter(conj(u), cfg);
    rep.conj_reflection = linf_norm(rb - conj(reflect(r)));
  }
  return rep;
}

}  // namespace mnv
