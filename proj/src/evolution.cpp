#include "mnv/evolution.hpp"

#include <cmath>

#include "mnv/cauchy.hpp"
#include "mnv/spectral.hpp"

namespace mnv {

double phase_value(Complex k, PhaseKind kind) {
  const double k1 = k.real(), k2 = k.imag();
  if (kind == PhaseKind::DS) return 2.0 * (k1 * k1 - k2 * k2);
  return 2.0 * k2 * k2 * k2 - 6.0 * k1 * k1 * k2;  // -2 Im(k^3)
}

ComplexField phase_field(const Grid& k_grid, PhaseKind kind) {
  ComplexField out(k_grid);
  for (int r = 0; r < k_grid.N; ++r)
    for (int c = 0; c < k_grid.N; ++c)
      out.v(r, c) = phase_value(k_grid.point(r, c), kind);
  return out;
}

namespace {

ComplexField phase_multiplied(const ComplexField& r, double t,
                              PhaseKind phase) {
  ComplexField out(r.grid);
  for (int row = 0; row < r.grid.N; ++row)
    for (int col = 0; col < r.grid.N; ++col) {
      const double p = t * phase_value(r.grid.point(row, col), phase);
      out.v(row, col) = Complex(std::cos(p), std::sin(p)) * r.v(row, col);
    }
  return out;
}

}  // namespace

ComplexField evolve_data(const ComplexField& r, double t, PhaseKind phase,
                         const TransformConfig& cfg) {
  return inverse_scatter(phase_multiplied(r, t, phase), cfg);
}

ComplexField evolve(const ComplexField& u0, double t,
                    const EvolutionConfig& cfg) {
  const ComplexField r = forward_scatter(u0, cfg.transform);
  return evolve_data(r, t, cfg.phase, cfg.transform);
}

std::array<ComplexField, 4> nmnv_terms(const ComplexField& u) {
  const ComplexField cu = conj(u);
  const ComplexField du = d_z(u);
  const ComplexField dbu = dbar_z(u);
  const ComplexField absq = u * cu;
  return {
      u * dbar_inv(d_z(cu * du)),
      du * dbar_inv(d_z(absq)),
      u * d_inv(dbar_z(cu * dbu)),
      dbu * d_inv(dbar_z(absq)),
  };
}

ComplexField nmnv(const ComplexField& u) {
  const auto t = nmnv_terms(u);
  ComplexField out(u.grid);
  out.v = 0.75 * (t[0].v + t[1].v + t[2].v + t[3].v);
  return out;
}

namespace detail {

std::pair<ComplexField, ResidualReport> mnv_residual_from_data(
    const ComplexField& r, const SynthesisFn& synth, double t, PhaseKind phase,
    double delta, bool include_nonlinearity) {
  if (!(delta > 0)) throw std::invalid_argument("mnv_residual: delta <= 0");
  const ComplexField u_m = synth(phase_multiplied(r, t - delta, phase));
  const ComplexField u_c = synth(phase_multiplied(r, t, phase));
  const ComplexField u_p = synth(phase_multiplied(r, t + delta, phase));

  const ComplexField d3 = d_pow(u_c, 3, 0);
  const ComplexField db3 = d_pow(u_c, 0, 3);
  ComplexField n_field(u_c.grid);
  if (include_nonlinearity) n_field = nmnv(u_c);

  ComplexField res(u_c.grid);
  res.v = (u_p.v - u_m.v) / (2.0 * delta) + d3.v + db3.v - n_field.v;

  ResidualReport rep;
  rep.res_l2 = l2_norm(res);
  rep.d3_l2 = l2_norm(d3);
  rep.n_l2 = l2_norm(n_field);
  rep.reference = std::max(rep.d3_l2, rep.n_l2);
  rep.ratio = rep.reference > 0 ? rep.res_l2 / rep.reference : 0.0;
  rep.delta = delta;
  return {std::move(res), rep};
}

}  // namespace detail

std::pair<ComplexField, ResidualReport> mnv_residual(const ComplexField& u0,
                                                     double t,
                                                     const EvolutionConfig& cfg) {
  const ComplexField r = forward_scatter(u0, cfg.transform);
  auto synth = [&](const ComplexField& rt) {
    return inverse_scatter(rt, cfg.transform);
  };
  return detail::mnv_residual_from_data(r, synth, t, cfg.phase, cfg.fd_step);
}

}  // namespace mnv
