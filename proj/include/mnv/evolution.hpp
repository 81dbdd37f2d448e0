#pragma once

#include <array>
#include <functional>
#include <utility>

#include "mnv/scattering.hpp"

namespace mnv {

enum class PhaseKind { DS, MNV };

// phi_DS(k) = k^2 + conj(k)^2 = 2(k1^2 - k2^2)
// phi_MNV(k) = -i (conj(k)^3 - k^3) = -2 Im(k^3)
double phase_value(Complex k, PhaseKind kind);
ComplexField phase_field(const Grid& k_grid, PhaseKind kind);

struct EvolutionConfig {
  PhaseKind phase = PhaseKind::MNV;
  TransformConfig transform;
  double fd_step = 1e-3;
};

// u(t) = inverse_scatter( exp(i t phi) forward_scatter(u0) ).
ComplexField evolve(const ComplexField& u0, double t,
                    const EvolutionConfig& cfg);

// Same with the scattering data already computed.
ComplexField evolve_data(const ComplexField& r, double t, PhaseKind phase,
                         const TransformConfig& cfg);

// The four unit-coefficient nonlocal cubic terms:
//   u dbar_inv(d(conj(u) d u)),  d(u) dbar_inv(d(|u|^2)),
//   u d_inv(dbar(conj(u) dbar u)),  dbar(u) d_inv(dbar(|u|^2))
std::array<ComplexField, 4> nmnv_terms(const ComplexField& u);

// N(u) = (3/4) * (sum of the four terms above).
ComplexField nmnv(const ComplexField& u);

struct ResidualReport {
  double res_l2 = 0.0;
  double d3_l2 = 0.0;
  double n_l2 = 0.0;
  double reference = 0.0;  // max(d3_l2, n_l2)
  double ratio = 0.0;
  double delta = 0.0;
};

// residual = [u(t+d) - u(t-d)]/(2d) + d^3 u(t) + dbar^3 u(t) - N(u(t)),
// with every u(.) from the transform-evolution of u0.
std::pair<ComplexField, ResidualReport> mnv_residual(const ComplexField& u0,
                                                     double t,
                                                     const EvolutionConfig& cfg);

namespace detail {

// Residual with an injectable data-to-field synthesis, so the time
// differencing can also be exercised against the fast linear evolution.
using SynthesisFn = std::function<ComplexField(const ComplexField& r_t)>;
std::pair<ComplexField, ResidualReport> mnv_residual_from_data(
    const ComplexField& r, const SynthesisFn& synth, double t, PhaseKind phase,
    double delta, bool include_nonlinearity = true);

}  // namespace detail
}  // namespace mnv
