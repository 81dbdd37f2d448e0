#pragma once

#include "mnv/field.hpp"

namespace mnv {

// Discrete-Fourier differentiation on the periodic extension of the grid.
// d = (dx - i dy)/2 acts as the multiplier (i xi_x + xi_y)/2 and
// dbar = (dx + i dy)/2 as (i xi_x - xi_y)/2, with xi = pi*m/L over the
// signed mode index m in [-N/2, N/2). The unmatched Nyquist component is
// zeroed, which keeps d/dbar conjugation-consistent.
ComplexField d_z(const ComplexField& f);
ComplexField dbar_z(const ComplexField& f);

// One multiplier application of d^a dbar^b.
ComplexField d_pow(const ComplexField& f, int a, int b);

// Multiplier value at a single mode pair, for spot checks.
Complex d_multiplier(const Grid& g, int mode_row, int mode_col, int a, int b);

}  // namespace mnv
