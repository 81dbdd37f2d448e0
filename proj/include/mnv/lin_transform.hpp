#pragma once

#include "mnv/field.hpp"

namespace mnv {

// Linearizations of the scattering maps at zero data:
//
//   (lin_forward f)(k) = (h_z^2/pi) sum_z e_k(z) f(z)
//   (lin_inverse g)(z) = (h_k^2/pi) sum_k e_{-k}(z) g(k)
//
// Both kernels separate along the two axes, so each transform is two dense
// complex matrix products. This stays exact for arbitrary (and mutually
// incommensurate) z/k lattices, which the default grids are.
ComplexField lin_forward(const ComplexField& f, const Grid& k_grid);
ComplexField lin_inverse(const ComplexField& g, const Grid& z_grid);

}  // namespace mnv
