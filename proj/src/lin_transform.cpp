#include "mnv/lin_transform.hpp"

#include <cmath>
#include <numbers>

namespace mnv {

namespace {

using Mat = Eigen::MatrixXcd;

// e_k(z) = exp(-2i (Re k * y + Im k * x)). Re k lives on the k-grid columns
// and y on the z-grid rows, so the separable factors pair crosswise:
//   A(p, c) = exp(-2i ky(p) zx(c))   (k rows vs z cols)
//   B(r, q) = exp(-2i kx(q) zy(r))   (z rows vs k cols)
// and (lin_forward f) = scale * A * f^T * B.
Mat phase_A(const Grid& kg, const Grid& zg) {
  Mat A(kg.N, zg.N);
  for (int p = 0; p < kg.N; ++p)
    for (int c = 0; c < zg.N; ++c) {
      const double t = -2.0 * kg.y_at(p) * zg.x_at(c);
      A(p, c) = Complex(std::cos(t), std::sin(t));
    }
  return A;
}

Mat phase_B(const Grid& kg, const Grid& zg) {
  Mat B(zg.N, kg.N);
  for (int r = 0; r < zg.N; ++r)
    for (int q = 0; q < kg.N; ++q) {
      const double t = -2.0 * kg.x_at(q) * zg.y_at(r);
      B(r, q) = Complex(std::cos(t), std::sin(t));
    }
  return B;
}

}  // namespace

ComplexField lin_forward(const ComplexField& f, const Grid& k_grid) {
  const Grid& zg = f.grid;
  const Mat A = phase_A(k_grid, zg);
  const Mat B = phase_B(k_grid, zg);
  const double scale = zg.h * zg.h / std::numbers::pi;
  ComplexField out(k_grid);
  out.v = (scale * (A * f.v.matrix().transpose() * B)).array();
  return out;
}

ComplexField lin_inverse(const ComplexField& g, const Grid& z_grid) {
  const Grid& kg = g.grid;
  const Mat A = phase_A(kg, z_grid);
  const Mat B = phase_B(kg, z_grid);
  const double scale = kg.h * kg.h / std::numbers::pi;
  ComplexField out(z_grid);
  out.v =
      (scale * (B.conjugate() * g.v.matrix().transpose() * A.conjugate()))
          .array();
  return out;
}

}  // namespace mnv
