#include "mnv/field.hpp"

#include <cmath>

namespace mnv {

double l2_norm(const ComplexField& f) {
  return f.grid.h * std::sqrt(f.v.abs2().sum());
}

double linf_norm(const ComplexField& f) { return f.v.abs().maxCoeff(); }

bool all_finite(const ComplexField& f) {
  return f.v.real().isFinite().all() && f.v.imag().isFinite().all();
}

ComplexField conj(const ComplexField& f) {
  return ComplexField(f.grid, f.v.conjugate());
}

ComplexField reflect(const ComplexField& f) {
  const int N = f.grid.N;
  ComplexField out(f.grid);
  for (int r = 0; r < N; ++r) {
    const int rr = (N - r) % N;
    for (int c = 0; c < N; ++c) out.v(r, c) = f.v(rr, (N - c) % N);
  }
  return out;
}

ComplexField e_k(const Grid& g, Complex k) {
  // conj(k) conj(z) - k z = -2i (k1 y + k2 x): build the two 1-D phase
  // factors and take the outer product.
  const double k1 = k.real(), k2 = k.imag();
  Eigen::ArrayXcd row_phase(g.N), col_phase(g.N);
  for (int r = 0; r < g.N; ++r) {
    const double t = -2.0 * k1 * g.y_at(r);
    row_phase(r) = Complex(std::cos(t), std::sin(t));
  }
  for (int c = 0; c < g.N; ++c) {
    const double t = -2.0 * k2 * g.x_at(c);
    col_phase(c) = Complex(std::cos(t), std::sin(t));
  }
  ComplexField out(g);
  out.v = (row_phase.matrix() * col_phase.matrix().transpose()).array();
  return out;
}

ComplexField gaussian(const Grid& g, Complex amplitude, double sigma,
                      Complex center) {
  ComplexField out(g);
  const double inv_s2 = 1.0 / (sigma * sigma);
  for (int r = 0; r < g.N; ++r) {
    const double dy = g.y_at(r) - center.imag();
    for (int c = 0; c < g.N; ++c) {
      const double dx = g.x_at(c) - center.real();
      out.v(r, c) = amplitude * std::exp(-(dx * dx + dy * dy) * inv_s2);
    }
  }
  return out;
}

ComplexField gaussian_mix(const Grid& g, Complex a1, double s1, Complex c1,
                          Complex a2, double s2, Complex c2) {
  ComplexField out = gaussian(g, a1, s1, c1);
  out.v += gaussian(g, a2, s2, c2).v;
  return out;
}

ComplexField operator+(const ComplexField& a, const ComplexField& b) {
  return ComplexField(a.grid, a.v + b.v);
}
ComplexField operator-(const ComplexField& a, const ComplexField& b) {
  return ComplexField(a.grid, a.v - b.v);
}
ComplexField operator*(const ComplexField& a, const ComplexField& b) {
  return ComplexField(a.grid, a.v * b.v);
}
ComplexField operator*(Complex s, const ComplexField& a) {
  return ComplexField(a.grid, s * a.v);
}

}  // namespace mnv
