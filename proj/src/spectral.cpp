#include "mnv/spectral.hpp"

#include <cmath>
#include <numbers>

#include "mnv/fft.hpp"

namespace mnv {

namespace {

double signed_freq(const Grid& g, int m) {
  // Signed frequency pi*m'/L with the Nyquist component zeroed.
  int ms = (m <= g.N / 2 - 1) ? m : m - g.N;
  if (m == g.N / 2) return 0.0;
  return std::numbers::pi * ms / g.L;
}

}  // namespace

Complex d_multiplier(const Grid& g, int mode_row, int mode_col, int a, int b) {
  const double xy = signed_freq(g, mode_row);   // row index is the y mode
  const double xx = signed_freq(g, mode_col);
  const Complex md = Complex(xy, xx) * 0.5;     // (i xi_x + xi_y)/2
  const Complex mdb = Complex(-xy, xx) * 0.5;   // (i xi_x - xi_y)/2
  Complex m = 1.0;
  for (int i = 0; i < a; ++i) m *= md;
  for (int i = 0; i < b; ++i) m *= mdb;
  return m;
}

ComplexField d_pow(const ComplexField& f, int a, int b) {
  const int N = f.grid.N;
  auto& fft = detail::thread_fft(N, N);
  Complex* buf = fft.data();
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) buf[static_cast<long>(r) * N + c] = f.v(r, c);
  fft.forward();
  const double scale = 1.0 / (static_cast<double>(N) * N);
  for (int r = 0; r < N; ++r) {
    for (int c = 0; c < N; ++c) {
      buf[static_cast<long>(r) * N + c] *=
          scale * d_multiplier(f.grid, r, c, a, b);
    }
  }
  fft.backward();
  ComplexField out(f.grid);
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) out.v(r, c) = buf[static_cast<long>(r) * N + c];
  return out;
}

ComplexField d_z(const ComplexField& f) { return d_pow(f, 1, 0); }
ComplexField dbar_z(const ComplexField& f) { return d_pow(f, 0, 1); }

}  // namespace mnv
