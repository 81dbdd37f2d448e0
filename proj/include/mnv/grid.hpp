#pragma once

#include <complex>
#include <stdexcept>

namespace mnv {

// Uniform square truncation of the complex plane. Samples sit on the
// corner-anchored lattice x = -L + col*h, y = -L + row*h with h = 2L/N,
// so the lattice covers [-L, L) x [-L, L).
struct Grid {
  double L = 0.0;
  int N = 0;
  double h = 0.0;

  double x_at(int col) const { return -L + col * h; }
  double y_at(int row) const { return -L + row * h; }
  std::complex<double> point(int row, int col) const {
    return {x_at(col), y_at(row)};
  }
  long size() const { return static_cast<long>(N) * N; }

  bool operator==(const Grid&) const = default;
};

inline Grid make_grid(double L, int N) {
  if (N < 16 || (N % 2) != 0)
    throw std::invalid_argument("make_grid: N must be even and >= 16");
  if (!(L > 0.0))
    throw std::invalid_argument("make_grid: L must be positive");
  return Grid{L, N, 2.0 * L / N};
}

}  // namespace mnv
