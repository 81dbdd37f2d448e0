#pragma once

#include <Eigen/Dense>
#include <complex>

#include "mnv/grid.hpp"

namespace mnv {

using Complex = std::complex<double>;
using CArray = Eigen::Array<Complex, Eigen::Dynamic, Eigen::Dynamic>;

// Complex samples of a function on a Grid. v(row, col) is the sample at
// z = x_at(col) + i*y_at(row).
struct ComplexField {
  Grid grid;
  CArray v;

  ComplexField() = default;
  explicit ComplexField(const Grid& g) : grid(g), v(CArray::Zero(g.N, g.N)) {}
  ComplexField(const Grid& g, CArray values) : grid(g), v(std::move(values)) {}

  Complex at(int row, int col) const { return v(row, col); }
  Complex& at(int row, int col) { return v(row, col); }
};

// L2 norm with the h^2 area weight.
double l2_norm(const ComplexField& f);
double linf_norm(const ComplexField& f);
bool all_finite(const ComplexField& f);

ComplexField conj(const ComplexField& f);

// Lattice involution (i, j) -> (N-i mod N, N-j mod N); the on-lattice
// realization of z -> -z under the periodic identification.
ComplexField reflect(const ComplexField& f);

// e_k(z) = exp(conj(k) conj(z) - k z); unimodular for every complex k.
ComplexField e_k(const Grid& g, Complex k);

// Test potentials.
ComplexField gaussian(const Grid& g, Complex amplitude, double sigma,
                      Complex center);
ComplexField gaussian_mix(const Grid& g, Complex a1, double s1, Complex c1,
                          Complex a2, double s2, Complex c2);

ComplexField operator+(const ComplexField& a, const ComplexField& b);
ComplexField operator-(const ComplexField& a, const ComplexField& b);
ComplexField operator*(const ComplexField& a, const ComplexField& b);
ComplexField operator*(Complex s, const ComplexField& a);

}  // namespace mnv
