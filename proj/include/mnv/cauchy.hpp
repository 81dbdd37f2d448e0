#pragma once

#include <vector>

#include "mnv/field.hpp"

namespace mnv {

// Solid Cauchy transforms, discretized as a rectangle-rule convolution on a
// zero-padded doubled lattice so no periodic wrap-around pollutes the result.
// The singular cell takes the value 0 (principal-value convention).
//
//   (dbar_inv f)(z) ~ (h^2/pi) sum_w f(w) / (z - w)
//   (d_inv    f)(z) ~ (h^2/pi) sum_w f(w) / conj(z - w)
ComplexField dbar_inv(const ComplexField& f);
ComplexField d_inv(const ComplexField& f);

namespace detail {

// Convolution engine for an rows x cols block of samples with spacing h.
// Padded sizes are the next fast FFT sizes >= 2n. Owns its transform buffers;
// the input buffer's padding is zeroed once and never written again, and the
// internal layout keeps Eigen's column-major blocks contiguous.
class CauchyOp {
 public:
  CauchyOp(int rows, int cols, double h);
  ~CauchyOp();
  CauchyOp(const CauchyOp&) = delete;
  CauchyOp& operator=(const CauchyOp&) = delete;

  void apply_dbar_inv(const CArray& in, CArray& out) { conv(khat_dbar_, in, out); }
  void apply_d_inv(const CArray& in, CArray& out) { conv(khat_d_, in, out); }

  int rows() const { return nr_; }
  int cols() const { return nc_; }

 private:
  int nr_, nc_, pr_, pc_;
  Complex* in_ = nullptr;   // padded, index [c * pr_ + r]
  Complex* out_ = nullptr;
  void* plan_fwd_ = nullptr;  // in_ -> out_
  void* plan_bwd_ = nullptr;  // out_ in place
  std::vector<Complex> khat_dbar_, khat_d_;
  void conv(const std::vector<Complex>& khat, const CArray& in, CArray& out);
};

CauchyOp& thread_cauchy(int rows, int cols, double h);

}  // namespace detail
}  // namespace mnv
