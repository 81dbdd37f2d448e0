#include "mnv/cauchy.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numbers>
#include <tuple>

#include "mnv/fft.hpp"

namespace mnv {
namespace detail {

// The FFT runs on the transposed view (n0 = padded cols, n1 = padded rows),
// so a field column maps to a contiguous run of the buffer.
CauchyOp::CauchyOp(int rows, int cols, double h)
    : nr_(rows),
      nc_(cols),
      pr_(fast_fft_size(2 * rows)),
      pc_(fast_fft_size(2 * cols)) {
  const long np = static_cast<long>(pr_) * pc_;
  in_ = fft_alloc(np);
  out_ = fft_alloc(np);
  plan_fwd_ = plan_dft_2d(pc_, pr_, in_, out_, -1);
  plan_bwd_ = plan_dft_2d(pc_, pr_, out_, out_, +1);

  khat_dbar_.resize(np);
  khat_d_.resize(np);
  const double w = h * h / std::numbers::pi;
  const double norm = 1.0 / static_cast<double>(np);
  for (int pass = 0; pass < 2; ++pass) {
    for (int c = 0; c < pc_; ++c) {
      const long dc = (c <= pc_ / 2) ? c : c - pc_;
      for (int r = 0; r < pr_; ++r) {
        const long dr = (r <= pr_ / 2) ? r : r - pr_;
        Complex z(dc * h, dr * h);
        if (pass == 1) z = std::conj(z);
        in_[static_cast<long>(c) * pr_ + r] =
            (dr == 0 && dc == 0) ? Complex(0.0) : w / z;
      }
    }
    execute_plan(plan_fwd_);
    auto& dst = (pass == 0) ? khat_dbar_ : khat_d_;
    for (long i = 0; i < np; ++i) dst[i] = out_[i] * norm;
  }
  std::fill(in_, in_ + np, Complex(0.0));
}

CauchyOp::~CauchyOp() {
  destroy_plan(plan_fwd_);
  destroy_plan(plan_bwd_);
  fft_free(in_);
  fft_free(out_);
}

void CauchyOp::conv(const std::vector<Complex>& khat, const CArray& in,
                    CArray& out) {
  for (int c = 0; c < nc_; ++c)
    std::copy(in.data() + static_cast<long>(c) * nr_,
              in.data() + static_cast<long>(c + 1) * nr_,
              in_ + static_cast<long>(c) * pr_);
  execute_plan(plan_fwd_);
  const long np = static_cast<long>(pr_) * pc_;
  for (long i = 0; i < np; ++i) out_[i] *= khat[i];
  execute_plan(plan_bwd_);
  out.resize(nr_, nc_);
  for (int c = 0; c < nc_; ++c)
    std::copy(out_ + static_cast<long>(c) * pr_,
              out_ + static_cast<long>(c) * pr_ + nr_,
              out.data() + static_cast<long>(c) * nr_);
}

CauchyOp& thread_cauchy(int rows, int cols, double h) {
  thread_local std::map<std::tuple<int, int, double>, std::unique_ptr<CauchyOp>>
      cache;
  auto& slot = cache[{rows, cols, h}];
  if (!slot) slot = std::make_unique<CauchyOp>(rows, cols, h);
  return *slot;
}

}  // namespace detail

ComplexField dbar_inv(const ComplexField& f) {
  auto& op = detail::thread_cauchy(f.grid.N, f.grid.N, f.grid.h);
  ComplexField out(f.grid);
  op.apply_dbar_inv(f.v, out.v);
  return out;
}

ComplexField d_inv(const ComplexField& f) {
  auto& op = detail::thread_cauchy(f.grid.N, f.grid.N, f.grid.h);
  ComplexField out(f.grid);
  op.apply_d_inv(f.v, out.v);
  return out;
}

}  // namespace mnv
