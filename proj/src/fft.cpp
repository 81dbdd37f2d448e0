#include "mnv/fft.hpp"

#include <fftw3.h>

#include <atomic>
#include <map>
#include <memory>
#include <mutex>

namespace mnv {

int fast_fft_size(int n) {
  auto smooth = [](int m) {
    for (int p : {2, 3, 5, 7})
      while (m % p == 0) m /= p;
    return m == 1;
  };
  while (!smooth(n)) ++n;
  return n;
}

namespace detail {

namespace {
// The FFTW planner is not thread-safe; plan creation and destruction share
// one lock. Execution on distinct buffers needs no lock.
std::mutex& planner_mutex() {
  static std::mutex mu;
  return mu;
}
std::atomic<FftPlanning> g_planning{FftPlanning::Estimate};
}  // namespace

void set_fft_planning(FftPlanning p) { g_planning.store(p); }
FftPlanning fft_planning() { return g_planning.load(); }

std::complex<double>* fft_alloc(long n) {
  return reinterpret_cast<std::complex<double>*>(
      fftw_alloc_complex(static_cast<size_t>(n)));
}

void fft_free(std::complex<double>* p) {
  fftw_free(reinterpret_cast<fftw_complex*>(p));
}

void* plan_dft_2d(int n0, int n1, std::complex<double>* in,
                  std::complex<double>* out, int sign) {
  std::scoped_lock lk(planner_mutex());
  const unsigned flags =
      fft_planning() == FftPlanning::Measure ? FFTW_MEASURE : FFTW_ESTIMATE;
  return fftw_plan_dft_2d(n0, n1, reinterpret_cast<fftw_complex*>(in),
                          reinterpret_cast<fftw_complex*>(out),
                          sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, flags);
}

void destroy_plan(void* plan) {
  std::scoped_lock lk(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan));
}

void execute_plan(void* plan) { fftw_execute(static_cast<fftw_plan>(plan)); }

Fft2D::Fft2D(int rows, int cols) : rows_(rows), cols_(cols) {
  buf_ = fft_alloc(static_cast<long>(rows) * cols);
  plan_fwd_ = plan_dft_2d(rows, cols, buf_, buf_, -1);
  plan_bwd_ = plan_dft_2d(rows, cols, buf_, buf_, +1);
}

Fft2D::~Fft2D() {
  destroy_plan(plan_fwd_);
  destroy_plan(plan_bwd_);
  fft_free(buf_);
}

void Fft2D::forward() { execute_plan(plan_fwd_); }
void Fft2D::backward() { execute_plan(plan_bwd_); }

Fft2D& thread_fft(int rows, int cols) {
  thread_local std::map<std::pair<int, int>, std::unique_ptr<Fft2D>> cache;
  auto& slot = cache[{rows, cols}];
  if (!slot) slot = std::make_unique<Fft2D>(rows, cols);
  return *slot;
}

}  // namespace detail
}  // namespace mnv
