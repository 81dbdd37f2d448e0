#pragma once

#include <complex>

namespace mnv {

// Smallest m >= n whose prime factors are all in {2, 3, 5, 7}.
int fast_fft_size(int n);

namespace detail {

// Process-wide FFTW planning mode. Estimate keeps plan selection (and hence
// bit-level output) reproducible run to run; Measure trades that for speed.
// Set before the first transform is planned.
enum class FftPlanning { Estimate, Measure };
void set_fft_planning(FftPlanning p);
FftPlanning fft_planning();

// In-place 2-D complex FFT working on an owned buffer. One instance per
// geometry per thread; plan creation goes through the FFTW planner lock.
class Fft2D {
 public:
  Fft2D(int rows, int cols);
  ~Fft2D();
  Fft2D(const Fft2D&) = delete;
  Fft2D& operator=(const Fft2D&) = delete;

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::complex<double>* data() { return buf_; }

  void forward();   // unnormalized
  void backward();  // unnormalized

 private:
  int rows_, cols_;
  std::complex<double>* buf_;
  void* plan_fwd_;
  void* plan_bwd_;
};

// Per-thread instance cache keyed by geometry.
Fft2D& thread_fft(int rows, int cols);

std::complex<double>* fft_alloc(long n);
void fft_free(std::complex<double>* p);

// Planner-locked plan helpers (2-D complex transforms on caller buffers).
void* plan_dft_2d(int n0, int n1, std::complex<double>* in,
                  std::complex<double>* out, int sign);
void destroy_plan(void* plan);
void execute_plan(void* plan);

}  // namespace detail
}  // namespace mnv
