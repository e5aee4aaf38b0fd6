#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <string_view>

// Data-parallel arithmetic kernels used by the numeric inner loops
// (standardization, coordinate descent, distances, squared-error sums).
// A scalar reference implementation always exists; on x86-64 an AVX2/FMA
// variant is compiled alongside and selected at runtime when the CPU
// supports it. Set SL_KERNEL_ISA=scalar|avx2 to force a backend.
//
// SIMD reductions reassociate, so the two backends agree only to rounding;
// the equivalence tests pin that tolerance. Within one process the selected
// backend never changes, so end-to-end runs are bit-reproducible.

namespace sl::kernels {

struct Ops {
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*sum)(const double* a, std::size_t n);
  double (*sumsq)(const double* a, std::size_t n);
  // sum of squared differences, sum_i (a_i - b_i)^2
  double (*sse)(const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // elementwise clamp to [lo, hi]
  void (*clip)(double* a, std::size_t n, double lo, double hi);
  std::string_view name;
};

const Ops& scalar_ops();
#if defined(SL_HAVE_AVX2_BUILD)
const Ops& avx2_ops();
#endif

/// Runtime-selected backend (decided once, on first use).
const Ops& active();
std::string_view active_name();

inline double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return active().dot(a.data(), b.data(), a.size());
}
inline double sum(std::span<const double> a) {
  return active().sum(a.data(), a.size());
}
inline double sumsq(std::span<const double> a) {
  return active().sumsq(a.data(), a.size());
}
inline double sse(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return active().sse(a.data(), b.data(), a.size());
}
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  active().axpy(alpha, x.data(), y.data(), x.size());
}
inline void clip(std::span<double> a, double lo, double hi) {
  active().clip(a.data(), a.size(), lo, hi);
}

}  // namespace sl::kernels
