#include "sl/kernels.hpp"

namespace sl::kernels {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_scalar(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}

double sumsq_scalar(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * a[i];
  return acc;
}

double sse_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void clip_scalar(double* a, std::size_t n, double lo, double hi) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < lo) a[i] = lo;
    if (a[i] > hi) a[i] = hi;
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{dot_scalar, sum_scalar, sumsq_scalar,
                       sse_scalar, axpy_scalar, clip_scalar, "scalar"};
  return ops;
}

}  // namespace sl::kernels
