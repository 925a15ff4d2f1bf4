#include "kernels_detail.hpp"

#include <cmath>

// Reference path. The ternaries mirror the maxpd/minpd select semantics
// (equal operands, signed zeros -> second operand) so the AVX2 path can be
// tested for bitwise equality against this one.

namespace oapoly::kern::detail {
namespace {

void vabs(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::fabs(x[i]);
}

void vmax(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
}

void vmin(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] < b[i] ? a[i] : b[i];
}

void vadd(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void vsub(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void vscale(const double* x, double s, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = s * x[i];
}

void vaxpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + a * x[i];
}

void vmax_update(const double* x, double* acc, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] = acc[i] > x[i] ? acc[i] : x[i];
}

void vmin_update(const double* x, double* acc, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] = acc[i] < x[i] ? acc[i] : x[i];
}

void vpos_neg(const double* x, double* pos, double* neg, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double v = x[i];
    pos[i] = v > 0.0 ? v : 0.0;
    neg[i] = -v > 0.0 ? -v : 0.0;
  }
}

void vpow_ratio_accum(const double* x, const double* m, int e, double* acc,
                      std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double q = x[i] / m[i];
    double r = q;
    for (int j = 1; j < e; ++j) r = r * q;
    acc[i] = acc[i] + r;
  }
}

void vmul_ratio_accum(const double* x, const double* m, double* acc,
                      std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] = acc[i] * (std::fabs(x[i]) / m[i]);
}

}  // namespace

const Ops* scalar_ops() {
  static const Ops table = {
      .vabs = vabs,
      .vmax = vmax,
      .vmin = vmin,
      .vadd = vadd,
      .vsub = vsub,
      .vscale = vscale,
      .vaxpy = vaxpy,
      .vmax_update = vmax_update,
      .vmin_update = vmin_update,
      .vpos_neg = vpos_neg,
      .vpow_ratio_accum = vpow_ratio_accum,
      .vmul_ratio_accum = vmul_ratio_accum,
  };
  return &table;
}

}  // namespace oapoly::kern::detail
