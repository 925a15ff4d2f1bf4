#pragma once

#include <cstddef>

namespace oapoly::kern {

enum class Backend { scalar, avx2 };

// Elementwise double-precision kernels over contiguous spans. Every entry
// point has a scalar reference implementation and (on x86-64) an AVX2
// variant; the two are bit-identical by construction: no fma, the same
// operation order per lane, and select semantics matching maxpd/minpd.
struct Ops {
  void (*vabs)(const double* x, double* out, std::size_t n);
  void (*vmax)(const double* a, const double* b, double* out, std::size_t n);
  void (*vmin)(const double* a, const double* b, double* out, std::size_t n);
  void (*vadd)(const double* a, const double* b, double* out, std::size_t n);
  void (*vsub)(const double* a, const double* b, double* out, std::size_t n);
  void (*vscale)(const double* x, double s, double* out, std::size_t n);
  // y[i] += a * x[i]
  void (*vaxpy)(double a, const double* x, double* y, std::size_t n);
  // acc[i] = max(acc[i], x[i]) / min(acc[i], x[i])
  void (*vmax_update)(const double* x, double* acc, std::size_t n);
  void (*vmin_update)(const double* x, double* acc, std::size_t n);
  // pos[i] = max(x[i], 0), neg[i] = max(-x[i], 0)
  void (*vpos_neg)(const double* x, double* pos, double* neg, std::size_t n);
  // acc[i] += (x[i] / m[i])^e, e >= 1, power by repeated multiplication
  void (*vpow_ratio_accum)(const double* x, const double* m, int e,
                           double* acc, std::size_t n);
  // acc[i] *= |x[i]| / m[i]
  void (*vmul_ratio_accum)(const double* x, const double* m, double* acc,
                           std::size_t n);
};

// Active kernel table. Selected once: AVX2 when the CPU supports it, unless
// the OAPOLY_BACKEND environment variable ("scalar" or "avx2") says otherwise.
const Ops& ops();

Backend active_backend();

// Overrides the active table. Intended for tests; not safe to call while
// other threads are inside kernel calls.
void force_backend(Backend b);

// True when an AVX2 table is compiled in and the CPU can run it.
bool avx2_available();

// Direct access to a specific table (throws if unavailable). Used by the
// scalar/SIMD equivalence tests.
const Ops& ops_for(Backend b);

}  // namespace oapoly::kern
