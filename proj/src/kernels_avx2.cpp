#include "kernels_detail.hpp"

#include <cmath>

#if defined(__AVX2__)
#include <immintrin.h>

namespace oapoly::kern::detail {
namespace {

inline __m256d abs_pd(__m256d x) {
  const __m256d mask =
      _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  return _mm256_and_pd(x, mask);
}

inline __m256d neg_pd(__m256d x) {
  const __m256d sign =
      _mm256_castsi256_pd(_mm256_set1_epi64x(0x8000000000000000LL));
  return _mm256_xor_pd(x, sign);
}

void vabs(const double* x, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, abs_pd(_mm256_loadu_pd(x + i)));
  for (; i < n; ++i) out[i] = std::fabs(x[i]);
}

void vmax(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(
        out + i, _mm256_max_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
}

void vmin(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(
        out + i, _mm256_min_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) out[i] = a[i] < b[i] ? a[i] : b[i];
}

void vadd(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(
        out + i, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) out[i] = a[i] + b[i];
}

void vsub(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(
        out + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

void vscale(const double* x, double s, double* out, std::size_t n) {
  const __m256d ss = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_mul_pd(ss, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) out[i] = s * x[i];
}

void vaxpy(double a, const double* x, double* y, std::size_t n) {
  const __m256d aa = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d prod = _mm256_mul_pd(aa, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), prod));
  }
  for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

void vmax_update(const double* x, double* acc, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(acc + i, _mm256_max_pd(_mm256_loadu_pd(acc + i),
                                            _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) acc[i] = acc[i] > x[i] ? acc[i] : x[i];
}

void vmin_update(const double* x, double* acc, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(acc + i, _mm256_min_pd(_mm256_loadu_pd(acc + i),
                                            _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) acc[i] = acc[i] < x[i] ? acc[i] : x[i];
}

void vpos_neg(const double* x, double* pos, double* neg, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(x + i);
    _mm256_storeu_pd(pos + i, _mm256_max_pd(v, zero));
    _mm256_storeu_pd(neg + i, _mm256_max_pd(neg_pd(v), zero));
  }
  for (; i < n; ++i) {
    double v = x[i];
    pos[i] = v > 0.0 ? v : 0.0;
    neg[i] = -v > 0.0 ? -v : 0.0;
  }
}

void vpow_ratio_accum(const double* x, const double* m, int e, double* acc,
                      std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d q = _mm256_div_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(m + i));
    __m256d r = q;
    for (int j = 1; j < e; ++j) r = _mm256_mul_pd(r, q);
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), r));
  }
  for (; i < n; ++i) {
    double q = x[i] / m[i];
    double r = q;
    for (int j = 1; j < e; ++j) r = r * q;
    acc[i] = acc[i] + r;
  }
}

void vmul_ratio_accum(const double* x, const double* m, double* acc,
                      std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d q =
        _mm256_div_pd(abs_pd(_mm256_loadu_pd(x + i)), _mm256_loadu_pd(m + i));
    _mm256_storeu_pd(acc + i, _mm256_mul_pd(_mm256_loadu_pd(acc + i), q));
  }
  for (; i < n; ++i) acc[i] = acc[i] * (std::fabs(x[i]) / m[i]);
}

}  // namespace

const Ops* avx2_ops() {
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

#else  // !__AVX2__

namespace oapoly::kern::detail {
const Ops* avx2_ops() { return nullptr; }
}  // namespace oapoly::kern::detail

#endif
