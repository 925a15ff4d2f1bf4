#pragma once

#include <cmath>
#include <complex>

#include "oapoly/polynomial.hpp"

namespace oapoly::detail {

// Monomial-sum evaluation over any scalar field (double or complex<double>).
// Accumulates the value and, when `scale` is nonnull, the magnitude envelope
// (the same sum over |term|). Exponentiation is a plain multiply chain so the
// rounding sequence is identical wherever this runs.
template <typename T>
void accumulate_terms(const HomogeneousPolynomial& P, const T* x, T* value,
                      double* scale) {
  const int d = P.domain_dim();
  const int p = P.codomain_dim();
  const std::size_t terms = P.term_count();
  for (std::size_t t = 0; t < terms; ++t) {
    auto e = P.exponents(t);
    T mono = T(1);
    for (int i = 0; i < d; ++i) {
      int ei = e[i];
      if (ei == 0) continue;
      T q = x[i];
      T r = q;
      for (int j = 1; j < ei; ++j) r *= q;
      mono *= r;
    }
    auto c = P.coefficient(t);
    for (int j = 0; j < p; ++j) {
      T term = c[j] * mono;
      value[j] += term;
      if (scale) scale[j] += std::abs(term);
    }
  }
}

}  // namespace oapoly::detail
