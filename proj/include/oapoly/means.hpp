#pragma once

#include <cstdint>
#include <span>

#include "oapoly/lattice.hpp"

namespace oapoly {

// Controls the variational evaluators: how many random feasible coefficient
// tuples are drawn, whether the exact per-coordinate optimizer runs after
// sampling, and the multiplier cap used by the geometric-mean refiner on
// coordinates where the infimum 0 is not attained.
struct VariationalBudget {
  int sample_count = 256;
  bool refine = true;
  double theta_max = 1e6;
};

// m with 1/m + 1/n = 1, for n >= 2.
double holder_conjugate(int n);

// n-th root mean power, coordinatewise: (sum_k fs_k[i]^n)^(1/n).
// Requires n >= 2, at least two arguments, all nonnegative, equal dimensions.
// Computed with the largest argument factored out per coordinate, so a
// coordinate with a single nonzero term reproduces that term exactly; in
// particular rmp_closed(n, [f, g, 0...]) == f + g exactly for disjoint f, g.
LatticeVector rmp_closed(int n, std::span<const LatticeVector> fs);

// Same value through the variational formula: the coordinatewise supremum of
// sum_k a_k fs_k over a in [0,1]^r with sum_k a_k^m = 1 (m the Holder
// conjugate of n). The candidate set always contains the r unit coordinate
// tuples, then budget.sample_count tuples drawn uniformly on the constraint
// surface (uniform on the simplex in m-power coordinates); sample sets are
// nested in the count, so the result is monotone in sample_count. Sampling
// alone gives a lower approximation of rmp_closed; with budget.refine the
// per-coordinate analytic maximizer a_k = x_k^{n-1} / (sum_i x_i^n)^{1/m} is
// added and the result matches rmp_closed to roundoff.
LatticeVector rmp_variational(int n, std::span<const LatticeVector> fs,
                              const VariationalBudget& budget,
                              std::uint64_t seed);

// n-th geometric mean, coordinatewise: (prod_k |fs_k[i]|)^(1/n).
// Requires exactly n arguments of equal dimension. The largest magnitude is
// factored out per coordinate, so identical arguments reproduce |f| exactly
// and any zero factor gives an exact zero.
LatticeVector gm_closed(int n, std::span<const LatticeVector> fs);

// Variational form: the coordinatewise infimum of (1/n) sum_k theta_k fs_k
// over theta in (0,inf)^n with prod_k theta_k = 1. Requires nonnegative
// inputs. The candidate set starts at theta = (1,...,1) (the arithmetic
// mean), then budget.sample_count tuples theta = exp(tau (u - mean u)) with
// Gaussian u over a ladder of temperatures tau. Sampling gives an upper
// approximation of gm_closed. With budget.refine, coordinates with all
// entries positive use the analytic minimizer theta_k = G / x_k and match
// gm_closed to roundoff; on coordinates with z > 0 zero entries the infimum
// 0 is not attained, and the refiner instead caps the zero-slot multipliers
// at theta_max, achieving an upper bound that scales like
// theta_max^(-z/(n-z)).
LatticeVector gm_variational(int n, std::span<const LatticeVector> fs,
                             const VariationalBudget& budget,
                             std::uint64_t seed);

}  // namespace oapoly
