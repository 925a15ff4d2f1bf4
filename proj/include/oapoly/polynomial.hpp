#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "oapoly/lattice.hpp"

namespace oapoly {

// Exponent tuple of one monomial; entries sum to the polynomial degree.
using MultiIndex = std::vector<int>;

// Degree-n homogeneous polynomial R^d -> R^p stored as a monomial-coefficient
// map. Degree 1 is rejected: every identity this library checks is stated
// for n >= 2. Immutable once built.
class HomogeneousPolynomial {
 public:
  using Term = std::pair<MultiIndex, std::vector<double>>;

  HomogeneousPolynomial(int degree, int domain_dim, int codomain_dim,
                        std::vector<Term> monomials);

  int degree() const noexcept { return n_; }
  int domain_dim() const noexcept { return d_; }
  int codomain_dim() const noexcept { return p_; }
  std::size_t term_count() const noexcept { return exps_.size() / d_; }

  // Exponents of term t (length domain_dim), in the stored (sorted) order.
  std::span<const int> exponents(std::size_t t) const {
    return {exps_.data() + t * d_, static_cast<std::size_t>(d_)};
  }
  // Coefficient of term t (length codomain_dim).
  std::span<const double> coefficient(std::size_t t) const {
    return {coeffs_.data() + t * p_, static_cast<std::size_t>(p_)};
  }

 private:
  int n_, d_, p_;
  std::vector<int> exps_;       // term_count x domain_dim
  std::vector<double> coeffs_;  // term_count x codomain_dim
};

// Value of an evaluation together with its magnitude envelope: the same sum
// with every term replaced by its absolute value. The envelope is the
// natural yardstick for roundoff in the value, and downstream comparisons
// normalize residuals with it.
template <typename T>
struct Evaluated {
  std::vector<T> value;
  std::vector<double> scale;
};

// P(f) = sum_alpha c_alpha prod_i f[i]^alpha_i.
std::vector<double> eval(const HomogeneousPolynomial& P, const LatticeVector& f);
Evaluated<double> eval_with_scale(const HomogeneousPolynomial& P,
                                  const LatticeVector& f);

// The unique symmetric n-linear map with polarize(P, f,...,f) = eval(P, f),
// computed by the 2^n-term polarization sum
//   (1 / (2^n n!)) sum_{eps in {+-1}^n} (prod eps) P(sum_j eps_j f_j).
std::vector<double> polarize(const HomogeneousPolynomial& P,
                             std::span<const LatticeVector> args);
Evaluated<double> polarize_with_scale(const HomogeneousPolynomial& P,
                                      std::span<const LatticeVector> args);

// polarize at (f,...,f,g,...,g) with n-k copies of f and k of g; k = 0 gives
// P(f), k = n gives P(g).
std::vector<double> power_eval(const HomogeneousPolynomial& P,
                               const LatticeVector& f, const LatticeVector& g,
                               int k);
Evaluated<double> power_eval_with_scale(const HomogeneousPolynomial& P,
                                        const LatticeVector& f,
                                        const LatticeVector& g, int k);

// P(f) = sum_i c_i f_i^n: pure powers only, orthogonally additive by
// construction. The scalar overload produces codomain dimension 1.
HomogeneousPolynomial make_diagonal(int n, const std::vector<double>& c);
HomogeneousPolynomial make_diagonal(int n,
                                    const std::vector<std::vector<double>>& c);

// Random polynomial, deterministic in the seed: every pure power is present,
// each mixed monomial independently with probability density. Coefficient
// components have magnitude in [0.1, 1] and random sign (bounded in [-1, 1],
// and bounded away from zero so that a present mixed monomial violates the
// orthogonal-additivity identities by a conclusive margin).
HomogeneousPolynomial make_random(int n, int d, int p, double density,
                                  std::uint64_t seed);

// All multi-indices over `dim` variables of total degree `degree`, in
// lexicographic order.
std::vector<MultiIndex> enumerate_multi_indices(int degree, int dim);

}  // namespace oapoly
