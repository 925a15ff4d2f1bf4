#pragma once

#include <complex>
#include <span>
#include <vector>

#include "oapoly/lattice.hpp"
#include "oapoly/polynomial.hpp"

namespace oapoly {

// z = re + i*im with both parts in the same R^d.
struct ComplexLatticeVector {
  LatticeVector re;
  LatticeVector im;

  ComplexLatticeVector(LatticeVector re_, LatticeVector im_);

  std::size_t dim() const noexcept { return re.dim(); }
  static ComplexLatticeVector from_real(const LatticeVector& x);
};

ComplexLatticeVector conjugate(const ComplexLatticeVector& z);

// |z| coordinatewise: sqrt(re^2 + im^2). This is what the square-mean
// functional calculus reduces to on R^d.
LatticeVector modulus(const ComplexLatticeVector& z);

// P evaluated with complex scalar arithmetic on the monomial representation.
std::vector<std::complex<double>> complex_eval(const HomogeneousPolynomial& P,
                                               const ComplexLatticeVector& z);

// The complexification of the symmetric n-linear map: the same 2^n
// polarization sum run in complex arithmetic. Restricted to real arguments it
// equals polarize; conjugating every argument conjugates the value.
std::vector<std::complex<double>> complex_polarize(
    const HomogeneousPolynomial& P, std::span<const ComplexLatticeVector> args);
Evaluated<std::complex<double>> complex_polarize_with_scale(
    const HomogeneousPolynomial& P, std::span<const ComplexLatticeVector> args);

}  // namespace oapoly
