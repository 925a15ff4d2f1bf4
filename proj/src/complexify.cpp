#include "oapoly/complexify.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "eval_core.hpp"

namespace oapoly {

ComplexLatticeVector::ComplexLatticeVector(LatticeVector re_, LatticeVector im_)
    : re(std::move(re_)), im(std::move(im_)) {
  if (re.dim() != im.dim())
    throw std::invalid_argument("complex vector parts have mismatched dimensions");
}

ComplexLatticeVector ComplexLatticeVector::from_real(const LatticeVector& x) {
  return {x, LatticeVector::zeros(x.dim())};
}

ComplexLatticeVector conjugate(const ComplexLatticeVector& z) {
  return {z.re, -z.im};
}

LatticeVector modulus(const ComplexLatticeVector& z) {
  std::vector<double> out(z.dim());
  for (std::size_t i = 0; i < z.dim(); ++i)
    out[i] = std::sqrt(z.re[i] * z.re[i] + z.im[i] * z.im[i]);
  return LatticeVector(std::move(out));
}

namespace {

void require_domain(const HomogeneousPolynomial& P,
                    const ComplexLatticeVector& z) {
  if (static_cast<int>(z.dim()) != P.domain_dim())
    throw std::invalid_argument("argument dimension does not match domain_dim");
}

std::vector<std::complex<double>> pack(const ComplexLatticeVector& z) {
  std::vector<std::complex<double>> out(z.dim());
  for (std::size_t i = 0; i < z.dim(); ++i) out[i] = {z.re[i], z.im[i]};
  return out;
}

}  // namespace

std::vector<std::complex<double>> complex_eval(const HomogeneousPolynomial& P,
                                               const ComplexLatticeVector& z) {
  require_domain(P, z);
  auto x = pack(z);
  std::vector<std::complex<double>> value(P.codomain_dim(), 0.0);
  detail::accumulate_terms<std::complex<double>>(P, x.data(), value.data(),
                                                 nullptr);
  return value;
}

Evaluated<std::complex<double>> complex_polarize_with_scale(
    const HomogeneousPolynomial& P,
    std::span<const ComplexLatticeVector> args) {
  const int n = P.degree();
  if (args.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("complex_polarize takes exactly n arguments");
  for (const auto& z : args) require_domain(P, z);

  const std::size_t d = P.domain_dim();
  const int p = P.codomain_dim();

  double norm = std::ldexp(1.0, n);
  for (int i = 2; i <= n; ++i) norm *= i;

  std::vector<std::vector<std::complex<double>>> packed;
  packed.reserve(args.size());
  for (const auto& z : args) packed.push_back(pack(z));

  std::vector<std::complex<double>> comb(d), value(p, 0.0), term(p);
  std::vector<double> scale(p, 0.0);
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    std::fill(comb.begin(), comb.end(), std::complex<double>(0.0));
    for (int j = 0; j < n; ++j) {
      const double eps = (mask >> j) & 1 ? 1.0 : -1.0;
      for (std::size_t i = 0; i < d; ++i) comb[i] += eps * packed[j][i];
    }
    std::fill(term.begin(), term.end(), std::complex<double>(0.0));
    detail::accumulate_terms<std::complex<double>>(P, comb.data(), term.data(),
                                                   scale.data());
    const double sign = (n - std::popcount(mask)) % 2 == 0 ? 1.0 : -1.0;
    for (int j = 0; j < p; ++j) value[j] += sign * term[j];
  }
  for (int j = 0; j < p; ++j) {
    value[j] /= norm;
    scale[j] /= norm;
  }
  return {std::move(value), std::move(scale)};
}

std::vector<std::complex<double>> complex_polarize(
    const HomogeneousPolynomial& P,
    std::span<const ComplexLatticeVector> args) {
  return complex_polarize_with_scale(P, args).value;
}

}  // namespace oapoly
