#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "oapoly/complexify.hpp"
#include "oapoly/polynomial.hpp"
#include "oapoly/rng.hpp"

using namespace oapoly;

namespace {
LatticeVector lv(std::vector<double> v) { return LatticeVector(std::move(v)); }
using Term = HomogeneousPolynomial::Term;
}  // namespace

TEST_CASE("conjugate is an involution fixing real vectors") {
  ComplexLatticeVector z(lv({1, -2}), lv({3, 0.5}));
  auto zbb = conjugate(conjugate(z));
  CHECK(zbb.re == z.re);
  CHECK(zbb.im == z.im);

  auto x = ComplexLatticeVector::from_real(lv({1, 2}));
  auto xb = conjugate(x);
  CHECK(xb.re == x.re);
  CHECK(xb.im == LatticeVector::zeros(2));

  ComplexLatticeVector w(lv({1}), lv({2}));
  CHECK(conjugate(w).im == lv({-2}));

  CHECK_THROWS_AS(ComplexLatticeVector(lv({1}), lv({1, 2})),
                  std::invalid_argument);
}

TEST_CASE("modulus") {
  ComplexLatticeVector z(lv({3}), lv({4}));
  CHECK(modulus(z) == lv({5}));

  auto x = lv({-2, 7, 0});
  CHECK(modulus(ComplexLatticeVector::from_real(x)) == abs(x));

  ComplexLatticeVector w(lv({1.5, -2}), lv({-0.5, 3}));
  CHECK(modulus(w) == modulus(conjugate(w)));
}

TEST_CASE("complex_polarize restricted to real arguments equals polarize") {
  RandomStream rs(67, "cplx-restriction");
  for (int t = 0; t < 60; ++t) {
    int n = 2 + static_cast<int>(rs.below(3));
    auto P = make_random(n, 3, 2, 0.7, 4000 + t);
    std::vector<LatticeVector> real_args;
    std::vector<ComplexLatticeVector> cplx_args;
    for (int j = 0; j < n; ++j) {
      real_args.push_back(random_vector(3, false, rs));
      cplx_args.push_back(ComplexLatticeVector::from_real(real_args.back()));
    }
    auto want = polarize_with_scale(P, real_args);
    auto got = complex_polarize(P, cplx_args);
    for (int j = 0; j < 2; ++j) {
      CHECK(std::fabs(got[j].real() - want.value[j]) <=
            1e-10 * std::max(want.scale[j], 1.0));
      CHECK(std::fabs(got[j].imag()) <= 1e-12 * std::max(want.scale[j], 1.0));
    }
  }
}

TEST_CASE("conjugating every argument conjugates the value") {
  RandomStream rs(71, "cplx-equivariance");
  for (int t = 0; t < 40; ++t) {
    int n = 2 + static_cast<int>(rs.below(2));
    auto P = make_random(n, 2, 1, 0.8, 6000 + t);
    std::vector<ComplexLatticeVector> args, conj_args;
    for (int j = 0; j < n; ++j) {
      args.emplace_back(random_vector(2, false, rs), random_vector(2, false, rs));
      conj_args.push_back(conjugate(args.back()));
    }
    auto v = complex_polarize_with_scale(P, args);
    auto w = complex_polarize(P, conj_args);
    CHECK(std::abs(w[0] - std::conj(v.value[0])) <=
          1e-10 * std::max(v.scale[0], 1.0));
  }
}

TEST_CASE("complex_polarize is symmetric under argument swaps") {
  auto P = make_random(3, 2, 1, 1.0, 12);
  RandomStream rs(73, "cplx-symmetry");
  std::vector<ComplexLatticeVector> args;
  for (int j = 0; j < 3; ++j)
    args.emplace_back(random_vector(2, false, rs), random_vector(2, false, rs));
  auto v = complex_polarize_with_scale(P, args);
  std::swap(args[0], args[2]);
  auto w = complex_polarize(P, args);
  CHECK(std::abs(w[0] - v.value[0]) <= 1e-12 * std::max(v.scale[0], 1.0));
}

TEST_CASE("diagonal spot value: conjugate pair gives |z|^2") {
  // P = c x^2 on R^1, z = 3 + 4i: polarized at (z, zbar) this is c |z|^2 = 25c
  const double c = 0.7;
  auto P = make_diagonal(2, std::vector<double>{c});
  ComplexLatticeVector z(lv({3}), lv({4}));
  std::vector<ComplexLatticeVector> args{z, conjugate(z)};
  auto v = complex_polarize(P, args);
  CHECK(v[0].real() == doctest::Approx(25 * c).epsilon(1e-14));
  CHECK(v[0].imag() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("square-of-sum counterexample: (1, i) separates the two sides") {
  auto P = HomogeneousPolynomial(
      2, 2, 1, {Term{{2, 0}, {1.0}}, Term{{1, 1}, {2.0}}, Term{{0, 2}, {1.0}}});
  ComplexLatticeVector z(lv({1, 0}), lv({0, 1}));
  CHECK(modulus(z) == lv({1, 1}));
  CHECK(eval(P, modulus(z))[0] == 4.0);
  std::vector<ComplexLatticeVector> args{z, conjugate(z)};
  auto rhs = complex_polarize(P, args);
  CHECK(rhs[0].real() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(rhs[0].imag() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("argument count is enforced") {
  auto P = make_diagonal(3, std::vector<double>{1.0});
  std::vector<ComplexLatticeVector> two{
      ComplexLatticeVector::from_real(lv({1})),
      ComplexLatticeVector::from_real(lv({2}))};
  CHECK_THROWS_AS(complex_polarize(P, two), std::invalid_argument);
}
