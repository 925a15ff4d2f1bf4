#include "oapoly/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "eval_core.hpp"
#include "oapoly/kernels.hpp"
#include "oapoly/rng.hpp"

namespace oapoly {

HomogeneousPolynomial::HomogeneousPolynomial(int degree, int domain_dim,
                                             int codomain_dim,
                                             std::vector<Term> monomials)
    : n_(degree), d_(domain_dim), p_(codomain_dim) {
  if (degree < 2)
    throw std::invalid_argument("polynomial degree must be >= 2");
  if (domain_dim < 1 || codomain_dim < 1)
    throw std::invalid_argument("polynomial dimensions must be >= 1");

  std::sort(monomials.begin(), monomials.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });

  exps_.reserve(monomials.size() * d_);
  coeffs_.reserve(monomials.size() * p_);
  const MultiIndex* prev = nullptr;
  for (const auto& [alpha, coeff] : monomials) {
    if (static_cast<int>(alpha.size()) != d_)
      throw std::invalid_argument("multi-index length must equal domain_dim");
    if (static_cast<int>(coeff.size()) != p_)
      throw std::invalid_argument("coefficient length must equal codomain_dim");
    int total = 0;
    for (int e : alpha) {
      if (e < 0) throw std::invalid_argument("exponents must be >= 0");
      total += e;
    }
    if (total != n_)
      throw std::invalid_argument("every monomial must have total degree n");
    if (prev && *prev == alpha)
      throw std::invalid_argument("duplicate multi-index in monomial list");
    prev = &alpha;
    exps_.insert(exps_.end(), alpha.begin(), alpha.end());
    for (double c : coeff) {
      if (!std::isfinite(c))
        throw std::invalid_argument("coefficients must be finite");
      coeffs_.push_back(c);
    }
  }
}

namespace {

void require_domain(const HomogeneousPolynomial& P, const LatticeVector& f) {
  if (static_cast<int>(f.dim()) != P.domain_dim())
    throw std::invalid_argument("argument dimension does not match domain_dim");
}

Evaluated<double> polarize_impl(const HomogeneousPolynomial& P,
                                std::span<const LatticeVector> args,
                                bool want_scale) {
  const int n = P.degree();
  if (args.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("polarize takes exactly n arguments");
  for (const auto& f : args) require_domain(P, f);

  const std::size_t d = P.domain_dim();
  const int p = P.codomain_dim();
  const auto& k = kern::ops();

  double norm = std::ldexp(1.0, n);  // 2^n
  for (int i = 2; i <= n; ++i) norm *= i;

  std::vector<double> comb(d), value(p, 0.0), scale(p, 0.0), term(p);
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    k.vscale(args[0].span().data(), (mask & 1) ? 1.0 : -1.0, comb.data(), d);
    for (int j = 1; j < n; ++j)
      k.vaxpy((mask >> j) & 1 ? 1.0 : -1.0, args[j].span().data(), comb.data(),
              d);

    std::fill(term.begin(), term.end(), 0.0);
    detail::accumulate_terms<double>(P, comb.data(), term.data(),
                                     want_scale ? scale.data() : nullptr);
    // prod eps = (-1)^(number of -1 entries)
    const double sign = (n - std::popcount(mask)) % 2 == 0 ? 1.0 : -1.0;
    for (int j = 0; j < p; ++j) value[j] += sign * term[j];
  }
  for (int j = 0; j < p; ++j) {
    value[j] /= norm;
    scale[j] /= norm;
  }
  return {std::move(value), std::move(scale)};
}

}  // namespace

std::vector<double> eval(const HomogeneousPolynomial& P,
                         const LatticeVector& f) {
  require_domain(P, f);
  std::vector<double> value(P.codomain_dim(), 0.0);
  detail::accumulate_terms<double>(P, f.span().data(), value.data(), nullptr);
  return value;
}

Evaluated<double> eval_with_scale(const HomogeneousPolynomial& P,
                                  const LatticeVector& f) {
  require_domain(P, f);
  std::vector<double> value(P.codomain_dim(), 0.0);
  std::vector<double> scale(P.codomain_dim(), 0.0);
  detail::accumulate_terms<double>(P, f.span().data(), value.data(),
                                   scale.data());
  return {std::move(value), std::move(scale)};
}

std::vector<double> polarize(const HomogeneousPolynomial& P,
                             std::span<const LatticeVector> args) {
  return polarize_impl(P, args, false).value;
}

Evaluated<double> polarize_with_scale(const HomogeneousPolynomial& P,
                                      std::span<const LatticeVector> args) {
  return polarize_impl(P, args, true);
}

std::vector<double> power_eval(const HomogeneousPolynomial& P,
                               const LatticeVector& f, const LatticeVector& g,
                               int k) {
  return power_eval_with_scale(P, f, g, k).value;
}

Evaluated<double> power_eval_with_scale(const HomogeneousPolynomial& P,
                                        const LatticeVector& f,
                                        const LatticeVector& g, int k) {
  const int n = P.degree();
  if (k < 0 || k > n)
    throw std::invalid_argument("power_eval requires 0 <= k <= n");
  std::vector<LatticeVector> tuple;
  tuple.reserve(n);
  for (int i = 0; i < n - k; ++i) tuple.push_back(f);
  for (int i = 0; i < k; ++i) tuple.push_back(g);
  return polarize_impl(P, tuple, true);
}

HomogeneousPolynomial make_diagonal(int n, const std::vector<double>& c) {
  std::vector<std::vector<double>> cols;
  cols.reserve(c.size());
  for (double x : c) cols.push_back({x});
  return make_diagonal(n, cols);
}

HomogeneousPolynomial make_diagonal(int n,
                                    const std::vector<std::vector<double>>& c) {
  if (c.empty()) throw std::invalid_argument("diagonal family needs d >= 1");
  const int d = static_cast<int>(c.size());
  const int p = static_cast<int>(c.front().size());
  std::vector<HomogeneousPolynomial::Term> terms;
  terms.reserve(d);
  for (int i = 0; i < d; ++i) {
    MultiIndex alpha(d, 0);
    alpha[i] = n;
    terms.emplace_back(std::move(alpha), c[i]);
  }
  return HomogeneousPolynomial(n, d, p, std::move(terms));
}

HomogeneousPolynomial make_random(int n, int d, int p, double density,
                                  std::uint64_t seed) {
  if (density <= 0.0 || density > 1.0)
    throw std::invalid_argument("density must be in (0, 1]");
  RandomStream rs(seed, "poly-generator");
  auto draw_coeff = [&] {
    std::vector<double> c(p);
    for (auto& x : c) {
      double mag = rs.uniform(0.1, 1.0);
      x = (rs.next_u64() & 1) ? -mag : mag;
    }
    return c;
  };
  std::vector<HomogeneousPolynomial::Term> terms;
  for (auto& alpha : enumerate_multi_indices(n, d)) {
    const bool pure =
        std::count_if(alpha.begin(), alpha.end(), [](int e) { return e > 0; }) == 1;
    if (pure || rs.uniform01() < density)
      terms.emplace_back(std::move(alpha), draw_coeff());
  }
  return HomogeneousPolynomial(n, d, p, std::move(terms));
}

std::vector<MultiIndex> enumerate_multi_indices(int degree, int dim) {
  if (dim < 1 || degree < 0)
    throw std::invalid_argument("enumerate_multi_indices needs dim >= 1, degree >= 0");
  std::vector<MultiIndex> out;
  MultiIndex cur(dim, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == dim - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace oapoly
