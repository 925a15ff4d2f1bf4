#include "oapoly/means.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "oapoly/kernels.hpp"

namespace oapoly {

namespace {

std::size_t common_dim(std::span<const LatticeVector> fs) {
  std::size_t d = fs.front().dim();
  for (const auto& f : fs)
    if (f.dim() != d)
      throw std::invalid_argument("mean arguments have mismatched dimensions");
  return d;
}

void require_nonnegative(std::span<const LatticeVector> fs) {
  for (const auto& f : fs)
    for (std::size_t i = 0; i < f.dim(); ++i)
      if (f[i] < 0.0)
        throw std::invalid_argument("mean arguments must be >= 0");
}

// Per-coordinate max of |fs_k|, plus a copy with zeros replaced by 1 so the
// ratio kernels never divide by zero (a zero max means every term is zero).
struct ScaleInfo {
  std::vector<double> max;
  std::vector<double> safe;
};

ScaleInfo magnitude_scale(std::span<const LatticeVector> fs, std::size_t d) {
  const auto& k = kern::ops();
  ScaleInfo s{std::vector<double>(d), std::vector<double>(d)};
  std::vector<double> tmp(d);
  k.vabs(fs[0].span().data(), s.max.data(), d);
  for (std::size_t j = 1; j < fs.size(); ++j) {
    k.vabs(fs[j].span().data(), tmp.data(), d);
    k.vmax_update(tmp.data(), s.max.data(), d);
  }
  for (std::size_t i = 0; i < d; ++i)
    s.safe[i] = s.max[i] == 0.0 ? 1.0 : s.max[i];
  return s;
}

}  // namespace

double holder_conjugate(int n) {
  if (n < 2)
    throw std::invalid_argument("Holder conjugate requires n >= 2, got " +
                                std::to_string(n));
  return static_cast<double>(n) / (n - 1);
}

LatticeVector rmp_closed(int n, std::span<const LatticeVector> fs) {
  if (n < 2) throw std::invalid_argument("root mean power requires n >= 2");
  if (fs.size() < 2)
    throw std::invalid_argument("root mean power requires at least 2 arguments");
  require_nonnegative(fs);
  const std::size_t d = common_dim(fs);
  const auto& k = kern::ops();

  ScaleInfo s = magnitude_scale(fs, d);
  std::vector<double> acc(d, 0.0);
  for (const auto& f : fs)
    k.vpow_ratio_accum(f.span().data(), s.safe.data(), n, acc.data(), d);

  const double inv_n = 1.0 / n;
  std::vector<double> out(d);
  for (std::size_t i = 0; i < d; ++i)
    out[i] = s.max[i] * std::pow(acc[i], inv_n);
  return LatticeVector(std::move(out));
}

LatticeVector rmp_variational(int n, std::span<const LatticeVector> fs,
                              const VariationalBudget& budget,
                              std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("root mean power requires n >= 2");
  if (fs.size() < 2)
    throw std::invalid_argument("root mean power requires at least 2 arguments");
  if (budget.sample_count < 1)
    throw std::invalid_argument("sample_count must be >= 1");
  require_nonnegative(fs);
  const std::size_t d = common_dim(fs);
  const std::size_t r = fs.size();
  const double m = holder_conjugate(n);
  const auto& k = kern::ops();

  // Unit coordinate tuples are feasible (a_k^m sums to 1) and make the
  // result dominate every single argument, hence f v g for pairs.
  std::vector<double> best(fs[0].span().begin(), fs[0].span().end());
  for (std::size_t j = 1; j < r; ++j)
    k.vmax_update(fs[j].span().data(), best.data(), d);

  RandomStream rs(seed, "rmp-sampler");
  std::vector<double> a(r), cand(d);
  for (int t = 0; t < budget.sample_count; ++t) {
    // Uniform on the simplex in m-power coordinates: a_k = s_k^(1/m) with s
    // on the unit simplex keeps sum a_k^m = 1 up to roundoff.
    double total = 0.0;
    for (auto& ak : a) {
      ak = -std::log(1.0 - rs.uniform01());
      total += ak;
    }
    if (total == 0.0) continue;  // all-zero exponential draw
    for (auto& ak : a) ak = std::pow(ak / total, 1.0 / m);

    k.vscale(fs[0].span().data(), a[0], cand.data(), d);
    for (std::size_t j = 1; j < r; ++j)
      k.vaxpy(a[j], fs[j].span().data(), cand.data(), d);
    k.vmax_update(cand.data(), best.data(), d);
  }

  if (budget.refine) {
    // Analytic maximizer per coordinate, in scale-invariant form:
    // a_k = q_k^{n-1} / (sum q_i^n)^{1/m} with q_k = x_k / max_i x_i.
    std::vector<double> q(r);
    for (std::size_t i = 0; i < d; ++i) {
      double mx = 0.0;
      for (std::size_t j = 0; j < r; ++j) mx = std::max(mx, fs[j][i]);
      if (mx == 0.0) continue;  // all terms zero; sup is 0, already covered
      double sum_qn = 0.0;
      for (std::size_t j = 0; j < r; ++j) {
        q[j] = fs[j][i] / mx;
        sum_qn += std::pow(q[j], n);
      }
      double denom = std::pow(sum_qn, 1.0 / m);
      double val = 0.0;
      for (std::size_t j = 0; j < r; ++j)
        val += std::pow(q[j], n - 1) / denom * fs[j][i];
      best[i] = std::max(best[i], val);
    }
  }
  return LatticeVector(std::move(best));
}

LatticeVector gm_closed(int n, std::span<const LatticeVector> fs) {
  if (n < 2) throw std::invalid_argument("geometric mean requires n >= 2");
  if (fs.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("geometric mean of degree n takes exactly n arguments");
  const std::size_t d = common_dim(fs);
  const auto& k = kern::ops();

  ScaleInfo s = magnitude_scale(fs, d);
  std::vector<double> acc(d, 1.0);
  for (const auto& f : fs)
    k.vmul_ratio_accum(f.span().data(), s.safe.data(), acc.data(), d);

  const double inv_n = 1.0 / n;
  std::vector<double> out(d);
  for (std::size_t i = 0; i < d; ++i)
    out[i] = s.max[i] * std::pow(acc[i], inv_n);
  return LatticeVector(std::move(out));
}

LatticeVector gm_variational(int n, std::span<const LatticeVector> fs,
                             const VariationalBudget& budget,
                             std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("geometric mean requires n >= 2");
  if (fs.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("geometric mean of degree n takes exactly n arguments");
  if (budget.sample_count < 1)
    throw std::invalid_argument("sample_count must be >= 1");
  if (budget.theta_max < 1.0)
    throw std::invalid_argument("theta_max must be >= 1");
  require_nonnegative(fs);
  const std::size_t d = common_dim(fs);
  const std::size_t r = fs.size();
  const auto& k = kern::ops();

  const double inv_n = 1.0 / n;

  // theta = (1,...,1): the arithmetic mean bounds the result from above.
  std::vector<double> best(d, 0.0), cand(d);
  for (const auto& f : fs) k.vaxpy(1.0, f.span().data(), best.data(), d);
  k.vscale(best.data(), inv_n, best.data(), d);

  // Zero-mean Gaussian exponents keep prod theta = 1; the temperature ladder
  // probes several scales, which matters on coordinates with zero entries
  // where the infimum calls for unbounded multipliers.
  static constexpr double kTemperatures[] = {0.5, 1.0, 2.0, 4.0, 8.0, 16.0};
  RandomStream rs(seed, "gm-sampler");
  std::vector<double> u(r), theta(r);
  for (int t = 0; t < budget.sample_count; ++t) {
    double tau = kTemperatures[t % std::size(kTemperatures)];
    double mean = 0.0;
    for (auto& ui : u) {
      ui = rs.normal();
      mean += ui;
    }
    mean /= static_cast<double>(r);
    for (std::size_t j = 0; j < r; ++j) theta[j] = std::exp(tau * (u[j] - mean));

    k.vscale(fs[0].span().data(), theta[0], cand.data(), d);
    for (std::size_t j = 1; j < r; ++j)
      k.vaxpy(theta[j], fs[j].span().data(), cand.data(), d);
    k.vscale(cand.data(), inv_n, cand.data(), d);
    k.vmin_update(cand.data(), best.data(), d);
  }

  if (budget.refine) {
    for (std::size_t i = 0; i < d; ++i) {
      int zeros = 0;
      for (std::size_t j = 0; j < r; ++j)
        if (fs[j][i] == 0.0) ++zeros;
      double val;
      if (zeros == 0) {
        // Interior minimizer theta_k = G / x_k with G the scalar geometric
        // mean; evaluated through the thetas so this route stays independent
        // of gm_closed.
        double log_sum = 0.0;
        for (std::size_t j = 0; j < r; ++j) log_sum += std::log(fs[j][i]);
        double g = std::exp(log_sum * inv_n);
        double sum = 0.0;
        for (std::size_t j = 0; j < r; ++j) sum += (g / fs[j][i]) * fs[j][i];
        val = sum * inv_n;
      } else if (zeros == static_cast<int>(r)) {
        val = 0.0;  // every term vanishes under any feasible theta
      } else {
        // Unattained infimum: cap the zero-slot multipliers at theta_max and
        // balance the rest, theta_small = theta_max^(-z/(n-z)).
        double theta_small =
            std::pow(budget.theta_max,
                     -static_cast<double>(zeros) / (static_cast<double>(n) - zeros));
        double sum = 0.0;
        for (std::size_t j = 0; j < r; ++j)
          if (fs[j][i] != 0.0) sum += theta_small * fs[j][i];
        val = sum * inv_n;
      }
      best[i] = std::min(best[i], val);
    }
  }
  return LatticeVector(std::move(best));
}

}  // namespace oapoly
