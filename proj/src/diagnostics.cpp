#include "oapoly/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oapoly/json_io.hpp"
#include "oapoly/means.hpp"
#include "oapoly/rng.hpp"

namespace oapoly {

double normalized_residual(std::span<const double> lhs,
                           std::span<const double> rhs,
                           std::span<const double> scale,
                           const TolerancePolicy& tol, double* violation) {
  double worst = 0.0, raw = 0.0;
  for (std::size_t j = 0; j < lhs.size(); ++j) {
    const double diff = std::fabs(lhs[j] - rhs[j]);
    const double mag = std::max({std::fabs(lhs[j]), std::fabs(rhs[j]),
                                 scale.empty() ? 0.0 : scale[j]});
    worst = std::max(worst, diff / (tol.atol + tol.rtol * mag));
    raw = std::max(raw, diff);
  }
  if (violation) *violation = raw;
  return worst;
}

namespace {

std::vector<double> componentwise_max(std::span<const double> a,
                                      std::span<const double> b) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

std::vector<double> componentwise_sum(std::span<const double> a,
                                      std::span<const double> b) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// Disjoint witness for any dimension. Witness index s pins one ordered
// coordinate pair (a in supp f, b in supp g) and cycles it through all d(d-1)
// ordered pairs, so a sample that spans the cycle separates every pair of
// variables at least once; a lone mixed monomial cannot stay invisible the
// way it can under purely random support splits. Remaining coordinates go to
// f, to g, or to neither. In R^1 disjointness forces one side to vanish, so
// the pair degenerates to (x, 0) in random order.
std::pair<LatticeVector, LatticeVector> gen_disjoint(std::size_t d,
                                                     bool positive_only,
                                                     int witness_index,
                                                     RandomStream& rs) {
  auto draw = [&] {
    double mag = rs.uniform(0.1, 10.0);
    if (!positive_only && (rs.next_u64() & 1)) mag = -mag;
    return mag;
  };
  if (d < 2) {
    LatticeVector v(std::vector<double>{draw()});
    LatticeVector z = LatticeVector::zeros(1);
    if (rs.next_u64() & 1) return {std::move(v), std::move(z)};
    return {std::move(z), std::move(v)};
  }

  const std::size_t pair_index =
      static_cast<std::size_t>(witness_index) % (d * (d - 1));
  std::size_t a = pair_index / (d - 1);
  std::size_t b = pair_index % (d - 1);
  if (b >= a) ++b;

  std::vector<double> f(d, 0.0), g(d, 0.0);
  f[a] = draw();
  g[b] = draw();
  for (std::size_t i = 0; i < d; ++i) {
    if (i == a || i == b) continue;
    switch (rs.below(5)) {
      case 0:
      case 1: f[i] = draw(); break;
      case 2:
      case 3: g[i] = draw(); break;
      default: break;
    }
  }
  return {LatticeVector(std::move(f)), LatticeVector(std::move(g))};
}

// Positive-cone witness; occasionally zeroes a coordinate so the identities
// are exercised on the boundary as well.
LatticeVector gen_positive(std::size_t d, RandomStream& rs) {
  std::vector<double> v(d);
  for (auto& x : v) x = rs.uniform(0.1, 10.0);
  if (rs.uniform01() < 0.2) v[rs.below(d)] = 0.0;
  return LatticeVector(std::move(v));
}

struct Fold {
  CriterionResult res;
  bool first = true;

  explicit Fold(std::string id) { res.id = std::move(id); }

  void add(WitnessOutcome&& w) {
    if (first || w.residual > res.max_violation) {
      res.max_violation = w.residual;
      res.worst = std::move(w);
      first = false;
    }
  }

  CriterionResult take() {
    res.pass = res.max_violation <= 1.0;
    return std::move(res);
  }
};

void require_samples(int samples) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
}

CriterionResult run_oa_family(const HomogeneousPolynomial& P, int samples,
                              std::uint64_t seed, const TolerancePolicy& tol,
                              bool positive_cone, const char* id,
                              const char* stream_label) {
  require_samples(samples);
  RandomStream rs(seed, stream_label);
  Fold fold(id);
  for (int s = 0; s < samples; ++s) {
    // For the unrestricted criterion, alternate positive and mixed-sign
    // pairs: the gap between the two is exactly what the positive-cone
    // lemma closes.
    const bool positive = positive_cone || (s % 2 == 0);
    auto [f, g] = gen_disjoint(P.domain_dim(), positive, s, rs);
    fold.add(eval_oa_witness(P, f, g, tol));
  }
  return fold.take();
}

}  // namespace

WitnessOutcome eval_oa_witness(const HomogeneousPolynomial& P,
                               const LatticeVector& f, const LatticeVector& g,
                               const TolerancePolicy& tol) {
  auto lhs = eval_with_scale(P, f + g);
  auto pf = eval_with_scale(P, f);
  auto pg = eval_with_scale(P, g);
  auto rhs = componentwise_sum(pf.value, pg.value);
  auto scale = componentwise_max(lhs.scale,
                                 componentwise_sum(pf.scale, pg.scale));
  WitnessOutcome w;
  w.inputs = {{"f", vector_to_json(f)}, {"g", vector_to_json(g)}};
  w.residual = normalized_residual(lhs.value, rhs, scale, tol, &w.violation);
  w.detail = {{"lhs", lhs.value}, {"rhs", rhs}};
  return w;
}

WitnessOutcome eval_orthosymmetric_witness(const HomogeneousPolynomial& P,
                                           std::span<const LatticeVector> args,
                                           const TolerancePolicy& tol) {
  auto val = polarize_with_scale(P, args);
  const std::vector<double> zero(val.value.size(), 0.0);
  WitnessOutcome w;
  w.inputs = {{"tuple", tuple_to_json(args)}};
  w.residual = normalized_residual(val.value, zero, val.scale, tol, &w.violation);
  w.detail = {{"lhs", val.value}, {"rhs", zero}};
  return w;
}

WitnessOutcome eval_cross_terms_witness(const HomogeneousPolynomial& P,
                                        const LatticeVector& f,
                                        const LatticeVector& g,
                                        const TolerancePolicy& tol) {
  const int n = P.degree();
  WitnessOutcome w;
  w.inputs = {{"f", vector_to_json(f)}, {"g", vector_to_json(g)}};
  nlohmann::json per_k = nlohmann::json::array();
  for (int k = 1; k <= n - 1; ++k) {
    auto val = power_eval_with_scale(P, f, g, k);
    const std::vector<double> zero(val.value.size(), 0.0);
    double violation = 0.0;
    double res = normalized_residual(val.value, zero, val.scale, tol, &violation);
    per_k.push_back({{"k", k}, {"value", val.value}, {"residual", res}});
    w.residual = std::max(w.residual, res);
    w.violation = std::max(w.violation, violation);
  }
  w.detail = {{"per_k", per_k}};
  return w;
}

WitnessOutcome eval_rmp_witness(const HomogeneousPolynomial& P,
                                std::span<const LatticeVector> fs,
                                const TolerancePolicy& tol) {
  auto lhs = eval_with_scale(P, rmp_closed(P.degree(), fs));
  std::vector<double> rhs(P.codomain_dim(), 0.0);
  std::vector<double> env(P.codomain_dim(), 0.0);
  for (const auto& f : fs) {
    auto e = eval_with_scale(P, f);
    rhs = componentwise_sum(rhs, e.value);
    env = componentwise_sum(env, e.scale);
  }
  auto scale = componentwise_max(lhs.scale, env);
  WitnessOutcome w;
  w.inputs = {{"tuple", tuple_to_json(fs)}};
  w.residual = normalized_residual(lhs.value, rhs, scale, tol, &w.violation);
  w.detail = {{"lhs", lhs.value}, {"rhs", rhs}};
  return w;
}

WitnessOutcome eval_gm_witness(const HomogeneousPolynomial& P,
                               std::span<const LatticeVector> fs,
                               const TolerancePolicy& tol) {
  auto lhs = eval_with_scale(P, gm_closed(P.degree(), fs));
  auto rhs = polarize_with_scale(P, fs);
  auto scale = componentwise_max(lhs.scale, rhs.scale);
  WitnessOutcome w;
  w.inputs = {{"tuple", tuple_to_json(fs)}};
  w.residual = normalized_residual(lhs.value, rhs.value, scale, tol, &w.violation);
  w.detail = {{"lhs", lhs.value}, {"rhs", rhs.value}};
  return w;
}

WitnessOutcome eval_complex_witness(const HomogeneousPolynomial& P,
                                    const ComplexLatticeVector& z,
                                    const TolerancePolicy& tol) {
  const int n = P.degree();
  const LatticeVector az = modulus(z);
  auto lhs = eval_with_scale(P, az);

  std::vector<ComplexLatticeVector> args;
  args.reserve(n);
  const ComplexLatticeVector zbar = conjugate(z);
  const int half = n / 2;
  for (int i = 0; i < half; ++i) args.push_back(z);
  for (int i = 0; i < half; ++i) args.push_back(zbar);
  if (n % 2) args.push_back(ComplexLatticeVector::from_real(az));
  auto rhs = complex_polarize_with_scale(P, args);

  const int p = P.codomain_dim();
  std::vector<double> re(p), im(p), zero(p, 0.0);
  for (int j = 0; j < p; ++j) {
    re[j] = rhs.value[j].real();
    im[j] = rhs.value[j].imag();
  }
  auto scale = componentwise_max(lhs.scale, rhs.scale);

  WitnessOutcome w;
  w.inputs = {{"z", complex_to_json(z)}};
  double v_re = 0.0, v_im = 0.0;
  // The identity also asserts that the right side is real.
  double r_re = normalized_residual(lhs.value, re, scale, tol, &v_re);
  double r_im = normalized_residual(im, zero, scale, tol, &v_im);
  w.residual = std::max(r_re, r_im);
  w.violation = std::max(v_re, v_im);
  w.detail = {{"lhs", lhs.value}, {"rhs", {{"re", re}, {"im", im}}}};
  return w;
}

WitnessOutcome eval_decomposition_witness(const HomogeneousPolynomial& P,
                                          const LatticeVector& f,
                                          const TolerancePolicy& tol) {
  auto parts = pos_neg_decompose(f);
  auto lhs = eval_with_scale(P, f);
  auto pp = eval_with_scale(P, parts.pos);
  auto pn = eval_with_scale(P, -parts.neg);
  auto rhs = componentwise_sum(pp.value, pn.value);
  auto scale = componentwise_max(lhs.scale,
                                 componentwise_sum(pp.scale, pn.scale));
  WitnessOutcome w;
  w.inputs = {{"f", vector_to_json(f)}};
  w.residual = normalized_residual(lhs.value, rhs, scale, tol, &w.violation);
  w.detail = {{"lhs", lhs.value}, {"rhs", rhs}};
  return w;
}

CriterionResult check_oa(const HomogeneousPolynomial& P, int samples,
                         std::uint64_t seed, const TolerancePolicy& tol) {
  return run_oa_family(P, samples, seed, tol, false, "i", "crit-i");
}

CriterionResult check_pos_oa(const HomogeneousPolynomial& P, int samples,
                             std::uint64_t seed, const TolerancePolicy& tol) {
  return run_oa_family(P, samples, seed, tol, true, "ii", "crit-ii");
}

CriterionResult check_orthosymmetric(const HomogeneousPolynomial& P,
                                     int samples, std::uint64_t seed,
                                     const TolerancePolicy& tol) {
  require_samples(samples);
  const int n = P.degree();
  const std::size_t d = P.domain_dim();
  RandomStream rs(seed, "crit-iii");
  Fold fold("iii");
  for (int s = 0; s < samples; ++s) {
    // Plant a disjoint pair at two random slots; the rest are unconstrained.
    std::size_t i = rs.below(n);
    std::size_t j = rs.below(n - 1);
    if (j >= i) ++j;
    auto [fi, fj] = gen_disjoint(d, false, s, rs);
    std::vector<LatticeVector> args;
    args.reserve(n);
    for (int slot = 0; slot < n; ++slot) {
      if (static_cast<std::size_t>(slot) == i)
        args.push_back(fi);
      else if (static_cast<std::size_t>(slot) == j)
        args.push_back(fj);
      else
        args.push_back(random_vector(d, false, rs));
    }
    fold.add(eval_orthosymmetric_witness(P, args, tol));
  }
  return fold.take();
}

CriterionResult check_cross_terms(const HomogeneousPolynomial& P, int samples,
                                  std::uint64_t seed,
                                  const TolerancePolicy& tol) {
  require_samples(samples);
  RandomStream rs(seed, "crit-iv");
  Fold fold("iv");
  for (int s = 0; s < samples; ++s) {
    auto [f, g] = gen_disjoint(P.domain_dim(), s % 2 == 0, s, rs);
    fold.add(eval_cross_terms_witness(P, f, g, tol));
  }
  return fold.take();
}

CriterionResult check_rmp_identity(const HomogeneousPolynomial& P, int r,
                                   int samples, std::uint64_t seed,
                                   const TolerancePolicy& tol) {
  require_samples(samples);
  if (r < 2) throw std::invalid_argument("rmp identity arity must be >= 2");
  RandomStream rs(seed, "crit-v");
  Fold fold("v");
  for (int s = 0; s < samples; ++s) {
    std::vector<LatticeVector> fs;
    fs.reserve(r);
    for (int j = 0; j < r; ++j) fs.push_back(gen_positive(P.domain_dim(), rs));
    fold.add(eval_rmp_witness(P, fs, tol));
  }
  return fold.take();
}

CriterionResult check_gm_identity(const HomogeneousPolynomial& P, int samples,
                                  std::uint64_t seed,
                                  const TolerancePolicy& tol) {
  require_samples(samples);
  RandomStream rs(seed, "crit-vi");
  Fold fold("vi");
  for (int s = 0; s < samples; ++s) {
    std::vector<LatticeVector> fs;
    fs.reserve(P.degree());
    for (int j = 0; j < P.degree(); ++j)
      fs.push_back(gen_positive(P.domain_dim(), rs));
    fold.add(eval_gm_witness(P, fs, tol));
  }
  return fold.take();
}

CriterionResult check_complex_identity(const HomogeneousPolynomial& P,
                                       int samples, std::uint64_t seed,
                                       const TolerancePolicy& tol) {
  require_samples(samples);
  const std::size_t d = P.domain_dim();
  RandomStream rs(seed, "crit-vii");
  Fold fold("vii");
  for (int s = 0; s < samples; ++s) {
    LatticeVector re = random_vector(d, false, rs);
    // A quarter of the witnesses are real, exercising the reduction to the
    // real identity.
    LatticeVector im = rs.uniform01() < 0.25 ? LatticeVector::zeros(d)
                                             : random_vector(d, false, rs);
    fold.add(eval_complex_witness(P, ComplexLatticeVector(re, im), tol));
  }
  return fold.take();
}

CriterionResult check_decomposition(const HomogeneousPolynomial& P,
                                    int samples, std::uint64_t seed,
                                    const TolerancePolicy& tol) {
  require_samples(samples);
  RandomStream rs(seed, "lemma-decomposition");
  Fold fold("decomposition");
  for (int s = 0; s < samples; ++s)
    fold.add(eval_decomposition_witness(P, random_vector(P.domain_dim(), false, rs), tol));
  return fold.take();
}

EquivalenceReport equivalence_suite(const HomogeneousPolynomial& P,
                                    const SuiteConfig& config) {
  const int r = config.r > 0 ? config.r : std::max(2, P.degree());
  if (r < 2) throw std::invalid_argument("rmp identity arity must be >= 2");

  EquivalenceReport rep;
  rep.config = config;
  rep.resolved_r = r;
  rep.criteria.push_back(check_oa(P, config.samples, config.seed, config.tol));
  rep.criteria.push_back(check_pos_oa(P, config.samples, config.seed, config.tol));
  rep.criteria.push_back(
      check_orthosymmetric(P, config.samples, config.seed, config.tol));
  rep.criteria.push_back(
      check_cross_terms(P, config.samples, config.seed, config.tol));
  rep.criteria.push_back(
      check_rmp_identity(P, r, config.samples, config.seed, config.tol));
  rep.criteria.push_back(
      check_gm_identity(P, config.samples, config.seed, config.tol));
  rep.criteria.push_back(
      check_complex_identity(P, config.samples, config.seed, config.tol));
  rep.decomposition =
      check_decomposition(P, config.samples, config.seed, config.tol);

  rep.coherent = std::all_of(
      rep.criteria.begin(), rep.criteria.end(),
      [&](const CriterionResult& c) { return c.pass == rep.criteria[0].pass; });
  rep.lemma_agreement = rep.criteria[0].pass == rep.criteria[1].pass;
  return rep;
}

WitnessOutcome replay_witness(const HomogeneousPolynomial& P,
                              const std::string& criterion,
                              const nlohmann::json& inputs,
                              const TolerancePolicy& tol) {
  if (criterion == "i" || criterion == "ii")
    return eval_oa_witness(P, vector_from_json(inputs.at("f")),
                           vector_from_json(inputs.at("g")), tol);
  if (criterion == "iii")
    return eval_orthosymmetric_witness(P, tuple_from_json(inputs.at("tuple")),
                                       tol);
  if (criterion == "iv")
    return eval_cross_terms_witness(P, vector_from_json(inputs.at("f")),
                                    vector_from_json(inputs.at("g")), tol);
  if (criterion == "v")
    return eval_rmp_witness(P, tuple_from_json(inputs.at("tuple")), tol);
  if (criterion == "vi")
    return eval_gm_witness(P, tuple_from_json(inputs.at("tuple")), tol);
  if (criterion == "vii")
    return eval_complex_witness(P, complex_from_json(inputs.at("z")), tol);
  if (criterion == "decomposition")
    return eval_decomposition_witness(P, vector_from_json(inputs.at("f")), tol);
  throw std::invalid_argument("unknown criterion id: " + criterion);
}

nlohmann::json criterion_to_json(const CriterionResult& c) {
  return {{"pass", c.pass},
          {"max_violation", c.max_violation},
          {"witness",
           {{"inputs", c.worst.inputs},
            {"residual", c.worst.residual},
            {"violation", c.worst.violation},
            {"detail", c.worst.detail}}}};
}

nlohmann::json report_to_json(const EquivalenceReport& rep) {
  nlohmann::json criteria = nlohmann::json::object();
  for (const auto& c : rep.criteria) criteria[c.id] = criterion_to_json(c);
  return {{"criteria", criteria},
          {"coherent", rep.coherent},
          {"lemma",
           {{"decomposition", criterion_to_json(rep.decomposition)},
            {"pos_oa_agrees_oa", rep.lemma_agreement}}},
          {"seed", rep.config.seed},
          {"config",
           {{"samples", rep.config.samples},
            {"rtol", rep.config.tol.rtol},
            {"atol", rep.config.tol.atol},
            {"r", rep.resolved_r}}}};
}

const std::vector<std::string>& criterion_ids() {
  static const std::vector<std::string> ids = {"i",  "ii", "iii", "iv",
                                               "v",  "vi", "vii"};
  return ids;
}

}  // namespace oapoly
