#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "oapoly/complexify.hpp"
#include "oapoly/lattice.hpp"
#include "oapoly/polynomial.hpp"

namespace oapoly {

// A comparison passes when, per output component,
//   |lhs - rhs| <= atol + rtol * max(|lhs|, |rhs|, scale)
// where scale is the magnitude envelope of the evaluations that produced the
// two sides. The envelope term keeps the residual meaningful for the
// identities that compare against zero (orthosymmetry, vanishing cross
// terms), whose polarization sums cancel quantities far larger than atol.
struct TolerancePolicy {
  double rtol = 1e-9;
  double atol = 1e-9;
};

// One witness evaluation. `residual` is normalized (pass iff <= 1);
// `violation` is the worst raw component difference |lhs - rhs|. `inputs`
// holds the witness in wire format so a verdict can be replayed from the
// report alone.
struct WitnessOutcome {
  nlohmann::json inputs;
  nlohmann::json detail;
  double residual = 0.0;
  double violation = 0.0;
};

// Verdict of one criterion over a witness sample. A fail is conclusive (a
// concrete violated identity); a pass is evidence at the sampled witnesses.
struct CriterionResult {
  std::string id;
  bool pass = true;
  double max_violation = 0.0;  // worst normalized residual over witnesses
  WitnessOutcome worst;
};

struct SuiteConfig {
  int samples = 64;
  std::uint64_t seed = 1;
  TolerancePolicy tol;
  int r = 0;  // arity for the root-mean-power identity; 0 -> max(2, degree)
};

// All seven criteria plus the positive-cone decomposition check. `coherent`
// means the seven pass flags agree, which is what the underlying theorem
// demands of any polynomial; an incoherent report indicates a bug here, not
// a counterexample.
struct EquivalenceReport {
  std::vector<CriterionResult> criteria;  // i..vii, in order
  bool coherent = false;
  CriterionResult decomposition;
  bool lemma_agreement = false;  // pass(i) == pass(ii)
  SuiteConfig config;
  int resolved_r = 0;
};

double normalized_residual(std::span<const double> lhs,
                           std::span<const double> rhs,
                           std::span<const double> scale,
                           const TolerancePolicy& tol, double* violation);

// --- per-witness evaluations (used by the checkers, by replay, and by the
// acceptance suite's pinned instances) ---

// (i)/(ii): P(f+g) vs P(f) + P(g), f disjoint from g.
WitnessOutcome eval_oa_witness(const HomogeneousPolynomial& P,
                               const LatticeVector& f, const LatticeVector& g,
                               const TolerancePolicy& tol);
// (iii): polarize over a tuple containing a disjoint pair vs 0.
WitnessOutcome eval_orthosymmetric_witness(const HomogeneousPolynomial& P,
                                           std::span<const LatticeVector> args,
                                           const TolerancePolicy& tol);
// (iv): power_eval(P, f, g, k) vs 0 for every k in {1, ..., n-1}.
WitnessOutcome eval_cross_terms_witness(const HomogeneousPolynomial& P,
                                        const LatticeVector& f,
                                        const LatticeVector& g,
                                        const TolerancePolicy& tol);
// (v): P(rmp_closed(n, fs)) vs sum_k P(fs_k), fs in the positive cone.
WitnessOutcome eval_rmp_witness(const HomogeneousPolynomial& P,
                                std::span<const LatticeVector> fs,
                                const TolerancePolicy& tol);
// (vi): P(gm_closed(n, fs)) vs polarize(P, fs), fs in the positive cone.
WitnessOutcome eval_gm_witness(const HomogeneousPolynomial& P,
                               std::span<const LatticeVector> fs,
                               const TolerancePolicy& tol);
// (vii): P(|z|) vs the complexified polar form; the imaginary part of the
// right side must also vanish.
WitnessOutcome eval_complex_witness(const HomogeneousPolynomial& P,
                                    const ComplexLatticeVector& z,
                                    const TolerancePolicy& tol);
// Lemma check: P(f) vs P(f+) + P(-f-).
WitnessOutcome eval_decomposition_witness(const HomogeneousPolynomial& P,
                                          const LatticeVector& f,
                                          const TolerancePolicy& tol);

// --- sampled criteria ---

CriterionResult check_oa(const HomogeneousPolynomial& P, int samples,
                         std::uint64_t seed, const TolerancePolicy& tol);
CriterionResult check_pos_oa(const HomogeneousPolynomial& P, int samples,
                             std::uint64_t seed, const TolerancePolicy& tol);
CriterionResult check_orthosymmetric(const HomogeneousPolynomial& P,
                                     int samples, std::uint64_t seed,
                                     const TolerancePolicy& tol);
CriterionResult check_cross_terms(const HomogeneousPolynomial& P, int samples,
                                  std::uint64_t seed,
                                  const TolerancePolicy& tol);
CriterionResult check_rmp_identity(const HomogeneousPolynomial& P, int r,
                                   int samples, std::uint64_t seed,
                                   const TolerancePolicy& tol);
CriterionResult check_gm_identity(const HomogeneousPolynomial& P, int samples,
                                  std::uint64_t seed,
                                  const TolerancePolicy& tol);
CriterionResult check_complex_identity(const HomogeneousPolynomial& P,
                                       int samples, std::uint64_t seed,
                                       const TolerancePolicy& tol);
CriterionResult check_decomposition(const HomogeneousPolynomial& P,
                                    int samples, std::uint64_t seed,
                                    const TolerancePolicy& tol);

EquivalenceReport equivalence_suite(const HomogeneousPolynomial& P,
                                    const SuiteConfig& config);

// Re-evaluates one criterion on a stored witness (the "inputs" object of a
// report). Criterion ids: "i".."vii", "decomposition".
WitnessOutcome replay_witness(const HomogeneousPolynomial& P,
                              const std::string& criterion,
                              const nlohmann::json& inputs,
                              const TolerancePolicy& tol);

nlohmann::json criterion_to_json(const CriterionResult& c);
nlohmann::json report_to_json(const EquivalenceReport& rep);

// Roman-numeral ids in clause order.
const std::vector<std::string>& criterion_ids();

}  // namespace oapoly
