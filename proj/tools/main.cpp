#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "oapoly/diagnostics.hpp"
#include "oapoly/json_io.hpp"
#include "oapoly/means.hpp"
#include "oapoly/polynomial.hpp"
#include "oapoly/rng.hpp"

namespace {

using nlohmann::json;
using namespace oapoly;

void write_output(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << j.dump(2) << "\n";
}

void require_nonnegative_tuple(const std::vector<LatticeVector>& fs) {
  for (const auto& f : fs)
    for (std::size_t i = 0; i < f.dim(); ++i)
      if (f[i] < 0.0)
        throw std::invalid_argument("input vectors must be >= 0");
}

double relative_gap(const LatticeVector& a, const LatticeVector& b) {
  double gap = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] == b[i]) continue;
    double mag = std::max(std::fabs(a[i]), std::fabs(b[i]));
    gap = std::max(gap, std::fabs(a[i] - b[i]) / mag);
  }
  return gap;
}

struct MeansArgs {
  std::string kind;
  int n = 2;
  std::string method = "closed";
  int budget = 256;
  bool refine = true;
  double theta_max = 1e6;
  std::uint64_t seed = 1;
  std::string input = "-";
  std::string out;
};

int run_means(const MeansArgs& a) {
  auto fs = tuple_from_json(load_json(a.input));
  require_nonnegative_tuple(fs);

  const bool rmp = a.kind == "rmp";
  auto closed = rmp ? rmp_closed(a.n, fs) : gm_closed(a.n, fs);

  json out;
  if (a.method == "closed") {
    out = {{"result", closed.values()}, {"method", "closed"}};
  } else {
    VariationalBudget budget{a.budget, a.refine, a.theta_max};
    auto var = rmp ? rmp_variational(a.n, fs, budget, a.seed)
                   : gm_variational(a.n, fs, budget, a.seed);
    out = {{"result", var.values()},
           {"method", "variational"},
           {"gap_to_closed", relative_gap(var, closed)}};
  }
  write_output(out, a.out);
  return 0;
}

struct CheckArgs {
  std::string poly;
  std::vector<std::string> criteria;
  int samples = 64;
  std::uint64_t seed = 1;
  double rtol = 1e-9;
  double atol = 1e-9;
  int r = 0;
  int degree_cap = 8;
  std::string out;
};

int run_check(const CheckArgs& a) {
  auto P = polynomial_from_json(load_json(a.poly));
  if (P.degree() > a.degree_cap)
    throw std::invalid_argument("polynomial degree exceeds the degree cap (" +
                                std::to_string(a.degree_cap) + ")");

  SuiteConfig config{a.samples, a.seed, TolerancePolicy{a.rtol, a.atol}, a.r};

  if (a.criteria.empty()) {
    auto rep = equivalence_suite(P, config);
    write_output(report_to_json(rep), a.out);
    return rep.coherent ? 0 : 1;
  }

  // Subset run: coherence is judged over the requested clauses only.
  json criteria = json::object();
  bool first_pass = false, coherent = true, have_first = false;
  const int r = config.r > 0 ? config.r : std::max(2, P.degree());
  for (const auto& id : a.criteria) {
    CriterionResult c;
    if (id == "i") c = check_oa(P, a.samples, a.seed, config.tol);
    else if (id == "ii") c = check_pos_oa(P, a.samples, a.seed, config.tol);
    else if (id == "iii") c = check_orthosymmetric(P, a.samples, a.seed, config.tol);
    else if (id == "iv") c = check_cross_terms(P, a.samples, a.seed, config.tol);
    else if (id == "v") c = check_rmp_identity(P, r, a.samples, a.seed, config.tol);
    else if (id == "vi") c = check_gm_identity(P, a.samples, a.seed, config.tol);
    else if (id == "vii") c = check_complex_identity(P, a.samples, a.seed, config.tol);
    else if (id == "decomposition") c = check_decomposition(P, a.samples, a.seed, config.tol);
    else throw std::invalid_argument("unknown criterion id: " + id);
    if (!have_first) {
      first_pass = c.pass;
      have_first = true;
    }
    coherent = coherent && c.pass == first_pass;
    criteria[c.id] = criterion_to_json(c);
  }
  json out = {{"criteria", criteria},
              {"coherent", coherent},
              {"seed", a.seed},
              {"config",
               {{"samples", a.samples},
                {"rtol", a.rtol},
                {"atol", a.atol},
                {"r", r}}}};
  write_output(out, a.out);
  return coherent ? 0 : 1;
}

struct FuzzArgs {
  int n = 2;
  int dim = 3;
  int p = 1;
  int trials = 100;
  int samples = 32;
  std::uint64_t seed = 1;
  double rtol = 1e-9;
  double atol = 1e-9;
  int r = 0;
  std::string out;
};

HomogeneousPolynomial fuzz_polynomial(int kind, int n, int d, int p,
                                      std::uint64_t trial_seed) {
  switch (kind) {
    case 0: {  // diagonal: orthogonally additive by construction
      RandomStream rs(trial_seed, "diag-gen");
      std::vector<std::vector<double>> c(d, std::vector<double>(p));
      for (auto& col : c)
        for (auto& x : col) {
          double mag = rs.uniform(0.1, 1.0);
          x = (rs.next_u64() & 1) ? -mag : mag;
        }
      return make_diagonal(n, c);
    }
    case 1:
      return make_random(n, d, p, 0.15, trial_seed);  // sparse
    default:
      return make_random(n, d, p, 1.0, trial_seed);  // dense
  }
}

int run_fuzz(const FuzzArgs& a) {
  RandomStream trial_seeds(a.seed, "fuzz-trials");

  std::map<std::string, std::pair<int, int>> tally;  // id -> (pass, fail)
  for (const auto& id : criterion_ids()) tally[id] = {0, 0};
  int coherent_trials = 0;
  int lemma_disagreements = 0;
  int decomposition_failures = 0;
  json incoherent = json::array();

  for (int t = 0; t < a.trials; ++t) {
    const std::uint64_t trial_seed = trial_seeds.next_u64();
    auto P = fuzz_polynomial(t % 3, a.n, a.dim, a.p, trial_seed);
    SuiteConfig config{a.samples, trial_seed,
                       TolerancePolicy{a.rtol, a.atol}, a.r};
    auto rep = equivalence_suite(P, config);

    for (const auto& c : rep.criteria)
      (c.pass ? tally[c.id].first : tally[c.id].second)++;
    if (rep.coherent) {
      ++coherent_trials;
    } else {
      incoherent.push_back({{"trial", t},
                            {"polynomial", polynomial_to_json(P)},
                            {"report", report_to_json(rep)}});
    }
    if (!rep.lemma_agreement) ++lemma_disagreements;
    if (rep.criteria[1].pass && !rep.decomposition.pass)
      ++decomposition_failures;
  }

  json per_criterion = json::object();
  for (const auto& [id, counts] : tally)
    per_criterion[id] = {{"pass", counts.first}, {"fail", counts.second}};

  json summary = {{"trials", a.trials},
                  {"degree", a.n},
                  {"dim", a.dim},
                  {"codomain_dim", a.p},
                  {"coherent_trials", coherent_trials},
                  {"incoherent_trials", a.trials - coherent_trials},
                  {"per_criterion", per_criterion},
                  {"lemma",
                   {{"disagreements", lemma_disagreements},
                    {"decomposition_failures_under_pos_oa",
                     decomposition_failures}}},
                  {"incoherent", incoherent},
                  {"seed", a.seed},
                  {"config",
                   {{"samples", a.samples},
                    {"rtol", a.rtol},
                    {"atol", a.atol},
                    {"r", a.r}}}};
  write_output(summary, a.out);
  return coherent_trials == a.trials ? 0 : 1;
}

struct PolarizeArgs {
  std::string poly;
  std::string args;
  std::string out;
};

int run_polarize(const PolarizeArgs& a) {
  auto P = polynomial_from_json(load_json(a.poly));
  json tuple = load_json(a.args);
  if (!tuple.is_array() || tuple.empty())
    throw std::invalid_argument("argument tuple must be a nonempty array");

  json out;
  if (looks_complex(tuple.front())) {
    auto zs = complex_tuple_from_json(tuple);
    auto value = complex_polarize(P, zs);
    std::vector<double> re(value.size()), im(value.size());
    for (std::size_t j = 0; j < value.size(); ++j) {
      re[j] = value[j].real();
      im[j] = value[j].imag();
    }
    out = {{"value", {{"re", re}, {"im", im}}}};
  } else {
    auto fs = tuple_from_json(tuple);
    out = {{"value", polarize(P, fs)}};
  }
  write_output(out, a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orthogonally additive homogeneous polynomials on R^d: "
               "functional-calculus means, polarization, and equivalence "
               "diagnostics"};
  app.require_subcommand(1);

  MeansArgs means_args;
  auto* means_cmd = app.add_subcommand(
      "means", "evaluate the root mean power or geometric mean of a tuple");
  means_cmd->add_option("--kind", means_args.kind, "rmp or gm")
      ->required()
      ->check(CLI::IsMember({"rmp", "gm"}));
  means_cmd->add_option("--n", means_args.n, "mean degree (n >= 2)")->required();
  means_cmd->add_option("--method", means_args.method, "closed or variational")
      ->check(CLI::IsMember({"closed", "variational"}));
  means_cmd->add_option("--budget", means_args.budget,
                        "variational sample count");
  means_cmd->add_flag("--refine,!--no-refine", means_args.refine,
                      "run the exact per-coordinate optimizer after sampling");
  means_cmd->add_option("--theta-max", means_args.theta_max,
                        "multiplier cap for the gm refiner");
  means_cmd->add_option("--seed", means_args.seed, "sampler seed");
  means_cmd->add_option("--input", means_args.input,
                        "tuple file (JSON array of {\"values\": [...]}), - for stdin");
  means_cmd->add_option("--out", means_args.out, "output file (default stdout)");

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand(
      "check", "run the equivalence criteria on a polynomial file");
  check_cmd->add_option("--poly", check_args.poly, "polynomial JSON file")
      ->required();
  check_cmd->add_option("--criteria", check_args.criteria,
                        "subset of i,ii,iii,iv,v,vi,vii,decomposition "
                        "(default: full suite)")
      ->delimiter(',');
  check_cmd->add_option("--samples", check_args.samples, "witnesses per criterion");
  check_cmd->add_option("--seed", check_args.seed, "witness seed");
  check_cmd->add_option("--rtol", check_args.rtol, "relative tolerance");
  check_cmd->add_option("--atol", check_args.atol, "absolute tolerance");
  check_cmd->add_option("--r", check_args.r,
                        "arity for the root-mean-power identity (default max(2, n))");
  check_cmd->add_option("--degree-cap", check_args.degree_cap,
                        "reject polynomials above this degree");
  check_cmd->add_option("--out", check_args.out, "output file (default stdout)");

  FuzzArgs fuzz_args;
  auto* fuzz_cmd = app.add_subcommand(
      "fuzz", "equivalence-coherence campaign over generated polynomials");
  fuzz_cmd->add_option("--n", fuzz_args.n, "polynomial degree")->required();
  fuzz_cmd->add_option("--dim", fuzz_args.dim, "domain dimension")->required();
  fuzz_cmd->add_option("--p", fuzz_args.p, "codomain dimension");
  fuzz_cmd->add_option("--trials", fuzz_args.trials, "number of trials")
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--samples", fuzz_args.samples, "witnesses per criterion");
  fuzz_cmd->add_option("--seed", fuzz_args.seed, "campaign seed");
  fuzz_cmd->add_option("--rtol", fuzz_args.rtol, "relative tolerance");
  fuzz_cmd->add_option("--atol", fuzz_args.atol, "absolute tolerance");
  fuzz_cmd->add_option("--r", fuzz_args.r, "rmp identity arity (0 = default rule)");
  fuzz_cmd->add_option("--out", fuzz_args.out, "output file (default stdout)");

  PolarizeArgs pol_args;
  auto* pol_cmd = app.add_subcommand(
      "polarize", "evaluate the symmetric multilinear form on a tuple file");
  pol_cmd->add_option("--poly", pol_args.poly, "polynomial JSON file")->required();
  pol_cmd->add_option("--args", pol_args.args,
                      "tuple file: n real or complex vectors")
      ->required();
  pol_cmd->add_option("--out", pol_args.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (means_cmd->parsed()) return run_means(means_args);
    if (check_cmd->parsed()) return run_check(check_args);
    if (fuzz_cmd->parsed()) return run_fuzz(fuzz_args);
    if (pol_cmd->parsed()) return run_polarize(pol_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
