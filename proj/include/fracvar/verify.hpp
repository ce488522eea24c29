#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracvar/solver.hpp"

namespace fracvar {

/// Outcome of one property check. Uniform semantics: pass iff
/// discrepancy <= tolerance. For identity checks the discrepancy is the
/// (windowed) sup-node deviation and the tolerance comes from the refinement
/// study; for the paper's inequalities the discrepancy is the overshoot past
/// the paper's exact constant and the tolerance is additive quadrature slack.
struct PropertyReport {
  std::string id;
  double alpha = 0.0;
  std::optional<double> beta;
  std::optional<double> p;
  int n = 0;
  std::uint64_t seed = 0;
  double discrepancy = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::optional<int> witness_node;
  std::optional<double> witness_t;
  double scale = 1.0;
};

/// Study-calibrated tolerance for an identity check at grid size n, per unit
/// scale. Known ids: "semigroup", "composition", "ac_decomposition", "ibp".
double identity_tolerance(const std::string& id, int n);

/// I^alpha(I^beta f) = I^(alpha+beta) f; alpha, beta > 0, alpha + beta < 2.
PropertyReport check_semigroup(double alpha, double beta, const SampledFunction& f);

/// D^alpha(I^alpha f) = f on the interior scoring window.
PropertyReport check_composition(FracOrder alpha, const SampledFunction& f);

/// D^alpha f = I^(1-alpha) fdot for f with f(a) = 0, fdot supplied analytically.
PropertyReport check_ac_decomposition(FracOrder alpha, const SampledFunction& f,
                                      const SampledFunction& fdot);

/// ||I^alpha f||_Lp <= (b-a)^alpha / Gamma(1+alpha) ||f||_Lp + 1e-8 ||f||_Lp.
PropertyReport check_lp_bound(FracOrder alpha, double p, const SampledFunction& f);

/// integral(I^alpha_- f . g) = integral(f . I^alpha_+ g). The exponent
/// hypothesis 1/p + 1/q < 1 + alpha is enforced up front (the equality
/// boundary is rejected, not probed).
PropertyReport check_ibp(FracOrder alpha, const SampledFunction& f, const SampledFunction& g,
                         double p, double q);

/// ||I^alpha f||_inf <= sup-bound constant * ||f||_Lp + slack, and
/// I^alpha f(a) = 0 exactly.
PropertyReport check_sup_bound(FracOrder alpha, double p, const SampledFunction& f);

/// Over all node pairs t1 < t2:
/// ||I^alpha f(t2) - I^alpha f(t1)|| <= 2||f||_Lp / (Gamma(alpha)((alpha-1)q+1)^(1/q))
///                                      * (t2-t1)^(alpha-1/p) + slack.
PropertyReport check_holder_modulus(FracOrder alpha, double p, const SampledFunction& f);

/// Lemma-2 floor: action >= coercivity_floor(seminorm) - 1e-6 relative slack,
/// for every supplied velocity field.
PropertyReport check_coercivity_floor(const LagrangianModel& model, const HypothesisSpec& spec,
                                      const ProblemParams& params,
                                      const std::vector<VelocityField>& fields);

struct LatticeConfig {
  double a = 0.0;
  double b = 1.0;
  std::vector<double> alphas{0.3, 0.5, 0.6, 0.75, 0.9};
  std::vector<double> ps{2.0, 3.0, 4.0};
  std::vector<int> ns{256, 512, 1024};
  std::uint64_t seed = 1;
  double tol_scale = 1.0;  // multiplies every tolerance; CI knob
};

/// Runs every check over the (alpha, p, n) lattice, skipping pairs violating
/// 1/p < alpha. Deterministic given the config.
std::vector<PropertyReport> run_lattice(const LatticeConfig& config);

/// JSON array of reports (the properties.json schema, see README).
std::string reports_to_json(const std::vector<PropertyReport>& reports);

}  // namespace fracvar
