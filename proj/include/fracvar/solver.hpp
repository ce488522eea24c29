#pragma once

#include <optional>
#include <vector>

#include "fracvar/functional.hpp"

namespace fracvar {

struct SolveOptions {
  long max_iters = 1000;
  double grad_tol = 1e-8;        // stop when sup-norm of the gradient <= this
  double armijo_c = 1e-4;        // sufficient-decrease constant
  double backtrack = 0.5;        // step shrink factor, in (0,1)
  std::optional<SampledFunction> v0;      // initial velocity; default v0 = 0
  std::optional<HypothesisSpec> h4;       // when set, the coercivity floor is
                                          // checked at every iterate

  void validate() const;
};

enum class SolveStatus { kConverged, kMaxIters, kLineSearchFailure };

const char* to_string(SolveStatus s);

struct SolveResult {
  VelocityField v_star;
  SampledFunction u_star;
  std::vector<double> action_history;  // non-increasing by the line-search contract
  double final_grad_norm = 0.0;
  double el_residual_norm = 0.0;  // +inf when the residual is not evaluable
  long iterations = 0;
  SolveStatus status = SolveStatus::kMaxIters;
  double floor_margin = 0.0;  // min over iterates of action - coercivity floor
                              // (+inf when no H4 spec is attached)
};

/// Gradient descent on the velocity coordinates with backtracking line search.
/// The descent direction is the v-space representer from gradient(). Statuses:
/// converged (sup-norm of gradient <= grad_tol), max_iters, or
/// line_search_failure (no step satisfies sufficient decrease; flags
/// nonsmooth or non-coercive models). Local descent only: no global-optimality
/// claim for non-convex models.
SolveResult minimize(const LagrangianModel& model, const ProblemParams& params,
                     const Grid& grid, const SolveOptions& opts);

struct ElResidual {
  SampledFunction residual;  // all nodes reported; boundary layer not scored
  double sup_norm = 0.0;     // over the interior scoring window
  double l2_norm = 0.0;
};

/// Pointwise Euler-Lagrange residual dL/dx(u,v,t) + D^alpha_+[dL/dy(u,v,.)](t).
/// Norms exclude a boundary layer of boundary_layer_width(n) nodes at each
/// end: the statement is almost-everywhere and the discrete right derivative
/// loses accuracy next to its singular endpoint.
ElResidual el_residual(const LagrangianModel& model, const VelocityField& vf);

/// Lemma-2 lower bound on the action at seminorm value s:
///   gamma s^p - ||c2||_inf (b-a)^(alpha+1-d4/p) / Gamma(alpha+1) s^d4
///   - (b-a) ||c3||_inf,
/// with the sup norms of c2, c3 taken over the grid nodes.
double coercivity_floor(const HypothesisSpec& spec, const ProblemParams& params,
                        const Grid& grid, double seminorm_value);

struct QuadraticSolution {
  VelocityField v_star;
  SampledFunction u_star;
};

/// Closed-form minimizer of L = 1/2 ||y||^2 + f(t).x (p = 2): moving the
/// fractional integral off the state turns the action into
/// integral of 1/2||v||^2 + I^alpha_+ f . v, minimized pointwise by
/// v* = -I^alpha_+ f.
QuadraticSolution quadratic_oracle(const SampledFunction& f, const ProblemParams& params);

}  // namespace fracvar
