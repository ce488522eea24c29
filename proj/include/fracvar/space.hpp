#pragma once

#include "fracvar/fracops.hpp"
#include "fracvar/grid.hpp"

namespace fracvar {

/// Standing parameters: 0 < 1/p < alpha < 1, q the conjugate exponent.
struct ProblemParams {
  FracOrder alpha;
  double p;
  double q;

  ProblemParams(FracOrder alpha, double p);
};

/// Discrete element of E_{alpha,p}, parametrized by the fractional velocity
/// v = D^alpha_- u. The state u is recovered as I^alpha_- v, which makes the
/// membership constraint I^alpha_- D^alpha_- u = u automatic.
struct VelocityField {
  SampledFunction v;
  ProblemParams params;

  VelocityField(SampledFunction v, ProblemParams params);
};

/// u = I^alpha_- v; u(a) = 0 exactly.
SampledFunction reconstruct_state(const VelocityField& vf);

/// |u|_{alpha,p} = ||v||_{L^p} by trapezoid quadrature of ||v||^p.
double seminorm(const VelocityField& vf);

/// ||u||_{alpha,p} = (||u||_{L^p}^p + ||v||_{L^p}^p)^(1/p).
double full_norm(const VelocityField& vf);

struct EmbeddingConstants {
  double lp_bound;   // (b-a)^alpha / Gamma(1+alpha)
  double sup_bound;  // (b-a)^(alpha-1/p) / (Gamma(alpha) ((alpha-1)q+1)^(1/q))
};

EmbeddingConstants embedding_constants(const ProblemParams& params, double a, double b);

}  // namespace fracvar
