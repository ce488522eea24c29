#include "fracvar/space.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fracvar/special.hpp"

namespace fracvar {

ProblemParams::ProblemParams(FracOrder alpha_, double p_)
    : alpha(alpha_), p(p_), q(p_ / (p_ - 1.0)) {
  if (!(p > 1.0)) throw std::invalid_argument("ProblemParams: requires p > 1");
  if (!(1.0 / p < alpha.value()))
    throw std::invalid_argument("ProblemParams: requires 1/p < alpha (got 1/p = " +
                                std::to_string(1.0 / p) + ", alpha = " +
                                std::to_string(alpha.value()) + ")");
}

VelocityField::VelocityField(SampledFunction v_, ProblemParams params_)
    : v(std::move(v_)), params(params_) {
  if (!v.finite()) throw std::invalid_argument("VelocityField: non-finite samples");
}

SampledFunction reconstruct_state(const VelocityField& vf) {
  return frac_integral(vf.v, vf.params.alpha, Side::kLeft);
}

double seminorm(const VelocityField& vf) { return lp_norm_trap(vf.v, vf.params.p); }

double full_norm(const VelocityField& vf) {
  const double p = vf.params.p;
  const double su = std::pow(lp_norm_trap(reconstruct_state(vf), p), p);
  const double sv = std::pow(lp_norm_trap(vf.v, p), p);
  return std::pow(su + sv, 1.0 / p);
}

EmbeddingConstants embedding_constants(const ProblemParams& params, double a, double b) {
  if (!(a < b)) throw std::invalid_argument("embedding_constants: requires a < b");
  const double al = params.alpha.value();
  const double q = params.q;
  EmbeddingConstants out;
  out.lp_bound = std::pow(b - a, al) / gamma_fn(1.0 + al);
  out.sup_bound = std::pow(b - a, al - 1.0 / params.p) /
                  (gamma_fn(al) * std::pow((al - 1.0) * q + 1.0, 1.0 / q));
  return out;
}

}  // namespace fracvar
