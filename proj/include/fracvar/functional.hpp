#pragma once

#include "fracvar/lagrangian.hpp"
#include "fracvar/space.hpp"

namespace fracvar {

struct ActionValue {
  double value;                // trapezoid quadrature of the integrand
  SampledFunction integrand;   // scalar samples of t -> L(u(t), v(t), t)
};

/// Action of the Lagrangian over the reconstructed state: integral of
/// L(u, v, t) with u = I^alpha_- v. Throws if the integrand is non-finite,
/// naming the offending node.
ActionValue action(const LagrangianModel& model, const VelocityField& vf);

/// Directional derivative of the action at vf_u along the reconstruction of
/// vf_w: integral of dL/dx . W + dL/dy . w, with W = I^alpha_- w.
double gateaux(const LagrangianModel& model, const VelocityField& vf_u,
               const VelocityField& vf_w);

/// v-space representer of the Gateaux derivative:
///   g(t) = I^alpha_+ [dL/dx(u,v,.)](t) + dL/dy(u(t), v(t), t),
/// so that the trapezoid pairing of g with any direction w reproduces
/// gateaux(vf, w) up to the continuous-vs-discrete adjoint gap.
VelocityField gradient(const LagrangianModel& model, const VelocityField& vf);

/// Central-difference validation of gateaux over seeded unit directions;
/// returns the worst relative error (0 for degenerate directions).
double fd_check(const LagrangianModel& model, const VelocityField& vf, int n_directions,
                double step, std::uint64_t seed);

/// Smooth seeded field: per component a low-order trigonometric polynomial,
/// normalized to unit sup norm. vanish_at_a uses sines only.
SampledFunction make_trig_field(const Grid& grid, int dim, std::uint64_t seed,
                                bool vanish_at_a);

/// The same field together with its exact derivative samples.
std::pair<SampledFunction, SampledFunction> make_trig_pair(const Grid& grid, int dim,
                                                           std::uint64_t seed);

}  // namespace fracvar
