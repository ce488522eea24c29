#include "fracvar/solver.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fracvar/special.hpp"

namespace fracvar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxBacktracks = 80;

}  // namespace

double coercivity_floor(const HypothesisSpec& spec, const ProblemParams& params,
                        const Grid& grid, double seminorm_value) {
  double c2_sup = 0.0, c3_sup = 0.0;
  for (int i = 0; i <= grid.n; ++i) {
    c2_sup = std::max(c2_sup, std::abs(spec.c2(grid.node(i))));
    c3_sup = std::max(c3_sup, std::abs(spec.c3(grid.node(i))));
  }
  const double ba = grid.b - grid.a;
  const double al = params.alpha.value();
  const double c2_coef = c2_sup * std::pow(ba, al + 1.0 - spec.d4 / params.p) / gamma_fn(al + 1.0);
  const double s = seminorm_value;
  return spec.gamma * std::pow(s, params.p) - c2_coef * std::pow(s, spec.d4) - ba * c3_sup;
}

void SolveOptions::validate() const {
  if (max_iters < 0) throw std::invalid_argument("SolveOptions: max_iters must be >= 0");
  if (!(grad_tol > 0.0)) throw std::invalid_argument("SolveOptions: grad_tol must be > 0");
  if (!(armijo_c > 0.0)) throw std::invalid_argument("SolveOptions: armijo_c must be > 0");
  if (!(backtrack > 0.0 && backtrack < 1.0))
    throw std::invalid_argument("SolveOptions: backtrack factor must lie in (0,1)");
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kConverged: return "converged";
    case SolveStatus::kMaxIters: return "max_iters";
    case SolveStatus::kLineSearchFailure: return "line_search_failure";
  }
  return "unknown";
}

SolveResult minimize(const LagrangianModel& model, const ProblemParams& params,
                     const Grid& grid, const SolveOptions& opts) {
  opts.validate();
  if (opts.h4) opts.h4->validate(params.p);

  SampledFunction v = opts.v0 ? *opts.v0 : SampledFunction(grid, model.dim);
  if (!(v.grid() == grid) || v.dim() != model.dim)
    throw std::invalid_argument("minimize: v0 does not match grid/model");

  VelocityField vf(std::move(v), params);
  double phi = action(model, vf).value;

  std::vector<double> history{phi};
  double floor_margin = kInf;
  auto track_floor = [&](const VelocityField& f, double act) {
    if (!opts.h4) return;
    floor_margin =
        std::min(floor_margin, act - coercivity_floor(*opts.h4, params, grid, seminorm(f)));
  };
  track_floor(vf, phi);

  SolveStatus status = SolveStatus::kMaxIters;
  double grad_norm = 0.0;
  long iters = 0;

  while (true) {
    const VelocityField g = gradient(model, vf);
    grad_norm = sup_norm(g.v);
    if (grad_norm <= opts.grad_tol) {
      status = SolveStatus::kConverged;
      break;
    }
    if (iters >= opts.max_iters) {
      status = SolveStatus::kMaxIters;
      break;
    }

    const double slope = trap_dot(g.v, g.v);
    double step = 1.0;
    bool accepted = false;
    for (int bt = 0; bt < kMaxBacktracks; ++bt) {
      VelocityField cand(add_scaled(vf.v, -step, g.v), params);
      const double phi_cand = action(model, cand).value;
      if (phi_cand <= phi - opts.armijo_c * step * slope) {
        vf = std::move(cand);
        phi = phi_cand;
        accepted = true;
        break;
      }
      step *= opts.backtrack;
    }
    if (!accepted) {
      status = SolveStatus::kLineSearchFailure;
      break;
    }
    ++iters;
    history.push_back(phi);
    track_floor(vf, phi);
  }

  double res_norm = kInf;
  try {
    res_norm = el_residual(model, vf).sup_norm;
  } catch (const std::exception&) {
    // Residual needs dL/dy to vanish at t=b; stalled or non-converged iterates
    // may violate that, in which case the residual is reported as +inf.
  }

  SampledFunction u = reconstruct_state(vf);
  return SolveResult{std::move(vf), std::move(u),      std::move(history), grad_norm,
                     res_norm,      iters,             status,             floor_margin};
}

ElResidual el_residual(const LagrangianModel& model, const VelocityField& vf) {
  if (model.dim != vf.v.dim()) throw std::invalid_argument("el_residual: dim mismatch");
  const Grid& g = vf.v.grid();

  const SampledFunction u = reconstruct_state(vf);
  SampledFunction ly(g, model.dim), lx(g, model.dim);
  for (int i = 0; i <= g.n; ++i) {
    model.grad_y(u.node(i), vf.v.node(i), g.node(i), ly.node(i));
    model.grad_x(u.node(i), vf.v.node(i), g.node(i), lx.node(i));
  }

  SampledFunction dplus = frac_derivative(ly, vf.params.alpha, Side::kRight);
  SampledFunction res(g, model.dim);
  for (int i = 0; i <= g.n; ++i)
    for (int c = 0; c < model.dim; ++c) res.at(i, c) = lx.at(i, c) + dplus.at(i, c);

  const int w = boundary_layer_width(g.n);
  double sup = 0.0, l2 = 0.0;
  for (int i = w; i <= g.n - w; ++i) {
    double s2 = 0.0;
    for (int c = 0; c < model.dim; ++c) s2 += res.at(i, c) * res.at(i, c);
    sup = std::max(sup, std::sqrt(s2));
    l2 += g.h * s2;
  }
  return {std::move(res), sup, std::sqrt(l2)};
}

QuadraticSolution quadratic_oracle(const SampledFunction& f, const ProblemParams& params) {
  if (params.p != 2.0)
    throw std::invalid_argument("quadratic_oracle: requires the p = 2 setting");
  SampledFunction v = frac_integral(f, params.alpha, Side::kRight);
  for (int i = 0; i <= v.grid().n; ++i)
    for (int c = 0; c < v.dim(); ++c) v.at(i, c) = -v.at(i, c);
  VelocityField vf(std::move(v), params);
  SampledFunction u = reconstruct_state(vf);
  return {std::move(vf), std::move(u)};
}

}  // namespace fracvar
