#include "fracvar/functional.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fracvar/detail/seeded.hpp"

namespace fracvar {

namespace {

constexpr double kPi = 3.14159265358979323846;

SampledFunction sample_grad(const GradFn& grad, const SampledFunction& u,
                            const SampledFunction& v) {
  SampledFunction out(u.grid(), u.dim());
  for (int i = 0; i <= u.grid().n; ++i)
    grad(u.node(i), v.node(i), u.grid().node(i), out.node(i));
  return out;
}

void require_model(const LagrangianModel& model, const VelocityField& vf, const char* who) {
  if (model.dim != vf.v.dim())
    throw std::invalid_argument(std::string(who) + ": model dim " +
                                std::to_string(model.dim) + " != field dim " +
                                std::to_string(vf.v.dim()));
}

}  // namespace

ActionValue action(const LagrangianModel& model, const VelocityField& vf) {
  require_model(model, vf, "action");
  const SampledFunction u = reconstruct_state(vf);
  const Grid& g = vf.v.grid();
  SampledFunction integrand(g, 1);
  for (int i = 0; i <= g.n; ++i) {
    const double li = model.eval(u.node(i), vf.v.node(i), g.node(i));
    if (!std::isfinite(li))
      throw std::runtime_error("action: non-finite integrand for model '" + model.name +
                               "' at node " + std::to_string(i) + " (t = " +
                               std::to_string(g.node(i)) + ")");
    integrand.at(i, 0) = li;
  }
  return {trap_integral(integrand), std::move(integrand)};
}

double gateaux(const LagrangianModel& model, const VelocityField& vf_u,
               const VelocityField& vf_w) {
  require_model(model, vf_u, "gateaux");
  require_model(model, vf_w, "gateaux");
  if (!(vf_u.v.grid() == vf_w.v.grid()))
    throw std::invalid_argument("gateaux: mismatched grids");

  const SampledFunction u = reconstruct_state(vf_u);
  const SampledFunction w_state = reconstruct_state(vf_w);
  const SampledFunction lx = sample_grad(model.grad_x, u, vf_u.v);
  const SampledFunction ly = sample_grad(model.grad_y, u, vf_u.v);
  return trap_dot(lx, w_state) + trap_dot(ly, vf_w.v);
}

VelocityField gradient(const LagrangianModel& model, const VelocityField& vf) {
  require_model(model, vf, "gradient");
  const SampledFunction u = reconstruct_state(vf);
  const SampledFunction lx = sample_grad(model.grad_x, u, vf.v);
  const SampledFunction ly = sample_grad(model.grad_y, u, vf.v);
  SampledFunction g = frac_integral(lx, vf.params.alpha, Side::kRight);
  for (int i = 0; i <= g.grid().n; ++i)
    for (int c = 0; c < g.dim(); ++c) g.at(i, c) += ly.at(i, c);
  return {std::move(g), vf.params};
}

double fd_check(const LagrangianModel& model, const VelocityField& vf, int n_directions,
                double step, std::uint64_t seed) {
  if (!(step > 0.0)) throw std::invalid_argument("fd_check: step must be > 0");
  const double base = action(model, vf).value;

  double worst = 0.0;
  for (int j = 0; j < n_directions; ++j) {
    const SampledFunction w = make_trig_field(vf.v.grid(), vf.v.dim(), seed + 1000ULL * j, false);
    const VelocityField dir(w, vf.params);
    const double gx = gateaux(model, vf, dir);
    const double plus = action(model, VelocityField(add_scaled(vf.v, step, w), vf.params)).value;
    const double minus = action(model, VelocityField(add_scaled(vf.v, -step, w), vf.params)).value;
    const double fd = (plus - minus) / (2.0 * step);
    const double denom = std::max(std::abs(gx), std::abs(fd));
    if (denom <= 1e-14 * (1.0 + std::abs(base))) continue;  // degenerate direction
    worst = std::max(worst, std::abs(fd - gx) / denom);
  }
  return worst;
}

SampledFunction make_trig_field(const Grid& grid, int dim, std::uint64_t seed,
                                bool vanish_at_a) {
  std::uint64_t s = seed * 0x2545F4914F6CDD1DULL + 0x9E3779B97F4A7C15ULL;
  constexpr int kModes = 3;
  SampledFunction out(grid, dim);
  const double span = grid.b - grid.a;
  for (int c = 0; c < dim; ++c) {
    double ak[kModes], bk[kModes];
    for (int k = 0; k < kModes; ++k) {
      ak[k] = (2.0 * detail::unit_from_bits(detail::splitmix64(s)) - 1.0) / ((k + 1) * (k + 1));
      bk[k] = vanish_at_a ? 0.0
                          : (2.0 * detail::unit_from_bits(detail::splitmix64(s)) - 1.0) /
                                ((k + 1) * (k + 1));
    }
    for (int i = 0; i <= grid.n; ++i) {
      const double tau = (grid.node(i) - grid.a) / span;
      double v = 0.0;
      for (int k = 0; k < kModes; ++k)
        v += ak[k] * std::sin((k + 1) * kPi * tau) + bk[k] * std::cos((k + 1) * kPi * tau);
      out.at(i, c) = v;
    }
  }
  const double m = sup_norm(out);
  if (m > 1e-12) {
    for (int i = 0; i <= grid.n; ++i)
      for (int c = 0; c < dim; ++c) out.at(i, c) /= m;
  }
  return out;
}

std::pair<SampledFunction, SampledFunction> make_trig_pair(const Grid& grid, int dim,
                                                           std::uint64_t seed) {
  std::uint64_t s = seed * 0x2545F4914F6CDD1DULL + 0x9E3779B97F4A7C15ULL;
  constexpr int kModes = 3;
  SampledFunction f(grid, dim), fdot(grid, dim);
  const double span = grid.b - grid.a;
  for (int c = 0; c < dim; ++c) {
    double ak[kModes];
    for (int k = 0; k < kModes; ++k)
      ak[k] = (2.0 * detail::unit_from_bits(detail::splitmix64(s)) - 1.0) / ((k + 1) * (k + 1));
    for (int i = 0; i <= grid.n; ++i) {
      const double tau = (grid.node(i) - grid.a) / span;
      double v = 0.0, dv = 0.0;
      for (int k = 0; k < kModes; ++k) {
        const double om = (k + 1) * kPi;
        v += ak[k] * std::sin(om * tau);
        dv += ak[k] * om / span * std::cos(om * tau);
      }
      f.at(i, c) = v;
      fdot.at(i, c) = dv;
    }
  }
  const double m = sup_norm(f);
  if (m > 1e-12) {
    for (int i = 0; i <= grid.n; ++i)
      for (int c = 0; c < dim; ++c) {
        f.at(i, c) /= m;
        fdot.at(i, c) /= m;
      }
  }
  return {std::move(f), std::move(fdot)};
}

}  // namespace fracvar
