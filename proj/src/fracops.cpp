#include "fracvar/fracops.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracvar/special.hpp"

namespace fracvar {

FracOrder::FracOrder(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("FracOrder: alpha must lie strictly in (0,1), got " +
                                std::to_string(alpha));
}

namespace {

void require_finite(const SampledFunction& f, const char* who) {
  if (!f.finite()) throw std::invalid_argument(std::string(who) + ": non-finite samples");
}

// Left integral of the piecewise-linear interpolant, any order mu in (0,2):
//   I_i = h^mu / Gamma(mu+2) * [ b_i f_0 + sum_{k=1}^{i-1} c_k f_{i-k} + f_i ]
//   c_k = (k+1)^(mu+1) - 2k^(mu+1) + (k-1)^(mu+1),  b_i = (i-1)^(mu+1) - (i-1-mu) i^mu.
// The c_k are second differences of the convex map k -> k^(mu+1), hence >= 0;
// all weights are nonnegative, so nonnegative data yields nonnegative results.
SampledFunction integral_left(const SampledFunction& f, double mu) {
  const Grid& g = f.grid();
  const int n = g.n;
  const int d = f.dim();
  std::vector<double> pw(n + 2), c(n + 1, 0.0), amu(n + 1);
  for (int k = 0; k <= n + 1; ++k) pw[k] = std::pow(double(k), mu + 1.0);
  for (int k = 1; k <= n; ++k) c[k] = pw[k + 1] - 2.0 * pw[k] + pw[k - 1];
  for (int k = 0; k <= n; ++k) amu[k] = std::pow(double(k), mu);

  const double scale = std::pow(g.h, mu) / gamma_fn(mu + 2.0);
  SampledFunction out(g, d);
  for (int i = 1; i <= n; ++i) {
    const double b0 = pw[i - 1] - (i - 1.0 - mu) * amu[i];
    for (int cmp = 0; cmp < d; ++cmp) {
      double acc = b0 * f.at(0, cmp) + f.at(i, cmp);
      for (int k = 1; k <= i - 1; ++k) acc += c[k] * f.at(i - k, cmp);
      out.at(i, cmp) = scale * acc;
    }
  }
  return out;
}

// Exact d/dt of I^(1-alpha) of the interpolant through (t_j, f_j) with f_0 = 0:
//   D_i = h^(-alpha)/Gamma(2-alpha) * sum_{j=0}^{i-1} (f_{j+1}-f_j) w_{i-j},
//   w_k = k^(1-alpha) - (k-1)^(1-alpha).
SampledFunction derivative_left(const SampledFunction& f, double alpha) {
  const Grid& g = f.grid();
  const int n = g.n;
  const int d = f.dim();
  std::vector<double> w(n + 1);
  for (int k = 1; k <= n; ++k)
    w[k] = std::pow(double(k), 1.0 - alpha) - std::pow(double(k - 1), 1.0 - alpha);

  const double scale = std::pow(g.h, -alpha) / gamma_fn(2.0 - alpha);
  SampledFunction out(g, d);
  for (int i = 1; i <= n; ++i) {
    for (int cmp = 0; cmp < d; ++cmp) {
      double acc = 0.0;
      for (int j = 0; j <= i - 1; ++j)
        acc += (f.at(j + 1, cmp) - f.at(j, cmp)) * w[i - j];
      out.at(i, cmp) = scale * acc;
    }
  }
  return out;
}

double endpoint_mag(const SampledFunction& f, int node) {
  double s2 = 0.0;
  for (int c = 0; c < f.dim(); ++c) s2 += f.at(node, c) * f.at(node, c);
  return std::sqrt(s2);
}

}  // namespace

namespace detail {

SampledFunction frac_integral_order(const SampledFunction& f, double order, Side side) {
  if (!(order > 0.0) || !(order < 2.0))
    throw std::invalid_argument("frac_integral_order: order must lie in (0,2)");
  require_finite(f, "frac_integral");
  if (side == Side::kLeft) return integral_left(f, order);
  return integral_left(f.reflected(), order).reflected();
}

}  // namespace detail

SampledFunction frac_integral(const SampledFunction& f, FracOrder alpha, Side side) {
  return detail::frac_integral_order(f, alpha.value(), side);
}

SampledFunction frac_derivative(const SampledFunction& f, FracOrder alpha, Side side) {
  require_finite(f, "frac_derivative");
  if (f.grid().n < 4)
    throw std::invalid_argument("frac_derivative: requires n >= 4");

  const int end = (side == Side::kLeft) ? 0 : f.grid().n;
  const double mag = endpoint_mag(f, end);
  double scale = 0.0;
  for (int i = 0; i <= f.grid().n; ++i) scale = std::max(scale, endpoint_mag(f, i));
  if (mag > detail::kEndpointRelTol * std::max(1.0, scale))
    throw std::invalid_argument(
        "frac_derivative: sample at the singular-side endpoint must vanish "
        "(D^alpha of the interpolant would contain a (t-endpoint)^(-alpha) term)");

  if (side == Side::kLeft) return derivative_left(f, alpha.value());
  return derivative_left(f.reflected(), alpha.value()).reflected();
}

SampledFunction power_closed_form(double beta, FracOrder alpha, Side side, PowerOp op,
                                  const Grid& grid) {
  if (!(beta >= 0.0) || !std::isfinite(beta))
    throw std::invalid_argument("power_closed_form: beta must be >= 0");
  const double a = alpha.value();

  double coeff = 0.0, expo = 0.0;
  if (op == PowerOp::kIntegral) {
    coeff = gamma_fn(beta + 1.0) / gamma_fn(beta + 1.0 + a);
    expo = beta + a;
  } else {
    if (beta < a)
      throw std::invalid_argument(
          "power_closed_form: derivative of (t-a)^beta with beta < alpha is "
          "singular at a grid node");
    coeff = gamma_fn(beta + 1.0) / gamma_fn(beta + 1.0 - a);
    expo = beta - a;
  }

  SampledFunction out(grid, 1);
  for (int i = 0; i <= grid.n; ++i) {
    const double s = (side == Side::kLeft) ? grid.node(i) - grid.a : grid.b - grid.node(i);
    out.at(i, 0) = (s == 0.0 && expo == 0.0) ? coeff : coeff * std::pow(s, expo);
  }
  return out;
}

int boundary_layer_width(int n) {
  const int w = static_cast<int>(std::ceil(0.02 * n));
  return w < 2 ? 2 : w;
}

}  // namespace fracvar
