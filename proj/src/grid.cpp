#include "fracvar/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracvar {

Grid::Grid(double a_, double b_, int n_) : a(a_), b(b_), n(n_), h((b_ - a_) / n_) {
  if (!(a < b)) throw std::invalid_argument("Grid: requires a < b");
  if (n < 2) throw std::invalid_argument("Grid: requires n >= 2");
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("Grid: endpoints must be finite");
}

SampledFunction::SampledFunction(const Grid& grid, int dim)
    : grid_(grid), dim_(dim), data_(static_cast<std::size_t>(grid.n + 1) * dim, 0.0) {
  if (dim < 1) throw std::invalid_argument("SampledFunction: dim must be positive");
}

SampledFunction SampledFunction::from_scalar(const Grid& grid,
                                             const std::function<double(double)>& f) {
  SampledFunction out(grid, 1);
  for (int i = 0; i <= grid.n; ++i) out.at(i, 0) = f(grid.node(i));
  return out;
}

bool SampledFunction::finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

SampledFunction SampledFunction::reflected() const {
  SampledFunction out(grid_, dim_);
  for (int i = 0; i <= grid_.n; ++i)
    for (int c = 0; c < dim_; ++c) out.at(i, c) = at(grid_.n - i, c);
  return out;
}

double trapezoid_weight(const Grid& grid, int i) {
  return (i == 0 || i == grid.n) ? 0.5 * grid.h : grid.h;
}

double trap_integral(const SampledFunction& f) {
  if (f.dim() != 1) throw std::invalid_argument("trap_integral: scalar field expected");
  double acc = 0.0;
  for (int i = 0; i <= f.grid().n; ++i) acc += trapezoid_weight(f.grid(), i) * f.at(i, 0);
  return acc;
}

double trap_dot(const SampledFunction& f, const SampledFunction& g) {
  if (!(f.grid() == g.grid()) || f.dim() != g.dim())
    throw std::invalid_argument("trap_dot: mismatched fields");
  double acc = 0.0;
  for (int i = 0; i <= f.grid().n; ++i) {
    double s = 0.0;
    for (int c = 0; c < f.dim(); ++c) s += f.at(i, c) * g.at(i, c);
    acc += trapezoid_weight(f.grid(), i) * s;
  }
  return acc;
}

double lp_norm_trap(const SampledFunction& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm_trap: requires p >= 1");
  double acc = 0.0;
  for (int i = 0; i <= f.grid().n; ++i) {
    double s2 = 0.0;
    for (int c = 0; c < f.dim(); ++c) s2 += f.at(i, c) * f.at(i, c);
    acc += trapezoid_weight(f.grid(), i) * std::pow(std::sqrt(s2), p);
  }
  return std::pow(acc, 1.0 / p);
}

double sup_norm(const SampledFunction& f) {
  double m = 0.0;
  for (int i = 0; i <= f.grid().n; ++i) {
    double s2 = 0.0;
    for (int c = 0; c < f.dim(); ++c) s2 += f.at(i, c) * f.at(i, c);
    m = std::max(m, std::sqrt(s2));
  }
  return m;
}

double sup_abs_diff(const SampledFunction& f, const SampledFunction& g) {
  if (!(f.grid() == g.grid()) || f.dim() != g.dim())
    throw std::invalid_argument("sup_abs_diff: mismatched fields");
  double m = 0.0;
  for (int i = 0; i <= f.grid().n; ++i)
    for (int c = 0; c < f.dim(); ++c) m = std::max(m, std::abs(f.at(i, c) - g.at(i, c)));
  return m;
}

SampledFunction add_scaled(const SampledFunction& y, double s, const SampledFunction& x) {
  if (!(x.grid() == y.grid()) || x.dim() != y.dim())
    throw std::invalid_argument("add_scaled: mismatched fields");
  SampledFunction out(y.grid(), y.dim());
  for (int i = 0; i <= y.grid().n; ++i)
    for (int c = 0; c < y.dim(); ++c) out.at(i, c) = y.at(i, c) + s * x.at(i, c);
  return out;
}

}  // namespace fracvar
