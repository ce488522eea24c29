#pragma once

#include <functional>
#include <span>
#include <vector>

namespace fracvar {

/// Uniform partition of [a,b] into n subintervals (n+1 nodes t_i = a + i*h).
struct Grid {
  double a;
  double b;
  int n;
  double h;

  Grid(double a, double b, int n);

  double node(int i) const { return a + i * h; }

  friend bool operator==(const Grid& l, const Grid& r) {
    return l.a == r.a && l.b == r.b && l.n == r.n;
  }
};

/// Vector-valued samples on a Grid: dim components per node, stored node-major.
class SampledFunction {
 public:
  SampledFunction(const Grid& grid, int dim);

  /// Scalar samples from t -> f(t).
  static SampledFunction from_scalar(const Grid& grid,
                                     const std::function<double(double)>& f);

  const Grid& grid() const { return grid_; }
  int dim() const { return dim_; }
  int nodes() const { return grid_.n + 1; }

  std::span<const double> node(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * dim_,
            static_cast<std::size_t>(dim_)};
  }
  std::span<double> node(int i) {
    return {data_.data() + static_cast<std::size_t>(i) * dim_,
            static_cast<std::size_t>(dim_)};
  }

  double at(int i, int c) const { return data_[static_cast<std::size_t>(i) * dim_ + c]; }
  double& at(int i, int c) { return data_[static_cast<std::size_t>(i) * dim_ + c]; }

  std::span<const double> raw() const { return data_; }
  std::span<double> raw() { return data_; }

  bool finite() const;

  /// Samples reversed in t (node i <-> node n-i), same grid.
  SampledFunction reflected() const;

 private:
  Grid grid_;
  int dim_;
  std::vector<double> data_;
};

/// Trapezoid weight of node i: h at interior nodes, h/2 at the two ends.
double trapezoid_weight(const Grid& grid, int i);

/// Composite trapezoid quadrature of a scalar field.
double trap_integral(const SampledFunction& f);

/// Trapezoid-weighted dot product over all nodes and components.
double trap_dot(const SampledFunction& f, const SampledFunction& g);

/// (sum_i tau_i ||f_i||^p)^(1/p), Euclidean norm per node.
double lp_norm_trap(const SampledFunction& f, double p);

/// max_i ||f_i|| (Euclidean per node).
double sup_norm(const SampledFunction& f);

/// max_i max_c |f.at(i,c) - g.at(i,c)|.
double sup_abs_diff(const SampledFunction& f, const SampledFunction& g);

/// y + s*x, matching grids and dims required.
SampledFunction add_scaled(const SampledFunction& y, double s, const SampledFunction& x);

}  // namespace fracvar
