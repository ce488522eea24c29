#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fracvar/space.hpp"

namespace fracvar {

using EvalFn = std::function<double(std::span<const double> x, std::span<const double> y, double t)>;
using GradFn =
    std::function<void(std::span<const double> x, std::span<const double> y, double t, std::span<double> out)>;
using EnvelopeFn = std::function<double(std::span<const double> x, double t)>;
using CoeffFn = std::function<double(double t)>;
using PotentialFn = std::function<double(std::span<const double> x, double t)>;
using PotentialGradFn = std::function<void(std::span<const double> x, double t, std::span<double> out)>;

/// C^1 Lagrangian L(x,y,t) with analytic partials in x and y.
struct LagrangianModel {
  int dim;
  std::string name;
  EvalFn eval;
  GradFn grad_x;
  GradFn grad_y;
};

/// Growth/coercivity envelopes: exponents d1..d4, floor gamma, and the
/// bounding functions r_i, s_i (nonnegative), c1 >= gamma, c2, c3.
struct HypothesisSpec {
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
  double d4 = 1.0;
  double gamma = 0.0;
  EnvelopeFn r1, s1, r2, s2, r3, s3, c1;
  CoeffFn c2, c3;

  /// Enforces 0 <= d1,d2 <= p, 0 <= d3 <= p-1, 1 <= d4 < p, gamma > 0.
  void validate(double p) const;
};

/// Axis-aligned sampling region for the hypothesis checkers.
struct SamplingBox {
  std::vector<double> x_lo, x_hi;
  std::vector<double> y_lo, y_hi;
  double t_lo = 0.0;
  double t_hi = 1.0;

  static SamplingBox cube(int dim, double x_rad, double y_rad, double t_lo, double t_hi);
  void validate(int dim) const;
};

/// A concrete point (or pair) at which a sampled inequality failed, with the
/// two sides of the inequality.
struct Witness {
  std::vector<double> x, y;
  std::vector<double> x2, y2;  // second element for pair-based checks, else empty
  double t = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  long sample_index = 0;
};

struct HypothesisEntry {
  std::string id;
  bool satisfied = false;  // "satisfied-on-samples"; a violation is a certificate
  std::optional<Witness> witness;
};

struct HypothesisReport {
  std::vector<HypothesisEntry> entries;
  long n_samples = 0;
  SamplingBox box;
  std::uint64_t seed = 0;

  bool all_satisfied() const;
  const HypothesisEntry& entry(const std::string& id) const;
};

struct Builtin {
  LagrangianModel model;
  std::optional<HypothesisSpec> spec;
};

/// L = 1/2 ||y||^2. Spec envelopes are the p=2 ones.
Builtin make_dirichlet(int dim);

/// L = (1/p) ||y||^p + a(x,t), a >= 0 of class C^1 supplied as callables.
Builtin make_pnorm_potential(double p, PotentialFn a, PotentialGradFn grad_a, int dim);

/// L = (1/p) |y|^p + f(t) x, d = 1.
Builtin make_pnorm_linear(double p, std::function<double(double)> f);

/// L = (y^2 - 1)^2 + x^4, d = 1. Carries no HypothesisSpec: the double well
/// defeats every coercivity envelope and y-convexity.
Builtin make_bolza();

/// H1-H3 sampled refutation check. Entries "H1", "H2", "H3".
HypothesisReport check_growth(const LagrangianModel& model, const HypothesisSpec& spec,
                              const ProblemParams& params, const SamplingBox& box,
                              long n_samples, std::uint64_t seed);

/// H4 sampled refutation check: L >= c1 ||y||^p + c2 ||x||^d4 + c3. Entry "H4".
HypothesisReport check_coercivity(const LagrangianModel& model, const HypothesisSpec& spec,
                                  const ProblemParams& params, const SamplingBox& box,
                                  long n_samples, std::uint64_t seed);

enum class ConvexityVariant {
  kJoint,         // H5: L(.,.,t) convex in (x,y)
  kVelocityOnly,  // H5'': L(x,.,t) convex in y
};

/// Midpoint-convexity sampling over deterministic probes (the (-1,+1)
/// velocity pair is always sample 0) followed by low-discrepancy pairs.
/// Entry "H5" or "H5''".
HypothesisReport check_convexity(const LagrangianModel& model, ConvexityVariant variant,
                                 const SamplingBox& box, long n_samples, std::uint64_t seed);

/// Weakened sampled probe of the H5' equicontinuity-in-x clause: estimates the
/// modulus of continuity sup |L(x+dx,y,t)-L(x,y,t)| over the box at shrinking
/// ||dx|| and requires it to decay. Non-certifying (the hypothesis quantifies
/// over all of R^d). Entry "H5'".
HypothesisReport check_equicontinuity(const LagrangianModel& model, const SamplingBox& box,
                                      long n_samples, std::uint64_t seed);

}  // namespace fracvar
