#include "fracvar/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fracvar/detail/seeded.hpp"

namespace fracvar {

namespace {

constexpr double kIneqTol = 1e-12;

// Additive-recurrence (Kronecker) sequence with the generalized golden ratio;
// seed only shifts the starting phase, so coverage is seed-independent.
class WeylSequence {
 public:
  WeylSequence(int dims, std::uint64_t seed) : gamma_(dims), state_(dims) {
    double phi = 2.0;
    for (int it = 0; it < 64; ++it) phi = std::pow(1.0 + phi, 1.0 / (dims + 1));
    double g = 1.0 / phi;
    std::uint64_t s = seed * 0x9E3779B97F4A7C15ULL + 0x853C49E6748FEA9BULL;
    for (int j = 0; j < dims; ++j) {
      gamma_[j] = g;
      g /= phi;
      state_[j] = detail::unit_from_bits(detail::splitmix64(s));
    }
  }

  void next(std::span<double> out) {
    for (std::size_t j = 0; j < out.size(); ++j) {
      state_[j] += gamma_[j];
      state_[j] -= std::floor(state_[j]);
      out[j] = state_[j];
    }
  }

 private:
  std::vector<double> gamma_;
  std::vector<double> state_;
};

double lerp(double lo, double hi, double u) { return lo + (hi - lo) * u; }

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// lhs <= rhs up to roundoff; the extra eps term guards large |L| values where
// the literal 1e-12 is below one ulp.
bool leq_with_tol(double lhs, double rhs) {
  const double guard = 8.0 * 2.220446049250313e-16 * (std::abs(lhs) + std::abs(rhs));
  return lhs <= rhs + kIneqTol + guard;
}

struct Point {
  std::vector<double> x, y;
  double t;
};

std::vector<double> box_mid(const std::vector<double>& lo, const std::vector<double>& hi) {
  std::vector<double> m(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) m[i] = 0.5 * (lo[i] + hi[i]);
  return m;
}

double clampv(double v, double lo, double hi) { return std::min(hi, std::max(lo, v)); }

// Fixed adversarial probes: box center, per-axis extremes, the +-1 velocity
// wells, endpoints in t. All clamped into the box.
std::vector<Point> pointwise_probes(const SamplingBox& box, int dim) {
  std::vector<Point> pts;
  const auto xm = box_mid(box.x_lo, box.x_hi);
  const auto ym = box_mid(box.y_lo, box.y_hi);
  const double tm = 0.5 * (box.t_lo + box.t_hi);

  auto add = [&](std::vector<double> x, std::vector<double> y, double t) {
    for (int c = 0; c < dim; ++c) {
      x[c] = clampv(x[c], box.x_lo[c], box.x_hi[c]);
      y[c] = clampv(y[c], box.y_lo[c], box.y_hi[c]);
    }
    pts.push_back({std::move(x), std::move(y), clampv(t, box.t_lo, box.t_hi)});
  };

  std::vector<double> zero(dim, 0.0);
  for (int c = 0; c < dim; ++c) {
    auto y = zero;
    y[c] = 1.0;
    add(zero, y, tm);  // Bolza well, sample 0 for c = 0
    y[c] = -1.0;
    add(zero, y, tm);
  }
  add(zero, zero, tm);
  add(xm, ym, tm);
  for (int c = 0; c < dim; ++c) {
    auto y = ym;
    y[c] = box.y_hi[c];
    add(xm, y, tm);
    y[c] = box.y_lo[c];
    add(xm, y, tm);
    auto x = xm;
    x[c] = box.x_hi[c];
    add(x, ym, tm);
    x[c] = box.x_lo[c];
    add(x, ym, tm);
  }
  add(xm, ym, box.t_lo);
  add(xm, ym, box.t_hi);
  return pts;
}

struct PairPoint {
  std::vector<double> x1, y1, x2, y2;
  double t;
};

std::vector<PairPoint> pair_probes(const SamplingBox& box, int dim, ConvexityVariant variant) {
  std::vector<PairPoint> pts;
  const auto xm = box_mid(box.x_lo, box.x_hi);
  const double tm = 0.5 * (box.t_lo + box.t_hi);

  auto clamp_into = [&](std::vector<double>& x, std::vector<double>& y) {
    for (int c = 0; c < dim; ++c) {
      x[c] = clampv(x[c], box.x_lo[c], box.x_hi[c]);
      y[c] = clampv(y[c], box.y_lo[c], box.y_hi[c]);
    }
  };
  auto add = [&](std::vector<double> x1, std::vector<double> y1, std::vector<double> x2,
                 std::vector<double> y2, double t) {
    clamp_into(x1, y1);
    clamp_into(x2, y2);
    pts.push_back({std::move(x1), std::move(y1), std::move(x2), std::move(y2),
                   clampv(t, box.t_lo, box.t_hi)});
  };

  std::vector<double> zero(dim, 0.0);
  // Sample 0: the (-1, +1) velocity pair straddling the double well.
  for (int c = 0; c < dim; ++c) {
    auto y1 = zero, y2 = zero;
    y1[c] = -1.0;
    y2[c] = 1.0;
    add(zero, y1, zero, y2, tm);
  }
  for (int c = 0; c < dim; ++c) {
    auto y1 = box_mid(box.y_lo, box.y_hi), y2 = y1;
    y1[c] = box.y_lo[c];
    y2[c] = box.y_hi[c];
    add(xm, y1, xm, y2, tm);
  }
  if (variant == ConvexityVariant::kJoint) {
    add(box.x_lo, box.y_lo, box.x_hi, box.y_hi, tm);
    for (int c = 0; c < dim; ++c) {
      auto x1 = xm, x2 = xm;
      x1[c] = box.x_lo[c];
      x2[c] = box.x_hi[c];
      auto ym = box_mid(box.y_lo, box.y_hi);
      add(x1, ym, x2, ym, tm);
    }
  } else {
    add(xm, box.y_lo, xm, box.y_hi, tm);
  }
  return pts;
}

}  // namespace

void HypothesisSpec::validate(double p) const {
  if (!(d1 >= 0.0 && d1 <= p)) throw std::invalid_argument("HypothesisSpec: requires 0 <= d1 <= p");
  if (!(d2 >= 0.0 && d2 <= p)) throw std::invalid_argument("HypothesisSpec: requires 0 <= d2 <= p");
  if (!(d3 >= 0.0 && d3 <= p - 1.0))
    throw std::invalid_argument("HypothesisSpec: requires 0 <= d3 <= p-1");
  if (!(d4 >= 1.0 && d4 < p)) throw std::invalid_argument("HypothesisSpec: requires 1 <= d4 < p");
  if (!(gamma > 0.0)) throw std::invalid_argument("HypothesisSpec: requires gamma > 0");
}

SamplingBox SamplingBox::cube(int dim, double x_rad, double y_rad, double t_lo, double t_hi) {
  SamplingBox box;
  box.x_lo.assign(dim, -x_rad);
  box.x_hi.assign(dim, x_rad);
  box.y_lo.assign(dim, -y_rad);
  box.y_hi.assign(dim, y_rad);
  box.t_lo = t_lo;
  box.t_hi = t_hi;
  return box;
}

void SamplingBox::validate(int dim) const {
  const auto d = static_cast<std::size_t>(dim);
  if (x_lo.size() != d || x_hi.size() != d || y_lo.size() != d || y_hi.size() != d)
    throw std::invalid_argument("SamplingBox: dimension mismatch");
  bool empty = !(t_lo <= t_hi);
  for (std::size_t c = 0; c < d; ++c)
    empty = empty || !(x_lo[c] <= x_hi[c]) || !(y_lo[c] <= y_hi[c]);
  if (empty) throw std::invalid_argument("SamplingBox: empty box");
}

bool HypothesisReport::all_satisfied() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const HypothesisEntry& e) { return e.satisfied; });
}

const HypothesisEntry& HypothesisReport::entry(const std::string& id) const {
  for (const auto& e : entries)
    if (e.id == id) return e;
  throw std::invalid_argument("HypothesisReport: no entry " + id);
}

Builtin make_dirichlet(int dim) {
  LagrangianModel m;
  m.dim = dim;
  m.name = "dirichlet";
  m.eval = [](std::span<const double>, std::span<const double> y, double) {
    double s = 0.0;
    for (double v : y) s += v * v;
    return 0.5 * s;
  };
  m.grad_x = [](std::span<const double>, std::span<const double>, double, std::span<double> out) {
    std::fill(out.begin(), out.end(), 0.0);
  };
  m.grad_y = [](std::span<const double>, std::span<const double> y, double, std::span<double> out) {
    std::copy(y.begin(), y.end(), out.begin());
  };

  HypothesisSpec s;
  s.d1 = 2.0;
  s.d2 = 0.0;
  s.d3 = 1.0;
  s.d4 = 1.0;
  s.gamma = 0.5;
  auto zero = [](std::span<const double>, double) { return 0.0; };
  s.r1 = [](std::span<const double>, double) { return 0.5; };
  s.s1 = zero;
  s.r2 = zero;
  s.s2 = zero;
  s.r3 = [](std::span<const double>, double) { return 1.0; };
  s.s3 = zero;
  s.c1 = [](std::span<const double>, double) { return 0.5; };
  s.c2 = [](double) { return 0.0; };
  s.c3 = [](double) { return 0.0; };
  return {std::move(m), std::move(s)};
}

namespace {

// ||y||^(p-2) y with the p<2 limit guarded at y=0.
void pnorm_grad_y(double p, std::span<const double> y, std::span<double> out) {
  const double ny = norm2(y);
  if (ny == 0.0) {
    std::fill(out.begin(), out.end(), 0.0);
    return;
  }
  const double f = std::pow(ny, p - 2.0);
  for (std::size_t c = 0; c < y.size(); ++c) out[c] = f * y[c];
}

}  // namespace

Builtin make_pnorm_potential(double p, PotentialFn a, PotentialGradFn grad_a, int dim) {
  if (!(p > 1.0)) throw std::invalid_argument("make_pnorm_potential: requires p > 1");
  if (!a || !grad_a) throw std::invalid_argument("make_pnorm_potential: callables required");

  LagrangianModel m;
  m.dim = dim;
  m.name = "pnorm_potential";
  m.eval = [p, a](std::span<const double> x, std::span<const double> y, double t) {
    return std::pow(norm2(y), p) / p + a(x, t);
  };
  m.grad_x = [grad_a](std::span<const double> x, std::span<const double>, double t,
                      std::span<double> out) { grad_a(x, t, out); };
  m.grad_y = [p](std::span<const double>, std::span<const double> y, double,
                 std::span<double> out) { pnorm_grad_y(p, y, out); };

  HypothesisSpec s;
  s.d1 = p;
  s.d2 = 0.0;
  s.d3 = p - 1.0;
  s.d4 = 1.0;
  s.gamma = 1.0 / p;
  auto zero = [](std::span<const double>, double) { return 0.0; };
  s.r1 = [p](std::span<const double>, double) { return 1.0 / p; };
  s.s1 = zero;
  s.r2 = zero;
  s.s2 = [grad_a, dim](std::span<const double> x, double t) {
    std::vector<double> g(dim);
    grad_a(x, t, g);
    return norm2(g);
  };
  s.r3 = [](std::span<const double>, double) { return 1.0; };
  s.s3 = zero;
  s.c1 = [p](std::span<const double>, double) { return 1.0 / p; };
  s.c2 = [](double) { return 0.0; };
  s.c3 = [](double) { return 0.0; };
  return {std::move(m), std::move(s)};
}

Builtin make_pnorm_linear(double p, std::function<double(double)> f) {
  if (!(p > 1.0)) throw std::invalid_argument("make_pnorm_linear: requires p > 1");
  if (!f) throw std::invalid_argument("make_pnorm_linear: f required");

  LagrangianModel m;
  m.dim = 1;
  m.name = "pnorm_linear";
  m.eval = [p, f](std::span<const double> x, std::span<const double> y, double t) {
    return std::pow(std::abs(y[0]), p) / p + f(t) * x[0];
  };
  m.grad_x = [f](std::span<const double>, std::span<const double>, double t,
                 std::span<double> out) { out[0] = f(t); };
  m.grad_y = [p](std::span<const double>, std::span<const double> y, double,
                 std::span<double> out) { pnorm_grad_y(p, y, out); };

  HypothesisSpec s;
  s.d1 = p;
  s.d2 = 0.0;
  s.d3 = p - 1.0;
  s.d4 = 1.0;
  s.gamma = 1.0 / p;
  auto zero = [](std::span<const double>, double) { return 0.0; };
  s.r1 = [p](std::span<const double>, double) { return 1.0 / p; };
  s.s1 = zero;
  s.r2 = zero;
  s.s2 = [f](std::span<const double>, double t) { return std::abs(f(t)); };
  s.r3 = [](std::span<const double>, double) { return 1.0; };
  s.s3 = zero;
  s.c1 = [p](std::span<const double>, double) { return 1.0 / p; };
  s.c2 = [f](double t) { return -std::abs(f(t)); };
  s.c3 = [](double) { return 0.0; };
  return {std::move(m), std::move(s)};
}

Builtin make_bolza() {
  LagrangianModel m;
  m.dim = 1;
  m.name = "bolza";
  m.eval = [](std::span<const double> x, std::span<const double> y, double) {
    const double w = y[0] * y[0] - 1.0;
    return w * w + x[0] * x[0] * x[0] * x[0];
  };
  m.grad_x = [](std::span<const double> x, std::span<const double>, double,
                std::span<double> out) { out[0] = 4.0 * x[0] * x[0] * x[0]; };
  m.grad_y = [](std::span<const double>, std::span<const double> y, double,
                std::span<double> out) { out[0] = 4.0 * y[0] * (y[0] * y[0] - 1.0); };
  return {std::move(m), std::nullopt};
}

namespace {

template <typename CheckFn>
HypothesisReport run_pointwise(const LagrangianModel& model, const SamplingBox& box,
                               long n_samples, std::uint64_t seed,
                               const std::vector<std::string>& ids, CheckFn check) {
  box.validate(model.dim);
  if (n_samples < 1) throw std::invalid_argument("hypothesis check: n_samples must be >= 1");

  const int d = model.dim;
  HypothesisReport rep;
  rep.n_samples = n_samples;
  rep.box = box;
  rep.seed = seed;
  for (const auto& id : ids) rep.entries.push_back({id, true, std::nullopt});

  const auto probes = pointwise_probes(box, d);
  WeylSequence weyl(2 * d + 1, seed);
  std::vector<double> u(2 * d + 1);
  Point pt;
  pt.x.resize(d);
  pt.y.resize(d);

  for (long k = 0; k < n_samples; ++k) {
    const Point* p = nullptr;
    if (k < static_cast<long>(probes.size())) {
      p = &probes[k];
    } else {
      weyl.next(u);
      for (int c = 0; c < d; ++c) {
        pt.x[c] = lerp(box.x_lo[c], box.x_hi[c], u[c]);
        pt.y[c] = lerp(box.y_lo[c], box.y_hi[c], u[d + c]);
      }
      pt.t = lerp(box.t_lo, box.t_hi, u[2 * d]);
      p = &pt;
    }
    check(*p, k, rep);
    if (rep.all_satisfied()) continue;
    bool all_done = true;
    for (const auto& e : rep.entries) all_done = all_done && !e.satisfied;
    if (all_done) break;  // every hypothesis already has a witness
  }
  return rep;
}

}  // namespace

HypothesisReport check_growth(const LagrangianModel& model, const HypothesisSpec& spec,
                              const ProblemParams& params, const SamplingBox& box,
                              long n_samples, std::uint64_t seed) {
  spec.validate(params.p);
  std::vector<double> zero_y(model.dim, 0.0), g(model.dim);

  return run_pointwise(
      model, box, n_samples, seed, {"H1", "H2", "H3"},
      [&](const Point& p, long k, HypothesisReport& rep) {
        const double ny = norm2(p.y);
        auto fail = [&](int idx, double lhs, double rhs) {
          if (rep.entries[idx].satisfied && !leq_with_tol(lhs, rhs))
            rep.entries[idx] = {rep.entries[idx].id, false,
                                Witness{p.x, p.y, {}, {}, p.t, lhs, rhs, k}};
        };
        const double l0 = model.eval(p.x, zero_y, p.t);
        const double lv = model.eval(p.x, p.y, p.t);
        fail(0, std::abs(lv - l0),
             spec.r1(p.x, p.t) * std::pow(ny, spec.d1) + spec.s1(p.x, p.t));
        model.grad_x(p.x, p.y, p.t, g);
        fail(1, norm2(g), spec.r2(p.x, p.t) * std::pow(ny, spec.d2) + spec.s2(p.x, p.t));
        model.grad_y(p.x, p.y, p.t, g);
        fail(2, norm2(g), spec.r3(p.x, p.t) * std::pow(ny, spec.d3) + spec.s3(p.x, p.t));
      });
}

HypothesisReport check_coercivity(const LagrangianModel& model, const HypothesisSpec& spec,
                                  const ProblemParams& params, const SamplingBox& box,
                                  long n_samples, std::uint64_t seed) {
  spec.validate(params.p);
  const double p_ = params.p;

  return run_pointwise(
      model, box, n_samples, seed, {"H4"},
      [&](const Point& p, long k, HypothesisReport& rep) {
        if (!rep.entries[0].satisfied) return;
        const double lhs = spec.c1(p.x, p.t) * std::pow(norm2(p.y), p_) +
                           spec.c2(p.t) * std::pow(norm2(p.x), spec.d4) + spec.c3(p.t);
        const double lv = model.eval(p.x, p.y, p.t);
        if (!leq_with_tol(lhs, lv))
          rep.entries[0] = {"H4", false, Witness{p.x, p.y, {}, {}, p.t, lv, lhs, k}};
      });
}

HypothesisReport check_convexity(const LagrangianModel& model, ConvexityVariant variant,
                                 const SamplingBox& box, long n_samples, std::uint64_t seed) {
  box.validate(model.dim);
  if (n_samples < 1) throw std::invalid_argument("check_convexity: n_samples must be >= 1");

  const int d = model.dim;
  HypothesisReport rep;
  rep.n_samples = n_samples;
  rep.box = box;
  rep.seed = seed;
  const char* id = (variant == ConvexityVariant::kJoint) ? "H5" : "H5''";
  rep.entries.push_back({id, true, std::nullopt});

  const auto probes = pair_probes(box, d, variant);
  const int dims = (variant == ConvexityVariant::kJoint) ? 4 * d + 1 : 3 * d + 1;
  WeylSequence weyl(dims, seed);
  std::vector<double> u(dims);
  PairPoint pp;
  pp.x1.resize(d);
  pp.y1.resize(d);
  pp.x2.resize(d);
  pp.y2.resize(d);
  std::vector<double> xm(d), ym(d);

  for (long k = 0; k < n_samples; ++k) {
    const PairPoint* p = nullptr;
    if (k < static_cast<long>(probes.size())) {
      p = &probes[k];
    } else {
      weyl.next(u);
      int ofs = 0;
      for (int c = 0; c < d; ++c) pp.y1[c] = lerp(box.y_lo[c], box.y_hi[c], u[ofs++]);
      for (int c = 0; c < d; ++c) pp.y2[c] = lerp(box.y_lo[c], box.y_hi[c], u[ofs++]);
      if (variant == ConvexityVariant::kJoint) {
        for (int c = 0; c < d; ++c) pp.x1[c] = lerp(box.x_lo[c], box.x_hi[c], u[ofs++]);
        for (int c = 0; c < d; ++c) pp.x2[c] = lerp(box.x_lo[c], box.x_hi[c], u[ofs++]);
      } else {
        for (int c = 0; c < d; ++c) pp.x1[c] = lerp(box.x_lo[c], box.x_hi[c], u[ofs++]);
        pp.x2 = pp.x1;
      }
      pp.t = lerp(box.t_lo, box.t_hi, u[ofs]);
      p = &pp;
    }

    for (int c = 0; c < d; ++c) {
      xm[c] = 0.5 * (p->x1[c] + p->x2[c]);
      ym[c] = 0.5 * (p->y1[c] + p->y2[c]);
    }
    const double lmid = model.eval(xm, ym, p->t);
    const double l1 = model.eval(p->x1, p->y1, p->t);
    const double l2 = model.eval(p->x2, p->y2, p->t);
    if (!leq_with_tol(lmid, 0.5 * (l1 + l2))) {
      rep.entries[0] = {id, false,
                        Witness{p->x1, p->y1, p->x2, p->y2, p->t, lmid, 0.5 * (l1 + l2), k}};
      break;
    }
  }
  return rep;
}

HypothesisReport check_equicontinuity(const LagrangianModel& model, const SamplingBox& box,
                                      long n_samples, std::uint64_t seed) {
  box.validate(model.dim);
  if (n_samples < 1) throw std::invalid_argument("check_equicontinuity: n_samples must be >= 1");

  const int d = model.dim;
  HypothesisReport rep;
  rep.n_samples = n_samples;
  rep.box = box;
  rep.seed = seed;

  double x_diam = 0.0;
  for (int c = 0; c < d; ++c) x_diam = std::max(x_diam, box.x_hi[c] - box.x_lo[c]);
  const int levels = 4;
  std::vector<double> modulus(levels, 0.0);

  WeylSequence weyl(2 * d + 2, seed);
  std::vector<double> u(2 * d + 2);
  std::vector<double> x(d), y(d), x2(d);
  const long per_level = std::max<long>(1, n_samples / levels);

  for (int m = 0; m < levels; ++m) {
    const double delta = 0.25 * x_diam * std::pow(0.5, m);
    for (long k = 0; k < per_level; ++k) {
      weyl.next(u);
      for (int c = 0; c < d; ++c) {
        x[c] = lerp(box.x_lo[c], box.x_hi[c], u[c]);
        y[c] = lerp(box.y_lo[c], box.y_hi[c], u[d + c]);
      }
      const double t = lerp(box.t_lo, box.t_hi, u[2 * d]);
      const int axis = static_cast<int>(u[2 * d + 1] * d) % d;
      x2 = x;
      x2[axis] = clampv(x[axis] + delta, box.x_lo[axis], box.x_hi[axis]);
      modulus[m] = std::max(modulus[m], std::abs(model.eval(x2, y, t) - model.eval(x, y, t)));
    }
  }

  // Sampled, non-certifying criterion: the modulus must decay with delta.
  const bool ok = modulus[levels - 1] <= 0.6 * modulus[0] + kIneqTol;
  HypothesisEntry e{"H5'", ok, std::nullopt};
  if (!ok) {
    Witness w;
    w.t = 0.25 * x_diam * std::pow(0.5, levels - 1);  // the finest delta probed
    w.lhs = modulus[levels - 1];
    w.rhs = 0.6 * modulus[0];
    w.sample_index = n_samples;
    e.witness = w;
  }
  rep.entries.push_back(std::move(e));
  return rep;
}

}  // namespace fracvar
