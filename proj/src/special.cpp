#include "fracvar/special.hpp"

#include <cmath>
#include <stdexcept>

namespace fracvar {

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's table).
constexpr double kG = 7.0;
constexpr double kCoef[9] = {
    0.99999999999980993,    676.5203681218851,      -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6,  1.5056327351493116e-7,
};
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtTwoPi = 2.50662827463100050242;

double lanczos_core(double x) {
  // valid for x >= 0.5
  const double z = x - 1.0;
  double s = kCoef[0];
  for (int i = 1; i < 9; ++i) s += kCoef[i] / (z + i);
  const double t = z + kG + 0.5;
  return kSqrtTwoPi * std::pow(t, z + 0.5) * std::exp(-t) * s;
}

}  // namespace

double gamma_fn(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("gamma_fn: non-finite argument");
  if (x <= 0.0 && x == std::floor(x))
    throw std::invalid_argument("gamma_fn: pole at non-positive integer");
  if (x < 0.5) return kPi / (std::sin(kPi * x) * lanczos_core(1.0 - x));
  return lanczos_core(x);
}

}  // namespace fracvar
